#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ucbde/types.hpp"

namespace ucbde {

/// One row of a Joe-Kuo style direction-number table.
struct DirectionRecord {
  int dim_index = 0;
  int degree = 0;
  std::uint32_t coeff = 0;
  std::vector<std::uint32_t> initial;  // m_1 .. m_s
};

/// Records for dimensions 2..max_dim(); dimension 1 is implicit.
class DirectionTable {
 public:
  DirectionTable() = default;
  explicit DirectionTable(std::vector<DirectionRecord> records);

  int max_dim() const { return static_cast<int>(records_.size()) + 1; }
  const std::vector<DirectionRecord>& records() const { return records_; }

 private:
  std::vector<DirectionRecord> records_;
};

class DirectionParseError : public Error {
 public:
  DirectionParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses "d s a m_1 ... m_s" rows after a single ignored header line.
DirectionTable parse_direction_table(std::istream& in);
DirectionTable parse_direction_table(std::string_view text);
DirectionTable load_direction_table(const std::string& path);

/// Table compiled into the library (first 1000 Joe-Kuo dimensions).
const DirectionTable& default_direction_table();

/// Gray-code (Antonov-Saleev) Sobol generator with 32-bit resolution.
class SobolEngine {
 public:
  static constexpr int kBits = 32;
  static constexpr std::uint64_t kMaxIndex = 0xFFFFFFFFull;

  explicit SobolEngine(int dim, const DirectionTable& table = default_direction_table());

  int dim() const { return dim_; }
  std::uint64_t index() const { return index_; }

  /// Returns point #index() and advances.
  Point next();
  /// Positions the engine so that next() returns point #index.
  void seek(std::uint64_t index);

  std::uint32_t direction(int d, int bit) const { return directions_[d][bit]; }

 private:
  void advance();

  int dim_;
  std::vector<std::vector<std::uint32_t>> directions_;
  std::vector<std::uint32_t> state_;
  std::uint64_t index_ = 0;
};

/// Points skip .. skip+count-1 of the dim-dimensional sequence.
PointList sobol_points(int dim, std::size_t count, std::uint64_t skip = 1,
                       const DirectionTable& table = default_direction_table());

}  // namespace ucbde
