#include "ucbde/sobol.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace ucbde {

namespace detail {
extern const char* const kDefaultDirectionTable;
}

DirectionParseError::DirectionParseError(int line, const std::string& what)
    : Error("direction table line " + std::to_string(line) + ": " + what), line_(line) {}

DirectionTable::DirectionTable(std::vector<DirectionRecord> records)
    : records_(std::move(records)) {
  for (std::size_t r = 0; r < records_.size(); ++r) {
    const auto& rec = records_[r];
    const int expected = static_cast<int>(r) + 2;
    if (rec.dim_index != expected)
      throw Error("direction table: expected dimension " + std::to_string(expected) + ", found " +
                  std::to_string(rec.dim_index));
    if (rec.degree < 1 || rec.degree >= SobolEngine::kBits)
      throw Error("direction table: dimension " + std::to_string(rec.dim_index) +
                  " has invalid degree " + std::to_string(rec.degree));
    if (static_cast<int>(rec.initial.size()) != rec.degree)
      throw Error("direction table: dimension " + std::to_string(rec.dim_index) + " lists " +
                  std::to_string(rec.initial.size()) + " initial values for degree " +
                  std::to_string(rec.degree));
    for (std::size_t i = 0; i < rec.initial.size(); ++i) {
      const std::uint32_t m = rec.initial[i];
      if (m % 2 == 0)
        throw Error("direction table: dimension " + std::to_string(rec.dim_index) + " m_" +
                    std::to_string(i + 1) + "=" + std::to_string(m) + " is even");
      if (m >= (std::uint32_t{1} << (i + 1)))
        throw Error("direction table: dimension " + std::to_string(rec.dim_index) + " m_" +
                    std::to_string(i + 1) + "=" + std::to_string(m) + " is not below 2^" +
                    std::to_string(i + 1));
    }
  }
}

DirectionTable parse_direction_table(std::istream& in) {
  std::vector<DirectionRecord> records;
  std::string line;
  int line_no = 0;
  if (std::getline(in, line)) ++line_no;  // header
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    long long d = 0, s = 0, a = 0;
    if (!(fields >> d)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw DirectionParseError(line_no, "expected a dimension index");
    }
    if (!(fields >> s >> a)) throw DirectionParseError(line_no, "expected degree and coefficient");
    if (s < 1 || s >= SobolEngine::kBits) throw DirectionParseError(line_no, "degree out of range");
    if (a < 0) throw DirectionParseError(line_no, "negative polynomial coefficient");
    DirectionRecord rec;
    rec.dim_index = static_cast<int>(d);
    rec.degree = static_cast<int>(s);
    rec.coeff = static_cast<std::uint32_t>(a);
    for (long long i = 0; i < s; ++i) {
      long long m = 0;
      if (!(fields >> m) || m <= 0)
        throw DirectionParseError(line_no, "expected " + std::to_string(s) +
                                               " positive initial direction values");
      rec.initial.push_back(static_cast<std::uint32_t>(m));
    }
    std::string extra;
    if (fields >> extra) throw DirectionParseError(line_no, "unexpected trailing field '" + extra + "'");
    records.push_back(std::move(rec));
  }
  try {
    return DirectionTable(std::move(records));
  } catch (const Error& e) {
    throw DirectionParseError(line_no, e.what());
  }
}

DirectionTable parse_direction_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_direction_table(in);
}

DirectionTable load_direction_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open direction table '" + path + "'");
  return parse_direction_table(in);
}

const DirectionTable& default_direction_table() {
  static const DirectionTable table = parse_direction_table(detail::kDefaultDirectionTable);
  return table;
}

SobolEngine::SobolEngine(int dim, const DirectionTable& table) : dim_(dim) {
  if (dim < 1) throw DimensionError("SobolEngine: dimension must be positive");
  if (dim > table.max_dim())
    throw DimensionError("SobolEngine: dimension " + std::to_string(dim) +
                         " exceeds direction table maximum " + std::to_string(table.max_dim()));
  directions_.assign(dim, std::vector<std::uint32_t>(kBits));
  for (int k = 0; k < kBits; ++k) directions_[0][k] = std::uint32_t{1} << (kBits - 1 - k);
  for (int d = 1; d < dim; ++d) {
    const auto& rec = table.records()[d - 1];
    const int s = rec.degree;
    auto& v = directions_[d];
    for (int k = 0; k < s && k < kBits; ++k) v[k] = rec.initial[k] << (kBits - 1 - k);
    for (int k = s; k < kBits; ++k) {
      std::uint32_t value = v[k - s] ^ (v[k - s] >> s);
      for (int j = 1; j < s; ++j)
        if ((rec.coeff >> (s - 1 - j)) & 1u) value ^= v[k - j];
      v[k] = value;
    }
  }
  state_.assign(dim, 0);
}

void SobolEngine::advance() {
  if (index_ >= kMaxIndex) throw Error("SobolEngine: index overflow past 2^32-1");
  // gray(i+1) differs from gray(i) in the lowest zero bit of i.
  const int c = std::countr_one(static_cast<std::uint32_t>(index_));
  for (int d = 0; d < dim_; ++d) state_[d] ^= directions_[d][c];
  ++index_;
}

Point SobolEngine::next() {
  if (index_ > kMaxIndex) throw Error("SobolEngine: index overflow past 2^32-1");
  Point p(dim_);
  constexpr double kScale = 1.0 / 4294967296.0;
  for (int d = 0; d < dim_; ++d) p[d] = state_[d] * kScale;
  if (index_ < kMaxIndex)
    advance();
  else
    ++index_;
  return p;
}

void SobolEngine::seek(std::uint64_t index) {
  if (index > kMaxIndex) throw Error("SobolEngine: index overflow past 2^32-1");
  const auto gray = static_cast<std::uint32_t>(index ^ (index >> 1));
  for (int d = 0; d < dim_; ++d) {
    std::uint32_t x = 0;
    for (int k = 0; k < kBits; ++k)
      if ((gray >> k) & 1u) x ^= directions_[d][k];
    state_[d] = x;
  }
  index_ = index;
}

PointList sobol_points(int dim, std::size_t count, std::uint64_t skip, const DirectionTable& table) {
  SobolEngine engine(dim, table);
  engine.seek(skip);
  PointList out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(engine.next());
  return out;
}

}  // namespace ucbde
