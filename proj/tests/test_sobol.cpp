#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ucbde/sobol.hpp"

using namespace ucbde;

TEST_CASE("parse a direction record") {
  const DirectionTable t = parse_direction_table("d s a m_i\n2 1 0 1\n");
  REQUIRE(t.records().size() == 1);
  const auto& r = t.records()[0];
  CHECK(r.dim_index == 2);
  CHECK(r.degree == 1);
  CHECK(r.coeff == 0);
  CHECK(r.initial == std::vector<std::uint32_t>{1});
  CHECK(t.max_dim() == 2);
}

TEST_CASE("bundled table starts like the published Joe-Kuo file") {
  std::ifstream in(std::string(UCBDE_DATA_DIR) + "/joe-kuo-d1000.txt");
  REQUIRE(in);
  const DirectionTable t = parse_direction_table(in);
  CHECK(t.max_dim() == 1000);
  const auto& r = t.records();
  CHECK(r[0].dim_index == 2);
  CHECK(r[0].initial == std::vector<std::uint32_t>{1});
  CHECK(r[5].dim_index == 7);
  CHECK(r[5].degree == 4);
  CHECK(r[5].coeff == 4);
  CHECK(r[5].initial == std::vector<std::uint32_t>{1, 3, 5, 13});
  CHECK(default_direction_table().max_dim() == 1000);
}

TEST_CASE("header-only table supports dimension 1") {
  const DirectionTable t = parse_direction_table("d s a m_i\n");
  CHECK(t.max_dim() == 1);
  SobolEngine e(1, t);
  CHECK(e.next()[0] == 0.0);
  CHECK_THROWS_AS(SobolEngine(2, t), DimensionError);
}

TEST_CASE("direction table validation errors") {
  CHECK_THROWS_AS(parse_direction_table("hdr\n2 1 0 1\n3 2 1 1 2\n"), DirectionParseError);
  try {
    parse_direction_table("hdr\n2 1 0 1\n3 2 1 1 x\n");
    FAIL("expected a parse error");
  } catch (const DirectionParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_direction_table("hdr\n2 1 0 1\n4 2 1 1 3\n"), DirectionParseError);  // gap
  CHECK_THROWS_AS(parse_direction_table("hdr\n2 1 0 3\n"), DirectionParseError);            // m_1 >= 2
  CHECK_THROWS_AS(parse_direction_table("hdr\n2 1 0 1 1\n"), DirectionParseError);          // extra field
}

TEST_CASE("dimension 1 is the Gray-code van der Corput sequence") {
  SobolEngine e(1);
  const double expected[] = {0.0, 0.5, 0.75, 0.25};
  for (double v : expected) CHECK(e.next()[0] == v);
  SobolEngine f(1);
  for (std::uint32_t i = 0; i < 4096; ++i) CHECK(f.next()[0] == oracle::gray_van_der_corput(i));
}

TEST_CASE("matches an independent reference generator") {
  // Frozen from scipy.stats.qmc.Sobol(scramble=False, bits=32), which uses the same table.
  const double first[10][6] = {{0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
                               {0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
                               {0.75, 0.25, 0.25, 0.25, 0.75, 0.75},
                               {0.25, 0.75, 0.75, 0.75, 0.25, 0.25},
                               {0.375, 0.375, 0.625, 0.875, 0.375, 0.125},
                               {0.875, 0.875, 0.125, 0.375, 0.875, 0.625},
                               {0.625, 0.125, 0.875, 0.625, 0.625, 0.875},
                               {0.125, 0.625, 0.375, 0.125, 0.125, 0.375},
                               {0.1875, 0.3125, 0.9375, 0.4375, 0.5625, 0.3125},
                               {0.6875, 0.8125, 0.4375, 0.9375, 0.0625, 0.8125}};
  const PointList pts = sobol_points(6, 10, 0);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 6; ++j) CHECK(pts[i][j] == first[i][j]);

  const double at1000[12] = {0.2197265625, 0.0966796875, 0.5185546875, 0.6767578125, 0.2802734375, 0.9072265625,
                             0.0458984375, 0.8994140625, 0.5009765625, 0.0693359375, 0.0849609375, 0.2548828125};
  const double at123457[12] = {0.5264968872070312, 0.6827468872070312, 0.8072586059570312, 0.9503097534179688,
                               0.6691818237304688, 0.7032546997070312, 0.21582794189453125, 0.9640579223632812,
                               0.20645904541015625, 0.7490615844726562, 0.9991073608398438, 0.28118133544921875};
  SobolEngine e(12);
  e.seek(1000);
  const Point p = e.next();
  for (int j = 0; j < 12; ++j) CHECK(p[j] == at1000[j]);
  const Point q = sobol_points(12, 1, 123457).front();
  for (int j = 0; j < 12; ++j) CHECK(q[j] == at123457[j]);
}

TEST_CASE("seek agrees with sequential stepping") {
  SobolEngine a(5), b(5);
  for (int i = 0; i < 300; ++i) a.next();
  b.seek(300);
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("origin comes first and every point lies in the unit cube") {
  for (int d : {1, 3, 8}) {
    SobolEngine e(d);
    CHECK(e.next().isZero());
  }
  const PointList pts = sobol_points(6, 6000);
  CHECK(pts.size() == 6000);
  for (const auto& p : pts) CHECK(((p.array() >= 0.0).all() && (p.array() < 1.0).all()));
}

TEST_CASE("generate basics") {
  CHECK(sobol_points(2, 0).empty());
  CHECK(sobol_points(4, 500, 1) == sobol_points(4, 500, 1));
  CHECK(sobol_points(3, 5, 1).front() == sobol_points(3, 2, 0)[1]);
}

TEST_CASE("index overflow past 2^32-1") {
  SobolEngine e(2);
  e.seek(SobolEngine::kMaxIndex);
  CHECK_NOTHROW(e.next());
  CHECK_THROWS_AS(e.next(), Error);
  CHECK_THROWS_AS(e.seek(SobolEngine::kMaxIndex + 1), Error);
}

TEST_CASE("balance in dimension 1") {
  for (int k = 1; k <= 10; ++k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<int> bins(n, 0);
    for (const auto& p : sobol_points(1, n, 0)) ++bins[static_cast<std::size_t>(p[0] * n)];
    CHECK(std::all_of(bins.begin(), bins.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("lower discrepancy than seeded random point sets") {
  const double sobol = oracle::box_discrepancy_2d(sobol_points(2, 1024, 0), 32);
  std::mt19937_64 rng(99);
  double best_random = 1.0;
  for (int s = 0; s < 20; ++s)
    best_random = std::min(best_random, oracle::box_discrepancy_2d(oracle::random_points(rng, 1024, 2), 32));
  CHECK(sobol < best_random);
}

TEST_CASE("first 64 points are better spread than random sets") {
  const double sobol = oracle::min_pairwise_distance(sobol_points(2, 64, 0));
  std::mt19937_64 rng(123);
  std::vector<double> random;
  for (int s = 0; s < 20; ++s) random.push_back(oracle::min_pairwise_distance(oracle::random_points(rng, 64, 2)));
  std::sort(random.begin(), random.end());
  CHECK(sobol > 0.5 * (random[9] + random[10]));
}
