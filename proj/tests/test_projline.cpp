#include <map>
#include <random>

#include "doctest.h"
#include "fundom/errors.hpp"
#include "fundom/projline.hpp"
#include "oracles.hpp"

using namespace fundom;

namespace {

std::pair<std::int64_t, std::int64_t> pair_of(const ProjPoint& p) {
  return {p.a().value(), p.b().value()};
}

}  // namespace

TEST_SUITE("projline") {

TEST_CASE("normalize examples") {
  const Level level(30);
  CHECK(pair_of(normalize(2, 3, level)) == std::make_pair<std::int64_t, std::int64_t>(-2, -3));
  CHECK(pair_of(normalize(5, 2, level)) == std::make_pair<std::int64_t, std::int64_t>(5, 14));
  CHECK(pair_of(normalize(7, 0, level)) == std::make_pair<std::int64_t, std::int64_t>(1, 0));
  CHECK(normalize(7, 0, level).kind() == PointKind::Affine);
  CHECK(normalize(5, 2, level).kind() == PointKind::Infinity);
  CHECK_THROWS_AS(normalize(6, 10, level), NotOnProjLine);
  CHECK_THROWS_AS(normalize(0, 0, level), NotOnProjLine);
}

TEST_CASE("big_m examples") {
  const Level level(30);
  CHECK(big_m(3, 8, level) == 3);
  CHECK(big_m(2, 5, level) == 2);
  CHECK(big_m(4, -1, level) == 0);
  CHECK_THROWS_AS(big_m(7, 3, level), NotInH);
  CHECK_THROWS_AS(big_m(6, 15, level), NotOnProjLine);
}

TEST_CASE("the 20 classes of H(30) with both coordinates nonunits") {
  // M, preferred element, and every listed member of the class.
  struct Row {
    std::int64_t m, j, l;
    std::vector<std::pair<std::int64_t, std::int64_t>> members;
  };
  const std::vector<Row> rows = {
      {1, -2, -3, {{2, 3}, {14, -9}, {-8, 3}, {-4, 9}, {4, -9}, {8, -3}, {-14, 9}, {-2, -3}}},
      {2, -2, -5, {{2, 5}, {14, 5}, {-8, -5}, {-4, 5}, {4, -5}, {8, 5}, {-14, -5}, {-2, -5}}},
      {1, 4, 3, {{2, 9}, {14, 3}, {-8, 9}, {-4, -3}, {4, 3}, {8, -9}, {-14, -3}, {-2, -9}}},
      {1, -14, 15, {{2, 15}, {14, 15}, {-8, 15}, {-4, 15}, {4, 15}, {8, 15}, {-14, 15}, {-2, 15}}},
      {1, -8, -9, {{2, -9}, {14, -3}, {-8, -9}, {-4, 3}, {4, -3}, {8, 9}, {-14, 3}, {-2, 9}}},
      {1, -4, -5, {{2, -5}, {14, -5}, {-8, 5}, {-4, -5}, {4, 5}, {8, -5}, {-14, 5}, {-2, 5}}},
      {2, -4, -9, {{2, -3}, {14, 9}, {-8, -3}, {-4, -9}, {4, 9}, {8, 3}, {-14, -9}, {-2, 3}}},
      {1, 3, 2, {{3, 2}, {-9, 14}, {3, -8}, {9, -4}, {-9, 4}, {-3, 8}, {9, -14}, {-3, -2}}},
      {1, -3, -4, {{3, 4}, {-9, -2}, {3, 14}, {9, -8}, {-9, 8}, {-3, -14}, {9, 2}, {-3, -4}}},
      {2, 3, 5, {{3, 5}, {-9, 5}, {3, -5}, {9, 5}, {-9, -5}, {-3, 5}, {9, -5}, {-3, -5}}},
      {3, 3, 8, {{3, 8}, {-9, -4}, {3, -2}, {9, 14}, {-9, -14}, {-3, 2}, {9, 4}, {-3, -8}}},
      {1, -9, -10, {{3, 10}, {-9, 10}, {3, -10}, {9, 10}, {-9, -10}, {-3, 10}, {9, -10}, {-3, -10}}},
      {1, 9, 8, {{3, -14}, {-9, -8}, {3, -4}, {9, -2}, {-9, 2}, {-3, 4}, {9, 8}, {-3, 14}}},
      {3, 5, 14, {{5, 2}, {5, 14}, {-5, -8}, {5, -4}, {-5, 4}, {5, 8}, {-5, -14}, {-5, -2}}},
      {2, 5, 9, {{5, 3}, {5, -9}, {-5, 3}, {5, 9}, {-5, -9}, {5, -3}, {-5, 9}, {-5, -3}}},
      {1, 5, 4, {{5, 4}, {5, -2}, {-5, 14}, {5, -8}, {-5, 8}, {5, -14}, {-5, 2}, {-5, -4}}},
      {1, -5, -6, {{5, 6}, {5, 12}, {-5, 6}, {5, -12}, {-5, 12}, {5, -6}, {-5, -12}, {-5, -6}}},
      {1, 6, 5, {{6, 5}, {12, 5}, {6, -5}, {-12, 5}, {12, -5}, {-6, 5}, {-12, -5}, {-6, -5}}},
      {1, 10, 9, {{10, 3}, {10, -9}, {-10, 3}, {10, 9}, {-10, -9}, {10, -3}, {-10, 9}, {-10, -3}}},
      {1, 15, 14, {{15, 2}, {15, 14}, {15, -8}, {15, -4}, {15, 4}, {15, 8}, {15, -14}, {15, -2}}},
  };
  const Level level(30);
  for (const Row& row : rows) {
    for (const auto& [a, b] : row.members) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(big_m(a, b, level) == row.m);
      CHECK(pair_of(normalize(a, b, level)) == std::make_pair(row.j, row.l));
    }
  }

  std::map<std::int64_t, std::size_t> restricted;
  for (const HClass& h : h_classes(level)) {
    if (gcd_with_level(h.point.b()) > 1) ++restricted[h.m];
  }
  // Counted from the rows above.
  CHECK(restricted == std::map<std::int64_t, std::size_t>{{1, 14}, {2, 4}, {3, 2}});
}

TEST_CASE("m_table examples") {
  CHECK(m_table(Level(6)).entries == std::map<std::int64_t, std::int64_t>{{-2, 1}, {0, 0}, {2, 0}, {3, 1}});
  CHECK(m_table(Level(8)).entries == std::map<std::int64_t, std::int64_t>{{-2, 0}, {0, 0}, {2, 0}, {4, 0}});

  std::map<std::int64_t, std::int64_t> expected;
  for (std::int64_t j : {3, 5}) expected[j] = 3;
  for (std::int64_t j : {-4, -2}) expected[j] = 2;
  for (std::int64_t j : {-14, -9, -8, -5, -3, 4, 6, 9, 10, 15}) expected[j] = 1;
  for (std::int64_t j : {-12, -10, -6, 0, 2, 8, 12, 14}) expected[j] = 0;
  CHECK(m_table(Level(30)).entries == expected);
}

TEST_CASE("enumerate_p1 matches unit-orbit brute force") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    CAPTURE(n);
    const Level level(n);
    const auto points = enumerate_p1(level);
    const auto orbits = oracle::p1_orbits(n);
    REQUIRE(points.size() == orbits.size());
    CHECK(points.size() == static_cast<std::size_t>(oracle::psi(n)));
    // Each orbit holds exactly one preferred element.
    for (const auto& orbit : orbits) {
      std::size_t hits = 0;
      for (const ProjPoint& p : points) {
        hits += orbit.count({oracle::mod(p.a().value(), n), oracle::mod(p.b().value(), n)});
      }
      CHECK(hits == 1);
    }
    std::size_t affine = 0;
    for (const ProjPoint& p : points) affine += p.kind() == PointKind::Affine;
    CHECK(affine == static_cast<std::size_t>(n));
  }
  const auto two = enumerate_p1(Level(2));
  REQUIRE(two.size() == 3);
  CHECK(pair_of(two[0]) == std::make_pair<std::int64_t, std::int64_t>(1, 0));
  CHECK(pair_of(two[1]) == std::make_pair<std::int64_t, std::int64_t>(1, 1));
  CHECK(pair_of(two[2]) == std::make_pair<std::int64_t, std::int64_t>(0, 1));

  const auto thirty = enumerate_p1(Level(30));
  CHECK(thirty.size() == 72);
  std::size_t both_nonunit = 0;
  for (const ProjPoint& p : thirty) {
    both_nonunit += gcd_with_level(p.a()) > 1 && gcd_with_level(p.b()) > 1;
  }
  CHECK(both_nonunit == 20);
}

TEST_CASE("unit invariance over random samples") {
  std::mt19937_64 rng(20240613);
  int samples = 0;
  while (samples < 10000) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 200)(rng);
    const Level level(n);
    std::uniform_int_distribution<std::int64_t> any(-3 * n, 3 * n);
    const std::int64_t a = any(rng), b = any(rng), u = any(rng);
    if (std::gcd(std::gcd(oracle::mod(a, n), oracle::mod(b, n)), n) != 1) continue;
    if (std::gcd(oracle::mod(u, n), n) != 1) continue;
    ++samples;
    CHECK(normalize(u * a, u * b, level) == normalize(a, b, level));
    if (!is_unit(a, level)) CHECK(big_m(u * a, u * b, level) == big_m(a, b, level));
  }
}

TEST_CASE("defining identity, termination bound, and count identity") {
  for (std::int64_t n = 2; n <= 200; ++n) {
    CAPTURE(n);
    const Level level(n);
    const auto hs = h_classes(level);
    std::size_t bad_identity = 0, bad_bound = 0;
    for (const HClass& h : hs) {
      const std::int64_t j = h.point.a().value(), l = h.point.b().value();
      bad_identity += oracle::mod(h.m * j - l - 1, n) != 0;
      bad_bound += h.m >= n;
    }
    CHECK(bad_identity == 0);
    CHECK(bad_bound == 0);
    std::int64_t total = 0;
    for (const auto& [j, mj] : m_table(level).entries) total += mj + 1;
    CHECK(total == oracle::psi(n) - n);
  }
}

TEST_CASE("gap-free property") {
  for (std::int64_t n = 2; n <= 60; ++n) {
    const Level level(n);
    for (const auto& [j, mj] : m_table(level).entries) {
      for (std::int64_t m = 0; m < mj; ++m) {
        bool found = false;
        for (std::int64_t l : level.range()) {
          if (std::gcd(std::gcd(oracle::mod(j, n), oracle::mod(l, n)), n) != 1) continue;
          const ProjPoint p = normalize(j, l, level);
          if (big_m(j, l, level) == m && p.a().value() == j && p.b().value() == l) {
            found = true;
            break;
          }
        }
        CAPTURE(n);
        CAPTURE(j);
        CAPTURE(m);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("prime powers have M = 0, two prime factors M <= 1") {
  for (std::int64_t n = 2; n <= 200; ++n) {
    const std::size_t primes = oracle::prime_factors(n).size();
    if (primes > 2) continue;
    const auto hist = m_distribution(Level(n));
    CAPTURE(n);
    CHECK(hist.rbegin()->first <= static_cast<std::int64_t>(primes) - 1);
  }
  CHECK(m_distribution(Level(8)) == std::map<std::int64_t, std::size_t>{{0, 4}});
  CHECK(m_distribution(Level(15)).rbegin()->first <= 1);
  // 30 = 2*3*5 is the first level with M > 1.
  for (std::int64_t n = 2; n < 30; ++n) CHECK(m_table(Level(n)).max_value() <= 1);
  CHECK(m_table(Level(30)).max_value() == 3);
}

TEST_CASE("m_distribution covers all of H") {
  for (std::int64_t n : {6, 12, 30, 42}) {
    std::size_t total = 0;
    for (const auto& [m, count] : m_distribution(Level(n))) total += count;
    CHECK(total == static_cast<std::size_t>(oracle::psi(n) - n));
  }
}

}
