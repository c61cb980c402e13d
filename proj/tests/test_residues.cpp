#include <random>

#include "doctest.h"
#include "fundom/errors.hpp"
#include "fundom/residues.hpp"
#include "oracles.hpp"

using namespace fundom;

TEST_SUITE("residues") {

TEST_CASE("level bounds") {
  for (std::int64_t n = 2; n <= 50; ++n) {
    Level level(n);
    CHECK(level.n1() + level.n2() + 1 == n);
    CHECK(-level.n1() <= 0);
    CHECK(level.range().size() == static_cast<std::size_t>(n));
  }
  CHECK_THROWS_AS(Level(1), InvalidLevel);
  CHECK_THROWS_AS(Level(0), InvalidLevel);
  CHECK_THROWS_AS(Level(-7), InvalidLevel);
}

TEST_CASE("sym_rep examples") {
  const Level six(6);
  CHECK(sym_rep(0, six).value() == 0);
  CHECK(sym_rep(4, six).value() == -2);
  CHECK(sym_rep(3, six).value() == 3);
  CHECK(sym_rep(-3, six).value() == 3);

  // k^{-1} + j for k^{-1} = -3 and the nonunits j of Z/8.
  const Level eight(8);
  std::vector<std::int64_t> got;
  for (std::int64_t j : {-2, 0, 2, 4}) got.push_back(sym_rep(-3 + j, eight).value());
  CHECK(got == std::vector<std::int64_t>{3, -3, -1, 1});
}

TEST_CASE("sym_rep is periodic and idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Level level(std::uniform_int_distribution<std::int64_t>(2, 500)(rng));
    const std::int64_t x = std::uniform_int_distribution<std::int64_t>(-100000, 100000)(rng);
    const std::int64_t r = sym_rep(x, level).value();
    CHECK(oracle::mod(r - x, level.n()) == 0);
    CHECK(r >= -level.n1());
    CHECK(r <= level.n2());
    CHECK(sym_rep(x + level.n(), level) == sym_rep(x, level));
    CHECK(sym_rep(r, level).value() == r);
  }
}

TEST_CASE("gcd_with_level") {
  CHECK(gcd_with_level(Residue(0, Level(6))) == 6);
  CHECK(gcd_with_level(Residue(-2, Level(6))) == 2);
  CHECK(gcd_with_level(Residue(5, Level(30))) == 5);
  const Level level(42);
  for (std::int64_t x = -100; x <= 100; ++x) {
    CHECK(gcd_with_level(x, level) == gcd_with_level(x + 42, level));
    CHECK(gcd_with_level(x, level) >= 1);
    CHECK(gcd_with_level(x, level) <= 42);
  }
}

TEST_CASE("inv_mod") {
  CHECK(inv_mod(Residue(-3, Level(8))).value() == -3);
  CHECK(inv_mod(Residue(1, Level(30))).value() == 1);
  // 7 * 13 = 91 = 1 (mod 30)
  CHECK(inv_mod(Residue(7, Level(30))).value() == 13);
  CHECK_THROWS_AS(inv_mod(Residue(6, Level(30))), NotAUnit);
  CHECK_THROWS_AS(inv_mod(Residue(0, Level(2))), NotAUnit);

  for (std::int64_t n = 2; n <= 120; ++n) {
    const Level level(n);
    for (std::int64_t a : units(level)) {
      const Residue r(a, level);
      CHECK((r * inv_mod(r)).value() == sym_rep(1, level).value());
    }
    CHECK(units(level).size() == static_cast<std::size_t>(oracle::phi(n)));
  }
}

TEST_CASE("residue arithmetic stays canonical") {
  const Level level(30);
  const Residue x(14, level), y(9, level);
  CHECK((x + y).value() == -7);
  CHECK((x - y).value() == 5);
  CHECK((x * y).value() == 6);
  CHECK((-x).value() == -14);
  CHECK_THROWS_AS(Residue(1, Level(5)) + Residue(1, Level(6)), std::invalid_argument);
}

}
