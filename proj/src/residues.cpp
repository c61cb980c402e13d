#include "fundom/residues.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "fundom/errors.hpp"

namespace fundom {

namespace {

// Keeps products of two symmetric residues inside int64.
constexpr std::int64_t kMaxLevel = std::int64_t{1} << 31;

std::int64_t floor_mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

void require_same(const Level& x, const Level& y) {
  if (!(x == y)) throw std::invalid_argument("residues at different levels");
}

}  // namespace

Level::Level(std::int64_t n) : n_(n) {
  if (n < 2) throw InvalidLevel("level N must be at least 2, got " + std::to_string(n));
  if (n > kMaxLevel) throw InvalidLevel("level N too large: " + std::to_string(n));
}

std::vector<std::int64_t> Level::range() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (std::int64_t x = -n1(); x <= n2(); ++x) out.push_back(x);
  return out;
}

std::int64_t sym_mod(std::int64_t x, const Level& level) {
  std::int64_t r = floor_mod(x, level.n());
  return r > level.n2() ? r - level.n() : r;
}

Residue sym_rep(std::int64_t x, const Level& level) { return Residue(x, level); }

Residue::Residue(std::int64_t x, const Level& level) : level_(level), value_(sym_mod(x, level)) {}

Residue Residue::operator+(const Residue& o) const {
  require_same(level_, o.level_);
  return Residue(value_ + o.value_, level_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same(level_, o.level_);
  return Residue(value_ - o.value_, level_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same(level_, o.level_);
  return Residue(value_ * o.value_, level_);
}

Residue Residue::operator-() const { return Residue(-value_, level_); }

std::int64_t gcd_with_level(std::int64_t a, const Level& level) {
  return std::gcd(floor_mod(a, level.n()), level.n());
}

std::int64_t gcd_with_level(const Residue& a) { return gcd_with_level(a.value(), a.level()); }

bool is_unit(std::int64_t a, const Level& level) { return gcd_with_level(a, level) == 1; }

std::int64_t inv_mod(std::int64_t a, const Level& level) {
  // Extended Euclid on (a mod N, N).
  std::int64_t r0 = level.n(), r1 = floor_mod(a, level.n());
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw NotAUnit(std::to_string(a) + " is not a unit mod " + std::to_string(level.n()));
  }
  return sym_mod(s0, level);
}

Residue inv_mod(const Residue& a) { return Residue(inv_mod(a.value(), a.level()), a.level()); }

std::vector<std::int64_t> units(const Level& level) {
  std::vector<std::int64_t> out;
  for (std::int64_t x : level.range()) {
    if (is_unit(x, level)) out.push_back(x);
  }
  return out;
}

}  // namespace fundom
