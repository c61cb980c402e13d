#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fundom {

/// The modulus N together with the bounds of the symmetric residue range
/// [-n1, n2], n1 = floor((N-1)/2), n2 = floor(N/2).
class Level {
 public:
  /// Throws InvalidLevel for N < 2 (or N too large for exact 64-bit work).
  explicit Level(std::int64_t n);

  std::int64_t n() const { return n_; }
  std::int64_t n1() const { return (n_ - 1) / 2; }
  std::int64_t n2() const { return n_ / 2; }

  // Symmetric range, ascending: -n1, ..., n2.
  std::vector<std::int64_t> range() const;

  friend bool operator==(const Level&, const Level&) = default;

 private:
  std::int64_t n_;
};

/// An element of Z/NZ, always held as its symmetric representative.
class Residue {
 public:
  Residue(std::int64_t x, const Level& level);

  std::int64_t value() const { return value_; }
  const Level& level() const { return level_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue& x, const Residue& y) {
    return x.level_ == y.level_ && x.value_ == y.value_;
  }

 private:
  Level level_;
  std::int64_t value_;
};

/// x~ : the unique integer congruent to x mod N in [-n1, n2].
std::int64_t sym_mod(std::int64_t x, const Level& level);
Residue sym_rep(std::int64_t x, const Level& level);

/// gcd of any representative with N, in [1, N].
std::int64_t gcd_with_level(const Residue& a);
std::int64_t gcd_with_level(std::int64_t a, const Level& level);

bool is_unit(std::int64_t a, const Level& level);

/// Symmetric representative of a^{-1}; throws NotAUnit when gcd(a, N) > 1.
Residue inv_mod(const Residue& a);
std::int64_t inv_mod(std::int64_t a, const Level& level);

/// Symmetric representatives of the units of Z/NZ, ascending.
std::vector<std::int64_t> units(const Level& level);

}  // namespace fundom
