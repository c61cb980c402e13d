#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fundom/residues.hpp"

namespace fundom {

enum class PointKind { Affine, Infinity };

/// A class (a:b) of P^1(Z/NZ), stored as its preferred element:
/// (1, a^{-1} b) on the affine part, and (j, l) with M(j:l) j - l = 1 on
/// the points at infinity H. Equality of stored pairs is class equality.
class ProjPoint {
 public:
  const Level& level() const { return a_.level(); }
  const Residue& a() const { return a_; }
  const Residue& b() const { return b_; }
  PointKind kind() const { return kind_; }
  bool at_infinity() const { return kind_ == PointKind::Infinity; }

  // "(a:b)" with symmetric representatives.
  std::string to_string() const;

  friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Affine points first, then H; each by (a, b).
  friend std::strong_ordering operator<=>(const ProjPoint& x, const ProjPoint& y);

 private:
  ProjPoint(Residue a, Residue b, PointKind kind) : a_(a), b_(b), kind_(kind) {}
  friend ProjPoint normalize(std::int64_t a, std::int64_t b, const Level& level);

  Residue a_;
  Residue b_;
  PointKind kind_;
};

/// Preferred element of the class (a:b). Throws NotOnProjLine if
/// gcd(a, b, N) > 1.
ProjPoint normalize(std::int64_t a, std::int64_t b, const Level& level);

/// Least m >= 0 with gcd(m a - b, N) = 1. Throws NotOnProjLine, or NotInH
/// when gcd(a, N) = 1.
std::int64_t big_m(std::int64_t a, std::int64_t b, const Level& level);

/// j -> M_j for every nonunit j in the symmetric range.
struct MTable {
  Level level;
  std::map<std::int64_t, std::int64_t> entries;

  std::int64_t at(std::int64_t j) const { return entries.at(j); }
  std::int64_t max_value() const;
};

MTable m_table(const Level& level);

/// One class of H with its M value.
struct HClass {
  ProjPoint point;
  std::int64_t m;
};

/// Every class of H exactly once, sorted by preferred element.
std::vector<HClass> h_classes(const Level& level);

/// Every class of P^1(Z/NZ) exactly once: the N affine classes (1:b) by b,
/// then H as in h_classes.
std::vector<ProjPoint> enumerate_p1(const Level& level);

/// Histogram m -> number of classes of H with M = m.
std::map<std::int64_t, std::size_t> m_distribution(const Level& level);

}  // namespace fundom
