#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fundom/residues.hpp"

namespace fundom {

/// A 2x2 integer matrix. Arithmetic is overflow-checked (OverflowError).
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  static Mat2 s() { return {0, -1, 1, 0}; }
  static Mat2 t(std::int64_t e = 1) { return {1, e, 0, 1}; }

  std::int64_t det() const;
  // Inverse of a determinant-one matrix.
  Mat2 inverse() const;
  Mat2 operator-() const;
  Mat2 operator*(const Mat2& o) const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Letter {
  enum class Kind { S, T };
  Kind kind;
  std::int64_t exponent;  // 1 for S

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A signed word +-(S)T^{e1}ST^{e2}S...(S). Adjacent T powers are merged
/// and T^0 is dropped on construction; nothing else is simplified.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord identity() { return {}; }
  static GroupWord s();
  static GroupWord t(std::int64_t e);
  // S T^{e1} S T^{e2} ... S T^{ek}
  static GroupWord st_chain(const std::vector<std::int64_t>& exponents);

  /// Reads "I", "-I", or an optionally signed concatenation of "S", "T",
  /// "T^e" (e may be negative). Throws WordParseError.
  static GroupWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  int sign() const { return sign_; }
  bool empty() const { return letters_.empty(); }

  GroupWord operator*(const GroupWord& o) const;
  GroupWord operator-() const;

  /// "ST^-3ST^3S"; "T" for T^1; "I" for the empty word; "-" prefix for sign.
  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  void push(Letter letter);

  std::vector<Letter> letters_;
  int sign_ = 1;
};

Mat2 evaluate(const GroupWord& w);

/// Bottom row (c, d) reduced mod N.
std::pair<Residue, Residue> row_map(const Mat2& m, const Level& level);

/// A point of Q u {oo}: p/q in lowest terms with q >= 0; oo is 1/0.
class Cusp {
 public:
  Cusp(std::int64_t p, std::int64_t q);
  static Cusp infinity() { return Cusp(1, 0); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  double value() const;

  // "p/q", with oo written as "1/0".
  std::string to_string() const;

  friend bool operator==(const Cusp&, const Cusp&) = default;
  // oo sorts last; finite cusps by value.
  friend bool operator<(const Cusp& x, const Cusp& y);

 private:
  std::int64_t p_, q_;
};

/// Image of oo, i.e. a/c.
Cusp mobius_cusp(const Mat2& m);
/// Image of a cusp p/q, i.e. (ap + bq)/(cp + dq).
Cusp mobius_cusp(const Mat2& m, const Cusp& z);

bool in_gamma0(const Mat2& m, const Level& level);
/// c = 0 and a = d = +-1 mod N.
bool in_pm_gamma1(const Mat2& m, const Level& level);
bool in_gammaN(const Mat2& m, const Level& level);
/// m = +-I mod N.
bool in_pm_gammaN(const Mat2& m, const Level& level);

/// Image in PSL_2(Z): the sign is fixed so that the first nonzero entry of
/// (c, d, a, b) is positive.
class PslMat {
 public:
  explicit PslMat(const Mat2& m);
  const Mat2& mat() const { return mat_; }
  friend bool operator==(const PslMat&, const PslMat&) = default;

 private:
  Mat2 mat_;
};

PslMat psl_normalize(const Mat2& m);

struct PslHash {
  std::size_t operator()(const PslMat& m) const noexcept;
};

}  // namespace fundom
