#include "fundom/words.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "fundom/checked.hpp"
#include "fundom/errors.hpp"

namespace fundom {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t Mat2::det() const { return sub(mul(a, d), mul(b, c)); }

Mat2 Mat2::inverse() const { return {d, checked::neg(b), checked::neg(c), a}; }

Mat2 Mat2::operator-() const {
  return {checked::neg(a), checked::neg(b), checked::neg(c), checked::neg(d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {add(mul(a, o.a), mul(b, o.c)), add(mul(a, o.b), mul(b, o.d)),
          add(mul(c, o.a), mul(d, o.c)), add(mul(c, o.b), mul(d, o.d))};
}

GroupWord GroupWord::s() {
  GroupWord w;
  w.push({Letter::Kind::S, 1});
  return w;
}

GroupWord GroupWord::t(std::int64_t e) {
  GroupWord w;
  w.push({Letter::Kind::T, e});
  return w;
}

GroupWord GroupWord::st_chain(const std::vector<std::int64_t>& exponents) {
  GroupWord w;
  for (std::int64_t e : exponents) {
    w.push({Letter::Kind::S, 1});
    w.push({Letter::Kind::T, e});
  }
  return w;
}

void GroupWord::push(Letter letter) {
  if (letter.kind == Letter::Kind::S) {
    letters_.push_back({Letter::Kind::S, 1});
    return;
  }
  if (!letters_.empty() && letters_.back().kind == Letter::Kind::T) {
    letters_.back().exponent = add(letters_.back().exponent, letter.exponent);
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  if (letter.exponent != 0) letters_.push_back(letter);
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord w = *this;
  for (const Letter& l : o.letters_) w.push(l);
  w.sign_ *= o.sign_;
  return w;
}

GroupWord GroupWord::operator-() const {
  GroupWord w = *this;
  w.sign_ = -w.sign_;
  return w;
}

std::string GroupWord::to_string() const {
  std::string out = sign_ < 0 ? "-" : "";
  if (letters_.empty()) return out + "I";
  for (const Letter& l : letters_) {
    if (l.kind == Letter::Kind::S) {
      out += 'S';
    } else if (l.exponent == 1) {
      out += 'T';
    } else {
      out += "T^" + std::to_string(l.exponent);
    }
  }
  return out;
}

GroupWord GroupWord::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw WordParseError("cannot parse word \"" + std::string(text) + "\": " + why);
  };
  GroupWord w;
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    w.sign_ = -1;
    ++pos;
  }
  if (text.substr(pos) == "I") return w;
  if (pos == text.size()) fail("empty");
  while (pos < text.size()) {
    const char ch = text[pos++];
    if (ch == 'S') {
      w.push({Letter::Kind::S, 1});
    } else if (ch == 'T') {
      std::int64_t e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos < text.size() && text[pos] == '{') ++pos;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, e);
        if (ec != std::errc()) fail("bad exponent at offset " + std::to_string(pos));
        pos += static_cast<std::size_t>(ptr - begin);
        if (pos < text.size() && text[pos] == '}') ++pos;
      }
      w.push({Letter::Kind::T, e});
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  return w;
}

Mat2 evaluate(const GroupWord& w) {
  Mat2 m = Mat2::identity();
  for (const Letter& l : w.letters()) {
    m = m * (l.kind == Letter::Kind::S ? Mat2::s() : Mat2::t(l.exponent));
  }
  return w.sign() < 0 ? -m : m;
}

std::pair<Residue, Residue> row_map(const Mat2& m, const Level& level) {
  return {Residue(m.c, level), Residue(m.d, level)};
}

Cusp::Cusp(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a cusp");
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  p_ = p;
  q_ = q;
}

double Cusp::value() const {
  return is_infinity() ? INFINITY : static_cast<double>(p_) / static_cast<double>(q_);
}

std::string Cusp::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

bool operator<(const Cusp& x, const Cusp& y) {
  if (x.is_infinity() || y.is_infinity()) return !x.is_infinity() && y.is_infinity();
  // q > 0 on both sides.
  return mul(x.p_, y.q_) < mul(y.p_, x.q_);
}

Cusp mobius_cusp(const Mat2& m) { return Cusp(m.a, m.c); }

Cusp mobius_cusp(const Mat2& m, const Cusp& z) {
  return Cusp(add(mul(m.a, z.p()), mul(m.b, z.q())), add(mul(m.c, z.p()), mul(m.d, z.q())));
}

namespace {

bool divides(std::int64_t n, std::int64_t x) { return x % n == 0; }

}  // namespace

bool in_gamma0(const Mat2& m, const Level& level) { return divides(level.n(), m.c); }

bool in_pm_gamma1(const Mat2& m, const Level& level) {
  const std::int64_t n = level.n();
  if (!divides(n, m.c)) return false;
  return (divides(n, m.a - 1) && divides(n, m.d - 1)) ||
         (divides(n, m.a + 1) && divides(n, m.d + 1));
}

bool in_gammaN(const Mat2& m, const Level& level) {
  const std::int64_t n = level.n();
  return divides(n, m.a - 1) && divides(n, m.b) && divides(n, m.c) && divides(n, m.d - 1);
}

bool in_pm_gammaN(const Mat2& m, const Level& level) {
  return in_gammaN(m, level) || in_gammaN(-m, level);
}

PslMat::PslMat(const Mat2& m) : mat_(m) {
  const std::int64_t lead = m.c != 0 ? m.c : m.d != 0 ? m.d : m.a != 0 ? m.a : m.b;
  if (lead < 0) mat_ = -m;
}

PslMat psl_normalize(const Mat2& m) { return PslMat(m); }

std::size_t PslHash::operator()(const PslMat& m) const noexcept {
  std::size_t h = 0;
  for (std::int64_t x : {m.mat().a, m.mat().b, m.mat().c, m.mat().d}) {
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace fundom
