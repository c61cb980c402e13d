#include "fundom/projline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fundom/errors.hpp"

namespace fundom {

namespace {

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t n) {
  return std::gcd(std::gcd(a, b), n);
}

void require_on_line(std::int64_t a, std::int64_t b, const Level& level) {
  if (gcd3(sym_mod(a, level), sym_mod(b, level), level.n()) != 1) {
    throw NotOnProjLine("(" + std::to_string(a) + ":" + std::to_string(b) +
                        ") has gcd(a, b, N) > 1 for N = " + std::to_string(level.n()));
  }
}

// Assumes (a:b) is in H.
std::int64_t search_m(std::int64_t a, std::int64_t b, const Level& level) {
  const std::int64_t n = level.n();
  a = sym_mod(a, level);
  b = sym_mod(b, level);
  // m a - b mod N is periodic in m with period dividing N.
  for (std::int64_t m = 0; m < n; ++m) {
    if (is_unit(m * a - b, level)) return m;
  }
  throw std::logic_error("M(a:b) search exceeded N; class (" + std::to_string(a) + ":" +
                         std::to_string(b) + ") has no unit m a - b");
}

}  // namespace

std::string ProjPoint::to_string() const {
  return "(" + std::to_string(a_.value()) + ":" + std::to_string(b_.value()) + ")";
}

std::strong_ordering operator<=>(const ProjPoint& x, const ProjPoint& y) {
  if (auto c = (x.kind_ == PointKind::Infinity) <=> (y.kind_ == PointKind::Infinity); c != 0) {
    return c;
  }
  if (auto c = x.a_.value() <=> y.a_.value(); c != 0) return c;
  return x.b_.value() <=> y.b_.value();
}

std::int64_t big_m(std::int64_t a, std::int64_t b, const Level& level) {
  require_on_line(a, b, level);
  if (is_unit(a, level)) {
    throw NotInH("M is undefined on the affine class (" + std::to_string(a) + ":" +
                 std::to_string(b) + ")");
  }
  return search_m(a, b, level);
}

ProjPoint normalize(std::int64_t a, std::int64_t b, const Level& level) {
  require_on_line(a, b, level);
  const Residue ra(a, level), rb(b, level);
  if (is_unit(a, level)) {
    return ProjPoint(Residue(1, level), inv_mod(ra) * rb, PointKind::Affine);
  }
  const Residue c = Residue(search_m(a, b, level), level) * ra - rb;
  const Residue c_inv = inv_mod(c);
  return ProjPoint(ra * c_inv, rb * c_inv, PointKind::Infinity);
}

std::int64_t MTable::max_value() const {
  std::int64_t best = 0;
  for (const auto& [j, m] : entries) best = std::max(best, m);
  return best;
}

std::vector<HClass> h_classes(const Level& level) {
  const std::int64_t n = level.n();
  const std::vector<std::int64_t> us = units(level);
  // visited[a][b] over 0 <= a, b < N; each orbit under units is processed once.
  std::vector<char> visited(static_cast<std::size_t>(n * n), 0);
  auto cell = [n](std::int64_t a, std::int64_t b) {
    a %= n;
    b %= n;
    if (a < 0) a += n;
    if (b < 0) b += n;
    return static_cast<std::size_t>(a * n + b);
  };

  std::vector<HClass> out;
  for (std::int64_t a = 0; a < n; ++a) {
    if (is_unit(a, level)) continue;
    for (std::int64_t b = 0; b < n; ++b) {
      if (visited[cell(a, b)] || gcd3(a, b, n) != 1) continue;
      for (std::int64_t u : us) visited[cell(u * a, u * b)] = 1;
      out.push_back(HClass{normalize(a, b, level), search_m(a, b, level)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HClass& x, const HClass& y) { return x.point < y.point; });
  return out;
}

std::vector<ProjPoint> enumerate_p1(const Level& level) {
  std::vector<ProjPoint> out;
  for (std::int64_t b : level.range()) out.push_back(normalize(1, b, level));
  for (const HClass& h : h_classes(level)) out.push_back(h.point);
  return out;
}

MTable m_table(const Level& level) {
  MTable table{level, {}};
  for (std::int64_t j : level.range()) {
    if (!is_unit(j, level)) table.entries[j] = 0;
  }
  for (const HClass& h : h_classes(level)) {
    auto& slot = table.entries.at(h.point.a().value());
    slot = std::max(slot, h.m);
  }
  return table;
}

std::map<std::int64_t, std::size_t> m_distribution(const Level& level) {
  std::map<std::int64_t, std::size_t> hist;
  for (const HClass& h : h_classes(level)) ++hist[h.m];
  return hist;
}

}  // namespace fundom
