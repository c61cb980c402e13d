#include "fundom/domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "fundom/checked.hpp"

namespace fundom {

using checked::add;
using checked::mul;
using checked::sub;

double InteriorVertex::x() const { return static_cast<double>(x_num) / static_cast<double>(x_den); }

double InteriorVertex::y() const { return std::sqrt(3.0) / (2.0 * static_cast<double>(q)); }

InteriorVertex interior_vertex(const Mat2& m, VertexBase base) {
  // rho + conj(rho) = 1 and rho^2 + conj(rho^2) = -1, |rho| = 1.
  const std::int64_t sign = base == VertexBase::Rho ? 1 : -1;
  const std::int64_t cross = mul(sign, add(mul(m.a, m.d), mul(m.b, m.c)));
  const std::int64_t q = add(add(mul(m.c, m.c), mul(sign, mul(m.c, m.d))), mul(m.d, m.d));
  std::int64_t num = add(mul(2, add(mul(m.a, m.c), mul(m.b, m.d))), cross);
  std::int64_t den = mul(2, q);
  const std::int64_t g = std::gcd(num, den);
  return {m, base, num / g, den / g, q};
}

IdealTriangle triangle_of(const GroupWord& word) {
  const Mat2 m = evaluate(word);
  return {word, m, interior_vertex(m, VertexBase::Rho), interior_vertex(m, VertexBase::Rho2),
          mobius_cusp(m)};
}

std::vector<Cusp> cusps_of(const CosetList& list) {
  std::vector<Cusp> out;
  out.reserve(list.reps.size());
  for (const Representative& r : list.reps) out.push_back(mobius_cusp(r.matrix));
  return out;
}

namespace {

std::int64_t mod_n(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// (x, y) with p x + q y = 1.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t p, std::int64_t q) {
  std::int64_t r0 = p, r1 = q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
  }
  if (r0 < 0) {
    s0 = -s0;
    t0 = -t0;
  }
  return {s0, t0};
}

}  // namespace

bool cusp_equivalent(const Cusp& x, const Cusp& y, const Level& level) {
  const std::int64_t n = level.n();
  const std::int64_t a = x.p(), c = x.q(), a2 = y.p(), c2 = y.q();
  // a + j c runs through the class of a mod gcd(c, N).
  const std::int64_t g = std::gcd(c, n);
  for (std::int64_t u : units(level)) {
    if (mod_n(c2 - mul(u, c), n) != 0) continue;
    if (mod_n(sub(mul(u, a2), a), g) == 0) return true;
  }
  return false;
}

std::int64_t cusp_width(const Cusp& c, const Level& level) {
  if (c.is_infinity()) return 1;
  const std::int64_t q = mod_n(c.q(), level.n());
  return level.n() / std::gcd(mul(q, q), level.n());
}

CuspOrbit cusp_orbit(const Cusp& c, const Level& level) {
  // First column (p, q); complete to [[p, b], [q, d]] with p d - b q = 1.
  const auto [x, y] = bezout(c.p(), c.q());
  const std::int64_t d = x;
  std::optional<ProjPoint> best;
  std::vector<ProjPoint> seen;
  for (std::int64_t h = 0; h < level.n(); ++h) {
    ProjPoint pt = normalize(c.q(), add(d, mul(h, c.q())), level);
    if (std::find(seen.begin(), seen.end(), pt) == seen.end()) seen.push_back(pt);
    if (!best || pt < *best) best = pt;
  }
  (void)y;
  return {*best, seen.size()};
}

std::int64_t CuspClassTable::total_width() const {
  std::int64_t sum = 0;
  for (const CuspClass& c : classes) sum += c.width;
  return sum;
}

namespace {

bool display_before(const Cusp& x, const Cusp& y) {
  // finite nonzero by (q, p), then oo, then 0
  auto rank = [](const Cusp& c) { return c.is_infinity() ? 1 : c.p() == 0 ? 2 : 0; };
  if (rank(x) != rank(y)) return rank(x) < rank(y);
  return std::make_pair(x.q(), x.p()) < std::make_pair(y.q(), y.p());
}

// Candidate representatives in preference order: oo, 0, then a/d for
// divisors 1 < d < N and 1 <= a coprime to d.
std::optional<Cusp> pick_representative(const std::vector<Cusp>& members, const Level& level) {
  auto member_of_class = [&](const Cusp& c) { return cusp_equivalent(c, members.front(), level); };
  if (member_of_class(Cusp::infinity())) return Cusp::infinity();
  if (member_of_class(Cusp(0, 1))) return Cusp(0, 1);
  const std::int64_t n = level.n();
  const std::int64_t d = std::gcd(members.front().q(), n);
  for (std::int64_t a = 1; a <= n * d; ++a) {
    if (std::gcd(a, d) != 1) continue;
    if (member_of_class(Cusp(a, d))) return Cusp(a, d);
  }
  return std::nullopt;
}

}  // namespace

CuspClassTable cusp_table(const Level& level) {
  const CosetList list = theta0(level);
  const MTable mt = m_table(level);
  CuspClassTable table{level.n(), {}, {}};

  std::vector<Cusp> cusps = cusps_of(list);
  cusps.push_back(Cusp::infinity());
  cusps.push_back(Cusp(0, 1));

  std::vector<ProjPoint> keys;
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    const Cusp& c = cusps[i];
    const ProjPoint key = cusp_orbit(c, level).key;
    auto it = std::find(keys.begin(), keys.end(), key);
    std::size_t slot = static_cast<std::size_t>(it - keys.begin());
    if (it == keys.end()) {
      keys.push_back(key);
      table.classes.push_back(CuspClass{c, cusp_width(c, level), {}, 0});
    }
    CuspClass& cls = table.classes[slot];
    if (std::find(cls.members.begin(), cls.members.end(), c) == cls.members.end()) {
      cls.members.push_back(c);
    }
    if (i < list.reps.size()) ++cls.triangles;
  }
  for (CuspClass& cls : table.classes) {
    if (auto rep = pick_representative(cls.members, level)) cls.representative = *rep;
  }
  std::stable_sort(table.classes.begin(), table.classes.end(),
                   [](const CuspClass& x, const CuspClass& y) {
                     return display_before(x.representative, y.representative);
                   });

  auto class_rep = [&](const Cusp& c) {
    for (const CuspClass& cls : table.classes) {
      if (cusp_equivalent(c, cls.representative, level)) return cls.representative;
    }
    throw std::logic_error("cusp " + c.to_string() + " has no class");
  };
  std::vector<std::int64_t> js;
  for (const auto& [j, m] : mt.entries) {
    if (j > 0) js.push_back(j);
  }
  for (const auto& [j, m] : mt.entries) {
    if (j < 0) js.push_back(j);
  }
  for (std::int64_t j : js) {
    const Cusp c(-1, j);
    table.rows.push_back({j, c, mt.at(j) + 1, class_rep(c)});
  }
  return table;
}

namespace {

struct Frame {
  double x_min, x_max, y_max, scale;
  double px(double x) const { return (x - x_min) * scale; }
  double py(double y) const { return (y_max - y) * scale; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct Point {
  double x, y;
};

// Path segment along the geodesic from `from` to `to` (either may lie on
// the real axis, y = 0).
std::string geodesic_to(const Frame& f, Point from, Point to) {
  const double dx = to.x - from.x;
  if (std::abs(dx) < 1e-12) return "L " + fmt(f.px(to.x)) + " " + fmt(f.py(to.y)) + " ";
  const double center =
      ((from.x * from.x + from.y * from.y) - (to.x * to.x + to.y * to.y)) / (2.0 * (from.x - to.x));
  const double radius = std::hypot(from.x - center, from.y);
  const int sweep = dx > 0 ? 1 : 0;
  return "A " + fmt(radius * f.scale) + " " + fmt(radius * f.scale) + " 0 0 " +
         std::to_string(sweep) + " " + fmt(f.px(to.x)) + " " + fmt(f.py(to.y)) + " ";
}

std::string triangle_path(const Frame& f, const IdealTriangle& t) {
  const Point a{t.rho2.x(), t.rho2.y()};
  const Point b{t.rho.x(), t.rho.y()};
  std::string d = "M " + fmt(f.px(a.x)) + " " + fmt(f.py(a.y)) + " ";
  d += geodesic_to(f, a, b);
  if (t.cusp.is_infinity()) {
    d += "L " + fmt(f.px(b.x)) + " " + fmt(f.py(f.y_max)) + " ";
    d += "L " + fmt(f.px(a.x)) + " " + fmt(f.py(f.y_max)) + " ";
    d += "Z";
    return d;
  }
  const Point c{t.cusp.value(), 0.0};
  d += geodesic_to(f, b, c);
  d += geodesic_to(f, c, a);
  d += "Z";
  return d;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else if (ch == '&') out += "&amp;";
    else out += ch;
  }
  return out;
}

void require_verified(const CosetList& list, bool allow_unverified) {
  if (!list.verified && !allow_unverified) {
    throw std::invalid_argument("refusing to render an unverified coset list");
  }
}

}  // namespace

std::string render_svg(const CosetList& list, const RenderOptions& options) {
  require_verified(list, options.allow_unverified);
  std::vector<IdealTriangle> triangles;
  triangles.reserve(list.reps.size());
  for (const Representative& r : list.reps) triangles.push_back(triangle_of(r.word));

  double lo = -0.5, hi = 0.5;
  for (const IdealTriangle& t : triangles) {
    for (double x : {t.rho.x(), t.rho2.x()}) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    if (!t.cusp.is_infinity()) {
      lo = std::min(lo, t.cusp.value());
      hi = std::max(hi, t.cusp.value());
    }
  }
  const double margin = 0.05 * (hi - lo) + 0.1;
  Frame f{options.x_min.value_or(lo - margin), options.x_max.value_or(hi + margin), options.y_max,
          0.0};
  if (!(f.x_max > f.x_min) || !(f.y_max > 0)) throw std::invalid_argument("empty render window");
  f.scale = options.width_px / (f.x_max - f.x_min);
  const double height = f.y_max * f.scale;
  const double baseline_pad = 0.04 * height;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(options.width_px) + "\" height=\"" + fmt(height + baseline_pad) +
         "\" viewBox=\"0 0 " + fmt(options.width_px) + " " + fmt(height + baseline_pad) + "\">\n";
  out += "<title>Fundamental domain for " + std::string(to_string(list.group)) + "(" +
         std::to_string(list.level.n()) + "), " + std::to_string(triangles.size()) +
         " triangles</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<line x1=\"0\" y1=\"" + fmt(height) + "\" x2=\"" + fmt(options.width_px) + "\" y2=\"" +
         fmt(height) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<g id=\"triangles\" fill-opacity=\"0.25\" stroke-width=\"0.8\" "
         "stroke-linejoin=\"round\">\n";
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const std::string& color = options.palette[i % options.palette.size()];
    out += "<path data-word=\"" + escape(triangles[i].word.to_string()) + "\" fill=\"" + color +
           "\" stroke=\"" + color + "\" d=\"" + triangle_path(f, triangles[i]) + "\"/>\n";
  }
  out += "</g>\n";
  if (options.labels) {
    out += "<g id=\"labels\" font-family=\"Helvetica\" text-anchor=\"middle\">\n";
    for (const IdealTriangle& t : triangles) {
      // Image of 1.5 i, an interior point of D.
      const Mat2& m = t.matrix;
      const double zr = 0.0, zi = 1.5;
      const double nr = m.a * zr + m.b, ni = m.a * zi;
      const double dr = m.c * zr + m.d, di = m.c * zi;
      const double den = dr * dr + di * di;
      const double x = (nr * dr + ni * di) / den;
      const double y = std::min((ni * dr - nr * di) / den, 0.9 * f.y_max);
      const double size = std::clamp(0.3 * y * f.scale, 1.0, 14.0);
      out += "<text x=\"" + fmt(f.px(x)) + "\" y=\"" + fmt(f.py(y)) + "\" font-size=\"" +
             fmt(size) + "\">" + escape(t.word.to_string()) + "</text>\n";
    }
    out += "</g>\n";
  }
  if (!list.verified) {
    out += "<text x=\"10\" y=\"20\" font-size=\"16\" fill=\"red\">UNVERIFIED</text>\n";
  }
  out += "</svg>\n";
  return out;
}

nlohmann::json render_json(const CosetList& list, bool allow_unverified) {
  require_verified(list, allow_unverified);
  nlohmann::json doc;
  doc["N"] = list.level.n();
  doc["group"] = std::string(to_string(list.group));
  doc["verified"] = list.verified;
  nlohmann::json triangles = nlohmann::json::array();
  for (const Representative& r : list.reps) {
    const IdealTriangle t = triangle_of(r.word);
    nlohmann::json vertices = nlohmann::json::array();
    for (const InteriorVertex* v : {&t.rho, &t.rho2}) {
      vertices.push_back({{"type", "interior"},
                          {"matrix", {{v->matrix.a, v->matrix.b}, {v->matrix.c, v->matrix.d}}},
                          {"base", v->base == VertexBase::Rho ? "rho" : "rho2"},
                          {"x", std::to_string(v->x_num) + "/" + std::to_string(v->x_den)},
                          {"y_sqrt3_over", 2 * v->q}});
    }
    vertices.push_back({{"type", "cusp"}, {"p", t.cusp.p()}, {"q", t.cusp.q()}});
    triangles.push_back(
        {{"word", t.word.to_string()}, {"cusp", t.cusp.to_string()}, {"vertices", vertices}});
  }
  doc["triangles"] = triangles;
  return doc;
}

}  // namespace fundom
