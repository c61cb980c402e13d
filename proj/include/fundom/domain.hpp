#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fundom/cosets.hpp"
#include "fundom/projline.hpp"
#include "fundom/words.hpp"
#include "json.hpp"

namespace fundom {

enum class VertexBase { Rho, Rho2 };  // rho = e^{i pi/3}, rho^2 = e^{2 i pi/3}

/// g(rho) or g(rho^2) for g = [[a,b],[c,d]], held exactly as
/// x = x_num / x_den and y = sqrt(3) / (2 q) with q = c^2 +- cd + d^2.
struct InteriorVertex {
  Mat2 matrix;
  VertexBase base;
  std::int64_t x_num;
  std::int64_t x_den;
  std::int64_t q;

  double x() const;
  double y() const;
  /// Same point of the upper half-plane (the generating matrix may differ).
  bool same_point(const InteriorVertex& o) const {
    return x_num == o.x_num && x_den == o.x_den && q == o.q;
  }
};

InteriorVertex interior_vertex(const Mat2& m, VertexBase base);

/// g D for the standard triangle D with vertices rho, rho^2, oo.
struct IdealTriangle {
  GroupWord word;
  Mat2 matrix;
  InteriorVertex rho;
  InteriorVertex rho2;
  Cusp cusp;  // g(oo)
};

IdealTriangle triangle_of(const GroupWord& word);

/// g(oo) for every representative, in list order.
std::vector<Cusp> cusps_of(const CosetList& list);

/// Gamma0(N)-equivalence: c' = y c and y a' = a + j c (mod N) for some
/// unit y and integer j, with a/c and a'/c' in lowest terms.
bool cusp_equivalent(const Cusp& x, const Cusp& y, const Level& level);

/// N / gcd(q^2, N) for p/q; oo has width 1.
std::int64_t cusp_width(const Cusp& c, const Level& level);

/// Canonical label of the Gamma0(N)-class of a cusp: the least preferred
/// element of the orbit of (q : d) in P^1(Z/NZ) under (c:d) -> (c : d + hc),
/// where [[p, *], [q, d]] is in SL_2(Z). The orbit size is the width.
struct CuspOrbit {
  ProjPoint key;
  std::size_t size;
};
CuspOrbit cusp_orbit(const Cusp& c, const Level& level);

struct CuspClass {
  Cusp representative;
  std::int64_t width;
  std::vector<Cusp> members;  // distinct cusps of theta0 in this class, first-seen order
  std::size_t triangles = 0;  // theta0 representatives with cusp in this class
};

/// One row per nonunit j != 0 (positive j ascending, then negative j
/// ascending): the cusp -1/j of S T^j S T^m, its multiplicity M_j + 1, and
/// its class representative.
struct CuspRow {
  std::int64_t j;
  Cusp cusp;
  std::int64_t multiplicity;
  Cusp representative;
};

struct CuspClassTable {
  std::int64_t n;
  std::vector<CuspRow> rows;
  // Finite nonzero representatives by (denominator, numerator), then oo, then 0.
  std::vector<CuspClass> classes;

  std::int64_t total_width() const;
};

CuspClassTable cusp_table(const Level& level);

struct RenderOptions {
  double y_max = 2.2;
  bool labels = false;
  double width_px = 1200.0;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::array<std::string, 3> palette{"#d62728", "#1f77b4", "#2ca02c"};
  // Render a list that never passed verify(); the output is watermarked.
  bool allow_unverified = false;
};

/// SVG 1.1, one <path> per triangle in list order. Throws
/// std::invalid_argument for an unverified list unless allow_unverified.
std::string render_svg(const CosetList& list, const RenderOptions& options = {});

/// {"N", "group", "verified", "triangles": [{"word", "cusp", "vertices"}]}.
nlohmann::json render_json(const CosetList& list, bool allow_unverified = false);

}  // namespace fundom
