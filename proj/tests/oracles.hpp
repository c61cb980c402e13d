#pragma once

// Independent brute-force references for the tests. Nothing here calls the
// library code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::int64_t phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

inline std::int64_t psi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p : prime_factors(n)) r = r / p * (p + 1);
  return r;
}

/// Unit-scaling orbits of primitive pairs in (Z/N)^2, each as a sorted set
/// of pairs in [0, N).
inline std::vector<std::set<std::pair<std::int64_t, std::int64_t>>> p1_orbits(std::int64_t n) {
  std::vector<std::int64_t> us;
  for (std::int64_t u = 1; u <= n; ++u) {
    if (std::gcd(u, n) == 1) us.push_back(u % n);
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<std::set<std::pair<std::int64_t, std::int64_t>>> orbits;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (std::gcd(std::gcd(a, b), n) != 1 || seen.count({a, b})) continue;
      std::set<std::pair<std::int64_t, std::int64_t>> orbit;
      for (std::int64_t u : us) orbit.insert({mod(u * a, n), mod(u * b, n)});
      seen.insert(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

/// Number of +-classes of primitive rows mod N: [SL2(Z) : (+-I)Gamma1(N)].
inline std::size_t pm_gamma1_index(std::int64_t n) {
  std::set<std::pair<std::int64_t, std::int64_t>> classes;
  for (std::int64_t c = 0; c < n; ++c) {
    for (std::int64_t d = 0; d < n; ++d) {
      if (std::gcd(std::gcd(c, d), n) != 1) continue;
      classes.insert(std::min(std::make_pair(c, d), std::make_pair(mod(-c, n), mod(-d, n))));
    }
  }
  return classes.size();
}

/// Number of +-classes of SL2(Z/NZ): [SL2(Z) : (+-I)Gamma(N)].
inline std::size_t pm_gamma_index(std::int64_t n) {
  std::size_t count = 0, fixed = 0;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) {
          if (mod(a * d - b * c, n) != 1) continue;
          ++count;
          if (mod(2 * a, n) == 0 && mod(2 * b, n) == 0 && mod(2 * c, n) == 0 && mod(2 * d, n) == 0) ++fixed;
        }
  return (count + fixed) / 2;
}

struct M2 {
  std::int64_t a, b, c, d;
  M2 operator*(const M2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

/// (x, y) with p x + q y = 1, for coprime p, q.
inline std::pair<std::int64_t, std::int64_t> bezout(std::int64_t p, std::int64_t q) {
  std::int64_t r0 = p, r1 = q, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t k = r0 / r1, t;
    t = r0 - k * r1; r0 = r1; r1 = t;
    t = s0 - k * s1; s0 = s1; s1 = t;
    t = t0 - k * t1; t0 = t1; t1 = t;
  }
  if (r0 < 0) { s0 = -s0; t0 = -t0; }
  return {s0, t0};
}

/// Least h > 0 with g T^h g^{-1} in Gamma0(N), g(oo) = p/q; found by search.
inline std::int64_t stabilizer_width(std::int64_t p, std::int64_t q, std::int64_t n) {
  auto [x, y] = bezout(p, q);
  const M2 g{p, -y, q, x};       // det = p x + q y = 1
  const M2 g_inv{x, y, -q, p};
  for (std::int64_t h = 1; h <= n; ++h) {
    const M2 conj = g * M2{1, h, 0, 1} * g_inv;
    if (mod(conj.c, n) == 0) return h;
  }
  return -1;
}

/// Searches Gamma0(N) elements with bottom row (N k, d), |k| <= kmax,
/// |d| <= dmax, for one sending p/q to p2/q2 (oo = 1/0). A fixed bottom row
/// determines the image up to integer translation, which is checked exactly.
inline bool gamma0_maps(std::int64_t p, std::int64_t q, std::int64_t p2, std::int64_t q2,
                        std::int64_t n, std::int64_t kmax, std::int64_t dmax) {
  for (std::int64_t k = -kmax; k <= kmax; ++k) {
    const std::int64_t c = n * k;
    for (std::int64_t d = -dmax; d <= dmax; ++d) {
      if (std::gcd(c, d) != 1) continue;
      auto [x, y] = bezout(d, -c);  // d x - c y = 1 -> a = x, b = y
      const std::int64_t a = x, b = y;
      const std::int64_t num = a * p + b * q;
      const std::int64_t den = c * p + d * q;
      if (den == 0) {
        if (q2 == 0) return true;
        continue;
      }
      if (q2 == 0) continue;
      // num/den + t = p2/q2 for some integer t (sign of the pair is free)
      for (std::int64_t s : {1, -1}) {
        if (s * den != q2) continue;
        if (mod(s * num - p2, q2) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
