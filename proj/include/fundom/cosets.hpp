#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fundom/residues.hpp"
#include "fundom/words.hpp"

namespace fundom {

enum class Subgroup { Gamma0, Gamma1, GammaFull };

/// "gamma0", "gamma1", "gammaN".
std::string_view to_string(Subgroup g);
/// Accepts the names above (and "gamma" / "gammafull" for GammaFull).
std::optional<Subgroup> parse_subgroup(std::string_view name);

struct Representative {
  GroupWord word;
  Mat2 matrix;  // evaluate(word)

  explicit Representative(GroupWord w) : word(std::move(w)), matrix(evaluate(word)) {}
};

/// Right coset representatives for (+-I)Gamma \ SL_2(Z), in canonical order.
struct CosetList {
  Level level;
  Subgroup group;
  std::vector<Representative> reps;
  bool verified = false;

  std::size_t size() const { return reps.size(); }
};

/// S T^i for i in [-n1, n2], then S T^j S T^m for nonunit j (ascending)
/// and 0 <= m <= M_j (ascending).
CosetList theta0(const Level& level);

/// theta0, then S T^k S T^i, then S T^k S T^{(k^{-1}+j)~} S T^m, for units
/// k in [-n1, -2] ascending; i, j, m as in theta0.
CosetList theta1(const Level& level);

/// T^l * g for l in [-n1, n2] (outer) and g in theta1 (inner).
CosetList theta_full(const Level& level);

CosetList build_list(const Level& level, Subgroup group);

/// {I} u {S T^k S T^{k^{-1}} S : -n1 <= k <= -2, gcd(k, N) = 1}.
std::vector<GroupWord> gamma1_quotient_reps(const Level& level);

struct VerificationReport {
  Subgroup group;
  std::int64_t n;
  std::size_t representatives = 0;
  std::size_t distinct_cosets = 0;
  // Counted directly from the target coset space, not from an index formula.
  std::size_t expected_cosets = 0;
  std::vector<std::string> problems;

  bool passed() const { return problems.empty(); }
};

/// Checks that the list hits every right coset exactly once. Gamma0 cosets
/// are identified through the P^1 class of the bottom row, (+-I)Gamma1
/// cosets through the bottom row mod N up to sign, (+-I)Gamma(N) cosets
/// through the whole matrix mod N up to sign.
VerificationReport check(const CosetList& list);

/// check(), then marks the list verified. Throws VerificationFailed.
VerificationReport verify(CosetList& list);

/// Literal pairwise test: g_i g_j^{-1} lies in the subgroup (the +-I
/// version for Gamma1 and Gamma(N)) only for i = j. Returns the first
/// offending pair. Quadratic; meant as an independent cross-check.
std::optional<std::pair<std::size_t, std::size_t>> find_pairwise_collision(const CosetList& list);

}  // namespace fundom
