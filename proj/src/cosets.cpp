#include "fundom/cosets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "fundom/errors.hpp"
#include "fundom/projline.hpp"

namespace fundom {

std::string_view to_string(Subgroup g) {
  switch (g) {
    case Subgroup::Gamma0:
      return "gamma0";
    case Subgroup::Gamma1:
      return "gamma1";
    case Subgroup::GammaFull:
      return "gammaN";
  }
  return "?";
}

std::optional<Subgroup> parse_subgroup(std::string_view name) {
  if (name == "gamma0") return Subgroup::Gamma0;
  if (name == "gamma1") return Subgroup::Gamma1;
  if (name == "gammaN" || name == "gamma" || name == "gammafull") return Subgroup::GammaFull;
  return std::nullopt;
}

namespace {

std::vector<std::int64_t> quotient_ks(const Level& level) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = -level.n1(); k <= -2; ++k) {
    if (is_unit(k, level)) ks.push_back(k);
  }
  return ks;
}

}  // namespace

CosetList theta0(const Level& level) {
  CosetList list{level, Subgroup::Gamma0, {}, false};
  for (std::int64_t i : level.range()) list.reps.emplace_back(GroupWord::st_chain({i}));
  for (const auto& [j, mj] : m_table(level).entries) {
    for (std::int64_t m = 0; m <= mj; ++m) list.reps.emplace_back(GroupWord::st_chain({j, m}));
  }
  return list;
}

CosetList theta1(const Level& level) {
  CosetList list = theta0(level);
  list.group = Subgroup::Gamma1;
  const MTable table = m_table(level);
  const std::vector<std::int64_t> ks = quotient_ks(level);
  for (std::int64_t k : ks) {
    for (std::int64_t i : level.range()) list.reps.emplace_back(GroupWord::st_chain({k, i}));
  }
  for (std::int64_t k : ks) {
    const std::int64_t k_inv = inv_mod(k, level);
    for (const auto& [j, mj] : table.entries) {
      const std::int64_t shifted = sym_mod(k_inv + j, level);
      for (std::int64_t m = 0; m <= mj; ++m) {
        list.reps.emplace_back(GroupWord::st_chain({k, shifted, m}));
      }
    }
  }
  return list;
}

CosetList theta_full(const Level& level) {
  const CosetList inner = theta1(level);
  CosetList list{level, Subgroup::GammaFull, {}, false};
  list.reps.reserve(inner.reps.size() * static_cast<std::size_t>(level.n()));
  for (std::int64_t l : level.range()) {
    const GroupWord shift = GroupWord::t(l);
    for (const Representative& r : inner.reps) list.reps.emplace_back(shift * r.word);
  }
  return list;
}

CosetList build_list(const Level& level, Subgroup group) {
  switch (group) {
    case Subgroup::Gamma0:
      return theta0(level);
    case Subgroup::Gamma1:
      return theta1(level);
    case Subgroup::GammaFull:
      return theta_full(level);
  }
  return theta0(level);
}

std::vector<GroupWord> gamma1_quotient_reps(const Level& level) {
  std::vector<GroupWord> out{GroupWord::identity()};
  for (std::int64_t k : quotient_ks(level)) {
    out.push_back(GroupWord::st_chain({k, inv_mod(k, level)}) * GroupWord::s());
  }
  return out;
}

namespace {

std::int64_t mod_n(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// Coset invariant: a tuple of residues in [0, N), canonical up to sign when
// the coset space is taken modulo +-I.
using Key = std::vector<std::int64_t>;

Key signed_key(std::vector<std::int64_t> v, std::int64_t n) {
  Key plus, minus;
  for (std::int64_t x : v) {
    plus.push_back(mod_n(x, n));
    minus.push_back(mod_n(-x, n));
  }
  return std::min(plus, minus);
}

Key key_of(const Mat2& m, Subgroup group, const Level& level) {
  const std::int64_t n = level.n();
  switch (group) {
    case Subgroup::Gamma0: {
      const ProjPoint p = normalize(m.c, m.d, level);
      return {p.a().value(), p.b().value()};
    }
    case Subgroup::Gamma1:
      return signed_key({m.c, m.d}, n);
    case Subgroup::GammaFull:
      return signed_key({m.a, m.b, m.c, m.d}, n);
  }
  return {};
}

std::string describe_key(const Key& key, Subgroup group) {
  std::string out = group == Subgroup::Gamma0 ? "P1 class (" : "residues (";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += group == Subgroup::Gamma0 ? ":" : ",";
    out += std::to_string(key[i]);
  }
  return out + ")";
}

// Every coset key of the target space, enumerated directly.
std::set<Key> all_keys(Subgroup group, const Level& level) {
  const std::int64_t n = level.n();
  std::set<Key> keys;
  switch (group) {
    case Subgroup::Gamma0:
      for (const ProjPoint& p : enumerate_p1(level)) keys.insert({p.a().value(), p.b().value()});
      break;
    case Subgroup::Gamma1:
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          if (std::gcd(std::gcd(c, d), n) == 1) keys.insert(signed_key({c, d}, n));
        }
      }
      break;
    case Subgroup::GammaFull:
      // SL_2(Z) -> SL_2(Z/NZ) is onto, so every determinant-one residue
      // matrix is a coset.
      for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t d = 0; d < n; ++d) {
          if (std::gcd(std::gcd(c, d), n) != 1) continue;
          for (std::int64_t a = 0; a < n; ++a) {
            for (std::int64_t b = 0; b < n; ++b) {
              if (mod_n(a * d - b * c, n) == 1) keys.insert(signed_key({a, b, c, d}, n));
            }
          }
        }
      }
      break;
  }
  return keys;
}

}  // namespace

VerificationReport check(const CosetList& list) {
  VerificationReport report{list.group, list.level.n(), list.reps.size(), 0, 0, {}};

  std::map<Key, std::size_t> seen;
  for (std::size_t i = 0; i < list.reps.size(); ++i) {
    const Representative& r = list.reps[i];
    if (!(evaluate(r.word) == r.matrix) || r.matrix.det() != 1) {
      report.problems.push_back("representative #" + std::to_string(i) + " " +
                                r.word.to_string() + " has a stale or invalid matrix");
      continue;
    }
    const Key key = key_of(r.matrix, list.group, list.level);
    auto [it, inserted] = seen.emplace(key, i);
    if (!inserted) {
      report.problems.push_back("duplicate coset " + describe_key(key, list.group) + ": #" +
                                std::to_string(it->second) + " " +
                                list.reps[it->second].word.to_string() + " and #" +
                                std::to_string(i) + " " + r.word.to_string());
    }
  }
  report.distinct_cosets = seen.size();

  const std::set<Key> expected = all_keys(list.group, list.level);
  report.expected_cosets = expected.size();
  std::size_t missing = 0;
  for (const Key& key : expected) {
    if (seen.count(key)) continue;
    if (++missing <= 5) report.problems.push_back("missing coset " + describe_key(key, list.group));
  }
  if (missing > 5) {
    report.problems.push_back("... " + std::to_string(missing - 5) + " more missing cosets");
  }
  return report;
}

VerificationReport verify(CosetList& list) {
  VerificationReport report = check(list);
  if (!report.passed()) {
    list.verified = false;
    throw VerificationFailed(report.problems);
  }
  list.verified = true;
  return report;
}

std::optional<std::pair<std::size_t, std::size_t>> find_pairwise_collision(const CosetList& list) {
  auto same_coset = [&](const Mat2& quotient) {
    switch (list.group) {
      case Subgroup::Gamma0:
        return in_gamma0(quotient, list.level);
      case Subgroup::Gamma1:
        return in_pm_gamma1(quotient, list.level);
      case Subgroup::GammaFull:
        return in_pm_gammaN(quotient, list.level);
    }
    return false;
  };
  for (std::size_t i = 0; i < list.reps.size(); ++i) {
    for (std::size_t j = i + 1; j < list.reps.size(); ++j) {
      if (same_coset(list.reps[i].matrix * list.reps[j].matrix.inverse())) return {{i, j}};
    }
  }
  return std::nullopt;
}

}  // namespace fundom
