#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "fundom/cosets.hpp"
#include "fundom/domain.hpp"
#include "fundom/projline.hpp"
#include "json.hpp"

namespace fundom {

/// {"N", "group", "reps": [{"word", "matrix", "cusp"}], "verified"}.
nlohmann::json coset_list_json(const CosetList& list);

/// Inverse of coset_list_json. Matrices are recomputed from the words and
/// must agree with any "matrix" given; the result is never marked verified.
/// Throws std::invalid_argument on malformed input.
CosetList coset_list_from_json(const nlohmann::json& doc);

/// Plain "p/q", with "0" for 0/1 and "∞" for oo.
std::string cusp_label(const Cusp& c);

/// j | M_j row table, the grouping of j by M_j, and the M distribution on H.
std::string mtable_text(const MTable& table, const std::map<std::int64_t, std::size_t>& distribution);
std::string mtable_csv(const MTable& table);
nlohmann::json mtable_json(const MTable& table, const std::map<std::int64_t, std::size_t>& distribution);

/// The per-j cusp table (j, cusp, M_j+1, cusp rep) followed by the class
/// table (cusp rep, width).
std::string cusp_table_text(const CuspClassTable& table);
std::string cusp_table_csv(const CuspClassTable& table);

}  // namespace fundom
