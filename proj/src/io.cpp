#include "fundom/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fundom {

nlohmann::json coset_list_json(const CosetList& list) {
  nlohmann::json reps = nlohmann::json::array();
  for (const Representative& r : list.reps) {
    const Mat2& m = r.matrix;
    reps.push_back({{"word", r.word.to_string()},
                    {"matrix", {{m.a, m.b}, {m.c, m.d}}},
                    {"cusp", mobius_cusp(m).to_string()}});
  }
  return {{"N", list.level.n()},
          {"group", std::string(to_string(list.group))},
          {"reps", reps},
          {"verified", list.verified}};
}

CosetList coset_list_from_json(const nlohmann::json& doc) {
  try {
    const auto group = parse_subgroup(doc.at("group").get<std::string>());
    if (!group) throw std::invalid_argument("unknown group " + doc.at("group").dump());
    CosetList list{Level(doc.at("N").get<std::int64_t>()), *group, {}, false};
    for (const auto& entry : doc.at("reps")) {
      Representative r(GroupWord::parse(entry.at("word").get<std::string>()));
      if (entry.contains("matrix")) {
        const auto& mj = entry.at("matrix");
        const Mat2 given{mj.at(0).at(0).get<std::int64_t>(), mj.at(0).at(1).get<std::int64_t>(),
                         mj.at(1).at(0).get<std::int64_t>(), mj.at(1).at(1).get<std::int64_t>()};
        if (!(given == r.matrix)) {
          throw std::invalid_argument("matrix does not match word " + r.word.to_string());
        }
      }
      list.reps.push_back(std::move(r));
    }
    return list;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed coset list: ") + e.what());
  }
}

std::string cusp_label(const Cusp& c) {
  if (c.is_infinity()) return "∞";
  if (c.p() == 0) return "0";
  return c.to_string();
}

namespace {

// Display width in code points (labels may contain "∞").
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

// Rows of cells, printed as "| a | b |" with every column padded to its
// widest cell.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    out += "|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += " " + row[i] + std::string(widths[i] - display_width(row[i]), ' ') + " |";
    }
    out += "\n";
  }
  return out;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::map<std::int64_t, std::vector<std::int64_t>> group_by_value(const MTable& table) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_value;
  for (const auto& [j, m] : table.entries) by_value[m].push_back(j);
  return by_value;
}

}  // namespace

std::string mtable_text(const MTable& table, const std::map<std::int64_t, std::size_t>& distribution) {
  std::vector<std::string> js{"j"}, ms{"M_j"};
  for (const auto& [j, m] : table.entries) {
    js.push_back(std::to_string(j));
    ms.push_back(std::to_string(m));
  }
  std::string out = "N = " + std::to_string(table.level.n()) + "\n\n" + grid({js, ms}) + "\n";

  std::vector<std::vector<std::string>> summary{{"M_j", "j"}};
  for (const auto& [m, j_list] : group_by_value(table)) {
    summary.push_back({std::to_string(m), join(j_list)});
  }
  out += grid(summary) + "\n";

  std::vector<std::vector<std::string>> hist{{"M", "classes in H"}};
  for (const auto& [m, count] : distribution) {
    hist.push_back({std::to_string(m), std::to_string(count)});
  }
  out += grid(hist);
  return out;
}

std::string mtable_csv(const MTable& table) {
  std::string out = "j,M_j\n";
  for (const auto& [j, m] : table.entries) out += std::to_string(j) + "," + std::to_string(m) + "\n";
  return out;
}

nlohmann::json mtable_json(const MTable& table, const std::map<std::int64_t, std::size_t>& distribution) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [j, m] : table.entries) entries.push_back({{"j", j}, {"M_j", m}});
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [m, count] : distribution) hist[std::to_string(m)] = count;
  return {{"N", table.level.n()}, {"entries", entries}, {"distribution", hist}};
}

std::string cusp_table_text(const CuspClassTable& table) {
  std::vector<std::string> js{"j"}, cusps{"cusp"}, mult{"M_j+1"}, reps{"cusp rep"};
  for (const CuspRow& row : table.rows) {
    js.push_back(std::to_string(row.j));
    cusps.push_back(cusp_label(row.cusp));
    mult.push_back(std::to_string(row.multiplicity));
    reps.push_back(cusp_label(row.representative));
  }
  std::vector<std::string> class_reps{"cusp rep"}, widths{"width"};
  for (const CuspClass& cls : table.classes) {
    class_reps.push_back(cusp_label(cls.representative));
    widths.push_back(std::to_string(cls.width));
  }
  return "N = " + std::to_string(table.n) + "\n\n" + grid({js, cusps, mult, reps}) + "\n" +
         grid({class_reps, widths}) + "\ntotal width = " + std::to_string(table.total_width()) + "\n";
}

std::string cusp_table_csv(const CuspClassTable& table) {
  std::string out = "j,cusp,multiplicity,cusp_rep\n";
  for (const CuspRow& row : table.rows) {
    out += std::to_string(row.j) + "," + row.cusp.to_string() + "," +
           std::to_string(row.multiplicity) + "," + row.representative.to_string() + "\n";
  }
  out += "\ncusp_rep,width\n";
  for (const CuspClass& cls : table.classes) {
    out += cls.representative.to_string() + "," + std::to_string(cls.width) + "\n";
  }
  return out;
}

}  // namespace fundom
