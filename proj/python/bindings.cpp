#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fundom/cayley.hpp"
#include "fundom/cosets.hpp"
#include "fundom/domain.hpp"
#include "fundom/errors.hpp"
#include "fundom/io.hpp"
#include "fundom/projline.hpp"

namespace py = pybind11;
using namespace fundom;

namespace {

Subgroup group_of(const std::string& name) {
  auto g = parse_subgroup(name);
  if (!g) throw std::invalid_argument("unknown group '" + name + "'");
  return *g;
}

// Built from N and group, or from explicit words when given.
CosetList make_list(std::int64_t n, const std::string& group,
                    const std::optional<std::vector<std::string>>& words) {
  if (!words) return build_list(Level(n), group_of(group));
  CosetList list{Level(n), group_of(group), {}, false};
  for (const std::string& w : *words) list.reps.emplace_back(GroupWord::parse(w));
  return list;
}

CosetList verified_list(std::int64_t n, const std::string& group) {
  CosetList list = build_list(Level(n), group_of(group));
  verify(list);
  return list;
}

std::vector<std::string> strings(const std::vector<GroupWord>& words) {
  std::vector<std::string> out;
  for (const GroupWord& w : words) out.push_back(w.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coset representatives, Cayley graphs and fundamental domains for congruence subgroups.";

  py::register_exception<VerificationFailed>(m, "VerificationFailed", PyExc_RuntimeError);
  py::register_exception<DuplicateVertex>(m, "DuplicateVertex", PyExc_RuntimeError);

  m.def("sym_rep", [](std::int64_t x, std::int64_t n) { return sym_rep(x, Level(n)).value(); },
        py::arg("x"), py::arg("N"), "Symmetric residue of x in [-(N-1)//2, N//2].");
  m.def("inv_mod", [](std::int64_t a, std::int64_t n) { return inv_mod(a, Level(n)); },
        py::arg("a"), py::arg("N"));
  m.def("normalize",
        [](std::int64_t a, std::int64_t b, std::int64_t n) {
          const ProjPoint p = normalize(a, b, Level(n));
          return std::make_pair(p.a().value(), p.b().value());
        },
        py::arg("a"), py::arg("b"), py::arg("N"), "Preferred element of the class (a:b) in P^1(Z/NZ).");
  m.def("big_m", [](std::int64_t a, std::int64_t b, std::int64_t n) { return big_m(a, b, Level(n)); },
        py::arg("a"), py::arg("b"), py::arg("N"));
  m.def("m_table", [](std::int64_t n) { return m_table(Level(n)).entries; }, py::arg("N"));
  m.def("m_distribution", [](std::int64_t n) { return m_distribution(Level(n)); }, py::arg("N"));
  m.def("enumerate_p1",
        [](std::int64_t n) {
          std::vector<std::pair<std::int64_t, std::int64_t>> out;
          for (const ProjPoint& p : enumerate_p1(Level(n))) out.emplace_back(p.a().value(), p.b().value());
          return out;
        },
        py::arg("N"));
  m.def("evaluate",
        [](const std::string& word) {
          const Mat2 g = evaluate(GroupWord::parse(word));
          return std::make_pair(std::make_pair(g.a, g.b), std::make_pair(g.c, g.d));
        },
        py::arg("word"), "Matrix of a word in S and T as ((a, b), (c, d)).");

  m.def("coset_list",
        [](std::int64_t n, const std::string& group) {
          std::vector<std::string> out;
          for (const Representative& r : build_list(Level(n), group_of(group)).reps) out.push_back(r.word.to_string());
          return out;
        },
        py::arg("N"), py::arg("group") = "gamma0");
  m.def("gamma1_quotient_reps", [](std::int64_t n) { return strings(gamma1_quotient_reps(Level(n))); },
        py::arg("N"));

  m.def("verify",
        [](std::int64_t n, const std::string& group, const std::optional<std::vector<std::string>>& words) {
          const VerificationReport r = check(make_list(n, group, words));
          py::dict out;
          out["passed"] = r.passed();
          out["representatives"] = r.representatives;
          out["distinct_cosets"] = r.distinct_cosets;
          out["expected_cosets"] = r.expected_cosets;
          out["problems"] = r.problems;
          return out;
        },
        py::arg("N"), py::arg("group") = "gamma0", py::arg("words") = py::none(),
        "Coset completeness report for the built list, or for explicit words.");
  m.def("is_connected",
        [](std::int64_t n, const std::string& group, const std::optional<std::vector<std::string>>& words) {
          return is_connected(build_graph(make_list(n, group, words)));
        },
        py::arg("N"), py::arg("group") = "gamma0", py::arg("words") = py::none());
  m.def("graph_summary",
        [](std::int64_t n, const std::string& group) {
          const CayleyGraph g = build_graph(build_list(Level(n), group_of(group)));
          const SpanningTree tree = spanning_tree(g, g.default_root());
          py::dict out;
          out["vertices"] = g.size();
          out["edges"] = g.edges().size();
          out["tree_edges"] = tree.edge_count();
          out["tree_depth"] = tree.max_depth();
          out["connected"] = tree.spans_all();
          return out;
        },
        py::arg("N"), py::arg("group") = "gamma0");

  m.def("cusp_table",
        [](std::int64_t n) {
          const CuspClassTable table = cusp_table(Level(n));
          py::list rows, classes;
          for (const CuspRow& r : table.rows) {
            py::dict row;
            row["j"] = r.j;
            row["cusp"] = cusp_label(r.cusp);
            row["multiplicity"] = r.multiplicity;
            row["representative"] = cusp_label(r.representative);
            rows.append(row);
          }
          for (const CuspClass& c : table.classes) {
            py::dict cls;
            cls["representative"] = cusp_label(c.representative);
            cls["width"] = c.width;
            classes.append(cls);
          }
          py::dict out;
          out["N"] = n;
          out["rows"] = rows;
          out["classes"] = classes;
          out["total_width"] = table.total_width();
          return out;
        },
        py::arg("N"));

  m.def("render_svg",
        [](std::int64_t n, const std::string& group, bool labels, double y_max, double width) {
          RenderOptions options;
          options.labels = labels;
          options.y_max = y_max;
          options.width_px = width;
          return render_svg(verified_list(n, group), options);
        },
        py::arg("N"), py::arg("group") = "gamma0", py::arg("labels") = false, py::arg("y_max") = 2.2,
        py::arg("width") = 1200.0);
  m.def("render_json", [](std::int64_t n, const std::string& group) { return render_json(verified_list(n, group)).dump(); },
        py::arg("N"), py::arg("group") = "gamma0", "Domain export as a JSON string.");
  m.def("list_json", [](std::int64_t n, const std::string& group) { return coset_list_json(verified_list(n, group)).dump(); },
        py::arg("N"), py::arg("group") = "gamma0", "Coset list export as a JSON string.");
}
