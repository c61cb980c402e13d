#include "fundom/cli.hpp"

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fundom/cayley.hpp"
#include "fundom/cosets.hpp"
#include "fundom/domain.hpp"
#include "fundom/errors.hpp"
#include "fundom/io.hpp"
#include "fundom/projline.hpp"

namespace fundom {

namespace {

constexpr const char* kOutputDirEnv = "FUNDOM_OUTPUT_DIR";

struct Config {
  std::int64_t n = 0;
  std::string group = "gamma0";
  std::string format;
  std::string output;
  std::string load;
  std::string sweep;
  std::int64_t gamma_full_max = 0;
  bool no_verify = false;
  bool labels = false;
  bool tree_only = false;
  double y_max = 2.2;
  double width_px = 1200.0;
  std::optional<double> x_min, x_max;
  std::vector<std::string> palette;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Subgroup require_group(const std::string& name) {
  auto g = parse_subgroup(name);
  if (!g) throw UsageError("unknown group '" + name + "' (expected gamma0, gamma1 or gammaN)");
  return *g;
}

Level require_level(std::int64_t n) {
  if (n < 2) throw UsageError("--N must be at least 2");
  return Level(n);
}

// Writes to --output, else to $FUNDOM_OUTPUT_DIR/<default_name>, else stdout.
void emit(const Config& cfg, const std::string& default_name, const std::string& content,
          std::ostream& out) {
  std::filesystem::path path;
  if (!cfg.output.empty() && cfg.output != "-") {
    path = cfg.output;
  } else if (const char* dir = std::getenv(kOutputDirEnv); cfg.output.empty() && dir && *dir) {
    path = std::filesystem::path(dir) / default_name;
  } else {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << content;
  if (!file) throw IoError("failed writing " + path.string());
}

std::string stem(const std::string& cmd, const CosetList& list) {
  return cmd + "_" + std::string(to_string(list.group)) + "_" + std::to_string(list.level.n());
}

CosetList load_list(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot read " + path);
  nlohmann::json doc;
  try {
    file >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
  try {
    return coset_list_from_json(doc);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// The list named by --load or by --N/--group, verified unless --no-verify.
CosetList prepare(const Config& cfg, std::ostream& err) {
  CosetList list =
      cfg.load.empty() ? build_list(require_level(cfg.n), require_group(cfg.group)) : load_list(cfg.load);
  if (cfg.no_verify) {
    err << "warning: --no-verify given; output is marked UNVERIFIED\n";
    return list;
  }
  verify(list);
  return list;
}

void print_failure(const VerificationFailed& e, std::ostream& err) {
  err << "verification FAILED\n";
  for (const std::string& p : e.problems) err << "  " << p << "\n";
}

int cmd_list(const Config& cfg, std::ostream& out, std::ostream& err) {
  const CosetList list = prepare(cfg, err);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    nlohmann::json doc = coset_list_json(list);
    if (!list.verified) doc["watermark"] = "UNVERIFIED";
    emit(cfg, stem("list", list) + ".json", doc.dump(2) + "\n", out);
  } else if (format == "text") {
    std::string text = "# " + std::string(to_string(list.group)) + "(" +
                       std::to_string(list.level.n()) + "): " + std::to_string(list.size()) +
                       " representatives" + (list.verified ? "" : " (UNVERIFIED)") + "\n";
    for (const Representative& r : list.reps) text += r.word.to_string() + "\n";
    emit(cfg, stem("list", list) + ".txt", text, out);
  } else {
    throw UsageError("list supports --format json or text");
  }
  return 0;
}

// One line per check; returns true when everything passed.
bool verify_one(const Level& level, Subgroup group, std::ostream& out) {
  CosetList list = build_list(level, group);
  const VerificationReport report = check(list);
  bool connected = false;
  std::string graph_note;
  try {
    connected = is_connected(build_graph(list));
  } catch (const DuplicateVertex& e) {
    graph_note = std::string(" (") + e.what() + ")";
  }
  out << "N=" << level.n() << " " << to_string(group) << ": cosets "
      << report.distinct_cosets << "/" << report.expected_cosets << " ("
      << report.representatives << " reps) " << (report.passed() ? "PASS" : "FAIL")
      << ", connectivity " << (connected ? "PASS" : "FAIL") << graph_note << "\n";
  for (const std::string& p : report.problems) out << "  " << p << "\n";
  return report.passed() && connected;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.load.empty()) {
    CosetList list = load_list(cfg.load);
    const VerificationReport report = check(list);
    if (!report.passed()) {
      err << "verification FAILED for " << cfg.load << "\n";
      for (const std::string& p : report.problems) err << "  " << p << "\n";
      return 1;
    }
    bool connected = false;
    try {
      connected = is_connected(build_graph(list));
    } catch (const DuplicateVertex& e) {
      err << e.what() << "\n";
    }
    out << cfg.load << ": cosets " << report.distinct_cosets << "/" << report.expected_cosets
        << " PASS, connectivity " << (connected ? "PASS" : "FAIL") << "\n";
    return connected ? 0 : 1;
  }

  std::vector<Subgroup> groups;
  if (cfg.group == "all") {
    groups = {Subgroup::Gamma0, Subgroup::Gamma1, Subgroup::GammaFull};
  } else {
    groups = {require_group(cfg.group)};
  }
  std::int64_t lo = cfg.n, hi = cfg.n;
  if (!cfg.sweep.empty()) {
    auto range = parse_sweep(cfg.sweep);
    if (!range) throw UsageError("--sweep expects a..b, got '" + cfg.sweep + "'");
    std::tie(lo, hi) = *range;
  }
  if (lo < 2 || hi < lo) throw UsageError("level range must satisfy 2 <= a <= b");

  bool ok = true;
  std::size_t checks = 0;
  for (std::int64_t n = lo; n <= hi; ++n) {
    for (Subgroup g : groups) {
      if (g == Subgroup::GammaFull && cfg.gamma_full_max > 0 && n > cfg.gamma_full_max) continue;
      ok = verify_one(Level(n), g, out) && ok;
      ++checks;
    }
  }
  out << (ok ? "all " + std::to_string(checks) + " checks passed\n" : std::string("FAILED\n"));
  return ok ? 0 : 1;
}

int cmd_mtable(const Config& cfg, std::ostream& out) {
  const Level level = require_level(cfg.n);
  const MTable table = m_table(level);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  const std::string name = "mtable_" + std::to_string(level.n());
  if (format == "text") {
    emit(cfg, name + ".txt", mtable_text(table, m_distribution(level)), out);
  } else if (format == "csv") {
    emit(cfg, name + ".csv", mtable_csv(table), out);
  } else if (format == "json") {
    emit(cfg, name + ".json", mtable_json(table, m_distribution(level)).dump(2) + "\n", out);
  } else {
    throw UsageError("mtable supports --format text, csv or json");
  }
  return 0;
}

int cmd_cusps(const Config& cfg, std::ostream& out) {
  const Level level = require_level(cfg.n);
  const CuspClassTable table = cusp_table(level);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  const std::string name = "cusps_" + std::to_string(level.n());
  if (format == "text") {
    emit(cfg, name + ".txt", cusp_table_text(table), out);
  } else if (format == "csv") {
    emit(cfg, name + ".csv", cusp_table_csv(table), out);
  } else {
    throw UsageError("cusps supports --format text or csv");
  }
  return 0;
}

int cmd_render(const Config& cfg, std::ostream& out, std::ostream& err) {
  const CosetList list = prepare(cfg, err);
  const std::string format = cfg.format.empty() ? "svg" : cfg.format;
  if (format == "json") {
    nlohmann::json doc = render_json(list, cfg.no_verify);
    if (!list.verified) doc["watermark"] = "UNVERIFIED";
    emit(cfg, stem("domain", list) + ".json", doc.dump(2) + "\n", out);
    return 0;
  }
  if (format != "svg") throw UsageError("render supports --format svg or json");
  RenderOptions options;
  options.y_max = cfg.y_max;
  options.labels = cfg.labels;
  options.width_px = cfg.width_px;
  options.x_min = cfg.x_min;
  options.x_max = cfg.x_max;
  options.allow_unverified = cfg.no_verify;
  if (!cfg.palette.empty()) {
    if (cfg.palette.size() != 3) throw UsageError("--palette takes exactly three colors");
    std::copy(cfg.palette.begin(), cfg.palette.end(), options.palette.begin());
  }
  emit(cfg, stem("domain", list) + ".svg", render_svg(list, options), out);
  return 0;
}

int cmd_graph(const Config& cfg, std::ostream& out, std::ostream& err) {
  const CosetList list = prepare(cfg, err);
  const CayleyGraph g = build_graph(list);
  const SpanningTree tree = spanning_tree(g, g.default_root());
  DotOptions options;
  options.tree_only = cfg.tree_only;
  options.name = std::string(to_string(list.group)) + "_" + std::to_string(list.level.n());
  std::string dot = to_dot(g, tree, options);
  std::string header = "// " + std::to_string(g.size()) + " vertices, " +
                       std::to_string(g.edges().size()) + " edges, " +
                       std::to_string(tree.edge_count()) + " tree edges, " +
                       (is_connected(g) ? "connected" : "disconnected") + "\n";
  if (!list.verified) header += "// UNVERIFIED\n";
  emit(cfg, stem("graph", list) + ".dot", header + dot, out);
  return is_connected(g) ? 0 : 1;
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> parse_sweep(const std::string& text) {
  auto parse_int = [](const std::string& s) -> std::optional<std::int64_t> {
    if (s.empty()) return std::nullopt;
    std::size_t used = 0;
    try {
      const long long v = std::stoll(s, &used);
      if (used != s.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return std::make_pair(*v, *v);
  }
  auto lo = parse_int(text.substr(0, dots));
  auto hi = parse_int(text.substr(dots + 2));
  if (!lo || !hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Connected fundamental domains for the congruence subgroups Gamma0(N), Gamma1(N), Gamma(N)",
               "fundom"};
  app.require_subcommand(1);

  auto add_level = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--N,-N", cfg.n, "level N >= 2")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 31));
    if (required) opt->required();
    return opt;
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group,-g", cfg.group, "gamma0 | gamma1 | gammaN")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output,
                    std::string("output file ('-' for stdout; default: stdout, or $") + kOutputDirEnv + ")");
  };
  auto add_no_verify = [&](CLI::App* sub) {
    sub->add_flag("--no-verify", cfg.no_verify, "skip verification (profiling only; output is watermarked)");
  };

  CLI::App* list = app.add_subcommand("list", "emit the coset representative list");
  auto* list_n = add_level(list, false);
  add_group(list);
  list->add_option("--format,-f", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  add_output(list);
  add_no_verify(list);
  list->add_option("--load", cfg.load, "read a list in the JSON export format instead of building one")
      ->excludes(list_n);

  CLI::App* verify_cmd = app.add_subcommand("verify", "check coset completeness and graph connectivity");
  auto* verify_n = add_level(verify_cmd, false);
  verify_cmd->add_option("--group,-g", cfg.group, "gamma0 | gamma1 | gammaN | all")->capture_default_str();
  auto* sweep = verify_cmd->add_option("--sweep", cfg.sweep, "inclusive level range a..b")->excludes(verify_n);
  verify_cmd->add_option("--gammaN-max", cfg.gamma_full_max, "skip Gamma(N) above this level in sweeps");
  verify_cmd->add_option("--load", cfg.load, "verify a list in the JSON export format")
      ->excludes(verify_n)
      ->excludes(sweep);

  CLI::App* mtable = app.add_subcommand("mtable", "print j -> M_j and the distribution of M on H");
  add_level(mtable, true);
  mtable->add_option("--format,-f", cfg.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  add_output(mtable);

  CLI::App* cusps = app.add_subcommand("cusps", "Gamma0(N) cusp table with class representatives and widths");
  add_level(cusps, true);
  cusps->add_option("--format,-f", cfg.format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  add_output(cusps);

  CLI::App* render = app.add_subcommand("render", "draw the fundamental domain");
  add_level(render, true);
  add_group(render);
  render->add_option("--format,-f", cfg.format, "svg | json")->check(CLI::IsMember({"svg", "json"}));
  render->add_flag("--labels", cfg.labels, "label each triangle with its word");
  render->add_option("--y-max", cfg.y_max, "truncation height for vertical geodesics")->capture_default_str();
  render->add_option("--width", cfg.width_px, "image width in pixels")->capture_default_str();
  render->add_option("--x-min", cfg.x_min, "left edge of the window");
  render->add_option("--x-max", cfg.x_max, "right edge of the window");
  render->add_option("--palette", cfg.palette, "three fill colors")->delimiter(',');
  add_output(render);
  add_no_verify(render);

  CLI::App* graph = app.add_subcommand("graph", "emit the graph G_Theta and a BFS spanning tree in DOT");
  add_level(graph, true);
  add_group(graph);
  graph->add_flag("--tree-only", cfg.tree_only, "emit only the spanning tree edges");
  add_output(graph);
  add_no_verify(graph);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "run 'fundom " << sub->get_name() << " --help' for usage\n";
    }
    return 2;
  }

  try {
    if (list->parsed()) {
      if (cfg.load.empty() && cfg.n == 0) throw UsageError("list needs --N or --load");
      return cmd_list(cfg, out, err);
    }
    if (verify_cmd->parsed()) {
      if (cfg.load.empty() && cfg.sweep.empty() && cfg.n == 0) {
        throw UsageError("verify needs --N, --sweep or --load");
      }
      return cmd_verify(cfg, out, err);
    }
    if (mtable->parsed()) return cmd_mtable(cfg, out);
    if (cusps->parsed()) return cmd_cusps(cfg, out);
    if (render->parsed()) return cmd_render(cfg, out, err);
    if (graph->parsed()) return cmd_graph(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidLevel& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailed& e) {
    print_failure(e, err);
    return 1;
  } catch (const DuplicateVertex& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fundom
