#include "fundom/cayley.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <utility>

#include "fundom/errors.hpp"

namespace fundom {

namespace {

const char* label_of(Generator g) {
  switch (g) {
    case Generator::S:
      return "S";
    case Generator::T:
      return "T";
    case Generator::TInverse:
      return "T^-1";
  }
  return "?";
}

}  // namespace

std::optional<std::size_t> CayleyGraph::find(const PslMat& m) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == m) return i;
  }
  return std::nullopt;
}

std::size_t CayleyGraph::default_root() const {
  return find(PslMat(Mat2::s())).value_or(0);
}

CayleyGraph build_graph(const std::vector<GroupWord>& words) {
  CayleyGraph g;
  std::unordered_map<PslMat, std::size_t, PslHash> index;
  g.words_ = words;
  g.vertices_.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    PslMat m(evaluate(words[i]));
    auto [it, inserted] = index.emplace(m, i);
    if (!inserted) {
      throw DuplicateVertex("words " + words[it->second].to_string() + " and " +
                                words[i].to_string() + " coincide in PSL2(Z)",
                            it->second, i);
    }
    g.vertices_.push_back(m);
  }

  g.adjacency_.assign(words.size(), {});
  const std::pair<Generator, Mat2> steps[] = {
      {Generator::S, Mat2::s()}, {Generator::T, Mat2::t(1)}, {Generator::TInverse, Mat2::t(-1)}};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    for (const auto& [label, step] : steps) {
      auto it = index.find(PslMat(g.vertices_[i].mat() * step));
      if (it == index.end()) continue;
      const std::size_t j = it->second;
      if (j == i || !seen.emplace(std::min(i, j), std::max(i, j)).second) continue;
      // Record from the lower index; T and T^-1 swap when the edge is reversed.
      Generator stored = label;
      if (j < i && label != Generator::S) {
        stored = label == Generator::T ? Generator::TInverse : Generator::T;
      }
      g.edges_.push_back({std::min(i, j), std::max(i, j), stored});
      g.adjacency_[i].push_back(j);
      g.adjacency_[j].push_back(i);
    }
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return g;
}

CayleyGraph build_graph(const CosetList& list) {
  std::vector<GroupWord> words;
  words.reserve(list.reps.size());
  for (const Representative& r : list.reps) words.push_back(r.word);
  return build_graph(words);
}

SpanningTree spanning_tree(const CayleyGraph& g, std::size_t root) {
  if (root >= g.size()) throw std::out_of_range("spanning tree root out of range");
  SpanningTree tree{root, std::vector<std::optional<std::size_t>>(g.size()),
                    std::vector<std::optional<std::size_t>>(g.size())};
  std::deque<std::size_t> queue{root};
  tree.depth[root] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbors(v)) {
      if (tree.depth[w]) continue;
      tree.depth[w] = *tree.depth[v] + 1;
      tree.parent[w] = v;
      queue.push_back(w);
    }
  }
  return tree;
}

std::size_t SpanningTree::covered() const {
  return static_cast<std::size_t>(
      std::count_if(depth.begin(), depth.end(), [](const auto& d) { return d.has_value(); }));
}

std::size_t SpanningTree::edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(parent.begin(), parent.end(), [](const auto& p) { return p.has_value(); }));
}

std::size_t SpanningTree::max_depth() const {
  std::size_t best = 0;
  for (const auto& d : depth) {
    if (d) best = std::max(best, *d);
  }
  return best;
}

std::size_t component_count(const CayleyGraph& g) {
  std::vector<char> seen(g.size(), 0);
  std::size_t components = 0;
  for (std::size_t start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    ++components;
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const CayleyGraph& g) {
  return g.size() == 0 || spanning_tree(g, 0).spans_all();
}

std::string to_dot(const CayleyGraph& g, const SpanningTree& tree, const DotOptions& options) {
  auto is_tree_edge = [&](const Edge& e) {
    return tree.parent[e.to] == e.from || tree.parent[e.from] == e.to;
  };
  std::string out = "graph " + options.name + " {\n";
  out += "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + g.words()[i].to_string() + "\"";
    if (i == tree.root) out += ", peripheries=2";
    out += "];\n";
  }
  for (const Edge& e : g.edges()) {
    const bool in_tree = is_tree_edge(e);
    if (options.tree_only && !in_tree) continue;
    out += "  n" + std::to_string(e.from) + " -- n" + std::to_string(e.to) + " [label=\"" +
           label_of(e.label) + "\"";
    if (in_tree && !options.tree_only) out += ", style=bold";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace fundom
