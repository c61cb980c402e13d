#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fundom/cosets.hpp"
#include "fundom/words.hpp"

namespace fundom {

enum class Generator { S, T, TInverse };

struct Edge {
  std::size_t from;
  std::size_t to;
  Generator label;  // to = from * label in PSL_2(Z)
};

/// Subgraph of the Cayley graph of PSL_2(Z) for generators S, T, T^{-1},
/// induced on a finite vertex set.
class CayleyGraph {
 public:
  std::size_t size() const { return vertices_.size(); }
  const std::vector<PslMat>& vertices() const { return vertices_; }
  const std::vector<GroupWord>& words() const { return words_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  // Each undirected edge once, labelled from the lower index.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> find(const PslMat& m) const;

  /// Default BFS root: the first vertex equal to S, else vertex 0.
  std::size_t default_root() const;

 private:
  friend CayleyGraph build_graph(const std::vector<GroupWord>& words);

  std::vector<PslMat> vertices_;
  std::vector<GroupWord> words_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
};

/// Throws DuplicateVertex if two words agree in PSL_2(Z).
CayleyGraph build_graph(const std::vector<GroupWord>& words);
CayleyGraph build_graph(const CosetList& list);

bool is_connected(const CayleyGraph& g);
std::size_t component_count(const CayleyGraph& g);

/// BFS tree of the root's component; neighbors are visited in vertex order.
struct SpanningTree {
  std::size_t root;
  std::vector<std::optional<std::size_t>> parent;  // nullopt for the root and unreached vertices
  std::vector<std::optional<std::size_t>> depth;   // nullopt when unreached

  std::size_t covered() const;
  std::size_t edge_count() const;
  std::size_t max_depth() const;
  bool spans_all() const { return covered() == parent.size(); }
};

SpanningTree spanning_tree(const CayleyGraph& g, std::size_t root);

struct DotOptions {
  bool tree_only = false;
  std::string name = "G";
};

/// Graphviz export. Tree edges are drawn bold; with tree_only set only
/// those are emitted.
std::string to_dot(const CayleyGraph& g, const SpanningTree& tree, const DotOptions& options = {});

}  // namespace fundom
