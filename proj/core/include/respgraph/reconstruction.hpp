#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "respgraph/game.hpp"
#include "respgraph/response_graph.hpp"

namespace rg {

/// A directed graph over opaque node ids, before any grid structure has
/// been discovered. No self-loops, no duplicate arcs.
class RawGraph {
 public:
  RawGraph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& arcs);

  static RawGraph from_response_graph(const ResponseGraph& graph);

  int node_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int node) const { return names_[node]; }
  bool arc(int from, int to) const { return adj_[static_cast<size_t>(from) * names_.size() + to] != 0; }
  bool adjacent(int a, int b) const { return arc(a, b) || arc(b, a); }
  int arc_count() const;

 private:
  std::vector<std::string> names_;
  std::vector<uint8_t> adj_;
};

/// Bijection between raw nodes and the profiles of an n x m grid, with
/// rows <= cols. Adjacency in the underlying graph matches comparability.
struct GridLabeling {
  int rows = 0;
  int cols = 0;
  std::vector<Profile> of_node;  // node index -> profile
};

/// Checks that the underlying undirected graph is the box product of two
/// cliques and labels the nodes. Throws Error{NotHamming} otherwise.
GridLabeling recognize_hamming(const RawGraph& graph);

/// Checks that every comparable pair carries at least one arc and that each
/// line's arc relation is a total preorder. Throws Error{MissingArc} or
/// Error{NotTotalPreorder}.
void validate_orientation(const RawGraph& graph, const GridLabeling& labeling);

/// Builds a game whose response graph is arc-isomorphic to the input under
/// the discovered labeling. Per line, payoffs are the ranks of the line's
/// total preorder, ties sharing a rank.
Game reconstruct_game(const RawGraph& graph);
Game reconstruct_game(const RawGraph& graph, const GridLabeling& labeling);

}  // namespace rg
