#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "respgraph/game.hpp"

namespace rg {

/// Directed graph over the profiles of an n x m grid. Arcs join comparable
/// profiles only; an undirected edge is stored as two opposing arcs. Which
/// player owns an arc is derived from the endpoint coordinates.
class ResponseGraph {
 public:
  ResponseGraph(int rows, int cols)
      : rows_(rows), cols_(cols), adj_(static_cast<size_t>(rows * cols) * (rows * cols), 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int node_count() const { return rows_ * cols_; }

  int index(Profile p) const { return p.row * cols_ + p.col; }
  Profile profile(int node) const { return {node / cols_, node % cols_}; }

  bool arc(int from, int to) const { return adj_[static_cast<size_t>(from) * node_count() + to] != 0; }
  bool arc(Profile from, Profile to) const { return arc(index(from), index(to)); }
  void set_arc(int from, int to, bool present = true) {
    adj_[static_cast<size_t>(from) * node_count() + to] = present ? 1 : 0;
  }

  bool undirected(int a, int b) const { return arc(a, b) && arc(b, a); }
  bool has_undirected_edge() const;
  int arc_count() const;

  /// All unordered comparable pairs (a < b by row-major node index).
  std::vector<std::pair<int, int>> comparable_pairs() const;

  /// Induced subgraph on the given rows and columns, reindexed to a
  /// |rows| x |cols| grid with the given orderings.
  ResponseGraph induced(const std::vector<int>& row_subset, const std::vector<int>& col_subset) const;

  /// Transposed grid: players swapped, profiles (r,c) -> (c,r).
  ResponseGraph transposed() const;

  friend bool operator==(const ResponseGraph&, const ResponseGraph&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<uint8_t> adj_;
};

ResponseGraph build_response_graph(const Game& game);

/// Response graph together with the game that induced it; arc weights are
/// the owning player's payoff improvements.
struct WeightedResponseGraph {
  Game game;
  ResponseGraph graph;

  /// u_i(to) - u_i(from), for the player i owning the (from, to) pair.
  /// Non-negative exactly when the arc from->to is present.
  Rational weight(Profile from, Profile to) const;
};

WeightedResponseGraph build_weighted_response_graph(Game game);

/// True iff no two i-comparable profiles give player i equal payoff.
bool is_generic(const Game& game);

}  // namespace rg
