#include "respgraph/response_graph.hpp"

#include "respgraph/error.hpp"

namespace rg {

bool ResponseGraph::has_undirected_edge() const {
  for (auto [a, b] : comparable_pairs()) {
    if (undirected(a, b)) return true;
  }
  return false;
}

int ResponseGraph::arc_count() const {
  int count = 0;
  for (uint8_t cell : adj_) count += cell;
  return count;
}

std::vector<std::pair<int, int>> ResponseGraph::comparable_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  int n = node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (comparable(profile(a), profile(b))) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

ResponseGraph ResponseGraph::induced(const std::vector<int>& row_subset,
                                     const std::vector<int>& col_subset) const {
  if (row_subset.empty() || col_subset.empty()) {
    throw Error(Errc::EmptySelection, "induced subgraph selection must be non-empty");
  }
  ResponseGraph sub(static_cast<int>(row_subset.size()), static_cast<int>(col_subset.size()));
  for (size_t i = 0; i < row_subset.size(); ++i) {
    for (size_t j = 0; j < col_subset.size(); ++j) {
      for (size_t k = 0; k < row_subset.size(); ++k) {
        for (size_t l = 0; l < col_subset.size(); ++l) {
          Profile from{row_subset[i], col_subset[j]};
          Profile to{row_subset[k], col_subset[l]};
          if (arc(from, to)) {
            sub.set_arc(sub.index({static_cast<int>(i), static_cast<int>(j)}),
                        sub.index({static_cast<int>(k), static_cast<int>(l)}));
          }
        }
      }
    }
  }
  return sub;
}

ResponseGraph ResponseGraph::transposed() const {
  ResponseGraph t(cols_, rows_);
  int n = node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!arc(a, b)) continue;
      Profile pa = profile(a), pb = profile(b);
      t.set_arc(t.index({pa.col, pa.row}), t.index({pb.col, pb.row}));
    }
  }
  return t;
}

ResponseGraph build_response_graph(const Game& game) {
  ResponseGraph g(game.rows(), game.cols());
  for (auto [a, b] : g.comparable_pairs()) {
    Profile pa = g.profile(a), pb = g.profile(b);
    int player = *comparable(pa, pb);
    if (game.payoff(player, pb) >= game.payoff(player, pa)) g.set_arc(a, b);
    if (game.payoff(player, pa) >= game.payoff(player, pb)) g.set_arc(b, a);
  }
  return g;
}

Rational WeightedResponseGraph::weight(Profile from, Profile to) const {
  auto player = comparable(from, to);
  if (!player) throw Error(Errc::NotAPath, "profiles are not comparable");
  return game.payoff(*player, to) - game.payoff(*player, from);
}

WeightedResponseGraph build_weighted_response_graph(Game game) {
  ResponseGraph graph = build_response_graph(game);
  return WeightedResponseGraph{std::move(game), std::move(graph)};
}

bool is_generic(const Game& game) {
  return !build_response_graph(game).has_undirected_edge();
}

}  // namespace rg
