#include "respgraph/classification.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "respgraph/error.hpp"

namespace rg {

Rational path_weight(const WeightedResponseGraph& wg, const std::vector<Profile>& path) {
  Rational total = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    auto player = comparable(path[i], path[i + 1]);
    if (!player) throw Error(Errc::NotAPath, "consecutive profiles are not comparable");
    total += wg.game.payoff(*player, path[i]) - wg.game.payoff(*player, path[i + 1]);
  }
  return total;
}

std::optional<PotentialFunction> strategic_potential(const WeightedResponseGraph& wg) {
  const ResponseGraph& g = wg.graph;
  int n = g.node_count();
  PotentialFunction phi(n, 0);
  std::vector<bool> assigned(n, false);
  assigned[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w = 0; w < n; ++w) {
      if (assigned[w]) continue;
      auto player = comparable(g.profile(v), g.profile(w));
      if (!player) continue;
      phi[w] = phi[v] + wg.game.payoff(*player, g.profile(w)) - wg.game.payoff(*player, g.profile(v));
      assigned[w] = true;
      queue.push_back(w);
    }
  }
  for (auto [a, b] : g.comparable_pairs()) {
    int player = *comparable(g.profile(a), g.profile(b));
    Rational diff = wg.game.payoff(player, g.profile(b)) - wg.game.payoff(player, g.profile(a));
    if (phi[b] - phi[a] != diff) return std::nullopt;
  }
  return phi;
}

bool is_strategically_zero_sum(const Game& game) {
  return is_strategically_potential(build_weighted_response_graph(reflect(game, 2)));
}

PreferenceResult is_preference_potential(const ResponseGraph& graph) {
  SccPartition partition = scc(graph);
  for (auto [a, b] : graph.comparable_pairs()) {
    if (partition.component_of[a] != partition.component_of[b]) continue;
    if (graph.undirected(a, b)) continue;
    // A strict arc inside a strongly connected component: some cycle
    // contains it.
    PreferenceResult result;
    result.holds = false;
    result.witness_cycle = *find_cycle_with_strict_arc(graph);
    return result;
  }
  PreferenceResult result;
  result.holds = true;
  result.potential.resize(graph.node_count());
  for (size_t c = 0; c < partition.components.size(); ++c) {
    for (int v : partition.components[c]) result.potential[v] = static_cast<int>(c);
  }
  return result;
}

PreferenceResult is_preference_zero_sum(const ResponseGraph& graph) {
  return is_preference_potential(reflect(graph, 2));
}

std::vector<Dominance> dominated_strategies(const ResponseGraph& graph) {
  std::vector<Dominance> out;
  auto strictly_better = [&](Profile worse, Profile better) {
    return graph.arc(worse, better) && !graph.arc(better, worse);
  };
  for (int t = 0; t < graph.rows(); ++t) {
    for (int s = 0; s < graph.rows(); ++s) {
      if (s == t) continue;
      bool dominates = true;
      for (int c = 0; c < graph.cols(); ++c) {
        if (!strictly_better({t, c}, {s, c})) {
          dominates = false;
          break;
        }
      }
      if (dominates) out.push_back({1, t, s});
    }
  }
  for (int t = 0; t < graph.cols(); ++t) {
    for (int s = 0; s < graph.cols(); ++s) {
      if (s == t) continue;
      bool dominates = true;
      for (int r = 0; r < graph.rows(); ++r) {
        if (!strictly_better({r, t}, {r, s})) {
          dominates = false;
          break;
        }
      }
      if (dominates) out.push_back({2, t, s});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EliminationResult iterated_elimination(const ResponseGraph& graph) {
  std::vector<int> rows(graph.rows()), cols(graph.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<Dominance> order;
  ResponseGraph current = graph;
  while (true) {
    auto dominated = dominated_strategies(current);
    if (dominated.empty()) break;
    Dominance d = dominated.front();
    auto& line = d.player == 1 ? rows : cols;
    order.push_back({d.player, line[d.dominated], line[d.dominating]});
    line.erase(line.begin() + d.dominated);
    current = graph.induced(rows, cols);
  }
  bool solvable = rows.size() == 1 && cols.size() == 1;
  return EliminationResult{std::move(current), std::move(rows), std::move(cols), std::move(order),
                           solvable};
}

std::vector<ParticipationEntry> mp_co_participation(const ResponseGraph& graph) {
  EliminationResult elim = iterated_elimination(graph);
  if (elim.solvable) return {};
  auto patterns = all_2x2_subgame_patterns(graph);
  auto mp_or_co = [](const WeakFormSet& forms) {
    return forms.contains(Pattern2x2::MP) || forms.contains(Pattern2x2::CO);
  };
  std::vector<ParticipationEntry> out;
  for (int r : elim.surviving_rows) {
    ParticipationEntry entry{{1, r}, {}};
    for (const auto& pattern : patterns) {
      if ((pattern.rows[0] == r || pattern.rows[1] == r) && mp_or_co(pattern.forms)) {
        entry.subgames.push_back(pattern);
      }
    }
    out.push_back(std::move(entry));
  }
  for (int c : elim.surviving_cols) {
    ParticipationEntry entry{{2, c}, {}};
    for (const auto& pattern : patterns) {
      if ((pattern.cols[0] == c || pattern.cols[1] == c) && mp_or_co(pattern.forms)) {
        entry.subgames.push_back(pattern);
      }
    }
    out.push_back(std::move(entry));
  }
  return out;
}

ClassificationReport classify(const Game& game) {
  ClassificationReport report;
  report.rows = game.rows();
  report.cols = game.cols();

  WeightedResponseGraph wg = build_weighted_response_graph(game);
  const ResponseGraph& graph = wg.graph;
  report.generic = !graph.has_undirected_edge();

  PreferenceResult potential = is_preference_potential(graph);
  report.preference_potential = potential.holds;
  report.preference_cycle = potential.witness_cycle;
  report.ordinal_potential = potential.potential;

  PreferenceResult zero_sum = is_preference_zero_sum(graph);
  report.preference_zero_sum = zero_sum.holds;
  report.reflected_cycle = zero_sum.witness_cycle;

  if (auto phi = strategic_potential(wg)) {
    report.strategically_potential = true;
    report.strategic_potential_fn = *phi;
  }
  report.strategically_zero_sum = is_strategically_zero_sum(game);

  EliminationResult elim = iterated_elimination(graph);
  report.dominance_solvable = elim.solvable;
  report.elimination_order = elim.order;
  report.surviving_rows = elim.surviving_rows;
  report.surviving_cols = elim.surviving_cols;

  report.sinks = sink_components(graph);
  report.subgame_patterns =
      graph.rows() >= 2 && graph.cols() >= 2 ? all_2x2_subgame_patterns(graph)
                                             : std::vector<SubgamePattern>{};
  return report;
}

}  // namespace rg
