#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "respgraph/graph_analysis.hpp"
#include "respgraph/response_graph.hpp"
#include "respgraph/transforms.hpp"

namespace rg {

/// Candidate potential function, one value per node (row-major).
using PotentialFunction = std::vector<Rational>;

/// Signed sum of unilateral payoff differences along a path of comparable
/// profiles: sum of u_i(x_k) - u_i(x_{k+1}) with i the deviating player.
/// Steps may run against arc direction. Throws Error{NotAPath} if some
/// consecutive pair is not comparable.
Rational path_weight(const WeightedResponseGraph& wg, const std::vector<Profile>& path);

/// Exact potential function if one exists: assigned over a breadth-first
/// spanning tree from profile (0,0), then verified on every comparable pair.
std::optional<PotentialFunction> strategic_potential(const WeightedResponseGraph& wg);

inline bool is_strategically_potential(const WeightedResponseGraph& wg) {
  return strategic_potential(wg).has_value();
}

/// True iff the reflected game (u1, -u2) is strategically potential.
bool is_strategically_zero_sum(const Game& game);

/// Outcome of an ordinal (preference-level) class test. When the class
/// holds, `potential` carries an ordinal potential (strict arcs strictly
/// increase it, undirected edges preserve it); when it fails,
/// `witness_cycle` carries a cycle with a strict arc -- in the graph itself
/// for the potential test, in the reflected graph for the zero-sum test.
struct PreferenceResult {
  bool holds = false;
  std::vector<Profile> witness_cycle;
  PotentialFunction potential;
};

PreferenceResult is_preference_potential(const ResponseGraph& graph);
PreferenceResult is_preference_zero_sum(const ResponseGraph& graph);

struct Dominance {
  int player = 0;
  int dominated = 0;
  int dominating = 0;

  friend auto operator<=>(const Dominance&, const Dominance&) = default;
};

/// All strict dominances readable from the graph: every line has a strict
/// arc from the dominated to the dominating strategy.
std::vector<Dominance> dominated_strategies(const ResponseGraph& graph);

struct EliminationResult {
  ResponseGraph reduced;
  std::vector<int> surviving_rows;  // original indices
  std::vector<int> surviving_cols;
  std::vector<Dominance> order;  // original indices, in deletion order
  bool solvable = false;
};

EliminationResult iterated_elimination(const ResponseGraph& graph);

struct StrategyRef {
  int player = 0;
  int index = 0;

  friend auto operator<=>(const StrategyRef&, const StrategyRef&) = default;
};

struct ParticipationEntry {
  StrategyRef strategy;
  std::vector<SubgamePattern> subgames;  // weak-MP/CO subgames containing it
};

/// For each strategy surviving iterated elimination, the 2x2 subgames
/// containing it whose weak-form set meets {MP, CO}. Empty when the game is
/// dominance-solvable.
std::vector<ParticipationEntry> mp_co_participation(const ResponseGraph& graph);

struct ClassificationReport {
  int rows = 0;
  int cols = 0;
  bool generic = false;

  bool preference_potential = false;
  std::vector<Profile> preference_cycle;  // witness when not potential
  PotentialFunction ordinal_potential;    // when potential

  bool preference_zero_sum = false;
  std::vector<Profile> reflected_cycle;  // witness in reflect(g, 2) when not zero-sum

  bool strategically_potential = false;
  PotentialFunction strategic_potential_fn;
  bool strategically_zero_sum = false;

  bool dominance_solvable = false;
  std::vector<Dominance> elimination_order;
  std::vector<int> surviving_rows;
  std::vector<int> surviving_cols;

  SinkReport sinks;
  std::vector<SubgamePattern> subgame_patterns;
};

ClassificationReport classify(const Game& game);

}  // namespace rg
