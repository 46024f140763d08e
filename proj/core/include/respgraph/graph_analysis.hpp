#pragma once

#include <optional>
#include <vector>

#include "respgraph/response_graph.hpp"

namespace rg {

/// Strongly connected components in a topological order of the condensation
/// (arcs run from earlier to later components). Node lists are sorted.
struct SccPartition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;                  // node -> component index
  std::vector<std::vector<int>> condensation;     // component -> successor components
};

SccPartition scc(const ResponseGraph& graph);

struct SinkReport {
  /// Sink components in lexicographic order of their minimum profile.
  std::vector<std::vector<Profile>> sink_components;
  std::vector<Profile> pure_nash;
};

SinkReport sink_components(const ResponseGraph& graph);

/// True iff for every (s1,s2),(t1,t2) in x, at least one of (s1,t2),(t1,s2)
/// is also in x.
bool is_near_subgame(const std::vector<Profile>& x);

/// True iff x = R x C for some row set R and column set C.
bool is_subgame_set(const std::vector<Profile>& x);

/// A cycle containing at least one strict (non-undirected) arc, if any.
/// The returned node sequence closes back to its first entry.
std::optional<std::vector<Profile>> find_cycle_with_strict_arc(const ResponseGraph& graph);

}  // namespace rg
