#include "respgraph/graph_analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rg {
namespace {

struct TarjanState {
  const ResponseGraph& g;
  std::vector<int> index, lowlink, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  explicit TarjanState(const ResponseGraph& graph)
      : g(graph),
        index(graph.node_count(), -1),
        lowlink(graph.node_count(), 0),
        on_stack(graph.node_count(), false) {}

  void visit(int v) {
    index[v] = lowlink[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w = 0; w < g.node_count(); ++w) {
      if (!g.arc(v, w)) continue;
      if (index[w] < 0) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> component;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  }
};

}  // namespace

SccPartition scc(const ResponseGraph& graph) {
  TarjanState state(graph);
  for (int v = 0; v < graph.node_count(); ++v) {
    if (state.index[v] < 0) state.visit(v);
  }
  // Tarjan emits components in reverse topological order.
  std::reverse(state.components.begin(), state.components.end());

  SccPartition result;
  result.components = std::move(state.components);
  result.component_of.assign(graph.node_count(), -1);
  for (size_t c = 0; c < result.components.size(); ++c) {
    for (int v : result.components[c]) result.component_of[v] = static_cast<int>(c);
  }
  result.condensation.resize(result.components.size());
  for (int v = 0; v < graph.node_count(); ++v) {
    for (int w = 0; w < graph.node_count(); ++w) {
      if (graph.arc(v, w) && result.component_of[v] != result.component_of[w]) {
        result.condensation[result.component_of[v]].push_back(result.component_of[w]);
      }
    }
  }
  for (auto& succ : result.condensation) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return result;
}

SinkReport sink_components(const ResponseGraph& graph) {
  SccPartition partition = scc(graph);
  SinkReport report;
  for (size_t c = 0; c < partition.components.size(); ++c) {
    if (!partition.condensation[c].empty()) continue;
    std::vector<Profile> profiles;
    for (int v : partition.components[c]) profiles.push_back(graph.profile(v));
    report.sink_components.push_back(std::move(profiles));
  }
  std::sort(report.sink_components.begin(), report.sink_components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (int v = 0; v < graph.node_count(); ++v) {
    bool nash = true;
    for (int w = 0; w < graph.node_count(); ++w) {
      if (comparable(graph.profile(v), graph.profile(w)) && !graph.arc(w, v)) {
        nash = false;
        break;
      }
    }
    if (nash) report.pure_nash.push_back(graph.profile(v));
  }
  return report;
}

bool is_near_subgame(const std::vector<Profile>& x) {
  std::set<Profile> members(x.begin(), x.end());
  for (Profile s : x) {
    for (Profile t : x) {
      if (members.contains({s.row, t.col}) || members.contains({t.row, s.col})) continue;
      return false;
    }
  }
  return true;
}

bool is_subgame_set(const std::vector<Profile>& x) {
  std::set<int> row_set, col_set;
  for (Profile p : x) {
    row_set.insert(p.row);
    col_set.insert(p.col);
  }
  if (row_set.size() * col_set.size() != x.size()) return false;
  std::set<Profile> members(x.begin(), x.end());
  for (int r : row_set) {
    for (int c : col_set) {
      if (!members.contains({r, c})) return false;
    }
  }
  return true;
}

std::optional<std::vector<Profile>> find_cycle_with_strict_arc(const ResponseGraph& graph) {
  SccPartition partition = scc(graph);
  for (const auto& component : partition.components) {
    if (component.size() < 2) continue;
    for (int s : component) {
      for (int t : component) {
        if (!graph.arc(s, t) || graph.arc(t, s)) continue;
        // Strict arc s->t inside the component: close the cycle with a path
        // t ~> s restricted to the component.
        int comp_id = partition.component_of[s];
        std::vector<int> parent(graph.node_count(), -1);
        std::deque<int> queue{t};
        parent[t] = t;
        while (!queue.empty()) {
          int v = queue.front();
          queue.pop_front();
          if (v == s) break;
          for (int w = 0; w < graph.node_count(); ++w) {
            if (graph.arc(v, w) && partition.component_of[w] == comp_id && parent[w] < 0) {
              parent[w] = v;
              queue.push_back(w);
            }
          }
        }
        std::vector<int> back_path;  // s..t reversed via parents
        for (int v = s; v != t; v = parent[v]) back_path.push_back(v);
        back_path.push_back(t);
        std::vector<Profile> cycle;
        cycle.push_back(graph.profile(s));
        for (auto it = back_path.rbegin(); it != back_path.rend(); ++it) {
          if (*it != s) cycle.push_back(graph.profile(*it));
        }
        return cycle;
      }
    }
  }
  return std::nullopt;
}

}  // namespace rg
