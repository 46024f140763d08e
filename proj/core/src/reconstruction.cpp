#include "respgraph/reconstruction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "respgraph/error.hpp"

namespace rg {

RawGraph::RawGraph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& arcs)
    : names_(std::move(names)), adj_(names_.size() * names_.size(), 0) {
  int n = node_count();
  for (auto [from, to] : arcs) {
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw Error(Errc::ParseError, "arc endpoint out of range");
    }
    if (from == to) throw Error(Errc::ParseError, "self-loop on node '" + names_[from] + "'");
    size_t cell = static_cast<size_t>(from) * n + to;
    if (adj_[cell]) {
      throw Error(Errc::DuplicateArc, "duplicate arc " + names_[from] + " -> " + names_[to]);
    }
    adj_[cell] = 1;
  }
}

RawGraph RawGraph::from_response_graph(const ResponseGraph& graph) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> arcs;
  for (int v = 0; v < graph.node_count(); ++v) {
    Profile p = graph.profile(v);
    names.push_back(std::to_string(p.row) + "," + std::to_string(p.col));
  }
  for (int a = 0; a < graph.node_count(); ++a) {
    for (int b = 0; b < graph.node_count(); ++b) {
      if (graph.arc(a, b)) arcs.emplace_back(a, b);
    }
  }
  return RawGraph(std::move(names), arcs);
}

int RawGraph::arc_count() const {
  int count = 0;
  for (uint8_t cell : adj_) count += cell;
  return count;
}

namespace {

bool is_complete(const RawGraph& g) {
  for (int a = 0; a < g.node_count(); ++a) {
    for (int b = a + 1; b < g.node_count(); ++b) {
      if (!g.adjacent(a, b)) return false;
    }
  }
  return true;
}

// Connected components of the undirected subgraph induced by `nodes`.
std::vector<std::vector<int>> undirected_components(const RawGraph& g, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> components;
  std::set<int> remaining(nodes.begin(), nodes.end());
  while (!remaining.empty()) {
    std::vector<int> component{*remaining.begin()};
    remaining.erase(remaining.begin());
    for (size_t i = 0; i < component.size(); ++i) {
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (g.adjacent(component[i], *it)) {
          component.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_clique(const RawGraph& g, const std::vector<int>& nodes) {
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (!g.adjacent(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

GridLabeling transpose_labeling(GridLabeling lab) {
  std::swap(lab.rows, lab.cols);
  for (Profile& p : lab.of_node) std::swap(p.row, p.col);
  return lab;
}

void verify_labeling(const RawGraph& g, const GridLabeling& lab) {
  int n = g.node_count();
  if (static_cast<int>(lab.of_node.size()) != n || lab.rows * lab.cols != n) {
    throw Error(Errc::NotHamming, "labeling does not cover the node set");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool should = comparable(lab.of_node[a], lab.of_node[b]).has_value();
      if (g.adjacent(a, b) != should) {
        throw Error(Errc::NotHamming, "adjacency does not match the clique product");
      }
    }
  }
}

}  // namespace

GridLabeling recognize_hamming(const RawGraph& graph) {
  int n = graph.node_count();
  if (n == 0) throw Error(Errc::NotHamming, "empty graph");

  if (is_complete(graph)) {
    // A clique K_k is the 1 x k grid.
    GridLabeling lab{1, n, {}};
    for (int v = 0; v < n; ++v) lab.of_node.push_back({0, v});
    return lab;
  }

  // The neighborhood of any node of K_a [box] K_b (a,b >= 2) is the disjoint
  // union of a clique of row-mates and a clique of column-mates.
  std::vector<int> neighbors;
  for (int v = 1; v < n; ++v) {
    if (graph.adjacent(0, v)) neighbors.push_back(v);
  }
  auto components = undirected_components(graph, neighbors);
  if (components.size() != 2 || !is_clique(graph, components[0]) || !is_clique(graph, components[1])) {
    throw Error(Errc::NotHamming, "node neighborhood is not two disjoint cliques");
  }
  int rows = static_cast<int>(components[0].size()) + 1;
  int cols = static_cast<int>(components[1].size()) + 1;
  if (rows * cols != n) {
    throw Error(Errc::NotHamming, "node count does not match the factor sizes");
  }

  std::vector<std::vector<int>> grid(rows, std::vector<int>(cols, -1));
  grid[0][0] = 0;
  for (int r = 1; r < rows; ++r) grid[r][0] = components[0][r - 1];
  for (int c = 1; c < cols; ++c) grid[0][c] = components[1][c - 1];
  for (int r = 1; r < rows; ++r) {
    for (int c = 1; c < cols; ++c) {
      // (r,c) is the unique common neighbor of (r,0) and (0,c) besides (0,0).
      int found = -1;
      for (int v = 1; v < n; ++v) {
        if (!graph.adjacent(grid[r][0], v) || !graph.adjacent(grid[0][c], v)) continue;
        if (found >= 0) throw Error(Errc::NotHamming, "ambiguous grid cell");
        found = v;
      }
      if (found < 0) throw Error(Errc::NotHamming, "missing grid cell");
      grid[r][c] = found;
    }
  }

  GridLabeling lab{rows, cols, std::vector<Profile>(n)};
  std::vector<bool> seen(n, false);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = grid[r][c];
      if (seen[v]) throw Error(Errc::NotHamming, "grid cells collide");
      seen[v] = true;
      lab.of_node[v] = {r, c};
    }
  }
  if (rows > cols) lab = transpose_labeling(lab);
  verify_labeling(graph, lab);
  return lab;
}

namespace {

// Nodes of one line (fixed column, varying row for player 1; fixed row,
// varying column for player 2).
std::vector<std::vector<int>> lines_of(const GridLabeling& lab) {
  std::vector<std::vector<int>> lines(lab.cols + lab.rows);
  for (int v = 0; v < static_cast<int>(lab.of_node.size()); ++v) {
    Profile p = lab.of_node[v];
    lines[p.col].push_back(v);
    lines[lab.cols + p.row].push_back(v);
  }
  return lines;
}

}  // namespace

void validate_orientation(const RawGraph& graph, const GridLabeling& labeling) {
  for (const auto& line : lines_of(labeling)) {
    for (size_t i = 0; i < line.size(); ++i) {
      for (size_t j = i + 1; j < line.size(); ++j) {
        if (!graph.adjacent(line[i], line[j])) {
          throw Error(Errc::MissingArc, "comparable pair " + graph.name(line[i]) + ", " +
                                            graph.name(line[j]) + " has no arc");
        }
      }
    }
    // The arc relation restricted to a line must be transitive; together with
    // completeness this makes it a total preorder.
    for (int a : line) {
      for (int b : line) {
        for (int c : line) {
          if (a == b || b == c || a == c) continue;
          if (graph.arc(a, b) && graph.arc(b, c) && !graph.arc(a, c)) {
            throw Error(Errc::NotTotalPreorder, "intransitive preferences at " + graph.name(a) +
                                                    " <= " + graph.name(b) + " <= " + graph.name(c));
          }
        }
      }
    }
  }
}

Game reconstruct_game(const RawGraph& graph, const GridLabeling& labeling) {
  validate_orientation(graph, labeling);
  Game::Table u1(labeling.rows, std::vector<Rational>(labeling.cols));
  Game::Table u2(labeling.rows, std::vector<Rational>(labeling.cols));
  auto lines = lines_of(labeling);
  for (size_t li = 0; li < lines.size(); ++li) {
    const auto& line = lines[li];
    bool player1 = li < static_cast<size_t>(labeling.cols);
    // Dense rank within the line's total preorder: count of nodes strictly
    // below, compressed so tied nodes share a rank.
    std::map<int, int> below_count;
    std::set<int> distinct;
    for (int v : line) {
      int below = 0;
      for (int w : line) {
        if (w != v && graph.arc(w, v) && !graph.arc(v, w)) ++below;
      }
      below_count[v] = below;
      distinct.insert(below);
    }
    std::map<int, int> rank;
    int next = 1;
    for (int score : distinct) rank[score] = next++;
    for (int v : line) {
      Profile p = labeling.of_node[v];
      (player1 ? u1 : u2)[p.row][p.col] = rank[below_count[v]];
    }
  }
  return Game(std::move(u1), std::move(u2));
}

Game reconstruct_game(const RawGraph& graph) {
  GridLabeling labeling = recognize_hamming(graph);
  return reconstruct_game(graph, labeling);
}

}  // namespace rg
