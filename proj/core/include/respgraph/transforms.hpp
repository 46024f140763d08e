#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "respgraph/response_graph.hpp"

namespace rg {

/// The four generic 2x2 response-graph patterns: the orientations of the
/// undirected 4-cycle up to isomorphism.
enum class Pattern2x2 : uint8_t { MP = 1, CO = 2, SD = 4, DD = 8 };

const char* to_string(Pattern2x2 pattern);

/// Subset of {MP, CO, SD, DD}. For a valid 2x2 response graph this is the
/// set of patterns reachable by orienting its undirected edges; it is never
/// empty and is a singleton exactly when the graph is generic.
struct WeakFormSet {
  uint8_t bits = 0;

  bool contains(Pattern2x2 p) const { return bits & static_cast<uint8_t>(p); }
  void insert(Pattern2x2 p) { bits |= static_cast<uint8_t>(p); }
  int size() const;
  bool singleton() const { return size() == 1; }

  friend bool operator==(const WeakFormSet&, const WeakFormSet&) = default;
};

std::string to_string(const WeakFormSet& set);

/// Negate the chosen player's payoffs.
Game reflect(const Game& game, int player);
/// Reverse exactly the arcs owned by the chosen player; undirected edges stay.
ResponseGraph reflect(const ResponseGraph& graph, int player);

/// Negate all payoffs / reverse all arcs.
Game reverse(const Game& game);
ResponseGraph reverse(const ResponseGraph& graph);

WeakFormSet classify_2x2(const ResponseGraph& sub);

struct SubgamePattern {
  std::array<int, 2> rows;
  std::array<int, 2> cols;
  WeakFormSet forms;
};

/// One entry per choice of 2 rows x 2 cols, in lexicographic order.
std::vector<SubgamePattern> all_2x2_subgame_patterns(const ResponseGraph& graph);

/// Isomorphism-invariant encoding of a response graph under row/column
/// relabeling and player swap. Canonical shape has rows <= cols. The code is
/// one byte per unordered comparable pair of the relabeled grid, pairs taken
/// in row-major (a, b) order with a < b; byte values: 1 = arc a->b only,
/// 2 = arc b->a only, 3 = undirected edge.
struct CanonicalForm {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> code;
  // The normalizing relabeling: original graph composed with these gives the
  // canonical representative. When swapped, the permutations apply after the
  // transpose.
  std::vector<int> row_perm;
  std::vector<int> col_perm;
  bool swapped = false;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.rows == b.rows && a.cols == b.cols && a.code == b.code;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    if (auto c = a.cols <=> b.cols; c != 0) return c;
    return a.code <=> b.code;
  }
};

/// Encoding of the graph as laid out (identity relabeling).
std::vector<uint8_t> raw_code(const ResponseGraph& graph);

CanonicalForm canonical_form(const ResponseGraph& graph);

/// Rebuild the canonical representative graph from a form.
ResponseGraph decode(const CanonicalForm& form);
ResponseGraph decode(int rows, int cols, const std::vector<uint8_t>& code);

bool isomorphic(const ResponseGraph& a, const ResponseGraph& b);

}  // namespace rg
