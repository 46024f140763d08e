#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "respgraph/classification.hpp"
#include "respgraph/transforms.hpp"

namespace rg {

struct Shape {
  int rows = 0;
  int cols = 0;
};

/// All generic response graphs of the shape up to isomorphism, sorted by
/// canonical encoding. Throws Error{ShapeTooLarge} beyond the orientation
/// budget. Deterministic for any thread count.
std::vector<CanonicalForm> enumerate_generic(Shape shape, int threads = 1);

/// Per-class classification summary used by the census and the catalog.
struct ClassRecord {
  CanonicalForm form;
  bool nondominated = false;
  bool preference_zero_sum = false;
  bool preference_potential = false;
  bool dominance_solvable = false;
  int sink_count = 0;
  int pure_nash_count = 0;
};

std::vector<ClassRecord> classify_classes(const std::vector<CanonicalForm>& classes);

struct Census {
  Shape shape;
  size_t total_generic = 0;
  size_t nondominated = 0;
  // Category counts among nondominated classes.
  size_t zero_sum_only = 0;
  size_t potential_only = 0;
  size_t both = 0;
  size_t neither = 0;
  size_t dominance_solvable = 0;
  std::map<int, size_t> sink_histogram;       // over nondominated classes
  std::map<int, size_t> pure_nash_histogram;  // over nondominated classes
};

Census census(Shape shape, int threads = 1);
Census census_of(Shape shape, const std::vector<ClassRecord>& records);

/// Exact set of generic preference-zero-sum canonical forms of the shape,
/// computed independently: every permutation of {1..n*m} as the u1 table of
/// a zero-sum game. Throws Error{ShapeTooLarge} when n*m > 9.
std::vector<CanonicalForm> zero_sum_realizability_oracle(Shape shape);

struct TheoremReport {
  size_t graphs_checked = 0;
  bool all_passed = true;
  std::string failed_check;       // empty when all_passed
  CanonicalForm counterexample;   // meaningful only on failure
};

/// Checks, per graph: CO-free implies a unique sink whose profile set is a
/// near-subgame; non-solvable implies every survivor meets a weak MP/CO
/// subgame; generic and in both classes implies dominance-solvable.
TheoremReport verify_theorems(const std::vector<CanonicalForm>& corpus);

/// True iff the graph has a directed simple cycle of exactly this length.
bool has_directed_cycle_of_length(const ResponseGraph& graph, int length);

/// Structural queries over the 3x3 nondominated census identifying the
/// graphs discussed by name: "6-cycle-source", "6-cycle-sink",
/// "reflected-6-cycle", "inner-diamond", "outer-diamond". Throws
/// Error{NotFound} if a query does not match as expected.
std::map<std::string, CanonicalForm> find_named_graphs(int threads = 1);

}  // namespace rg
