#include "respgraph/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "respgraph/error.hpp"
#include "respgraph/graph_analysis.hpp"

namespace rg {
namespace {

constexpr unsigned long long kOrientationBudget = 20'000'000ULL;

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

unsigned long long orientation_count(Shape shape, size_t row_perms, size_t col_perms) {
  unsigned long long total = 1;
  for (int c = 0; c < shape.cols; ++c) {
    if (total > kOrientationBudget) return total;
    total *= row_perms;
  }
  for (int r = 0; r < shape.rows; ++r) {
    if (total > kOrientationBudget) return total;
    total *= col_perms;
  }
  return total;
}

// Orientation `id` in mixed radix: one row-order digit per column (player 1
// preferences within the column) and one column-order digit per row.
ResponseGraph graph_of_orientation(Shape shape, const std::vector<std::vector<int>>& row_orders,
                                   const std::vector<std::vector<int>>& col_orders,
                                   unsigned long long id) {
  ResponseGraph g(shape.rows, shape.cols);
  for (int c = 0; c < shape.cols; ++c) {
    const auto& order = row_orders[id % row_orders.size()];
    id /= row_orders.size();
    for (size_t i = 0; i < order.size(); ++i) {
      for (size_t j = i + 1; j < order.size(); ++j) {
        g.set_arc(g.index({order[i], c}), g.index({order[j], c}));
      }
    }
  }
  for (int r = 0; r < shape.rows; ++r) {
    const auto& order = col_orders[id % col_orders.size()];
    id /= col_orders.size();
    for (size_t i = 0; i < order.size(); ++i) {
      for (size_t j = i + 1; j < order.size(); ++j) {
        g.set_arc(g.index({r, order[i]}), g.index({r, order[j]}));
      }
    }
  }
  return g;
}

}  // namespace

std::vector<CanonicalForm> enumerate_generic(Shape shape, int threads) {
  if (shape.rows < 1 || shape.cols < 1) {
    throw Error(Errc::ShapeMismatch, "shape must be at least 1x1");
  }
  auto row_orders = permutations_of(shape.rows);
  auto col_orders = permutations_of(shape.cols);
  unsigned long long total = orientation_count(shape, row_orders.size(), col_orders.size());
  if (total > kOrientationBudget) {
    throw Error(Errc::ShapeTooLarge, "too many orientations to enumerate exhaustively");
  }

  std::vector<CanonicalForm> forms(total);
  auto worker = [&](unsigned long long begin, unsigned long long end) {
    for (unsigned long long id = begin; id < end; ++id) {
      forms[id] = canonical_form(graph_of_orientation(shape, row_orders, col_orders, id));
    }
  };
  int worker_count = std::max(1, threads);
  if (worker_count == 1 || total < 1000) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    unsigned long long chunk = (total + worker_count - 1) / worker_count;
    for (int t = 0; t < worker_count; ++t) {
      unsigned long long begin = t * chunk;
      unsigned long long end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

std::vector<ClassRecord> classify_classes(const std::vector<CanonicalForm>& classes) {
  std::vector<ClassRecord> records;
  records.reserve(classes.size());
  for (const auto& form : classes) {
    ResponseGraph graph = decode(form);
    ClassRecord record;
    record.form = form;
    record.nondominated = dominated_strategies(graph).empty();
    record.preference_zero_sum = is_preference_zero_sum(graph).holds;
    record.preference_potential = is_preference_potential(graph).holds;
    record.dominance_solvable = iterated_elimination(graph).solvable;
    SinkReport sinks = sink_components(graph);
    record.sink_count = static_cast<int>(sinks.sink_components.size());
    record.pure_nash_count = static_cast<int>(sinks.pure_nash.size());
    records.push_back(std::move(record));
  }
  return records;
}

Census census_of(Shape shape, const std::vector<ClassRecord>& records) {
  Census result;
  result.shape = shape;
  result.total_generic = records.size();
  for (const auto& record : records) {
    if (record.dominance_solvable) ++result.dominance_solvable;
    if (!record.nondominated) continue;
    ++result.nondominated;
    if (record.preference_zero_sum && record.preference_potential) {
      ++result.both;
    } else if (record.preference_zero_sum) {
      ++result.zero_sum_only;
    } else if (record.preference_potential) {
      ++result.potential_only;
    } else {
      ++result.neither;
    }
    ++result.sink_histogram[record.sink_count];
    ++result.pure_nash_histogram[record.pure_nash_count];
  }
  return result;
}

Census census(Shape shape, int threads) {
  return census_of(shape, classify_classes(enumerate_generic(shape, threads)));
}

std::vector<CanonicalForm> zero_sum_realizability_oracle(Shape shape) {
  int cells = shape.rows * shape.cols;
  if (cells < 1) throw Error(Errc::ShapeMismatch, "shape must be at least 1x1");
  if (cells > 9) throw Error(Errc::ShapeTooLarge, "oracle enumerates (n*m)! games; need n*m <= 9");

  std::vector<int> values(cells);
  std::iota(values.begin(), values.end(), 1);
  std::set<std::vector<uint8_t>> raw_codes;
  do {
    // u1 = values (row-major), u2 = -u1. Arcs compare u1 within columns for
    // player 1 and -u1 within rows for player 2; all values distinct, so the
    // graph is generic.
    ResponseGraph g(shape.rows, shape.cols);
    for (int c = 0; c < shape.cols; ++c) {
      for (int r1 = 0; r1 < shape.rows; ++r1) {
        for (int r2 = 0; r2 < shape.rows; ++r2) {
          if (r1 != r2 && values[r1 * shape.cols + c] < values[r2 * shape.cols + c]) {
            g.set_arc(g.index({r1, c}), g.index({r2, c}));
          }
        }
      }
    }
    for (int r = 0; r < shape.rows; ++r) {
      for (int c1 = 0; c1 < shape.cols; ++c1) {
        for (int c2 = 0; c2 < shape.cols; ++c2) {
          if (c1 != c2 && values[r * shape.cols + c1] > values[r * shape.cols + c2]) {
            g.set_arc(g.index({r, c1}), g.index({r, c2}));
          }
        }
      }
    }
    raw_codes.insert(raw_code(g));
  } while (std::next_permutation(values.begin(), values.end()));

  std::vector<CanonicalForm> forms;
  forms.reserve(raw_codes.size());
  for (const auto& code : raw_codes) {
    forms.push_back(canonical_form(decode(shape.rows, shape.cols, code)));
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

TheoremReport verify_theorems(const std::vector<CanonicalForm>& corpus) {
  TheoremReport report;
  for (const auto& form : corpus) {
    ++report.graphs_checked;
    ResponseGraph graph = decode(form);
    bool has_co = false;
    if (graph.rows() >= 2 && graph.cols() >= 2) {
      for (const auto& pattern : all_2x2_subgame_patterns(graph)) {
        if (pattern.forms.contains(Pattern2x2::CO)) {
          has_co = true;
          break;
        }
      }
    }
    if (!has_co) {
      SinkReport sinks = sink_components(graph);
      std::vector<Profile> sink_profiles;
      for (const auto& component : sinks.sink_components) {
        sink_profiles.insert(sink_profiles.end(), component.begin(), component.end());
      }
      if (sinks.sink_components.size() != 1 || !is_near_subgame(sink_profiles)) {
        report.all_passed = false;
        report.failed_check = "CO-free graph without a unique near-subgame sink";
        report.counterexample = form;
        return report;
      }
    }

    auto participation = mp_co_participation(graph);
    for (const auto& entry : participation) {
      if (entry.subgames.empty()) {
        report.all_passed = false;
        report.failed_check = "surviving strategy outside every weak MP/CO subgame";
        report.counterexample = form;
        return report;
      }
    }

    bool generic = !graph.has_undirected_edge();
    if (generic && is_preference_zero_sum(graph).holds && is_preference_potential(graph).holds &&
        !iterated_elimination(graph).solvable) {
      report.all_passed = false;
      report.failed_check = "generic graph in both classes but not dominance-solvable";
      report.counterexample = form;
      return report;
    }
  }
  return report;
}

namespace {

bool cycle_search(const ResponseGraph& g, int start, int current, int remaining,
                  std::vector<bool>& used) {
  if (remaining == 0) return g.arc(current, start);
  for (int next = start + 1; next < g.node_count(); ++next) {
    if (used[next] || !g.arc(current, next)) continue;
    used[next] = true;
    if (cycle_search(g, start, next, remaining - 1, used)) {
      used[next] = false;
      return true;
    }
    used[next] = false;
  }
  return false;
}

}  // namespace

bool has_directed_cycle_of_length(const ResponseGraph& graph, int length) {
  if (length < 2) return false;
  std::vector<bool> used(graph.node_count(), false);
  for (int start = 0; start < graph.node_count(); ++start) {
    used[start] = true;
    if (cycle_search(graph, start, start, length - 1, used)) return true;
    used[start] = false;
  }
  return false;
}

std::map<std::string, CanonicalForm> find_named_graphs(int threads) {
  auto classes = enumerate_generic({3, 3}, threads);
  auto records = classify_classes(classes);

  std::map<std::string, CanonicalForm> named;
  std::vector<const ClassRecord*> six_cycle, no_co_not_zs, zs_with_nash;
  for (const auto& record : records) {
    if (!record.nondominated) continue;
    ResponseGraph graph = decode(record.form);
    if (!has_directed_cycle_of_length(graph, 4) && has_directed_cycle_of_length(graph, 6)) {
      six_cycle.push_back(&record);
    }
    bool has_co = false;
    for (const auto& pattern : all_2x2_subgame_patterns(graph)) {
      if (pattern.forms.contains(Pattern2x2::CO)) {
        has_co = true;
        break;
      }
    }
    if (!has_co && !record.preference_zero_sum) no_co_not_zs.push_back(&record);
    if (record.preference_zero_sum && record.pure_nash_count > 0) zs_with_nash.push_back(&record);
  }

  if (six_cycle.size() != 2) {
    throw Error(Errc::NotFound, "expected exactly 2 six-cycle graphs without a 4-cycle");
  }
  for (const ClassRecord* record : six_cycle) {
    ResponseGraph graph = decode(record->form);
    int sources = 0;
    for (int v = 0; v < graph.node_count(); ++v) {
      bool source = true;
      for (int w = 0; w < graph.node_count(); ++w) {
        if (graph.arc(w, v)) {
          source = false;
          break;
        }
      }
      if (source) ++sources;
    }
    named[sources == 3 ? "6-cycle-source" : "6-cycle-sink"] = record->form;
  }
  if (named.size() != 2) throw Error(Errc::NotFound, "six-cycle source/sink pair not distinguished");

  if (no_co_not_zs.size() != 1) {
    throw Error(Errc::NotFound, "expected exactly 1 CO-free non-zero-sum graph");
  }
  named["reflected-6-cycle"] = no_co_not_zs.front()->form;

  if (zs_with_nash.size() != 1) {
    throw Error(Errc::NotFound, "expected exactly 1 nondominated zero-sum graph with a pure Nash");
  }
  named["inner-diamond"] = zs_with_nash.front()->form;

  CanonicalForm outer = canonical_form(reverse(decode(zs_with_nash.front()->form)));
  {
    ResponseGraph graph = decode(outer);
    SinkReport sinks = sink_components(graph);
    std::vector<Profile> sink_profiles;
    for (const auto& component : sinks.sink_components) {
      sink_profiles.insert(sink_profiles.end(), component.begin(), component.end());
    }
    if (!dominated_strategies(graph).empty() || !is_preference_zero_sum(graph).holds ||
        is_subgame_set(sink_profiles) || !is_near_subgame(sink_profiles)) {
      throw Error(Errc::NotFound, "reversal of the inner diamond fails the outer diamond query");
    }
  }
  named["outer-diamond"] = outer;
  return named;
}

}  // namespace rg
