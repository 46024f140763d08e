#include "respgraph/transforms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "respgraph/error.hpp"

namespace rg {

const char* to_string(Pattern2x2 pattern) {
  switch (pattern) {
    case Pattern2x2::MP: return "MP";
    case Pattern2x2::CO: return "CO";
    case Pattern2x2::SD: return "SD";
    case Pattern2x2::DD: return "DD";
  }
  return "?";
}

int WeakFormSet::size() const { return std::popcount(bits); }

std::string to_string(const WeakFormSet& set) {
  std::string out = "{";
  for (Pattern2x2 p : {Pattern2x2::MP, Pattern2x2::CO, Pattern2x2::SD, Pattern2x2::DD}) {
    if (!set.contains(p)) continue;
    if (out.size() > 1) out += ",";
    out += to_string(p);
  }
  return out + "}";
}

Game reflect(const Game& game, int player) {
  Game::Table u1(game.rows()), u2(game.rows());
  for (int r = 0; r < game.rows(); ++r) {
    for (int c = 0; c < game.cols(); ++c) {
      Rational p1 = game.payoff(1, {r, c});
      Rational p2 = game.payoff(2, {r, c});
      u1[r].push_back(player == 1 ? -p1 : p1);
      u2[r].push_back(player == 2 ? -p2 : p2);
    }
  }
  return Game(std::move(u1), std::move(u2));
}

ResponseGraph reflect(const ResponseGraph& graph, int player) {
  ResponseGraph out(graph.rows(), graph.cols());
  int n = graph.node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!graph.arc(a, b)) continue;
      int owner = *comparable(graph.profile(a), graph.profile(b));
      if (owner == player) {
        out.set_arc(b, a);
      } else {
        out.set_arc(a, b);
      }
    }
  }
  return out;
}

Game reverse(const Game& game) { return reflect(reflect(game, 1), 2); }

ResponseGraph reverse(const ResponseGraph& graph) {
  ResponseGraph out(graph.rows(), graph.cols());
  int n = graph.node_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (graph.arc(a, b)) out.set_arc(b, a);
    }
  }
  return out;
}

namespace {

// Classifies a generic orientation of the 2x2 grid by degree structure:
// no sink means the 4-cycle (MP); two sinks is CO; otherwise there is one
// source and one sink, adjacent for SD and diagonal for DD.
Pattern2x2 classify_generic_2x2(const ResponseGraph& g) {
  int sink_count = 0;
  int source = -1, sink = -1;
  for (int v = 0; v < 4; ++v) {
    int out_deg = 0, in_deg = 0;
    for (int w = 0; w < 4; ++w) {
      if (g.arc(v, w)) ++out_deg;
      if (g.arc(w, v)) ++in_deg;
    }
    if (out_deg == 0) {
      ++sink_count;
      sink = v;
    }
    if (in_deg == 0) source = v;
  }
  if (sink_count == 0) return Pattern2x2::MP;
  if (sink_count == 2) return Pattern2x2::CO;
  return comparable(g.profile(source), g.profile(sink)) ? Pattern2x2::SD : Pattern2x2::DD;
}

}  // namespace

WeakFormSet classify_2x2(const ResponseGraph& sub) {
  if (sub.rows() != 2 || sub.cols() != 2) {
    throw Error(Errc::ShapeMismatch, "classify_2x2 requires a 2x2 graph");
  }
  auto pairs = sub.comparable_pairs();
  std::vector<size_t> undirected;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (sub.undirected(pairs[i].first, pairs[i].second)) undirected.push_back(i);
  }
  WeakFormSet forms;
  for (unsigned mask = 0; mask < (1u << undirected.size()); ++mask) {
    ResponseGraph oriented = sub;
    for (size_t j = 0; j < undirected.size(); ++j) {
      auto [a, b] = pairs[undirected[j]];
      if (mask & (1u << j)) {
        oriented.set_arc(b, a, false);
      } else {
        oriented.set_arc(a, b, false);
      }
    }
    forms.insert(classify_generic_2x2(oriented));
  }
  return forms;
}

std::vector<SubgamePattern> all_2x2_subgame_patterns(const ResponseGraph& graph) {
  std::vector<SubgamePattern> out;
  for (int r1 = 0; r1 < graph.rows(); ++r1) {
    for (int r2 = r1 + 1; r2 < graph.rows(); ++r2) {
      for (int c1 = 0; c1 < graph.cols(); ++c1) {
        for (int c2 = c1 + 1; c2 < graph.cols(); ++c2) {
          ResponseGraph sub = graph.induced({r1, r2}, {c1, c2});
          out.push_back({{r1, r2}, {c1, c2}, classify_2x2(sub)});
        }
      }
    }
  }
  return out;
}

namespace {

const std::vector<std::vector<int>>& permutations_of(int n) {
  static std::vector<std::vector<std::vector<int>>> cache;
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size());
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    cache.push_back(std::move(perms));
  }
  return cache[n];
}

// Encoding of the graph relabeled by the given row/column permutations:
// relabeled profile (i,j) reads from original (rp[i], cp[j]).
std::vector<uint8_t> encode(const ResponseGraph& g, const std::vector<int>& rp,
                            const std::vector<int>& cp) {
  int rows = g.rows(), cols = g.cols();
  int n = rows * cols;
  std::vector<uint8_t> code;
  code.reserve(static_cast<size_t>(cols * rows * (rows - 1) / 2 + rows * cols * (cols - 1) / 2));
  std::vector<int> original(n);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      original[i * cols + j] = g.index({rp[i], cp[j]});
    }
  }
  for (int a = 0; a < n; ++a) {
    Profile pa{a / cols, a % cols};
    for (int b = a + 1; b < n; ++b) {
      Profile pb{b / cols, b % cols};
      if (!comparable(pa, pb)) continue;
      uint8_t byte = 0;
      if (g.arc(original[a], original[b])) byte |= 1;
      if (g.arc(original[b], original[a])) byte |= 2;
      code.push_back(byte);
    }
  }
  return code;
}

std::vector<int> identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

std::vector<uint8_t> raw_code(const ResponseGraph& graph) {
  return encode(graph, identity(graph.rows()), identity(graph.cols()));
}

CanonicalForm canonical_form(const ResponseGraph& graph) {
  std::vector<std::pair<const ResponseGraph*, bool>> candidates;
  ResponseGraph transposed(1, 1);
  if (graph.rows() < graph.cols()) {
    candidates.emplace_back(&graph, false);
  } else if (graph.rows() > graph.cols()) {
    transposed = graph.transposed();
    candidates.emplace_back(&transposed, true);
  } else {
    transposed = graph.transposed();
    candidates.emplace_back(&graph, false);
    candidates.emplace_back(&transposed, true);
  }

  CanonicalForm best;
  bool have_best = false;
  for (auto [g, swapped] : candidates) {
    for (const auto& rp : permutations_of(g->rows())) {
      for (const auto& cp : permutations_of(g->cols())) {
        std::vector<uint8_t> code = encode(*g, rp, cp);
        if (!have_best || code < best.code) {
          best = CanonicalForm{g->rows(), g->cols(), std::move(code), rp, cp, swapped};
          have_best = true;
        }
      }
    }
  }
  return best;
}

ResponseGraph decode(int rows, int cols, const std::vector<uint8_t>& code) {
  ResponseGraph g(rows, cols);
  int n = rows * cols;
  size_t at = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!comparable(g.profile(a), g.profile(b))) continue;
      if (at >= code.size()) throw Error(Errc::ParseError, "canonical code too short");
      if (code[at] & 1) g.set_arc(a, b);
      if (code[at] & 2) g.set_arc(b, a);
      ++at;
    }
  }
  if (at != code.size()) throw Error(Errc::ParseError, "canonical code too long");
  return g;
}

ResponseGraph decode(const CanonicalForm& form) { return decode(form.rows, form.cols, form.code); }

bool isomorphic(const ResponseGraph& a, const ResponseGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace rg
