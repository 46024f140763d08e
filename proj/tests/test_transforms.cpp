#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "respgraph/transforms.hpp"

using namespace rg;

namespace {

Game matching_pennies() { return Game({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}); }
Game coordination() { return Game({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}); }
Game stag_dilemma() { return Game({{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}); }
Game double_dominance() { return Game({{0, 0}, {1, 1}}, {{0, 1}, {0, 1}}); }

Game rps() {
  return Game({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}, {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
}

Game random_game(std::mt19937& rng, int rows, int cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> payoff(lo, hi);
  Game::Table u1(rows), u2(rows);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      u1[r].push_back(payoff(rng));
      u2[r].push_back(payoff(rng));
    }
  }
  return Game(std::move(u1), std::move(u2));
}

Game permuted(const Game& g, const std::vector<int>& rp, const std::vector<int>& cp) {
  Game::Table u1(g.rows()), u2(g.rows());
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      u1[r].push_back(g.payoff(1, {rp[r], cp[c]}));
      u2[r].push_back(g.payoff(2, {rp[r], cp[c]}));
    }
  }
  return Game(std::move(u1), std::move(u2));
}

Game transposed(const Game& g) {
  Game::Table u1(g.cols()), u2(g.cols());
  for (int c = 0; c < g.cols(); ++c) {
    for (int r = 0; r < g.rows(); ++r) {
      u1[c].push_back(g.payoff(2, {r, c}));
      u2[c].push_back(g.payoff(1, {r, c}));
    }
  }
  return Game(std::move(u1), std::move(u2));
}

// Brute-force isomorphism oracle: some row/col relabeling (and player swap,
// shapes permitting) maps a onto b arc-for-arc.
bool isomorphic_oracle(const ResponseGraph& a, const ResponseGraph& b) {
  auto matches = [](const ResponseGraph& x, const ResponseGraph& y,
                    const std::vector<int>& rp, const std::vector<int>& cp) {
    for (int r = 0; r < x.rows(); ++r) {
      for (int c = 0; c < x.cols(); ++c) {
        for (int r2 = 0; r2 < x.rows(); ++r2) {
          for (int c2 = 0; c2 < x.cols(); ++c2) {
            if (x.arc(Profile{r, c}, Profile{r2, c2}) !=
                y.arc(Profile{rp[r], cp[c]}, Profile{rp[r2], cp[c2]})) {
              return false;
            }
          }
        }
      }
    }
    return true;
  };
  auto search = [&](const ResponseGraph& x, const ResponseGraph& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    std::vector<int> rp(x.rows()), cp(x.cols());
    std::iota(rp.begin(), rp.end(), 0);
    do {
      std::iota(cp.begin(), cp.end(), 0);
      do {
        if (matches(x, y, rp, cp)) return true;
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return false;
  };
  return search(a, b) || search(a.transposed(), b);
}

}  // namespace

TEST_CASE("reflect negates one player's payoffs") {
  Game g = rps();
  Game r1 = reflect(g, 1), r2 = reflect(g, 2);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(r1.payoff(1, {r, c}) == -g.payoff(1, {r, c}));
      CHECK(r1.payoff(2, {r, c}) == g.payoff(2, {r, c}));
      CHECK(r2.payoff(2, {r, c}) == -g.payoff(2, {r, c}));
    }
  }
  CHECK(reflect(r1, 1) == g);
  CHECK(reverse(reverse(g)) == g);
}

TEST_CASE("graph reflection commutes with graph construction") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    Game g = random_game(rng, 2 + trial % 2, 2 + (trial / 2) % 2);
    ResponseGraph built = build_response_graph(g);
    for (int player : {1, 2}) {
      CHECK(reflect(built, player) == build_response_graph(reflect(g, player)));
    }
    CHECK(reverse(built) == build_response_graph(reverse(g)));
  }
}

TEST_CASE("reflection keeps undirected edges and flips only owned arcs") {
  Game weak({{0, 0}, {1, 1}}, {{0, 0}, {1, 1}});
  ResponseGraph g = build_response_graph(weak);
  ResponseGraph r = reflect(g, 1);
  // Player 2's ties (rows) stay; player 1's strict column arcs flip.
  CHECK(r.undirected(g.index({0, 0}), g.index({0, 1})));
  CHECK(r.arc(Profile{1, 0}, Profile{0, 0}));
  CHECK_FALSE(r.arc(Profile{0, 0}, Profile{1, 0}));
}

TEST_CASE("the four generic 2x2 patterns classify as themselves") {
  CHECK(classify_2x2(build_response_graph(matching_pennies())) ==
        WeakFormSet{static_cast<uint8_t>(Pattern2x2::MP)});
  CHECK(classify_2x2(build_response_graph(coordination())) ==
        WeakFormSet{static_cast<uint8_t>(Pattern2x2::CO)});
  CHECK(classify_2x2(build_response_graph(stag_dilemma())) ==
        WeakFormSet{static_cast<uint8_t>(Pattern2x2::SD)});
  CHECK(classify_2x2(build_response_graph(double_dominance())) ==
        WeakFormSet{static_cast<uint8_t>(Pattern2x2::DD)});
}

TEST_CASE("pattern classification is relabeling-invariant") {
  std::vector<Game> reference = {matching_pennies(), coordination(), stag_dilemma(),
                                 double_dominance()};
  for (const Game& g : reference) {
    WeakFormSet base = classify_2x2(build_response_graph(g));
    for (std::vector<int> rp : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
      for (std::vector<int> cp : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        CHECK(classify_2x2(build_response_graph(permuted(g, rp, cp))) == base);
        CHECK(classify_2x2(build_response_graph(transposed(permuted(g, rp, cp)))) == base);
      }
    }
  }
}

TEST_CASE("weak graphs classify to their orientation sets") {
  // The all-ties 2x2 graph orients to every pattern.
  ResponseGraph ties = build_response_graph(Game({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}));
  CHECK(classify_2x2(ties).size() == 4);

  // Oracle on exhaustive small payoffs: the weak-form set equals the set of
  // patterns of generic games obtained by perturbing tied payoffs.
  std::vector<Game> generics = {matching_pennies(), coordination(), stag_dilemma(),
                                double_dominance()};
  std::vector<ResponseGraph> pattern_graphs;
  for (const Game& g : generics) pattern_graphs.push_back(build_response_graph(g));
  auto pattern_of = [&](const ResponseGraph& g) -> Pattern2x2 {
    for (size_t i = 0; i < pattern_graphs.size(); ++i) {
      if (isomorphic_oracle(g, pattern_graphs[i])) {
        return static_cast<Pattern2x2>(1 << i);
      }
    }
    REQUIRE(false);
    return Pattern2x2::MP;
  };

  int values[8];
  for (values[0] = 0; values[0] < 3; ++values[0])
  for (values[1] = 0; values[1] < 3; ++values[1])
  for (values[2] = 0; values[2] < 3; ++values[2])
  for (values[3] = 0; values[3] < 3; ++values[3])
  for (values[4] = 0; values[4] < 3; ++values[4])
  for (values[5] = 0; values[5] < 3; ++values[5])
  for (values[6] = 0; values[6] < 3; ++values[6])
  for (values[7] = 0; values[7] < 3; ++values[7]) {
    Game g({{values[0], values[1]}, {values[2], values[3]}},
           {{values[4], values[5]}, {values[6], values[7]}});
    ResponseGraph graph = build_response_graph(g);
    WeakFormSet got = classify_2x2(graph);

    // Expected: orient every undirected edge both ways, collect the patterns
    // of the resulting generic orientations.
    std::vector<std::pair<int, int>> ties_list;
    for (auto [a, b] : graph.comparable_pairs()) {
      if (graph.undirected(a, b)) ties_list.push_back({a, b});
    }
    WeakFormSet expected;
    for (int mask = 0; mask < (1 << ties_list.size()); ++mask) {
      ResponseGraph oriented = graph;
      for (size_t i = 0; i < ties_list.size(); ++i) {
        auto [a, b] = ties_list[i];
        oriented.set_arc(a, b, (mask >> i) & 1);
        oriented.set_arc(b, a, !((mask >> i) & 1));
      }
      expected.insert(pattern_of(oriented));
    }
    CHECK(got == expected);
  }
}

TEST_CASE("RPS has nine 2x2 subgames, each with a single pattern") {
  ResponseGraph full = build_response_graph(rps());
  auto patterns = all_2x2_subgame_patterns(full);
  REQUIRE(patterns.size() == 9);
  for (const auto& entry : patterns) {
    CHECK(entry.forms.singleton());
    // Classify the induced subgraph independently and compare.
    ResponseGraph sub = full.induced({entry.rows[0], entry.rows[1]},
                                     {entry.cols[0], entry.cols[1]});
    CHECK(classify_2x2(sub) == entry.forms);
  }
  CHECK(patterns.front().rows == std::array<int, 2>{0, 1});
  CHECK(patterns.front().cols == std::array<int, 2>{0, 1});
  // {R,P} x {R,P}: source (R,R) and sink (P,P) sit on a diagonal.
  CHECK(patterns.front().forms == WeakFormSet{static_cast<uint8_t>(Pattern2x2::DD)});
  CHECK(patterns.back().rows == std::array<int, 2>{1, 2});
  CHECK(patterns.back().cols == std::array<int, 2>{1, 2});
}

TEST_CASE("canonical form is invariant under relabeling and transpose") {
  std::mt19937 rng(19);
  std::vector<int> rp3 = {0, 1, 2}, cp3 = {0, 1, 2};
  for (int trial = 0; trial < 60; ++trial) {
    Game g = random_game(rng, 3, 3);
    CanonicalForm base = canonical_form(build_response_graph(g));
    std::shuffle(rp3.begin(), rp3.end(), rng);
    std::shuffle(cp3.begin(), cp3.end(), rng);
    Game moved = permuted(g, rp3, cp3);
    CHECK(canonical_form(build_response_graph(moved)) == base);
    CHECK(canonical_form(build_response_graph(transposed(moved))) == base);
  }
}

TEST_CASE("canonical forms decode to graphs with the same form") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    Game g = random_game(rng, 2 + trial % 2, 2 + (trial / 2) % 3);
    CanonicalForm form = canonical_form(build_response_graph(g));
    ResponseGraph rep = decode(form);
    CHECK(canonical_form(rep) == form);
    CHECK(isomorphic(rep, build_response_graph(g)));
  }
}

TEST_CASE("canonical equality agrees with the brute-force oracle") {
  std::mt19937 rng(31);
  std::vector<ResponseGraph> pool;
  for (int trial = 0; trial < 40; ++trial) {
    pool.push_back(build_response_graph(random_game(rng, 2, 3, -1, 1)));
  }
  for (int trial = 0; trial < 20; ++trial) {
    pool.push_back(build_response_graph(random_game(rng, 2, 2, -1, 1)));
  }
  for (size_t i = 0; i < pool.size(); ++i) {
    for (size_t j = i; j < pool.size(); ++j) {
      if (pool[i].node_count() != pool[j].node_count()) continue;
      CHECK(isomorphic(pool[i], pool[j]) == isomorphic_oracle(pool[i], pool[j]));
    }
  }
}

TEST_CASE("the four 2x2 patterns are pairwise non-isomorphic") {
  std::vector<Game> reference = {matching_pennies(), coordination(), stag_dilemma(),
                                 double_dominance()};
  for (size_t i = 0; i < reference.size(); ++i) {
    for (size_t j = 0; j < reference.size(); ++j) {
      ResponseGraph a = build_response_graph(reference[i]);
      ResponseGraph b = build_response_graph(reference[j]);
      CHECK(isomorphic(a, b) == (i == j));
    }
  }
}

TEST_CASE("reversal maps patterns as expected") {
  // MP and CO are self-reverse; SD reverses to an SD relabeling; DD likewise.
  for (Game g : {matching_pennies(), coordination(), stag_dilemma(), double_dominance()}) {
    WeakFormSet before = classify_2x2(build_response_graph(g));
    WeakFormSet after = classify_2x2(build_response_graph(reverse(g)));
    CHECK(before == after);
  }
}
