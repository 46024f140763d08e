#pragma once

#include <optional>
#include <string>
#include <vector>

#include "respgraph/census.hpp"
#include "respgraph/classification.hpp"
#include "respgraph/game.hpp"
#include "respgraph/reconstruction.hpp"
#include "respgraph/response_graph.hpp"

namespace rg {

/// Optional human-readable strategy names carried by game documents.
struct StrategyNames {
  std::vector<std::string> p1;
  std::vector<std::string> p2;
};

struct GameDocument {
  Game game;
  std::optional<StrategyNames> names;
};

/// Parses a game document:
///   {"shape": [n, m],
///    "payoffs": {"p1": [[...]], "p2": [[...]]},
///    "strategies": {"p1": [...], "p2": [...]}}   (optional)
/// Payoff entries may be JSON numbers (integers) or rational strings
/// ("3", "-1.25", "7/2"). Throws Error{ParseError} or Error{ShapeMismatch}.
GameDocument parse_game(const std::string& text);

std::string emit_game(const Game& game, const std::optional<StrategyNames>& names = std::nullopt);

/// Parses a graph document: {"nodes": [ids...], "arcs": [[from, to]...]}.
/// Throws Error{ParseError} or Error{DuplicateArc}.
RawGraph parse_graph(const std::string& text);

std::string emit_graph(const ResponseGraph& graph);

/// DOT rendering: strict arcs as directed edges, undirected edges with
/// direction suppressed, nodes labeled "row,col". Pass the weighted graph to
/// label strict arcs with their payoff improvements.
std::string emit_dot(const ResponseGraph& graph, const WeightedResponseGraph* weighted = nullptr);

std::string report_to_json(const ClassificationReport& report);

std::string census_to_json(const Census& census);
std::string census_table(const Census& census);

std::string class_record_to_json(const ClassRecord& record);

/// Canonical code rendered as a digit string (one digit per comparable pair).
std::string code_to_string(const std::vector<uint8_t>& code);

}  // namespace rg
