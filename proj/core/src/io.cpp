#include "respgraph/io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "respgraph/error.hpp"

namespace rg {

using nlohmann::json;

namespace {

Rational payoff_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw Error(Errc::ParseError, "payoff must be an integer or a rational string");
}

Game::Table table_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw Error(Errc::ParseError, "payoff table must be a non-empty array");
  Game::Table table;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(Errc::ParseError, "payoff row must be an array");
    std::vector<Rational> values;
    for (const auto& cell : row) values.push_back(payoff_from_json(cell));
    table.push_back(std::move(values));
  }
  return table;
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(Errc::ParseError, "malformed JSON");
  return doc;
}

json profile_to_json(Profile p) { return json::array({p.row, p.col}); }

json path_to_json(const std::vector<Profile>& path) {
  json out = json::array();
  for (Profile p : path) out.push_back(profile_to_json(p));
  return out;
}

json potential_to_json(const PotentialFunction& phi, int cols) {
  json out = json::object();
  for (size_t v = 0; v < phi.size(); ++v) {
    Profile p{static_cast<int>(v) / cols, static_cast<int>(v) % cols};
    out[std::to_string(p.row) + "," + std::to_string(p.col)] = format_rational(phi[v]);
  }
  return out;
}

}  // namespace

GameDocument parse_game(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.contains("payoffs") || !doc["payoffs"].contains("p1") || !doc["payoffs"].contains("p2")) {
    throw Error(Errc::ParseError, "game document requires payoffs.p1 and payoffs.p2");
  }
  Game game(table_from_json(doc["payoffs"]["p1"]), table_from_json(doc["payoffs"]["p2"]));
  if (doc.contains("shape")) {
    const auto& shape = doc["shape"];
    if (!shape.is_array() || shape.size() != 2) {
      throw Error(Errc::ParseError, "shape must be a [rows, cols] pair");
    }
    if (shape[0].get<int>() != game.rows() || shape[1].get<int>() != game.cols()) {
      throw Error(Errc::ShapeMismatch, "declared shape does not match the payoff tables");
    }
  }
  GameDocument result{std::move(game), std::nullopt};
  if (doc.contains("strategies")) {
    StrategyNames names;
    names.p1 = doc["strategies"].value("p1", std::vector<std::string>{});
    names.p2 = doc["strategies"].value("p2", std::vector<std::string>{});
    if (static_cast<int>(names.p1.size()) != result.game.rows() ||
        static_cast<int>(names.p2.size()) != result.game.cols()) {
      throw Error(Errc::ParseError, "strategy name arrays must match the shape");
    }
    result.names = std::move(names);
  }
  return result;
}

std::string emit_game(const Game& game, const std::optional<StrategyNames>& names) {
  json doc;
  doc["shape"] = {game.rows(), game.cols()};
  json p1 = json::array(), p2 = json::array();
  for (int r = 0; r < game.rows(); ++r) {
    json row1 = json::array(), row2 = json::array();
    for (int c = 0; c < game.cols(); ++c) {
      row1.push_back(format_rational(game.payoff(1, {r, c})));
      row2.push_back(format_rational(game.payoff(2, {r, c})));
    }
    p1.push_back(std::move(row1));
    p2.push_back(std::move(row2));
  }
  doc["payoffs"] = {{"p1", std::move(p1)}, {"p2", std::move(p2)}};
  if (names) {
    doc["strategies"] = {{"p1", names->p1}, {"p2", names->p2}};
  }
  return doc.dump(2) + "\n";
}

RawGraph parse_graph(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.contains("nodes") || !doc["nodes"].is_array() || doc["nodes"].empty()) {
    throw Error(Errc::ParseError, "graph document requires a non-empty nodes array");
  }
  std::vector<std::string> names;
  std::map<std::string, int> id_of;
  for (const auto& node : doc["nodes"]) {
    std::string name = node.get<std::string>();
    if (id_of.contains(name)) throw Error(Errc::ParseError, "duplicate node id '" + name + "'");
    id_of[name] = static_cast<int>(names.size());
    names.push_back(std::move(name));
  }
  std::vector<std::pair<int, int>> arcs;
  for (const auto& arc : doc.value("arcs", json::array())) {
    if (!arc.is_array() || arc.size() != 2) throw Error(Errc::ParseError, "arc must be a [from, to] pair");
    auto from = id_of.find(arc[0].get<std::string>());
    auto to = id_of.find(arc[1].get<std::string>());
    if (from == id_of.end() || to == id_of.end()) {
      throw Error(Errc::ParseError, "arc references an unknown node id");
    }
    arcs.emplace_back(from->second, to->second);
  }
  return RawGraph(std::move(names), arcs);
}

std::string emit_graph(const ResponseGraph& graph) {
  json doc;
  json nodes = json::array(), arcs = json::array();
  for (int v = 0; v < graph.node_count(); ++v) {
    Profile p = graph.profile(v);
    nodes.push_back(std::to_string(p.row) + "," + std::to_string(p.col));
  }
  for (int a = 0; a < graph.node_count(); ++a) {
    for (int b = 0; b < graph.node_count(); ++b) {
      if (graph.arc(a, b)) arcs.push_back({nodes[a], nodes[b]});
    }
  }
  doc["nodes"] = std::move(nodes);
  doc["arcs"] = std::move(arcs);
  return doc.dump(2) + "\n";
}

std::string emit_dot(const ResponseGraph& graph, const WeightedResponseGraph* weighted) {
  std::ostringstream out;
  out << "digraph response_graph {\n";
  for (int v = 0; v < graph.node_count(); ++v) {
    Profile p = graph.profile(v);
    out << "  n" << v << " [label=\"" << p.row << "," << p.col << "\"];\n";
  }
  for (auto [a, b] : graph.comparable_pairs()) {
    if (graph.undirected(a, b)) {
      out << "  n" << a << " -> n" << b << " [dir=none];\n";
    } else if (graph.arc(a, b) || graph.arc(b, a)) {
      int from = graph.arc(a, b) ? a : b;
      int to = graph.arc(a, b) ? b : a;
      out << "  n" << from << " -> n" << to;
      if (weighted) {
        out << " [label=\"" << format_rational(weighted->weight(graph.profile(from), graph.profile(to)))
            << "\"]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string report_to_json(const ClassificationReport& report) {
  json doc;
  doc["shape"] = {report.rows, report.cols};
  doc["generic"] = report.generic;

  doc["preference_potential"] = report.preference_potential;
  if (report.preference_potential) {
    doc["ordinal_potential"] = potential_to_json(report.ordinal_potential, report.cols);
  } else {
    doc["preference_cycle"] = path_to_json(report.preference_cycle);
  }

  doc["preference_zero_sum"] = report.preference_zero_sum;
  if (!report.preference_zero_sum) {
    doc["reflected_cycle"] = path_to_json(report.reflected_cycle);
  }

  doc["strategically_potential"] = report.strategically_potential;
  if (report.strategically_potential) {
    doc["strategic_potential"] = potential_to_json(report.strategic_potential_fn, report.cols);
  }
  doc["strategically_zero_sum"] = report.strategically_zero_sum;

  doc["dominance_solvable"] = report.dominance_solvable;
  json order = json::array();
  for (const auto& step : report.elimination_order) {
    order.push_back({{"player", step.player},
                     {"dominated", step.dominated},
                     {"dominating", step.dominating}});
  }
  doc["elimination_order"] = std::move(order);
  doc["surviving_rows"] = report.surviving_rows;
  doc["surviving_cols"] = report.surviving_cols;

  json sinks = json::array();
  for (const auto& component : report.sinks.sink_components) sinks.push_back(path_to_json(component));
  doc["sink_components"] = std::move(sinks);
  doc["pure_nash"] = path_to_json(report.sinks.pure_nash);

  json patterns = json::array();
  for (const auto& pattern : report.subgame_patterns) {
    patterns.push_back({{"rows", pattern.rows},
                        {"cols", pattern.cols},
                        {"forms", to_string(pattern.forms)}});
  }
  doc["subgame_patterns"] = std::move(patterns);
  return doc.dump(2) + "\n";
}

std::string code_to_string(const std::vector<uint8_t>& code) {
  std::string out;
  out.reserve(code.size());
  for (uint8_t byte : code) out.push_back(static_cast<char>('0' + byte));
  return out;
}

std::string census_to_json(const Census& census) {
  json doc;
  doc["shape"] = {census.shape.rows, census.shape.cols};
  doc["total_generic_classes"] = census.total_generic;
  doc["nondominated_classes"] = census.nondominated;
  doc["zero_sum_only"] = census.zero_sum_only;
  doc["potential_only"] = census.potential_only;
  doc["both"] = census.both;
  doc["neither"] = census.neither;
  doc["dominance_solvable"] = census.dominance_solvable;
  json sink_hist = json::object(), nash_hist = json::object();
  for (auto [k, v] : census.sink_histogram) sink_hist[std::to_string(k)] = v;
  for (auto [k, v] : census.pure_nash_histogram) nash_hist[std::to_string(k)] = v;
  doc["sink_histogram"] = std::move(sink_hist);
  doc["pure_nash_histogram"] = std::move(nash_hist);
  return doc.dump(2) + "\n";
}

std::string census_table(const Census& census) {
  std::ostringstream out;
  out << "shape                " << census.shape.rows << "x" << census.shape.cols << "\n"
      << "generic classes      " << census.total_generic << "\n"
      << "nondominated         " << census.nondominated << "\n"
      << "  zero-sum only      " << census.zero_sum_only << "\n"
      << "  potential only     " << census.potential_only << "\n"
      << "  both               " << census.both << "\n"
      << "  neither            " << census.neither << "\n"
      << "  dominance-solvable " << census.dominance_solvable << "\n";
  out << "  sinks histogram   ";
  for (auto [k, v] : census.sink_histogram) out << " " << k << ":" << v;
  out << "\n  nash histogram    ";
  for (auto [k, v] : census.pure_nash_histogram) out << " " << k << ":" << v;
  out << "\n";
  return out.str();
}

std::string class_record_to_json(const ClassRecord& record) {
  json doc;
  doc["shape"] = {record.form.rows, record.form.cols};
  doc["code"] = code_to_string(record.form.code);
  doc["nondominated"] = record.nondominated;
  doc["preference_zero_sum"] = record.preference_zero_sum;
  doc["preference_potential"] = record.preference_potential;
  doc["dominance_solvable"] = record.dominance_solvable;
  doc["sink_count"] = record.sink_count;
  doc["pure_nash_count"] = record.pure_nash_count;
  return doc.dump();
}

}  // namespace rg
