#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "respgraph/census.hpp"
#include "respgraph/classification.hpp"
#include "respgraph/error.hpp"
#include "respgraph/io.hpp"
#include "respgraph/reconstruction.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rg::Error(rg::Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw rg::Error(rg::Errc::ParseError, "cannot write '" + path + "'");
  out << content;
}

bool looks_like_game(const std::string& text) { return text.find("\"payoffs\"") != std::string::npos; }

/// Game from either document kind; graph documents go through
/// reconstruction, so one classification code path serves both.
rg::Game load_game(const std::string& path) {
  std::string text = read_file(path);
  if (looks_like_game(text)) return rg::parse_game(text).game;
  return rg::reconstruct_game(rg::parse_graph(text));
}

rg::Shape parse_shape(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("--shape", "expected NxM");
  try {
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--shape", "expected NxM");
  }
}

void print_sinks(const rg::SinkReport& sinks) {
  std::cout << "sink components: " << sinks.sink_components.size() << "\n";
  for (const auto& component : sinks.sink_components) {
    std::cout << " ";
    for (rg::Profile p : component) std::cout << " (" << p.row << "," << p.col << ")";
    std::cout << "\n";
  }
  std::cout << "pure Nash:";
  for (rg::Profile p : sinks.pure_nash) std::cout << " (" << p.row << "," << p.col << ")";
  std::cout << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Response graphs of two-player normal-form games"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker thread cap for enumeration");

  std::string input, dot_path, out_path, catalog_path, shape_text;
  bool weighted = false, as_json = false, nondominated = false, want_census = false;
  int player = 2;

  auto* build = app.add_subcommand("build", "Build the response graph of a game");
  build->add_option("game", input, "Game JSON file")->required();
  build->add_option("--dot", dot_path, "Write DOT rendering to this path");
  build->add_flag("--weighted", weighted, "Label strict arcs with payoff improvements");

  auto* classify = app.add_subcommand("classify", "Classify a game or graph");
  classify->add_option("input", input, "Game or graph JSON file")->required();
  classify->add_flag("--json", as_json, "Emit the full JSON report");

  auto* reconstruct = app.add_subcommand("reconstruct", "Synthesize a game realizing a graph");
  reconstruct->add_option("graph", input, "Graph JSON file")->required();
  reconstruct->add_option("--out", out_path, "Write the game document to this path");

  auto* sinks_cmd = app.add_subcommand("sinks", "Sink components and pure Nash profiles");
  sinks_cmd->add_option("input", input, "Game or graph JSON file")->required();

  auto* reflect_cmd = app.add_subcommand("reflect", "Negate one player's payoffs");
  reflect_cmd->add_option("input", input, "Game or graph JSON file")->required();
  reflect_cmd->add_option("--player", player, "Player to reflect (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  auto* reverse_cmd = app.add_subcommand("reverse", "Negate all payoffs");
  reverse_cmd->add_option("input", input, "Game or graph JSON file")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate generic graphs up to isomorphism");
  enumerate_cmd->add_option("--shape", shape_text, "Grid shape NxM")->required();
  enumerate_cmd->add_flag("--nondominated", nondominated, "Restrict to nondominated classes");
  enumerate_cmd->add_flag("--census", want_census, "Print the census table");
  enumerate_cmd->add_option("--catalog", catalog_path, "Write per-class JSON lines to this path");

  auto* verify_cmd = app.add_subcommand("verify", "Check the theorem properties over a shape's corpus");
  verify_cmd->add_option("--shape", shape_text, "Grid shape NxM")->required();

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) {
    rg::GameDocument doc = rg::parse_game(read_file(input));
    rg::WeightedResponseGraph wg = rg::build_weighted_response_graph(doc.game);
    std::cout << "nodes: " << wg.graph.node_count() << "\narcs: " << wg.graph.arc_count()
              << "\ngeneric: " << (wg.graph.has_undirected_edge() ? "false" : "true") << "\n";
    if (!dot_path.empty()) {
      write_file(dot_path, rg::emit_dot(wg.graph, weighted ? &wg : nullptr));
    }
  } else if (classify->parsed()) {
    rg::ClassificationReport report = rg::classify(load_game(input));
    if (as_json) {
      std::cout << rg::report_to_json(report);
    } else {
      std::cout << "shape: " << report.rows << "x" << report.cols << "\n"
                << "generic: " << (report.generic ? "true" : "false") << "\n"
                << "preference_potential: " << (report.preference_potential ? "true" : "false") << "\n"
                << "preference_zero_sum: " << (report.preference_zero_sum ? "true" : "false") << "\n"
                << "strategically_potential: " << (report.strategically_potential ? "true" : "false")
                << "\n"
                << "strategically_zero_sum: " << (report.strategically_zero_sum ? "true" : "false")
                << "\n"
                << "dominance_solvable: " << (report.dominance_solvable ? "true" : "false") << "\n";
      print_sinks(report.sinks);
    }
  } else if (reconstruct->parsed()) {
    rg::Game game = rg::reconstruct_game(rg::parse_graph(read_file(input)));
    std::string text = rg::emit_game(game);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path, text);
    }
  } else if (sinks_cmd->parsed()) {
    print_sinks(rg::sink_components(rg::build_response_graph(load_game(input))));
  } else if (reflect_cmd->parsed() || reverse_cmd->parsed()) {
    std::string text = read_file(input);
    bool reflecting = reflect_cmd->parsed();
    if (looks_like_game(text)) {
      rg::Game game = rg::parse_game(text).game;
      std::cout << rg::emit_game(reflecting ? rg::reflect(game, player) : rg::reverse(game));
    } else {
      rg::Game game = rg::reconstruct_game(rg::parse_graph(text));
      rg::ResponseGraph graph = rg::build_response_graph(game);
      std::cout << rg::emit_graph(reflecting ? rg::reflect(graph, player) : rg::reverse(graph));
    }
  } else if (enumerate_cmd->parsed()) {
    rg::Shape shape = parse_shape(shape_text);
    auto records = rg::classify_classes(rg::enumerate_generic(shape, threads));
    if (want_census) {
      std::cout << rg::census_table(rg::census_of(shape, records));
    }
    size_t listed = 0;
    std::ostringstream catalog;
    for (const auto& record : records) {
      if (nondominated && !record.nondominated) continue;
      ++listed;
      if (!catalog_path.empty()) catalog << rg::class_record_to_json(record) << "\n";
    }
    if (!want_census) std::cout << "classes: " << listed << "\n";
    if (!catalog_path.empty()) write_file(catalog_path, catalog.str());
  } else if (verify_cmd->parsed()) {
    rg::Shape shape = parse_shape(shape_text);
    rg::TheoremReport report = rg::verify_theorems(rg::enumerate_generic(shape, threads));
    std::cout << "graphs checked: " << report.graphs_checked << "\n"
              << "all passed: " << (report.all_passed ? "true" : "false") << "\n";
    if (!report.all_passed) {
      std::cout << "failed: " << report.failed_check << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool usage = e.code() == rg::Errc::ParseError || e.code() == rg::Errc::DuplicateArc;
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
