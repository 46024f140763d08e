#include "respgraph/game.hpp"

#include "respgraph/error.hpp"

namespace rg {

std::optional<int> comparable(Profile a, Profile b) {
  if (a.col == b.col && a.row != b.row) return 1;
  if (a.row == b.row && a.col != b.col) return 2;
  return std::nullopt;
}

namespace {

std::vector<Rational> flatten(const Game::Table& table, int rows, int cols) {
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != cols) {
      throw Error(Errc::ShapeMismatch, "ragged payoff table");
    }
    for (const auto& v : row) flat.push_back(v);
  }
  return flat;
}

}  // namespace

Game::Game(Table u1, Table u2) {
  if (u1.empty() || u1.front().empty()) {
    throw Error(Errc::ShapeMismatch, "payoff table must be non-empty");
  }
  rows_ = static_cast<int>(u1.size());
  cols_ = static_cast<int>(u1.front().size());
  if (static_cast<int>(u2.size()) != rows_) {
    throw Error(Errc::ShapeMismatch, "payoff tables differ in row count");
  }
  u1_ = flatten(u1, rows_, cols_);
  u2_ = flatten(u2, rows_, cols_);
}

Game Game::subgame(const std::vector<int>& row_subset, const std::vector<int>& col_subset) const {
  if (row_subset.empty() || col_subset.empty()) {
    throw Error(Errc::EmptySelection, "subgame selection must be non-empty");
  }
  Table u1(row_subset.size()), u2(row_subset.size());
  for (size_t i = 0; i < row_subset.size(); ++i) {
    for (int c : col_subset) {
      Profile p{row_subset[i], c};
      u1[i].push_back(payoff(1, p));
      u2[i].push_back(payoff(2, p));
    }
  }
  return Game(std::move(u1), std::move(u2));
}

}  // namespace rg
