#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "respgraph/rational.hpp"

namespace rg {

/// A strategy profile: a row index for player 1 and a column index for
/// player 2.
struct Profile {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Player index (1 or 2) if a and b differ in exactly that player's strategy,
/// nullopt if they are equal or differ in both coordinates.
std::optional<int> comparable(Profile a, Profile b);

/// A two-player normal-form game with exact rational payoffs over an
/// n x m strategy grid. Immutable after construction.
class Game {
 public:
  using Table = std::vector<std::vector<Rational>>;

  /// Throws Error{ShapeMismatch} if the tables are empty, ragged, or differ
  /// in shape.
  Game(Table u1, Table u2);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& payoff(int player, Profile p) const {
    return (player == 1 ? u1_ : u2_)[static_cast<size_t>(p.row) * cols_ + p.col];
  }

  /// Restriction to the given row and column subsets (order preserved).
  /// Throws Error{EmptySelection} if either subset is empty.
  Game subgame(const std::vector<int>& row_subset, const std::vector<int>& col_subset) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> u1_;  // row-major
  std::vector<Rational> u2_;
};

/// Validating constructor wrapper matching the table-of-tables input shape.
inline Game make_game(Game::Table u1, Game::Table u2) {
  return Game(std::move(u1), std::move(u2));
}

}  // namespace rg
