#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hh/board.hpp"
#include "hh/linear_system.hpp"

namespace hh {

struct PlaceMove {
  int m = 0;
  Corner corner = Corner::Z;
  bool operator==(const PlaceMove&) const = default;
};

struct SlideMove {
  LineFamily family = LineFamily::ConstI;
  Corner target = Corner::Z;
  bool operator==(const SlideMove&) const = default;
};

using Move = std::variant<PlaceMove, SlideMove>;

/// An ordered move script.  Each PlaceMove consumes one multiplicity of the
/// target system; a multiplicity may be consumed at most once.
struct Strategy {
  std::vector<Move> moves;

  int place_count() const;
  std::vector<int> placed_mults() const;  // in script order
  bool operator==(const Strategy&) const = default;
};

struct InvalidStrategy : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GameOutcome {
  Board final_board{-1};
  bool placed_all = false;
  bool blocked = false;
  std::size_t blocked_at = 0;  // index of the move that failed, when blocked
  i64 empty_cells = 0;
  std::vector<int> used_mults;

  bool board_full() const { return empty_cells == 0; }
};

/// Executes the script on an empty board of the system's degree, stopping at
/// the first blocked placement.  Throws InvalidStrategy when the script's
/// placements are not a sub-multiset of the system's multiplicities.
GameOutcome replay(const LinearSystem& sys, const Strategy& strat);

/// A full board proves dim <= -1; together with v <= -1 that pins the
/// dimension at the expected value, so the system is empty and non-special.
bool certifies_empty_nonspecial(const LinearSystem& sys, const GameOutcome& out);

/// Determinant of the l x l matrix [binom(a_i, j-1)] for strictly increasing
/// nonnegative a_1 < ... < a_l, by exact fraction-free elimination.  Equals
/// prod_{i<j}(a_j - a_i) / (1! 2! ... (l-1)!), which is how the flat-limit
/// compaction rule is justified.
Rational slide_determinant(std::span<const i64> a);

}  // namespace hh
