#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hh/common.hpp"

namespace hh {

// Corners of the triangular board.  Cell (i,j) holds the monomial
// X^i Y^j Z^(d-i-j); the corners carry X^d at (d,0), Y^d at (0,d) and
// Z^d at (0,0).
enum class Corner : unsigned char { X, Y, Z };

// The three families of coordinate lines on the board.  ConstI fixes the
// X-exponent, ConstJ the Y-exponent, ConstK the Z-exponent (anti-diagonals).
enum class LineFamily : unsigned char { ConstI, ConstJ, ConstK };

// Sides of the triangle, named by the lines adjacent to them.
//   Left       = the i=0 edge (between the Z and Y corners), ConstI lines
//   Bottom     = the j=0 edge (between the Z and X corners), ConstJ lines
//   Hypotenuse = the i+j=d edge (between the X and Y corners), ConstK lines
enum class Side : unsigned char { Left, Bottom, Hypotenuse };

const char* to_string(Corner c);
const char* to_string(LineFamily f);

// A slide compacts every line of `family` toward `target`; only six
// combinations are geometrically meaningful.
bool slide_valid(LineFamily family, Corner target);

namespace detail {
struct Geometry;
}

/// Triangular occupancy grid with one bit per cell (i,j), i+j <= d.
/// Boards are value types; all mutators return modified copies.
class Board {
 public:
  explicit Board(i64 d);  // d >= -1; d == -1 is the empty degenerate board
  static Board from_cells(i64 d, std::span<const std::pair<int, int>> cells);

  i64 degree() const { return d_; }
  i64 cell_count() const;
  bool test(int i, int j) const;
  i64 checker_count() const;
  i64 empty_cells() const { return cell_count() - checker_count(); }
  bool full() const { return checker_count() == cell_count(); }

  bool corner_free(int m, Corner c) const;

  // Occupies the m x m corner triangle (binom(m+1,2) cells); nullopt if any
  // target cell is occupied or the triangle does not fit.  Never partially
  // applies.
  std::optional<Board> placed_corner(int m, Corner c) const;

  // Flat-limit compaction: per line of the family, the checkers are packed
  // into the cells nearest the target corner, preserving per-line counts.
  Board slid(LineFamily family, Corner target) const;

  struct BorderExtract {
    int k = 0;       // count of consecutive fully occupied lines at the side
    Board residual;  // degree d-k board with those lines deleted
  };
  BorderExtract extract_full_border_lines(Side side) const;

  std::vector<std::pair<int, int>> occupied_cells() const;  // sorted (j,i)
  u64 hash() const;
  bool operator==(const Board& o) const;

  std::string ascii() const;

 private:
  void set(int i, int j);
  u32 cell_index(int i, int j) const;
  bool test_id(u32 id) const;
  void set_id(u32 id);
  void clear_id(u32 id);

  i64 d_ = -1;
  std::shared_ptr<const detail::Geometry> geo_;
  std::vector<u64> words_;
};

}  // namespace hh
