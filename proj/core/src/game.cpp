#include "hh/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace hh {

int Strategy::place_count() const {
  int n = 0;
  for (const auto& mv : moves) n += std::holds_alternative<PlaceMove>(mv);
  return n;
}

std::vector<int> Strategy::placed_mults() const {
  std::vector<int> out;
  for (const auto& mv : moves)
    if (const auto* p = std::get_if<PlaceMove>(&mv)) out.push_back(p->m);
  return out;
}

namespace {

bool is_sub_multiset(std::vector<int> sub, std::vector<int> super) {
  std::sort(sub.begin(), sub.end());
  std::sort(super.begin(), super.end());
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

GameOutcome replay(const LinearSystem& sys, const Strategy& strat) {
  if (!is_sub_multiset(strat.placed_mults(), sys.mults()))
    throw InvalidStrategy("replay: script placements are not a sub-multiset of the system");
  GameOutcome out;
  Board b(sys.degree());
  for (std::size_t idx = 0; idx < strat.moves.size(); ++idx) {
    const Move& mv = strat.moves[idx];
    if (const auto* p = std::get_if<PlaceMove>(&mv)) {
      auto placed = b.placed_corner(p->m, p->corner);
      if (!placed) {
        out.blocked = true;
        out.blocked_at = idx;
        break;
      }
      b = std::move(*placed);
      out.used_mults.push_back(p->m);
    } else {
      const auto& s = std::get<SlideMove>(mv);
      b = b.slid(s.family, s.target);
    }
  }
  out.placed_all = !out.blocked && is_sub_multiset(sys.mults(), out.used_mults);
  out.empty_cells = b.empty_cells();
  out.final_board = std::move(b);
  return out;
}

bool certifies_empty_nonspecial(const LinearSystem& sys, const GameOutcome& out) {
  // A full board bounds the dimension by -1; a fully consumed multiset
  // bounds it by the virtual dimension.  Either way the bound must meet the
  // expected dimension at -1.
  if (out.board_full() && sys.virtual_dimension() <= -1) return true;
  return out.placed_all && sys.virtual_dimension() == -1;
}

Rational slide_determinant(std::span<const i64> a) {
  const std::size_t l = a.size();
  if (l == 0) throw std::invalid_argument("slide_determinant: empty tuple");
  for (std::size_t i = 0; i < l; ++i) {
    if (a[i] < 0) throw std::invalid_argument("slide_determinant: negative entry");
    if (i > 0 && a[i] <= a[i - 1]) throw std::invalid_argument("slide_determinant: not strictly increasing");
  }
  // Overflow guard for the fraction-free elimination below (minors stay
  // within the Hadamard bound of the integer matrix).
  long double hadamard = 1.0L;
  std::vector<std::vector<__int128>> m(l, std::vector<__int128>(l));
  for (std::size_t i = 0; i < l; ++i) {
    long double row_norm = 0.0L;
    for (std::size_t j = 0; j < l; ++j) {
      const i64 v = binom(a[i], static_cast<i64>(j));
      m[i][j] = v;
      row_norm += static_cast<long double>(v) * static_cast<long double>(v);
    }
    hadamard *= std::sqrt(row_norm);
  }
  if (hadamard > 1e36L) throw std::invalid_argument("slide_determinant: arguments too large for exact elimination");

  // Bareiss fraction-free elimination: every division is exact.
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < l; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < l && m[p][k] == 0) ++p;
      if (p == l) return Rational(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < l; ++i)
      for (std::size_t j = k + 1; j < l; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  const __int128 det = m[l - 1][l - 1] * sign;
  if (det > static_cast<__int128>(INT64_MAX) || det < static_cast<__int128>(INT64_MIN))
    throw std::overflow_error("slide_determinant: determinant exceeds 64 bits");
  return Rational(static_cast<i64>(det));
}

}  // namespace hh
