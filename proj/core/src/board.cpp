#include "hh/board.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

namespace hh {

const char* to_string(Corner c) {
  switch (c) {
    case Corner::X: return "X";
    case Corner::Y: return "Y";
    case Corner::Z: return "Z";
  }
  return "?";
}

const char* to_string(LineFamily f) {
  switch (f) {
    case LineFamily::ConstI: return "constI";
    case LineFamily::ConstJ: return "constJ";
    case LineFamily::ConstK: return "constK";
  }
  return "?";
}

bool slide_valid(LineFamily family, Corner target) {
  switch (family) {
    case LineFamily::ConstI: return target == Corner::Y || target == Corner::Z;
    case LineFamily::ConstJ: return target == Corner::X || target == Corner::Z;
    case LineFamily::ConstK: return target == Corner::X || target == Corner::Y;
  }
  return false;
}

namespace detail {

// Per-degree cell indexing and line tables, built once and shared.
// Cells are stored row-major in j: id(i,j) = row_offset[j] + i.
// Line orientation ("front" = first cell of the stored order):
//   ConstI line i: cells (i, 0..d-i); front is the j=0 end (Z side).
//   ConstJ line j: cells (0..d-j, j); front is the i=0 end (Z side).
//   ConstK line k: cells (0..N, N-i) with N=d-k; front is (0,N) (Y side).
struct Geometry {
  i64 d = -1;
  i64 cells = 0;
  std::vector<u32> row_offset;
  std::vector<std::vector<u32>> lines[3];

  explicit Geometry(i64 dd) : d(dd) {
    if (d < 0) return;
    cells = binom(d + 2, 2);
    row_offset.resize(static_cast<std::size_t>(d) + 1);
    u32 off = 0;
    for (i64 j = 0; j <= d; ++j) {
      row_offset[static_cast<std::size_t>(j)] = off;
      off += static_cast<u32>(d + 1 - j);
    }
    auto id = [&](i64 i, i64 j) { return row_offset[static_cast<std::size_t>(j)] + static_cast<u32>(i); };
    auto& fi = lines[static_cast<int>(LineFamily::ConstI)];
    auto& fj = lines[static_cast<int>(LineFamily::ConstJ)];
    auto& fk = lines[static_cast<int>(LineFamily::ConstK)];
    fi.resize(static_cast<std::size_t>(d) + 1);
    fj.resize(static_cast<std::size_t>(d) + 1);
    fk.resize(static_cast<std::size_t>(d) + 1);
    for (i64 i = 0; i <= d; ++i)
      for (i64 j = 0; j + i <= d; ++j) fi[static_cast<std::size_t>(i)].push_back(id(i, j));
    for (i64 j = 0; j <= d; ++j)
      for (i64 i = 0; i + j <= d; ++i) fj[static_cast<std::size_t>(j)].push_back(id(i, j));
    for (i64 k = 0; k <= d; ++k) {
      const i64 N = d - k;
      for (i64 i = 0; i <= N; ++i) fk[static_cast<std::size_t>(k)].push_back(id(i, N - i));
    }
  }
};

namespace {
std::shared_ptr<const Geometry> geometry_for(i64 d) {
  static std::mutex mu;
  static std::map<i64, std::shared_ptr<const Geometry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto geo = std::make_shared<const Geometry>(d);
  cache.emplace(d, geo);
  return geo;
}
}  // namespace

}  // namespace detail

Board::Board(i64 d) : d_(d), geo_(detail::geometry_for(d)) {
  if (d < -1) throw std::invalid_argument("Board: degree below -1");
  words_.assign(static_cast<std::size_t>((geo_->cells + 63) / 64), 0);
}

Board Board::from_cells(i64 d, std::span<const std::pair<int, int>> cells) {
  Board b(d);
  for (const auto& [i, j] : cells) b.set(i, j);
  return b;
}

i64 Board::cell_count() const { return geo_->cells; }

u32 Board::cell_index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > d_) throw std::out_of_range("Board: cell outside triangle");
  return geo_->row_offset[static_cast<std::size_t>(j)] + static_cast<u32>(i);
}

bool Board::test(int i, int j) const { return test_id(cell_index(i, j)); }
void Board::set(int i, int j) { set_id(cell_index(i, j)); }

bool Board::test_id(u32 id) const { return (words_[id >> 6] >> (id & 63)) & 1ULL; }
void Board::set_id(u32 id) { words_[id >> 6] |= 1ULL << (id & 63); }
void Board::clear_id(u32 id) { words_[id >> 6] &= ~(1ULL << (id & 63)); }

i64 Board::checker_count() const {
  i64 n = 0;
  for (u64 w : words_) n += std::popcount(w);
  return n;
}

bool Board::corner_free(int m, Corner c) const {
  if (m < 1) throw std::invalid_argument("corner_free: m must be positive");
  if (m > d_ + 1) return false;
  bool free = true;
  const int d = static_cast<int>(d_);
  switch (c) {
    case Corner::Z:
      for (int j = 0; j < m && free; ++j)
        for (int i = 0; i + j <= m - 1; ++i)
          if (test(i, j)) { free = false; break; }
      break;
    case Corner::X:
      for (int j = 0; j < m && free; ++j)
        for (int i = d - m + 1; i + j <= d; ++i)
          if (test(i, j)) { free = false; break; }
      break;
    case Corner::Y:
      for (int j = d - m + 1; j <= d && free; ++j)
        for (int i = 0; i + j <= d; ++i)
          if (test(i, j)) { free = false; break; }
      break;
  }
  return free;
}

std::optional<Board> Board::placed_corner(int m, Corner c) const {
  if (!corner_free(m, c)) return std::nullopt;
  Board out = *this;
  const int d = static_cast<int>(d_);
  switch (c) {
    case Corner::Z:
      for (int j = 0; j < m; ++j)
        for (int i = 0; i + j <= m - 1; ++i) out.set(i, j);
      break;
    case Corner::X:
      for (int j = 0; j < m; ++j)
        for (int i = d - m + 1; i + j <= d; ++i) out.set(i, j);
      break;
    case Corner::Y:
      for (int j = d - m + 1; j <= d; ++j)
        for (int i = 0; i + j <= d; ++i) out.set(i, j);
      break;
  }
  return out;
}

Board Board::slid(LineFamily family, Corner target) const {
  if (!slide_valid(family, target)) throw std::invalid_argument("slid: invalid family/target combination");
  // Whether the target corner sits at the front of the stored line order.
  bool to_front = false;
  switch (family) {
    case LineFamily::ConstI: to_front = (target == Corner::Z); break;
    case LineFamily::ConstJ: to_front = (target == Corner::Z); break;
    case LineFamily::ConstK: to_front = (target == Corner::Y); break;
  }
  Board out = *this;
  for (const auto& line : geo_->lines[static_cast<int>(family)]) {
    int cnt = 0;
    for (u32 id : line) cnt += out.test_id(id);
    if (cnt == 0 || cnt == static_cast<int>(line.size())) continue;
    for (u32 id : line) out.clear_id(id);
    if (to_front) {
      for (int t = 0; t < cnt; ++t) out.set_id(line[static_cast<std::size_t>(t)]);
    } else {
      for (int t = 0; t < cnt; ++t) out.set_id(line[line.size() - 1 - static_cast<std::size_t>(t)]);
    }
  }
  return out;
}

Board::BorderExtract Board::extract_full_border_lines(Side side) const {
  const LineFamily family = side == Side::Left      ? LineFamily::ConstI
                            : side == Side::Bottom  ? LineFamily::ConstJ
                                                    : LineFamily::ConstK;
  const auto& fam = geo_->lines[static_cast<int>(family)];
  int k = 0;
  for (const auto& line : fam) {
    bool full_line = true;
    for (u32 id : line)
      if (!test_id(id)) { full_line = false; break; }
    if (!full_line) break;
    ++k;
  }
  BorderExtract r{k, Board(d_ - k)};
  if (d_ - k < 0) return r;
  for (const auto& [i, j] : occupied_cells()) {
    switch (side) {
      case Side::Left:
        if (i >= k) r.residual.set(i - k, j);
        break;
      case Side::Bottom:
        if (j >= k) r.residual.set(i, j - k);
        break;
      case Side::Hypotenuse:
        if (i + j <= d_ - k) r.residual.set(i, j);
        break;
    }
  }
  return r;
}

std::vector<std::pair<int, int>> Board::occupied_cells() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j <= d_; ++j)
    for (int i = 0; i + j <= d_; ++i)
      if (test(i, j)) out.emplace_back(i, j);
  return out;
}

u64 Board::hash() const {
  u64 h = splitmix64(0xb0a2d ^ static_cast<u64>(d_ + 1));
  for (u64 w : words_) h = hash_combine(h, w);
  return h;
}

bool Board::operator==(const Board& o) const { return d_ == o.d_ && words_ == o.words_; }

std::string Board::ascii() const {
  std::ostringstream os;
  for (i64 j = d_; j >= 0; --j) {
    for (i64 i = 0; i + j <= d_; ++i) os << (test(static_cast<int>(i), static_cast<int>(j)) ? '#' : '.');
    os << '\n';
  }
  return os.str();
}

}  // namespace hh
