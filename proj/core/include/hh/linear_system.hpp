#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hh/common.hpp"

namespace hh {

/// A planar linear system: curves of degree d with an assigned multiplicity
/// at each of a multiset of general base points.  Stored canonically with
/// the multiplicities sorted descending and zero entries removed, so equal
/// systems compare and hash equal.
class LinearSystem {
 public:
  LinearSystem() = default;
  LinearSystem(i64 degree, std::vector<int> mults);

  i64 degree() const { return degree_; }
  const std::vector<int>& mults() const { return mults_; }
  int point_count() const { return static_cast<int>(mults_.size()); }
  int max_mult() const { return mults_.empty() ? 0 : mults_.front(); }
  int min_mult() const { return mults_.empty() ? 0 : mults_.back(); }

  // Total number of linear conditions the points impose: sum of m(m+1)/2.
  i64 conditions() const;

  // binom(d+2,2) - conditions() - 1, with no clamping.
  i64 virtual_dimension() const;

  // max(virtual_dimension(), -1).
  i64 expected_dimension() const;

  // Appends max(v+1, 0) simple points so the result has virtual dimension
  // min(v, -1).  Idempotent when v <= -1.
  LinearSystem padded_with_simple_points() const;

  LinearSystem with_extra_points(int m, int count) const;

  // Runs of equal multiplicity, largest first: {(m, count), ...}.
  std::vector<std::pair<int, int>> groups() const;

  u64 stable_hash() const;
  bool operator==(const LinearSystem&) const = default;
  bool operator<(const LinearSystem&) const;

  // Compact human-readable form, e.g. "L17(6,5^8,4,1^2)".
  std::string to_string() const;

 private:
  i64 degree_ = 0;
  std::vector<int> mults_;
};

struct SystemHash {
  std::size_t operator()(const LinearSystem& s) const {
    return static_cast<std::size_t>(s.stable_hash());
  }
};

/// Dimension bookkeeping for one system.  `actual` is set only from the
/// rank oracle or a proven certificate.
struct DimensionReport {
  i64 virtual_dim = 0;
  i64 expected_dim = -1;
  std::optional<i64> actual;
  std::optional<bool> special;
};

DimensionReport make_dimension_report(const LinearSystem& sys);

}  // namespace hh
