#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hh/linear_system.hpp"

namespace hh {

/// A divisor class e*E0 - sum n_i E_i on the plane blown up at general
/// points.  n is kept sorted descending with trailing zeros trimmed.
struct CurveClass {
  i64 e = 0;
  std::vector<int> n;

  CurveClass() = default;
  CurveClass(i64 e_, std::vector<int> n_);

  i64 sum_n() const;
  i64 sum_n2() const;
  int nonzero_count() const { return static_cast<int>(n.size()); }

  // 3e - sum n = 1 and e^2 - sum n^2 = -1 (adjunction + self-intersection -1).
  bool satisfies_neg_curve_equations() const;

  bool operator==(const CurveClass&) const = default;
  std::string to_string() const;
};

/// d*e - sum m_i n_i with both vectors sorted descending and paired
/// index-wise; generic points make this the forcing assignment.  Throws when
/// the class needs more points than the system has.
i64 intersect(const LinearSystem& sys, const CurveClass& c);

/// Irreducibility certificate: quadratic transforms at the three largest
/// entries must terminate at the line through two points (1;1,1).
bool validates_by_cremona(const CurveClass& c);

/// All (-1)-curve classes with 1 <= e <= e_max and at most r nonzero
/// entries, each Cremona-validated.
std::vector<CurveClass> enumerate_neg_curves(int r, i64 e_max);

struct Catalog {
  i64 e_max = 0;
  int max_points = 0;
  std::vector<CurveClass> classes;

  static Catalog build(int max_points, i64 e_max);
  std::string serialize() const;  // one class per line: "e: n1 n2 ..."
};

struct CremonaStep {
  i64 s = 0;
  i64 degree_before = 0;
  i64 degree_after = 0;
  std::vector<int> raw_before;  // sorted descending, may contain m <= 0
  std::vector<int> raw_after;
};

struct CremonaResult {
  i64 raw_degree = 0;
  std::vector<int> raw_mults;  // sorted descending, may contain m <= 0
  std::vector<CremonaStep> steps;
  bool dropped_nonpositive = false;  // canonical form lost raw entries <= 0

  bool applied() const { return !steps.empty(); }
  bool degree_negative() const { return raw_degree < 0; }
  LinearSystem reduced() const;  // positive part; throws when degree < 0
};

/// Repeats the quadratic-transform step on the three largest multiplicities
/// while s = m1+m2+m3-d > 0, stopping once s <= 0 or the degree goes
/// negative.  Steps keep raw (possibly negative) multiplicities, on which
/// the virtual dimension is preserved exactly.
CremonaResult cremona_reduce(const LinearSystem& sys);

struct SplitCertificate {
  CurveClass curve;
  int sigma = 0;  // -(curve . system) >= 2
  LinearSystem residual;
};

/// Single-step speciality test: some catalog class meets the system at
/// -sigma <= -2 and removing sigma copies raises the expected dimension.
std::optional<SplitCertificate> classify_special_by_neg_curve(const LinearSystem& sys,
                                                              const Catalog& catalog);

struct ForcedSplit {
  CurveClass curve;
  int sigma = 0;
  bool anticanonical_cubic = false;
  i64 degree_after = 0;
  std::vector<int> mults_after;  // clamped at 0
};

/// Result of repeatedly splitting forced curves off the base locus.  Each
/// split preserves the space of sections exactly, so the terminal system has
/// the same dimension as the input.
struct ForcedChain {
  std::vector<ForcedSplit> splits;
  bool exhausted_empty = false;  // degree went negative or some m > d
  i64 terminal_degree = 0;
  std::vector<int> terminal_mults;

  LinearSystem terminal() const;  // valid when !exhausted_empty
  i64 terminal_expected_dimension() const;
};

/// Iterates: find the most negative catalog intersection (or the
/// anticanonical cubic through nine points at intersection <= 0), split it
/// off with its forced multiplicity, clamp, repeat.
ForcedChain forced_splitting_chain(const LinearSystem& sys, const Catalog& catalog);

/// Emptiness by overload: the forced-splitting chain exhausts the degree or
/// forces a multiplicity past the degree.
std::optional<ForcedChain> classify_empty_by_base_overload(const LinearSystem& sys,
                                                           const Catalog& catalog);

}  // namespace hh
