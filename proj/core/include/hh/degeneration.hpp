#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hh/linear_system.hpp"

namespace hh {

/// Dimensions of the four restricted systems in a plane degeneration, plus
/// the derived restriction dimensions r = l - lhat - 1.
struct QuadDims {
  i64 lP = -1;
  i64 lF = -1;
  i64 lhatP = -1;
  i64 lhatF = -1;

  i64 rP() const { return lP - lhatP - 1; }
  i64 rF() const { return lF - lhatF - 1; }
};

/// Transversality recursion for the limit dimension:
/// rP+rF <= a+1 gives lhatP+lhatF+1, otherwise lP+lF-a.
i64 l0_from_quad(const QuadDims& q, i64 a);

// Induction-interval bound functions, evaluated in exact integer arithmetic.
i64 dlow(i64 gamma, i64 h, i64 m);
i64 dhigh(i64 gamma, i64 h, i64 m);
i64 S_bound(i64 M);
i64 D_bound(i64 M);  // max{4M+1, dlow(-1, ceil((M^2-1)/(3M+4)), M), S(M)}

/// Checks the exact identities dhigh(-1,h,m) == dlow(0,h,m) and
/// dhigh(0,h,m) == dlow(1,h,m) (throws std::logic_error if either fails),
/// then reports whether the h interval chains with the h+1 interval:
/// dhigh(1,h,m) + 1 >= dlow(-1,h+1,m).  That overlap holds exactly when
/// h >= ceil((m^2-1)/(3m+4)).
bool interval_overlap_check(i64 m, i64 h);

struct BoundTableRow {
  i64 M = 0;
  i64 four_m_plus_1 = 0;
  i64 dlow_term = 0;
  i64 S = 0;
  i64 D = 0;
};

std::vector<BoundTableRow> bound_table(i64 m_min, i64 m_max);
std::string bound_table_csv(i64 m_min, i64 m_max);

/// Hypothesis check for the quasi-homogeneous lemma: L_d(m^b, d-m+gamma) is
/// non-special when 2 <= m <= d, b odd, -1 <= gamma <= 1.
bool quasi_homogeneous_nonspecial(i64 d, i64 m, i64 b, i64 gamma);

/// Matches sys against the quasi-homogeneous form above; returns (m, b,
/// gamma) when the lemma applies to it.
std::optional<std::array<i64, 3>> match_quasi_homogeneous(const LinearSystem& sys);

/// d >= 3*max(m): no (-1)-curve can sit in the base locus.
bool max_neg_curve_degree_bound(const LinearSystem& sys);

struct QuadVirtuals {
  i64 vP = 0;
  i64 vF = 0;
  i64 vhatP = 0;
  i64 vhatF = 0;
};

/// The four virtual dimensions of the split where l points of multiplicity m
/// move to F and `rest` stays on P, with exceptional degree a.
QuadVirtuals virtual_quadruple(i64 d, i64 a, i64 m, i64 l, std::span<const int> rest);

/// A degeneration split: degree a on the exceptional plane and, per
/// multiplicity group of the base system, how many of its points move to F.
struct DegenerationSplit {
  i64 a = 0;
  std::vector<std::pair<int, int>> moved;  // (multiplicity, count)
};

/// The four sub-systems cut out by a split.  A negative degree means the
/// empty system of dimension -1.
struct SubSystem {
  i64 degree = -1;
  std::vector<int> mults;

  bool negative_degree() const { return degree < 0; }
  LinearSystem sys() const { return LinearSystem(degree, mults); }
};

struct DegenerationSubsystems {
  SubSystem LP, LF, LhatP, LhatF;
};

DegenerationSubsystems build_subsystems(const LinearSystem& sys, const DegenerationSplit& split);

enum class DegenStatus {
  Certified,                // all four conditions verified; sys is empty
  ConditionsFail,           // some sub-dimension contradicts the certificate
  SubdimensionUnavailable,  // a sub-system could not be resolved in budget
  NotApplicable,            // degenerate split (a sub-system equals sys)
};

struct DegenerationOutcome {
  DegenStatus status = DegenStatus::NotApplicable;
  DegenerationSplit split;
  QuadDims dims;
};

/// Resolves the exact dimension of a sub-system, or nullopt when it cannot
/// be pinned down within budget.
using DimResolver = std::function<std::optional<i64>(const LinearSystem&)>;

/// Certifies emptiness via a split: requires v(sys) <= -1; L_P and L_F must
/// be non-special and the two kernels empty, and the transversality
/// recursion is re-run as an internal consistency check.
DegenerationOutcome emptiness_by_degeneration(const LinearSystem& sys,
                                              const DegenerationSplit& split,
                                              const DimResolver& resolve);

/// Sweeps candidate splits (single-group moves, a near d-m) and returns the
/// first certificate found, if any.
std::optional<DegenerationOutcome> find_degeneration_certificate(const LinearSystem& sys,
                                                                 const DimResolver& resolve);

}  // namespace hh
