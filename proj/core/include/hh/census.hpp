#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "hh/classify.hpp"

namespace hh {

/// Enumeration window for the census.  The finite candidate set keeps
/// exactly the minimally overdetermined systems: v <= -1 but removing one
/// point of the smallest multiplicity would give v >= 0.  With
/// candidate=false the window also admits every under-determined system
/// (v >= 0), still with the minimality cap, and allows simple points.
struct CensusFilter {
  i64 M = 7;
  i64 d_max = 28;
  bool candidate = true;

  static CensusFilter make(i64 M, std::optional<i64> d_max = std::nullopt, bool candidate = true);

  int min_mult() const { return candidate ? 2 : 1; }
  bool admits(const LinearSystem& sys) const;
  std::string to_json() const;
  bool operator==(const CensusFilter&) const = default;
};

/// Yields each admissible canonical system exactly once, in lexicographic
/// order of (d, descending multiplicity sequence); the sink returns false to
/// stop.  Returns the number of systems emitted.
u64 enumerate_systems(const CensusFilter& filter,
                      const std::function<bool(const LinearSystem&)>& sink);

u64 count_systems(const CensusFilter& filter);

struct CensusCounters {
  std::map<std::string, u64> by_method_class;  // "Method|Class" -> count
  u64 total = 0;

  void add(const Verdict& v);
  void merge(const CensusCounters& o);
  bool operator==(const CensusCounters&) const = default;

  // Five-row summary in the shape of the published breakdown, plus unknown.
  u64 empty_combinatorial() const;  // game, cremona, degree bound, quasi, trivial
  u64 empty_base_overload() const;
  u64 special_count() const;
  u64 empty_degeneration() const;
  u64 unknown() const;
  std::string csv() const;
};

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusOptions {
  CensusFilter filter;
  int jobs = 1;
  std::string out_dir;          // empty: no files written
  std::string checkpoint_path;  // empty: no checkpointing
  u64 checkpoint_every = 2048;
  std::optional<u64> stop_after;  // classify only this many systems (tests)
  bool resume = false;
};

struct CensusReport {
  CensusCounters counters;
  u64 classified = 0;
  std::vector<LinearSystem> unknown_systems;  // capped
  std::string verdicts_jsonl;                 // populated when out_dir empty
};

/// Runs classify over the enumeration with a worker pool; verdict output is
/// ordered by enumeration index, so logs and counters are byte-identical
/// regardless of the worker count.
CensusReport run_census(const CensusOptions& opt, const Toolbox& tb);

}  // namespace hh
