#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hh/census.hpp"
#include "hh/game.hpp"

namespace hh {

/// Why a hard-case system is empty.
enum class HardCaseReason : unsigned char {
  Game,          // scripted specialization order + residual analysis
  Cremona,       // quadratic transformation to a lower-degree system
  Cubics,        // the cubic through nine points overloads the base locus
  Homogeneous,   // settled by the homogeneous-systems literature
  Degeneration,  // bespoke two-component degeneration argument
  MapDegree,     // component-count / map-degree argument
  Implied,       // follows from another row by adding conditions
};

const char* to_string(HardCaseReason r);

/// One row of the bundled catalog of 42 systems that resist the automated
/// census toolbox; every row is empty and oracle-checkable.
struct HardCase {
  LinearSystem sys;
  HardCaseReason reason;
  std::vector<int> order;                  // specialization order, when given
  std::optional<LinearSystem> implied_by;  // for Implied rows
  bool partial_script = false;             // scripted phase covers only a prefix
};

const std::vector<HardCase>& hard_cases();

/// Script fixture: a frozen move script for one hard case together with the
/// board it must reach.  Scripts follow the standard specialization pattern
/// (place at the Y corner, slide down, slide right) in the row's order.
struct ScriptFixture {
  LinearSystem sys;
  std::vector<int> order;
  Strategy moves;
  std::vector<std::pair<int, int>> final_cells;
};

ScriptFixture build_standard_script(const LinearSystem& sys, std::span<const int> order);
std::string script_fixture_filename(const HardCase& hc);
std::string script_fixture_to_json(const ScriptFixture& f);
ScriptFixture script_fixture_from_json(const std::string& text);

/// True when emptiness of `smaller` forces emptiness of `larger`: same
/// degree, and larger's multiset is smaller's with extra points added and/or
/// an m-point traded for binom(m+1,2) simple points (a flat specialization).
bool implied_by_domination(const LinearSystem& smaller, const LinearSystem& larger);

struct HardCaseCheck {
  LinearSystem sys;
  HardCaseReason reason;
  i64 oracle_dim = 99;
  bool oracle_ok = false;
  bool script_ok = true;    // replay reaches the frozen state (Game rows)
  bool cremona_ok = true;   // one step applies and the result resolves empty
  bool implied_ok = true;   // domination check against the quoted row
  std::string note;

  bool ok() const { return oracle_ok && script_ok && cremona_ok && implied_ok; }
};

struct HardCaseReport {
  std::vector<HardCaseCheck> rows;
  bool all_ok = false;
  std::string csv() const;
};

/// Verifies the whole catalog: every row oracle-empty; Game rows replay
/// their fixture scripts to the frozen residual state; Cremona rows reduce
/// to systems the toolbox (with oracle fallback) resolves; Implied rows pass
/// the domination check.
HardCaseReport verify_hard_cases(const std::string& scripts_dir, const Toolbox& tb,
                                 const OracleConfig& oracle);

}  // namespace hh
