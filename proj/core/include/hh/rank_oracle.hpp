#pragma once

#include <vector>

#include "hh/linear_system.hpp"

namespace hh {

struct OracleConfig {
  u64 prime = 2147483647ULL;  // 2^31 - 1
  std::vector<u64> seeds = {1, 2, 3};
  i64 max_columns = 4000;
  int max_point_retries = 20000;
};

struct OracleVerdict {
  i64 dim = -1;
  i64 speciality_gap = 0;  // dim - expected_dimension
  bool seeds_agreed = true;
  u64 prime = 0;
  std::vector<u64> seeds;
  std::vector<i64> ranks;  // per seed
};

struct FieldTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegeneratePointsExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ground truth: the dimension of the system at random points over GF(p),
/// via the rank of the fat-point interpolation matrix.  Random points can
/// only understate the rank, so the verdict aggregates the maximum rank over
/// the seeds; dim = binom(d+2,2) - 1 - maxrank >= expected always holds.
OracleVerdict oracle_dimension(const LinearSystem& sys, const OracleConfig& cfg = {});

/// True iff the oracle dimension exceeds the expected dimension.
bool speciality_witness(const LinearSystem& sys, const OracleConfig& cfg = {});

/// The raw interpolation matrix for one seed: one row per derivative
/// condition (sum of m(m+1)/2 rows), one column per degree-d monomial.
/// Exposed for tests.
std::vector<std::vector<u32>> oracle_condition_matrix(const LinearSystem& sys, u64 seed,
                                                      const OracleConfig& cfg = {});

i64 rank_mod_p(std::vector<std::vector<u32>>& rows, u64 p);

}  // namespace hh
