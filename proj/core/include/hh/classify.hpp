#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <shared_mutex>

#include "hh/curve_class.hpp"
#include "hh/degeneration.hpp"
#include "hh/rank_oracle.hpp"
#include "hh/search.hpp"

namespace hh {

enum class VerdictClass : unsigned char { EmptyNonSpecial, NonSpecial, Special, Unknown };

enum class Method : unsigned char {
  None,
  Trivial,
  DegreeBound,
  QuasiHomog,
  Cremona,
  Game,
  BaseOverload,
  MultipleNegCurve,
  Degeneration,
  Oracle,
  Manual,
};

const char* to_string(VerdictClass c);
const char* to_string(Method m);

struct Verdict {
  LinearSystem sys;
  VerdictClass cls = VerdictClass::Unknown;
  std::optional<i64> dim;  // exact dimension when known; -1 for empty
  Method method = Method::None;
  std::string cert;  // JSON certificate blob

  bool contradicts(const Verdict& o) const;
};

struct Budgets {
  u64 game_nodes = 1'000'000;
  int game_pre_slides = 2;
  i64 catalog_e_max = 13;
  int degen_depth = 2;
  u64 degen_game_nodes = 200'000;
  bool oracle_fallback = false;     // oracle as a final classification stage
  bool sigma_only_special = false;  // certify Special on sigma >= 2 alone
};

struct Toolbox {
  Catalog catalog;
  Budgets budgets;
  bool manual_registry = true;  // consult the bundled hard-case catalog
  OracleConfig oracle;

  static Toolbox make(int max_points, Budgets budgets = {});
};

/// Applies the classification stages in a fixed order (degree bound,
/// quasi-homogeneous form, Cremona reduction to an already-classified or
/// trivial system, checker game, base overload, multiple (-1)-curve,
/// degeneration, then optional oracle / manual registry), memoizing verdicts
/// per system.  Deterministic for fixed budgets; safe to call concurrently.
class ClassifyEngine {
 public:
  explicit ClassifyEngine(const Toolbox& tb);

  Verdict classify(const LinearSystem& sys);

  // Exact dimension when any stage can pin it down; used by the
  // degeneration certifier for sub-systems.
  std::optional<i64> resolve_dimension(const LinearSystem& sys, int degen_depth);

  const Toolbox& toolbox() const { return tb_; }

 private:
  struct Key {
    LinearSystem sys;
    int depth;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return static_cast<std::size_t>(hash_combine(k.sys.stable_hash(), static_cast<u64>(k.depth)));
    }
  };

  Verdict classify_impl(const LinearSystem& sys, int degen_depth);
  std::optional<Verdict> try_trivial(const LinearSystem& sys) const;
  std::optional<Verdict> try_degree_bound(const LinearSystem& sys) const;
  std::optional<Verdict> try_quasi_homogeneous(const LinearSystem& sys) const;
  std::optional<Verdict> try_cremona(const LinearSystem& sys, int degen_depth);
  std::optional<Verdict> try_game(const LinearSystem& sys, u64 node_budget) const;
  std::optional<Verdict> try_base_overload(const LinearSystem& sys) const;
  std::optional<Verdict> try_special(const LinearSystem& sys) const;
  std::optional<Verdict> try_degeneration(const LinearSystem& sys, int degen_depth);
  std::optional<Verdict> try_oracle(const LinearSystem& sys) const;
  std::optional<Verdict> try_manual(const LinearSystem& sys) const;

  std::optional<Verdict> memo_lookup(const Key& k) const;
  void memo_store(const Key& k, const Verdict& v);

  const Toolbox& tb_;
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, Verdict, KeyHash> memo_;
};

}  // namespace hh
