#pragma once

#include <optional>
#include <span>

#include "hh/game.hpp"

namespace hh {

struct SearchBudget {
  u64 max_nodes = 1'000'000;
  int max_pre_slides = 2;  // slides allowed immediately before a placement
};

struct SearchResult {
  std::optional<Strategy> strategy;
  u64 nodes = 0;
  bool exhausted = false;         // the bounded move grammar was fully explored
  bool budget_exhausted = false;  // stopped on the node budget instead
};

/// Deterministic iterative-deepening DFS for a board-filling strategy.
/// Requires virtual_dimension(sys) <= -1 (pad first); a win certifies the
/// system empty and non-special.  Multiplicities are tried largest first,
/// corners in fixed rotation, with up to max_pre_slides slides before each
/// placement and a transposition table over (board, remaining multiset).
SearchResult search_strategy(const LinearSystem& sys, const SearchBudget& budget = {});

/// Same search with the placement order forced to `order` (a sub-multiset of
/// sys); wins when every listed placement lands.  Used to reconstruct the
/// scripted specialization orders of the hard-case catalog.
SearchResult search_scripted(const LinearSystem& sys, std::span<const int> order,
                             const SearchBudget& budget = {});

}  // namespace hh
