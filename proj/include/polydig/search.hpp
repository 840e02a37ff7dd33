#pragma once

#include <cstdint>
#include <optional>

#include "polydig/digraph.hpp"

namespace polydig {

// Restricted-normal and not a directed join of balanced parts.
bool is_restricted_normal_nonjoin(const Digraph& g);

struct SearchOutcome {
  std::optional<Digraph> witness;  // always passes is_restricted_normal_nonjoin
  std::uint64_t iterations = 0;
  std::uint64_t restarts = 0;
};

// Randomised local search by single edge flips over order-n digraphs,
// minimising the total violation of the restricted-normality identity, with
// penalties for balanced digraphs and for join-compatible imbalances.
// Deterministic for a given seed. An empty witness after the budget is a
// legitimate result.
SearchOutcome search_restricted_normal_nonjoin(int n, std::uint64_t budget, std::uint64_t seed);

}  // namespace polydig
