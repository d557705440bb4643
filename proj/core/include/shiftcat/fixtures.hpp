#pragma once

// Named example graphs used by tests, benchmarks and the CLI.

#include <shiftcat/shift.hpp>

#include <string>
#include <utility>
#include <vector>

namespace shiftcat::fixtures {

/// One vertex with k loops named a, b, c, ...
GraphPresentation full_shift(std::size_t k = 2);

/// u -> u, u -> v, v -> u.
GraphPresentation golden_mean();

/// v0 -> v1 -> ... -> v(n-1) -> v0.
GraphPresentation cycle(std::size_t n);

/// u loop, u -> v, two loops at v.
GraphPresentation reducible();

/// w loop, w -> u, and the cycle u -> v -> u.
GraphPresentation entering_edge();

/// A loop at a and a loop at b, nothing between them.
GraphPresentation disjoint_cycles();

/// A loop at a, a loop at b and an edge a -> b.
GraphPresentation connected_cycles();

/// Every fixture above under a stable file-friendly name.
std::vector<std::pair<std::string, GraphPresentation>> all();

}  // namespace shiftcat::fixtures
