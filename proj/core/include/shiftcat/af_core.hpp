#pragma once

// The AF core: the stationary Bratteli diagram of the fixed-point tower and
// the lattice of its ideals.
//
// Level n carries one block per vertex v, of rank p_n(v) = number of length-n
// paths ending at v, and p_{n+1} = A^T p_n. A closed saturated set is
// described by vertex sets (L_n) with L_n = E(L_{n+1}), where E(T) is the set
// of vertices with an edge into T; the ideal side is the complement of L_0.

#include <shiftcat/shift.hpp>

#include <optional>
#include <vector>

namespace shiftcat {

struct FiberDecomposition {
  std::size_t level;
  /// Rank per vertex.
  std::vector<BigInt> ranks;
};

struct BratteliDiagram {
  std::vector<FiberDecomposition> levels;
  /// multiplicity[u][v] edges from u at level n to v at level n+1, for every n.
  std::vector<std::vector<std::size_t>> multiplicity;

  /// p_{n+1}(v) = sum_u multiplicity[u][v] p_n(u) at every level.
  bool recursion_holds() const;
};

FiberDecomposition fiber_decomposition(const EdgeShift& shift, std::size_t n);

/// Levels 0..n_max. Throws DepthTooSmall for n_max = 0.
BratteliDiagram bratteli(const EdgeShift& shift, std::size_t n_max);

/// min_v p_n(v) for n = 1..n_max.
std::vector<BigInt> min_rank_growth(const EdgeShift& shift, std::size_t n_max);

/// E(T): vertices with at least one edge into T.
VertexSet predecessor_step(const EdgeShift& shift, const VertexSet& t);

struct OrderIdeal {
  /// L_0: vertices whose blocks survive in the quotient.
  VertexSet survivors;
  /// Complement of L_0: the blocks inside the ideal.
  VertexSet ideal_vertices;

  bool operator==(const OrderIdeal&) const = default;
};

struct AfLattice {
  std::size_t depth;
  /// Ordered by survivor cardinality, then lexicographically; the first
  /// element (no survivors) is the whole algebra.
  std::vector<OrderIdeal> elements;
  /// Least d with E^d(P(V)) = E^{d+1}(P(V)).
  std::size_t stabilization_depth;

  std::size_t size() const noexcept { return elements.size(); }
};

/// Images of all vertex sets under E^depth. Throws DepthTooSmall for
/// depth = 0 and TooLarge above 20 vertices.
AfLattice af_ideal_lattice(const EdgeShift& shift, std::size_t depth);

/// The lattice at its stabilization depth.
AfLattice af_stable_lattice(const EdgeShift& shift);

struct AfPrime {
  OrderIdeal ideal;
  /// A periodic point whose saturation yields the survivor set; may be
  /// absent below the stabilization depth.
  std::optional<EventuallyPeriodicPoint> witness;
};

/// Union-prime elements of af_ideal_lattice(depth).
std::vector<AfPrime> af_primes(const EdgeShift& shift, std::size_t depth);

}  // namespace shiftcat
