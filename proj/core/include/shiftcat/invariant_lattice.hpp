#pragma once

// Closed totally invariant subsets of an edge shift and their prime elements.
//
// A closed set F with sigma^{-1}(F) = F is carried by a backward-closed vertex
// set W: F is the set of infinite paths that stay inside W. Different
// backward-closed sets can carry the same F, so every element is stored with
// its sink-trimmed vertex set, which is the canonical representative.

#include <shiftcat/shift.hpp>

#include <optional>
#include <vector>

namespace shiftcat {

struct InvariantSet {
  /// Backward-closed set as enumerated, before trimming.
  VertexSet pre_trim;
  /// Canonical carrier: pre_trim with sinks removed iteratively. Empty for F = {}.
  VertexSet vertices;

  bool empty() const noexcept { return vertices.empty(); }
  bool operator==(const InvariantSet& other) const { return vertices == other.vertices; }
};

/// The canonical element carried by a backward-closed set.
InvariantSet make_invariant_set(const EdgeShift& shift, const VertexSet& backward_closed);

/// The essential subshift living on a nonempty invariant set.
EdgeShift subshift_of(const EdgeShift& shift, const InvariantSet& set);

struct InvariantLattice {
  /// Ordered by cardinality then lexicographically; elements[0] is the empty
  /// set and elements.back() is the whole space.
  std::vector<InvariantSet> elements;
  /// Hasse diagram: (i, j) when elements[i] is covered by elements[j].
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const VertexSet& vertices) const;
};

/// All closed totally invariant sets. Throws TooLarge past `max_elements`.
InvariantLattice enumerate_invariant_sets(const EdgeShift& shift, std::size_t max_elements = 1u << 16);

/// Point-set containment A subset-of B.
bool contained_in(const InvariantSet& a, const InvariantSet& b);

/// Point-set containment A subset-of (B union C). Fails exactly when a path in
/// A's carrier visits a vertex outside B and a vertex outside C. B and C may
/// be arbitrary vertex sets; they are read as "paths staying inside".
bool contained_in(const EdgeShift& shift, const InvariantSet& a, const VertexSet& b, const VertexSet& c);

enum class PrimeKind { Per, Aper };

const char* to_string(PrimeKind kind) noexcept;

struct PrimeClass {
  std::size_t lattice_index;
  InvariantSet set;
  PrimeKind kind;
  /// A periodic point whose total-orbit closure is `set`.
  EventuallyPeriodicPoint witness;
};

/// Nonempty elements A such that A in (B union C) forces A in B or A in C for
/// every pair of lattice elements.
bool is_prime(const EdgeShift& shift, const InvariantLattice& lattice, std::size_t index);

std::vector<PrimeClass> primes(const EdgeShift& shift, const InvariantLattice& lattice);

/// Whether c^infinity is isolated in its total orbit: no exit from the cycle
/// that can return to it. Throws IllegalCycle.
bool isolated_periodic(const EdgeShift& shift, const Word& cycle);

/// Closure of { y : sigma^n(x) = sigma^m(y) }: backward closure of the cycle's vertices.
InvariantSet total_orbit_closure(const EdgeShift& shift, const EventuallyPeriodicPoint& x);

/// Minimal nonempty lattice elements.
std::vector<InvariantSet> minimal_sets(const InvariantLattice& lattice);

/// For an essential graph, strong transitivity is strong connectivity.
bool is_strongly_transitive(const EdgeShift& shift);

/// Least m with union_{j<m} sigma^j(U) = Y, U = {x : #sigma^{-1}(x) >= 2}.
/// nullopt when sigma is injective or some vertex is never covered.
std::optional<std::size_t> covering_time(const EdgeShift& shift);

/// Periodic points of A have empty interior in A. Requires A prime (NotPrime).
bool is_topologically_free(const EdgeShift& shift, const InvariantLattice& lattice, const InvariantSet& a);

struct SaturationSlice {
  EventuallyPeriodicPoint point;
  std::size_t depth;
  /// Lexicographically ordered words of length `depth` meeting the saturation of `point`.
  std::vector<Word> words;
  /// The saturation at this depth depends only on the last vertex of a word.
  VertexSet end_vertices;
};

/// Depth-k words w for which some y extending w has sigma^n(y) = sigma^n(x)
/// for some n. Requires depth >= cycle length (DepthTooSmall).
SaturationSlice saturation_slice(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t depth);

/// Vertices t such that a path of some length L >= 0 leads from t to the
/// vertex occupied by x at time `offset + L`.
VertexSet saturation_vertices(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t offset);

}  // namespace shiftcat
