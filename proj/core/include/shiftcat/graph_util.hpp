#pragma once

// Reachability and component utilities on the underlying graph of an EdgeShift.

#include <shiftcat/shift.hpp>

#include <limits>
#include <vector>

namespace shiftcat {

struct Components {
  /// Component index per vertex. Components are numbered in reverse
  /// topological order of the condensation (sinks first), as Tarjan emits them.
  std::vector<std::size_t> of_vertex;
  std::vector<std::vector<VertexId>> members;
  /// A component is nontrivial when it carries at least one internal edge (a cycle).
  std::vector<bool> nontrivial;
};

Components strongly_connected_components(const EdgeShift& shift);

bool is_strongly_connected(const EdgeShift& shift);

/// Vertices reachable from `from` (including `from`) using only vertices in `within`.
VertexSet forward_reach(const EdgeShift& shift, const VertexSet& from, const VertexSet& within);
VertexSet forward_reach(const EdgeShift& shift, const VertexSet& from);

/// Smallest superset closed under taking predecessors.
VertexSet backward_closure(const EdgeShift& shift, const VertexSet& seed);
bool is_backward_closed(const EdgeShift& shift, const VertexSet& set);

/// Largest subset in which every vertex keeps an out-edge into the subset
/// (iteratively deletes sinks of the induced subgraph).
VertexSet trim_sinks(const EdgeShift& shift, const VertexSet& set);

/// Vertices lying on some cycle.
VertexSet cyclic_vertices(const EdgeShift& shift);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first edge distance from the nearest vertex of `sources`.
std::vector<std::size_t> distances_from(const EdgeShift& shift, const VertexSet& sources);

/// A shortest closed path through v using only vertices of `within`; empty if none.
Word shortest_cycle_through(const EdgeShift& shift, VertexId v, const VertexSet& within);

/// All simple cycles (no repeated vertex), each rotated to start at its
/// smallest vertex and listed in lexicographic order. Exponential; intended
/// for small graphs.
std::vector<Word> simple_cycles(const EdgeShift& shift);

/// The vertices visited by a word, as a set.
VertexSet vertices_of(const EdgeShift& shift, const Word& w);

}  // namespace shiftcat
