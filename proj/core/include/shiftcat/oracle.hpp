#pragma once

// Brute-force referee working on finite words only. Everything here is
// exponential in the depth and meant for small graphs.
//
// Bounded candidates. For isolation the candidates are the points
// c^M q r^infinity with c^M at least as long as the depth, q a path of length
// at most the depth and r a rotation of c. A point of the total orbit that
// shares a long prefix with c^infinity but differs from it must leave the
// cycle and come back; cutting repeated vertices out of the detour gives a
// return path of length at most |V| + |c|, so such a q exists once the depth
// reaches |c|(|E|+1).

#include <shiftcat/af_core.hpp>
#include <shiftcat/invariant_lattice.hpp>

#include <optional>
#include <string>
#include <vector>

namespace shiftcat {

struct WordTable {
  std::size_t depth;
  /// Lexicographic in edge indices.
  std::vector<Word> words;
  /// preimages[i]: indices of f.w[0..k-1) over edges f into src(w).
  std::vector<std::vector<std::size_t>> preimages;
  /// images[i]: indices of w[1..k).e over edges e out of dst(w).
  std::vector<std::vector<std::size_t>> images;

  std::optional<std::size_t> index_of(const Word& w) const;
};

/// Throws DepthTooSmall for k = 0.
WordTable words(const EdgeShift& shift, std::size_t k);

/// A subset of a word table, as membership flags.
using WordFamily = std::vector<bool>;

enum class FamilyMode { TotallyInvariant, Saturated };

/// TotallyInvariant: closed under one-step preimages and every member has an
/// image in the family. Saturated: closed under "same suffix after dropping j
/// edges" for every j <= k. Throws DepthTooSmall for k < 2.
bool check_family_invariance(const EdgeShift& shift, const WordTable& table, const WordFamily& family,
                             FamilyMode mode);

/// Words of the table lying on some infinite path that stays inside `within`.
WordFamily family_inside(const EdgeShift& shift, const WordTable& table, const VertexSet& within);

/// Distinct families, over all vertex subsets W, of the form family_inside(W)
/// that pass the total-invariance check. Sorted by size, then lexicographically.
std::vector<WordFamily> oracle_invariant_families(const EdgeShift& shift, const WordTable& table);

/// Whether A is inside B union C, read on words.
bool oracle_contained_in_union(const WordFamily& a, const WordFamily& b, const WordFamily& c);

/// Indices into `families` of the union-prime nonempty members.
std::vector<std::size_t> oracle_primes(const std::vector<WordFamily>& families);

/// Source-vertex sets of the unions of suffix classes at depth k.
std::vector<VertexSet> oracle_saturated_sources(const EdgeShift& shift, const WordTable& table);

/// Every depth-k word is a j-step image (j <= n) of a word extending mu.
bool check_cover(const EdgeShift& shift, const Word& mu, std::size_t n, std::size_t k);

/// Least m with the first m images of {x : #sigma^-1(x) >= 2} covering the
/// depth-k table; nullopt if sigma is injective or the images never cover.
std::optional<std::size_t> oracle_covering_time(const EdgeShift& shift, std::size_t k);

/// check_cover succeeds from every depth-k word.
bool oracle_strongly_transitive(const EdgeShift& shift, std::size_t k);

/// Throws DepthTooSmall unless k >= |c|(|E|+1).
bool check_isolation(const EdgeShift& shift, const Word& cycle, std::size_t k);

/// Depth-k prefixes of points w.sigma^n(x) with n <= horizon.
std::vector<Word> oracle_saturation_slice(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t k,
                                          std::size_t horizon);

/// Horizon large enough for oracle_saturation_slice to be exhaustive.
std::size_t saturation_horizon(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t k);

struct CrossCheck {
  std::string name;
  bool agree;
  std::string detail;
};

/// Compares every efficient predicate with its word-level counterpart at depth k.
std::vector<CrossCheck> cross_check(const EdgeShift& shift, std::size_t k);

/// Every essential multigraph with at most `max_vertices` vertices and at most
/// `max_edges` edges, one per isomorphism class.
std::vector<GraphPresentation> small_essential_graphs(std::size_t max_vertices, std::size_t max_edges);

}  // namespace shiftcat
