#pragma once

// Input model and elementary combinatorics of a one-sided edge shift.
//
// A finite directed multigraph G presents the space X_G of one-sided infinite
// edge paths x = e1 e2 e3 ... (dst(e_i) = src(e_{i+1})) together with the
// shift map sigma(x) = e2 e3 ... . On an essential graph sigma is a surjective
// local homeomorphism, and #sigma^{-1}(x) = in-degree(src(e1)).

#include <shiftcat/numeric.hpp>
#include <shiftcat/vertex_set.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shiftcat {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct EdgeDecl {
  std::string id;
  std::string src;
  std::string dst;

  bool operator==(const EdgeDecl&) const = default;
};

/// Raw graph as read from input. Nothing is checked until validate().
struct GraphPresentation {
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
  /// The graph was produced from a subshift presentation; only affects report notes.
  bool from_subshift = false;

  bool operator==(const GraphPresentation&) const = default;
};

struct Edge {
  std::string name;
  VertexId src;
  VertexId dst;
};

/// A finite sequence of edge indices. The empty word is the whole space.
using Word = std::vector<EdgeId>;

class EdgeShift;

/// Validates an edge shift. Throws Error with EmptyGraph, SourceVertex,
/// SinkVertex, UnknownVertex, DuplicateVertex or DuplicateEdge.
EdgeShift validate(const GraphPresentation& graph);

/// Essential graph with its adjacency count matrix. Immutable once built.
class EdgeShift {
 public:
  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Edge indices leaving / entering v, in declaration order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_.at(v); }
  std::size_t out_degree(VertexId v) const { return out_.at(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_.at(v).size(); }

  /// A[u][v] = number of edges u -> v.
  std::size_t adjacency(VertexId u, VertexId v) const { return adjacency_.at(u).at(v); }
  const std::vector<std::vector<std::size_t>>& adjacency_matrix() const noexcept { return adjacency_; }

  const GraphPresentation& presentation() const noexcept { return presentation_; }

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  /// Induced subgraph on `keep`, revalidated. Vertex and edge names are kept;
  /// indices are renumbered in the original declaration order.
  EdgeShift restrict_to(const VertexSet& keep) const;

  /// Maps a vertex of a restriction back to this shift by name.
  VertexId vertex_from(const EdgeShift& sub, VertexId v_in_sub) const;
  VertexSet lift(const EdgeShift& sub, const VertexSet& in_sub) const;

 private:
  friend EdgeShift validate(const GraphPresentation& graph);
  EdgeShift() = default;

  GraphPresentation presentation_;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// True iff consecutive edges of `w` are composable.
bool is_path(const EdgeShift& shift, const Word& w);

/// Source of the first / target of the last edge. Throws IllegalWord on the empty word.
VertexId word_source(const EdgeShift& shift, const Word& w);
VertexId word_target(const EdgeShift& shift, const Word& w);

/// A point p c c c ... with a nonempty closed path c.
class EventuallyPeriodicPoint {
 public:
  /// Throws IllegalWord if p is not a path or does not feed into c, and
  /// IllegalCycle if c is empty or not closed.
  static EventuallyPeriodicPoint make(const EdgeShift& shift, Word prefix, Word cycle);
  static EventuallyPeriodicPoint periodic(const EdgeShift& shift, Word cycle) {
    return make(shift, {}, std::move(cycle));
  }

  const Word& prefix() const noexcept { return prefix_; }
  const Word& cycle() const noexcept { return cycle_; }

  /// The i-th edge (0-based) of the infinite path.
  EdgeId edge_at(std::size_t i) const;
  /// The first `n` edges.
  Word take(std::size_t n) const;

  bool is_periodic() const noexcept { return prefix_.empty(); }

  bool operator==(const EventuallyPeriodicPoint&) const = default;

 private:
  EventuallyPeriodicPoint(Word p, Word c) : prefix_(std::move(p)), cycle_(std::move(c)) {}
  Word prefix_;
  Word cycle_;
};

/// m(x) = #{y : sigma(y) = sigma(x)}, which is in-degree(dst(x1)); exposed per vertex.
std::size_t m_value(const EdgeShift& shift, VertexId v);
std::size_t m_value(const EdgeShift& shift, std::string_view vertex);
std::size_t m_of_point(const EdgeShift& shift, const EventuallyPeriodicPoint& x);

/// Row vector 1^T A^k: entry v counts length-k paths ending at v, i.e. #sigma^{-k}(x)
/// for any x with src(x1) = v.
std::vector<BigInt> preimage_counts(const EdgeShift& shift, std::size_t k);
BigInt preimage_count(const EdgeShift& shift, std::size_t k, VertexId v);
BigInt min_preimage_count(const EdgeShift& shift, std::size_t k);

/// Number of legal paths with k edges; 1 for k = 0 (the empty word).
BigInt count_words(const EdgeShift& shift, std::size_t k);

/// For every cylinder z of length `depth`: sum over one-edge extensions f.z of
/// 1/m(f.z) equals 1, in exact rationals.
bool partition_unity_check(const EdgeShift& shift, std::size_t depth);

/// The point space is infinite iff some vertex of out-degree >= 2 is reachable
/// from a cycle.
bool is_space_infinite(const EdgeShift& shift);

/// sigma is injective iff every vertex has in-degree exactly 1.
bool is_injective(const EdgeShift& shift);

/// Calls `visit(word)` for each legal path with k edges, in lexicographic order
/// of edge indices. Exponential in k.
template <class Visit>
void for_each_word(const EdgeShift& shift, std::size_t k, Visit&& visit);

std::string format_word(const EdgeShift& shift, const Word& w);

}  // namespace shiftcat

#include <shiftcat/detail/for_each_word.hpp>
