#include <shiftcat/shift.hpp>

#include <shiftcat/error.hpp>
#include <shiftcat/graph_util.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace shiftcat {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::SourceVertex: return "SourceVertex";
    case Errc::SinkVertex: return "SinkVertex";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IllegalWord: return "IllegalWord";
    case Errc::IllegalCycle: return "IllegalCycle";
    case Errc::DepthTooSmall: return "DepthTooSmall";
    case Errc::NotPrime: return "NotPrime";
    case Errc::TrivialSet: return "TrivialSet";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Syntax: return "Syntax";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

EdgeShift validate(const GraphPresentation& graph) {
  if (graph.vertices.empty() || graph.edges.empty())
    throw Error(Errc::EmptyGraph, "graph needs at least one vertex and one edge");

  EdgeShift s;
  s.presentation_ = graph;
  s.vertex_names_ = graph.vertices;
  for (VertexId v = 0; v < graph.vertices.size(); ++v) {
    if (!s.vertex_index_.emplace(graph.vertices[v], v).second)
      throw Error(Errc::DuplicateVertex, "vertex '" + graph.vertices[v] + "' declared twice");
  }
  const std::size_t n = graph.vertices.size();
  s.out_.assign(n, {});
  s.in_.assign(n, {});
  s.adjacency_.assign(n, std::vector<std::size_t>(n, 0));
  for (const auto& decl : graph.edges) {
    auto src = s.vertex_index_.find(decl.src);
    auto dst = s.vertex_index_.find(decl.dst);
    if (src == s.vertex_index_.end())
      throw Error(Errc::UnknownVertex, "edge '" + decl.id + "' has unknown source '" + decl.src + "'");
    if (dst == s.vertex_index_.end())
      throw Error(Errc::UnknownVertex, "edge '" + decl.id + "' has unknown target '" + decl.dst + "'");
    const EdgeId id = s.edges_.size();
    if (!s.edge_index_.emplace(decl.id, id).second)
      throw Error(Errc::DuplicateEdge, "edge id '" + decl.id + "' used twice");
    s.edges_.push_back({decl.id, src->second, dst->second});
    s.out_[src->second].push_back(id);
    s.in_[dst->second].push_back(id);
    ++s.adjacency_[src->second][dst->second];
  }
  for (VertexId v = 0; v < n; ++v)
    if (s.out_[v].empty()) throw Error(Errc::SinkVertex, "vertex '" + s.vertex_names_[v] + "' has no outgoing edge");
  for (VertexId v = 0; v < n; ++v)
    if (s.in_[v].empty()) throw Error(Errc::SourceVertex, "vertex '" + s.vertex_names_[v] + "' has no incoming edge");
  return s;
}

std::optional<VertexId> EdgeShift::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> EdgeShift::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

EdgeShift EdgeShift::restrict_to(const VertexSet& keep) const {
  GraphPresentation sub;
  sub.from_subshift = presentation_.from_subshift;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (keep.contains(v)) sub.vertices.push_back(vertex_names_[v]);
  for (const auto& e : edges_)
    if (keep.contains(e.src) && keep.contains(e.dst))
      sub.edges.push_back({e.name, vertex_names_[e.src], vertex_names_[e.dst]});
  return validate(sub);
}

VertexId EdgeShift::vertex_from(const EdgeShift& sub, VertexId v_in_sub) const {
  auto v = find_vertex(sub.vertex_name(v_in_sub));
  if (!v) throw Error(Errc::UnknownVertex, "'" + sub.vertex_name(v_in_sub) + "' is not a vertex of the parent shift");
  return *v;
}

VertexSet EdgeShift::lift(const EdgeShift& sub, const VertexSet& in_sub) const {
  VertexSet out(vertex_count());
  for (auto v : in_sub.members()) out.insert(vertex_from(sub, v));
  return out;
}

bool is_path(const EdgeShift& shift, const Word& w) {
  for (auto e : w)
    if (e >= shift.edge_count()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (shift.edge(w[i - 1]).dst != shift.edge(w[i]).src) return false;
  return true;
}

VertexId word_source(const EdgeShift& shift, const Word& w) {
  if (w.empty()) throw Error(Errc::IllegalWord, "empty word has no source");
  return shift.edge(w.front()).src;
}

VertexId word_target(const EdgeShift& shift, const Word& w) {
  if (w.empty()) throw Error(Errc::IllegalWord, "empty word has no target");
  return shift.edge(w.back()).dst;
}

EventuallyPeriodicPoint EventuallyPeriodicPoint::make(const EdgeShift& shift, Word prefix, Word cycle) {
  if (cycle.empty()) throw Error(Errc::IllegalCycle, "cycle part is empty");
  if (!is_path(shift, cycle) || word_target(shift, cycle) != word_source(shift, cycle))
    throw Error(Errc::IllegalCycle, "cycle part " + format_word(shift, cycle) + " is not a closed path");
  if (!is_path(shift, prefix)) throw Error(Errc::IllegalWord, "prefix is not a path");
  if (!prefix.empty() && word_target(shift, prefix) != word_source(shift, cycle))
    throw Error(Errc::IllegalWord, "prefix does not lead into the cycle");
  return EventuallyPeriodicPoint(std::move(prefix), std::move(cycle));
}

EdgeId EventuallyPeriodicPoint::edge_at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

Word EventuallyPeriodicPoint::take(std::size_t n) const {
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = edge_at(i);
  return out;
}

std::size_t m_value(const EdgeShift& shift, VertexId v) {
  if (v >= shift.vertex_count()) throw Error(Errc::UnknownVertex, "vertex index " + std::to_string(v));
  return shift.in_degree(v);
}

std::size_t m_value(const EdgeShift& shift, std::string_view vertex) {
  auto v = shift.find_vertex(vertex);
  if (!v) throw Error(Errc::UnknownVertex, "'" + std::string(vertex) + "'");
  return shift.in_degree(*v);
}

std::size_t m_of_point(const EdgeShift& shift, const EventuallyPeriodicPoint& x) {
  return m_value(shift, shift.edge(x.edge_at(0)).dst);
}

std::vector<BigInt> preimage_counts(const EdgeShift& shift, std::size_t k) {
  const std::size_t n = shift.vertex_count();
  std::vector<BigInt> p(n, BigInt(1));
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<BigInt> next(n, BigInt(0));
    for (const auto& e : shift.edges()) next[e.dst] += p[e.src];
    p = std::move(next);
  }
  return p;
}

BigInt preimage_count(const EdgeShift& shift, std::size_t k, VertexId v) {
  if (v >= shift.vertex_count()) throw Error(Errc::UnknownVertex, "vertex index " + std::to_string(v));
  return preimage_counts(shift, k)[v];
}

BigInt min_preimage_count(const EdgeShift& shift, std::size_t k) {
  const auto p = preimage_counts(shift, k);
  return *std::min_element(p.begin(), p.end());
}

BigInt count_words(const EdgeShift& shift, std::size_t k) {
  if (k == 0) return 1;
  BigInt total = 0;
  for (const auto& c : preimage_counts(shift, k)) total += c;
  return total;
}

bool partition_unity_check(const EdgeShift& shift, std::size_t depth) {
  if (depth == 0) throw Error(Errc::DepthTooSmall, "partition of unity needs depth >= 1");
  bool ok = true;
  for_each_word(shift, depth, [&](const Word& z) {
    if (!ok) return;
    Rational sum = 0;
    for (auto f : shift.in_edges(word_source(shift, z))) sum += Rational(1, shift.in_degree(shift.edge(f).dst));
    if (sum != 1) ok = false;
  });
  return ok;
}

bool is_space_infinite(const EdgeShift& shift) {
  const VertexSet reach = forward_reach(shift, cyclic_vertices(shift));
  for (auto v : reach.members())
    if (shift.out_degree(v) >= 2) return true;
  return false;
}

bool is_injective(const EdgeShift& shift) {
  for (VertexId v = 0; v < shift.vertex_count(); ++v)
    if (shift.in_degree(v) != 1) return false;
  return true;
}

std::string format_word(const EdgeShift& shift, const Word& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    if (w[i] < shift.edge_count())
      os << shift.edge(w[i]).name;
    else
      os << '#' << w[i];
  }
  os << ']';
  return os.str();
}

}  // namespace shiftcat
