#include <shiftcat/invariant_lattice.hpp>

#include <shiftcat/error.hpp>
#include <shiftcat/graph_util.hpp>

#include <algorithm>
#include <deque>
#include <map>

namespace shiftcat {

const char* to_string(PrimeKind kind) noexcept { return kind == PrimeKind::Per ? "Per" : "Aper"; }

InvariantSet make_invariant_set(const EdgeShift& shift, const VertexSet& backward_closed) {
  return InvariantSet{backward_closed, trim_sinks(shift, backward_closed)};
}

EdgeShift subshift_of(const EdgeShift& shift, const InvariantSet& set) {
  if (set.empty()) throw Error(Errc::EmptyGraph, "the empty invariant set carries no subshift");
  return shift.restrict_to(set.vertices);
}

std::optional<std::size_t> InvariantLattice::index_of(const VertexSet& vertices) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].vertices == vertices) return i;
  return std::nullopt;
}

InvariantLattice enumerate_invariant_sets(const EdgeShift& shift, std::size_t max_elements) {
  const auto comps = strongly_connected_components(shift);
  const std::size_t nc = comps.members.size();

  // Predecessor components of each component in the condensation.
  std::vector<std::vector<std::size_t>> preds(nc);
  for (const auto& e : shift.edges()) {
    const auto cs = comps.of_vertex[e.src];
    const auto cd = comps.of_vertex[e.dst];
    if (cs != cd) preds[cd].push_back(cs);
  }
  // Tarjan numbers sinks first, so walking indices downward visits every
  // component after all of its predecessors.
  std::vector<std::size_t> order(nc);
  for (std::size_t i = 0; i < nc; ++i) order[i] = nc - 1 - i;

  // Backward-closed sets are exactly the predecessor-closed unions of
  // components. Group them by trimmed carrier; the pre-trim representative is
  // the union of the group, which trims to the same carrier.
  std::map<std::vector<std::size_t>, VertexSet> by_carrier;
  const std::size_t max_raw = std::max<std::size_t>(max_elements, 1) * 64;
  std::size_t raw = 0;
  std::vector<bool> chosen(nc, false);
  VertexSet current(shift.vertex_count());

  auto record = [&] {
    if (++raw > max_raw) throw Error(Errc::TooLarge, "too many backward-closed vertex sets to enumerate");
    const VertexSet carrier = trim_sinks(shift, current);
    auto [it, inserted] = by_carrier.try_emplace(carrier.members(), current);
    if (!inserted) it->second = it->second | current;
    if (by_carrier.size() > max_elements) throw Error(Errc::TooLarge, "invariant-set lattice exceeds the configured size");
  };

  // Iterative include/exclude recursion over `order`.
  struct Frame {
    std::size_t pos;
    int state;  // 0: try exclude, 1: try include, 2: done
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.pos == nc) {
      record();
      stack.pop_back();
      continue;
    }
    const std::size_t c = order[f.pos];
    if (f.state == 0) {
      f.state = 1;
      chosen[c] = false;
      stack.push_back({f.pos + 1, 0});
    } else if (f.state == 1) {
      f.state = 2;
      const bool allowed = std::all_of(preds[c].begin(), preds[c].end(), [&](std::size_t p) { return chosen[p]; });
      if (allowed) {
        chosen[c] = true;
        for (auto v : comps.members[c]) current.insert(v);
        stack.push_back({f.pos + 1, 0});
      }
    } else {
      if (chosen[c]) {
        chosen[c] = false;
        for (auto v : comps.members[c]) current.erase(v);
      }
      stack.pop_back();
    }
  }

  InvariantLattice lattice;
  for (const auto& [members, pre] : by_carrier)
    lattice.elements.push_back({pre, VertexSet::from_members(shift.vertex_count(), members)});
  std::sort(lattice.elements.begin(), lattice.elements.end(),
            [](const InvariantSet& a, const InvariantSet& b) { return size_then_lex_less(a.vertices, b.vertices); });

  const std::size_t n = lattice.elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !contained_in(lattice.elements[i], lattice.elements[j])) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k == i || k == j) continue;
        if (contained_in(lattice.elements[i], lattice.elements[k]) && contained_in(lattice.elements[k], lattice.elements[j]))
          direct = false;
      }
      if (direct) lattice.covers.emplace_back(i, j);
    }
  }
  return lattice;
}

bool contained_in(const InvariantSet& a, const InvariantSet& b) { return a.vertices.subset_of(b.vertices); }

bool contained_in(const EdgeShift& shift, const InvariantSet& a, const VertexSet& b, const VertexSet& c) {
  const VertexSet& w = a.vertices;
  const VertexSet outside_b = w - b;
  const VertexSet outside_c = w - c;
  if (outside_b.empty() || outside_c.empty()) return true;
  // A path may visit the two kinds of vertices in either order.
  if (!(forward_reach(shift, outside_b, w) & outside_c).empty()) return false;
  if (!(forward_reach(shift, outside_c, w) & outside_b).empty()) return false;
  return true;
}

bool is_prime(const EdgeShift& shift, const InvariantLattice& lattice, std::size_t index) {
  const InvariantSet& a = lattice.elements.at(index);
  if (a.empty()) return false;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = i; j < lattice.size(); ++j) {
      const auto& b = lattice.elements[i];
      const auto& c = lattice.elements[j];
      if (!contained_in(shift, a, b.vertices, c.vertices)) continue;
      if (!contained_in(a, b) && !contained_in(a, c)) return false;
    }
  }
  return true;
}

namespace {

/// A cycle whose total-orbit closure is exactly `set`, if any.
std::optional<Word> closure_witness(const EdgeShift& shift, const InvariantSet& set) {
  for (auto v : set.vertices.members()) {
    Word cycle = shortest_cycle_through(shift, v, set.vertices);
    if (cycle.empty()) continue;
    const auto closure = total_orbit_closure(shift, EventuallyPeriodicPoint::periodic(shift, cycle));
    if (closure.vertices == set.vertices) return cycle;
  }
  return std::nullopt;
}

}  // namespace

std::vector<PrimeClass> primes(const EdgeShift& shift, const InvariantLattice& lattice) {
  std::vector<PrimeClass> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (!is_prime(shift, lattice, i)) continue;
    const auto& set = lattice.elements[i];
    auto cycle = closure_witness(shift, set);
    if (!cycle)
      throw Error(Errc::Internal, "prime invariant set without a total-orbit witness");
    const PrimeKind kind = isolated_periodic(shift, *cycle) ? PrimeKind::Per : PrimeKind::Aper;
    out.push_back({i, set, kind, EventuallyPeriodicPoint::periodic(shift, *cycle)});
  }
  return out;
}

bool isolated_periodic(const EdgeShift& shift, const Word& cycle) {
  if (cycle.empty() || !is_path(shift, cycle) || word_target(shift, cycle) != word_source(shift, cycle))
    throw Error(Errc::IllegalCycle, format_word(shift, cycle) + " is not a closed path");
  // The point is isolated iff the component of its cycle is that cycle alone:
  // any other edge inside the component is an exit that returns.
  const auto comps = strongly_connected_components(shift);
  const std::size_t c = comps.of_vertex[word_source(shift, cycle)];
  for (auto v : comps.members[c]) {
    std::size_t internal = 0;
    for (auto e : shift.out_edges(v))
      if (comps.of_vertex[shift.edge(e).dst] == c) ++internal;
    if (internal != 1) return false;
  }
  return true;
}

InvariantSet total_orbit_closure(const EdgeShift& shift, const EventuallyPeriodicPoint& x) {
  return make_invariant_set(shift, backward_closure(shift, vertices_of(shift, x.cycle())));
}

std::vector<InvariantSet> minimal_sets(const InvariantLattice& lattice) {
  std::vector<InvariantSet> out;
  for (const auto& a : lattice.elements) {
    if (a.empty()) continue;
    const bool minimal = std::none_of(lattice.elements.begin(), lattice.elements.end(), [&](const InvariantSet& b) {
      return !b.empty() && b.vertices != a.vertices && contained_in(b, a);
    });
    if (minimal) out.push_back(a);
  }
  return out;
}

bool is_strongly_transitive(const EdgeShift& shift) { return is_strongly_connected(shift); }

std::optional<std::size_t> covering_time(const EdgeShift& shift) {
  VertexSet branching(shift.vertex_count());
  for (VertexId v = 0; v < shift.vertex_count(); ++v)
    if (shift.in_degree(v) >= 2) branching.insert(v);
  if (branching.empty()) return std::nullopt;
  const auto dist = distances_from(shift, branching);
  std::size_t worst = 0;
  for (auto d : dist) {
    if (d == kUnreachable) return std::nullopt;
    worst = std::max(worst, d);
  }
  return worst + 1;
}

bool is_topologically_free(const EdgeShift& shift, const InvariantLattice& lattice, const InvariantSet& a) {
  const auto idx = lattice.index_of(a.vertices);
  if (!idx || !is_prime(shift, lattice, *idx)) throw Error(Errc::NotPrime, "topological freeness is decided for prime sets only");
  for (auto v : a.vertices.members()) {
    Word cycle = shortest_cycle_through(shift, v, a.vertices);
    if (cycle.empty()) continue;
    if (total_orbit_closure(shift, EventuallyPeriodicPoint::periodic(shift, cycle)).vertices != a.vertices) continue;
    if (isolated_periodic(shift, cycle)) return false;
  }
  return true;
}

VertexSet saturation_vertices(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t offset) {
  const std::size_t p = x.prefix().size();
  const std::size_t c = x.cycle().size();
  const std::size_t phases = p + c;
  const std::size_t n = shift.vertex_count();
  auto normalize = [&](std::size_t t) { return t < phases ? t : p + (t - p) % c; };
  auto occupant = [&](std::size_t t) { return shift.edge(x.edge_at(t)).src; };

  // good[t][i]: from vertex t at time i some path reaches the point's own
  // vertex at the matching time. Backward search over (vertex, time) states.
  std::vector<std::vector<bool>> good(n, std::vector<bool>(phases, false));
  std::deque<std::pair<VertexId, std::size_t>> queue;
  for (std::size_t i = 0; i < phases; ++i) {
    good[occupant(i)][i] = true;
    queue.emplace_back(occupant(i), i);
  }
  while (!queue.empty()) {
    const auto [v, j] = queue.front();
    queue.pop_front();
    std::size_t prev[2];
    std::size_t count = 0;
    if (j >= 1) prev[count++] = j - 1;
    if (j == p) prev[count++] = phases - 1;
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t i = prev[k];
      for (auto e : shift.in_edges(v)) {
        const VertexId u = shift.edge(e).src;
        if (!good[u][i]) {
          good[u][i] = true;
          queue.emplace_back(u, i);
        }
      }
    }
  }
  VertexSet out(n);
  const std::size_t phase = normalize(offset);
  for (VertexId t = 0; t < n; ++t)
    if (good[t][phase]) out.insert(t);
  return out;
}

SaturationSlice saturation_slice(const EdgeShift& shift, const EventuallyPeriodicPoint& x, std::size_t depth) {
  if (depth < x.cycle().size())
    throw Error(Errc::DepthTooSmall, "saturation slice depth must be at least the cycle length");
  SaturationSlice slice{x, depth, {}, saturation_vertices(shift, x, depth)};
  for_each_word(shift, depth, [&](const Word& w) {
    const VertexId end = depth == 0 ? shift.edge(x.edge_at(0)).src : word_target(shift, w);
    if (slice.end_vertices.contains(end)) slice.words.push_back(w);
  });
  return slice;
}

}  // namespace shiftcat
