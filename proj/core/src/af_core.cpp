#include <shiftcat/af_core.hpp>

#include <shiftcat/error.hpp>
#include <shiftcat/graph_util.hpp>
#include <shiftcat/invariant_lattice.hpp>

#include <algorithm>
#include <set>

namespace shiftcat {

bool BratteliDiagram::recursion_holds() const {
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
    const auto& p = levels[n].ranks;
    const auto& q = levels[n + 1].ranks;
    for (std::size_t v = 0; v < q.size(); ++v) {
      BigInt sum = 0;
      for (std::size_t u = 0; u < p.size(); ++u) sum += p[u] * multiplicity[u][v];
      if (sum != q[v]) return false;
    }
  }
  return true;
}

FiberDecomposition fiber_decomposition(const EdgeShift& shift, std::size_t n) {
  return {n, preimage_counts(shift, n)};
}

BratteliDiagram bratteli(const EdgeShift& shift, std::size_t n_max) {
  if (n_max == 0) throw Error(Errc::DepthTooSmall, "a diagram needs at least one level step");
  BratteliDiagram d;
  d.multiplicity = shift.adjacency_matrix();
  d.levels.push_back({0, std::vector<BigInt>(shift.vertex_count(), BigInt(1))});
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<BigInt> next(shift.vertex_count(), BigInt(0));
    const auto& prev = d.levels.back().ranks;
    for (std::size_t u = 0; u < prev.size(); ++u)
      for (std::size_t v = 0; v < next.size(); ++v) next[v] += prev[u] * d.multiplicity[u][v];
    d.levels.push_back({n, std::move(next)});
  }
  return d;
}

std::vector<BigInt> min_rank_growth(const EdgeShift& shift, std::size_t n_max) {
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(min_preimage_count(shift, n));
  return out;
}

VertexSet predecessor_step(const EdgeShift& shift, const VertexSet& t) {
  VertexSet out(shift.vertex_count());
  for (const auto& e : shift.edges())
    if (t.contains(e.dst)) out.insert(e.src);
  return out;
}

namespace {

constexpr std::size_t kMaxAfVertices = 20;

using Mask = unsigned long long;

std::vector<Mask> step_table(const EdgeShift& shift) {
  // E is a union homomorphism, so it is enough to know it on singletons.
  std::vector<Mask> single(shift.vertex_count(), 0);
  for (const auto& e : shift.edges()) single[e.dst] |= Mask{1} << e.src;
  return single;
}

Mask apply(const std::vector<Mask>& single, Mask t) {
  Mask out = 0;
  for (std::size_t v = 0; v < single.size(); ++v)
    if (t >> v & 1) out |= single[v];
  return out;
}

std::set<Mask> image(const std::vector<Mask>& single, const std::set<Mask>& sets) {
  std::set<Mask> out;
  for (auto s : sets) out.insert(apply(single, s));
  return out;
}

AfLattice to_lattice(const EdgeShift& shift, std::size_t depth, const std::set<Mask>& sets, std::size_t stable_at) {
  const std::size_t n = shift.vertex_count();
  AfLattice lat{depth, {}, stable_at};
  for (auto m : sets) {
    auto s = VertexSet::from_mask(n, m);
    lat.elements.push_back({s, s.complement()});
  }
  std::sort(lat.elements.begin(), lat.elements.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
    return size_then_lex_less(a.survivors, b.survivors);
  });
  return lat;
}

struct Tower {
  std::vector<std::set<Mask>> images;  // images[d] = E^d(P(V))
  std::size_t stable_at;
};

Tower tower(const EdgeShift& shift, std::size_t depth) {
  const std::size_t n = shift.vertex_count();
  if (n > kMaxAfVertices) throw Error(Errc::TooLarge, "AF lattice enumeration is limited to 20 vertices");
  const auto single = step_table(shift);
  std::set<Mask> all;
  for (Mask m = 0; m < (Mask{1} << n); ++m) all.insert(m);
  Tower t{{all}, 0};
  // The images shrink until they stop changing; they cannot shrink more than
  // 2^|V| times, and in practice stop within |V| steps.
  bool stable = false;
  while (!stable || t.images.size() <= depth) {
    auto next = image(single, t.images.back());
    if (!stable && next == t.images.back()) {
      stable = true;
      t.stable_at = t.images.size() - 1;
    }
    t.images.push_back(std::move(next));
  }
  return t;
}

}  // namespace

AfLattice af_ideal_lattice(const EdgeShift& shift, std::size_t depth) {
  if (depth == 0) throw Error(Errc::DepthTooSmall, "AF lattice depth must be at least 1");
  const auto t = tower(shift, depth);
  return to_lattice(shift, depth, t.images[depth], t.stable_at);
}

AfLattice af_stable_lattice(const EdgeShift& shift) {
  const auto t = tower(shift, 1);
  const std::size_t d = std::max<std::size_t>(t.stable_at, 1);
  return to_lattice(shift, d, t.images[d], t.stable_at);
}

std::vector<AfPrime> af_primes(const EdgeShift& shift, std::size_t depth) {
  const auto lat = af_ideal_lattice(shift, depth);

  // Candidate witnesses: every rotation of one shortest cycle per nontrivial
  // component. The saturation at time 0 read through E^depth is the survivor set.
  std::vector<std::pair<VertexSet, EventuallyPeriodicPoint>> candidates;
  const auto comps = strongly_connected_components(shift);
  for (std::size_t c = comps.members.size(); c-- > 0;) {
    if (!comps.nontrivial[c]) continue;
    const VertexSet within = VertexSet::from_members(shift.vertex_count(), comps.members[c]);
    Word cycle = shortest_cycle_through(shift, comps.members[c].front(), within);
    for (std::size_t r = 0; r < cycle.size(); ++r) {
      Word rot(cycle.begin() + r, cycle.end());
      rot.insert(rot.end(), cycle.begin(), cycle.begin() + r);
      auto x = EventuallyPeriodicPoint::periodic(shift, rot);
      VertexSet t = saturation_vertices(shift, x, depth);
      for (std::size_t i = 0; i < depth; ++i) t = predecessor_step(shift, t);
      candidates.emplace_back(std::move(t), std::move(x));
    }
  }

  std::vector<AfPrime> out;
  for (const auto& a : lat.elements) {
    if (a.survivors.empty()) continue;
    bool prime = true;
    for (std::size_t i = 0; i < lat.size() && prime; ++i) {
      for (std::size_t j = i; j < lat.size() && prime; ++j) {
        const auto& b = lat.elements[i].survivors;
        const auto& c = lat.elements[j].survivors;
        if (a.survivors.subset_of(b | c) && !a.survivors.subset_of(b) && !a.survivors.subset_of(c)) prime = false;
      }
    }
    if (!prime) continue;
    AfPrime p{a, std::nullopt};
    for (const auto& [t, x] : candidates) {
      if (t == a.survivors) {
        p.witness = x;
        break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace shiftcat
