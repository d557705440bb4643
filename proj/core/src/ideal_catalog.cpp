#include <shiftcat/ideal_catalog.hpp>

#include <shiftcat/error.hpp>
#include <shiftcat/graph_util.hpp>

#include <algorithm>

namespace shiftcat {

SpectralParam SpectralParam::root_of_unity(long long p, long long q) {
  if (q == 0) throw Error(Errc::NotApplicable, "root of unity with zero denominator");
  Rational a(p, q);
  // Reduce modulo 1 into [0, 1).
  BigInt fl = boost::multiprecision::numerator(a) / boost::multiprecision::denominator(a);
  a -= Rational(fl);
  if (a < 0) a += 1;
  SpectralParam s;
  s.formal_ = false;
  s.angle_ = a;
  return s;
}

std::string SpectralParam::to_string() const {
  if (formal_) return "w";
  return "exp(2πi·" + boost::multiprecision::numerator(angle_).str() + "/" +
         boost::multiprecision::denominator(angle_).str() + ")";
}

const char* to_string(IdealKind kind) noexcept {
  switch (kind) {
    case IdealKind::GaugeInvariant: return "GaugeInvariant";
    case IdealKind::PrimAper: return "PrimAper";
    case IdealKind::PrimPer: return "PrimPer";
  }
  return "?";
}

const char* to_string(QuotientKind kind) noexcept {
  switch (kind) {
    case QuotientKind::MatrixAlgebra: return "MatrixAlgebra";
    case QuotientKind::CrossedProductHomeo: return "CrossedProductHomeo";
    case QuotientKind::PurelyInfinite: return "PurelyInfinite";
  }
  return "?";
}

const char* certificate_name(const Certificate& c) noexcept {
  switch (c.index()) {
    case 0: return "StrongTransitivity";
    case 1: return "NonInjectivityWitness";
    case 2: return "GrowthBound";
    case 3: return "TraceVanishing";
  }
  return "?";
}

std::string format_set(const EdgeShift& shift, const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (auto v : set.members()) {
    if (!first) out += ",";
    out += shift.vertex_name(v);
    first = false;
  }
  return out + "}";
}

std::string describe(const EdgeShift& shift, const IdealDescriptor& ideal) {
  std::string out = std::string(to_string(ideal.kind)) + "(" + format_set(shift, ideal.set.vertices);
  if (ideal.w) out += ", " + ideal.w->to_string();
  return out + ")";
}

namespace {

bool is_single_cycle(const EdgeShift& shift, const VertexSet& set) {
  if (set.empty()) return false;
  for (auto v : set.members()) {
    std::size_t inside = 0;
    for (auto e : shift.out_edges(v))
      if (set.contains(shift.edge(e).dst)) ++inside;
    if (inside != 1) return false;
  }
  const auto first = set.members().front();
  return forward_reach(shift, VertexSet::from_members(set.universe(), {first}), set) == set;
}

bool is_minimal(const InvariantLattice& lattice, const InvariantSet& a) {
  for (const auto& b : lattice.elements)
    if (!b.empty() && b.vertices != a.vertices && contained_in(b, a)) return false;
  return !a.empty();
}

bool aper_maximal(const EdgeShift& shift, const InvariantLattice& lattice, const InvariantSet& a) {
  return is_minimal(lattice, a) && is_space_infinite(subshift_of(shift, a));
}

bool per_maximal(const EdgeShift& shift, const InvariantSet& a) {
  return is_single_cycle(shift, a.vertices) && is_backward_closed(shift, a.vertices);
}

std::optional<NonInjectivityCert> branching_vertex(const EdgeShift& shift) {
  for (VertexId v = 0; v < shift.vertex_count(); ++v)
    if (shift.in_degree(v) >= 2) return NonInjectivityCert{shift.vertex_name(v), shift.in_degree(v)};
  return std::nullopt;
}

}  // namespace

std::vector<IdealDescriptor> gauge_invariant_ideals(const EdgeShift& shift, const InvariantLattice& lattice) {
  const auto ps = primes(shift, lattice);
  std::vector<IdealDescriptor> out;
  for (std::size_t i = lattice.size(); i-- > 0;) {
    const auto& f = lattice.elements[i];
    IdealDescriptor d{IdealKind::GaugeInvariant, f, std::nullopt, f};
    d.gauge_invariant = true;
    auto p = std::find_if(ps.begin(), ps.end(), [&](const PrimeClass& c) { return c.lattice_index == i; });
    if (p != ps.end() && p->kind == PrimeKind::Aper) {
      d.primitive = true;
      d.maximal = aper_maximal(shift, lattice, f);
    }
    out.push_back(std::move(d));
  }
  return out;
}

QuotientSplit quotient_split(const EdgeShift& shift, const InvariantSet& f) {
  if (f.empty() || f.vertices == shift.all_vertices())
    throw Error(Errc::TrivialSet, "quotient split needs a nonempty proper invariant set");
  QuotientSplit split;
  split.quotient = shift.restrict_to(f.vertices).presentation();
  split.ideal_side.from_subshift = shift.presentation().from_subshift;
  for (VertexId v = 0; v < shift.vertex_count(); ++v)
    if (!f.vertices.contains(v)) split.ideal_side.vertices.push_back(shift.vertex_name(v));
  for (const auto& e : shift.edges()) {
    const bool src_in = f.vertices.contains(e.src);
    const bool dst_in = f.vertices.contains(e.dst);
    if (src_in && dst_in) continue;
    split.ideal_side.edges.push_back({e.name, shift.vertex_name(e.src), shift.vertex_name(e.dst)});
    if (src_in || dst_in) split.open_edges.push_back(e.name);
  }
  return split;
}

std::vector<IdealDescriptor> primitive_ideals(const EdgeShift& shift, const InvariantLattice& lattice,
                                              const std::vector<PrimeClass>& primes) {
  std::vector<IdealDescriptor> out;
  for (const auto& p : primes) {
    IdealDescriptor d{p.kind == PrimeKind::Aper ? IdealKind::PrimAper : IdealKind::PrimPer, p.set, std::nullopt, p.set};
    d.primitive = true;
    if (p.kind == PrimeKind::Aper) {
      d.gauge_invariant = true;
      d.maximal = aper_maximal(shift, lattice, p.set);
    } else {
      d.w = SpectralParam::formal();
      d.maximal = per_maximal(shift, p.set);
    }
    out.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].set == out[j].set) throw Error(Errc::Internal, "primitive catalog lists one prime twice");
  return out;
}

std::vector<IdealDescriptor> maximal_ideals(const EdgeShift& shift, const InvariantLattice& lattice,
                                            const std::vector<PrimeClass>& primes) {
  std::vector<IdealDescriptor> out;
  for (auto& d : primitive_ideals(shift, lattice, primes))
    if (d.maximal) out.push_back(std::move(d));
  return out;
}

std::vector<QuotientReport> simple_quotients(const EdgeShift& shift, const std::vector<IdealDescriptor>& maximal) {
  std::vector<QuotientReport> out;
  for (const auto& d : maximal) {
    if (d.kind == IdealKind::PrimPer) {
      out.push_back({d, QuotientKind::MatrixAlgebra, d.set.vertices.size(), {}});
      continue;
    }
    const EdgeShift sub = subshift_of(shift, d.set);
    // In-degree 1 everywhere on an essential graph leaves only disjoint
    // cycles, which are finite and never reach this branch.
    if (is_injective(sub))
      throw Error(Errc::Internal, "injective restriction on an infinite minimal set: " + describe(shift, d));
    if (!is_strongly_transitive(sub))
      throw Error(Errc::Internal, "minimal set is not strongly transitive: " + describe(shift, d));
    QuotientReport q{d, QuotientKind::PurelyInfinite, std::nullopt, {}};
    StrongTransitivityCert st;
    for (VertexId v = 0; v < sub.vertex_count(); ++v) st.vertices.push_back(sub.vertex_name(v));
    q.certificates.emplace_back(std::move(st));
    q.certificates.emplace_back(*branching_vertex(sub));
    q.certificates.emplace_back(growth_certificate(sub));
    q.certificates.emplace_back(trace_certificate(sub));
    out.push_back(std::move(q));
  }
  return out;
}

GlobalVerdict global_verdict(const EdgeShift& shift) {
  GlobalVerdict v;
  const bool transitive = is_strongly_transitive(shift);
  v.simple = transitive && is_space_infinite(shift);
  v.injective = is_injective(shift);
  v.witness = branching_vertex(shift);
  if (v.simple) v.purely_infinite = !v.injective;
  if (shift.presentation().from_subshift)
    v.notes.push_back(
        "input comes from a subshift presentation; when the groupoid algebra is simple and purely infinite, "
        "so is the algebra of the subshift");
  if (transitive && !v.injective)
    v.notes.push_back(
        "strongly transitive and not injective on a totally disconnected space: approximately divisible "
        "(reported, not computed)");
  return v;
}

std::vector<Rational> trace_obstruction_sequence(const EdgeShift& shift, std::size_t n) {
  if (n == 0) throw Error(Errc::DepthTooSmall, "trace sequence needs N >= 1");
  const std::size_t nv = shift.vertex_count();
  std::vector<Rational> best(nv, Rational(1));
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t step = 1; step <= n; ++step) {
    std::vector<Rational> next(nv, Rational(0));
    for (VertexId v = 0; v < nv; ++v) {
      Rational top = 0;
      for (auto e : shift.in_edges(v)) top = std::max(top, best[shift.edge(e).src]);
      next[v] = top / shift.in_degree(v);
    }
    best = std::move(next);
    out.push_back(*std::max_element(best.begin(), best.end()));
  }
  return out;
}

TraceCert trace_certificate(const EdgeShift& shift, unsigned t) {
  // Every |V| consecutive edges of a strongly connected non-cycle graph end
  // at least once at a vertex of in-degree >= 2, so |V|(t+1) steps suffice.
  const std::size_t n = shift.vertex_count() * (t + 1);
  TraceCert cert{trace_obstruction_sequence(shift, n), t, std::nullopt};
  const Rational bound(BigInt(1), pow2(t));
  for (std::size_t i = 0; i < cert.sequence.size(); ++i) {
    if (cert.sequence[i] < bound) {
      cert.threshold_index = i + 1;
      break;
    }
  }
  return cert;
}

GrowthCert growth_certificate(const EdgeShift& shift, std::size_t k_max) {
  if (is_injective(shift)) throw Error(Errc::NotApplicable, "growth bound needs a non-injective shift");
  if (!is_strongly_transitive(shift)) throw Error(Errc::NotApplicable, "growth bound needs strong transitivity");
  const auto m = covering_time(shift);
  if (!m) throw Error(Errc::Internal, "strongly connected non-injective shift without covering time");
  GrowthCert cert{*m, k_max, {}, true};
  for (std::size_t k = 0; k <= k_max; ++k) {
    cert.min_counts.push_back(min_preimage_count(shift, k));
    if (cert.min_counts.back() < pow2(static_cast<unsigned>(k / *m))) cert.holds = false;
  }
  return cert;
}

VertexSet hereditary_set(const EdgeShift& shift, const InvariantSet& f) {
  const VertexSet& within = f.pre_trim;
  VertexSet on_cycle(shift.vertex_count());
  for (auto v : within.members())
    if (!shortest_cycle_through(shift, v, within).empty()) on_cycle.insert(v);
  VertexSet out(shift.vertex_count());
  for (VertexId v = 0; v < shift.vertex_count(); ++v) {
    if (!within.contains(v)) {
      out.insert(v);
      continue;
    }
    const auto reach = forward_reach(shift, VertexSet::from_members(shift.vertex_count(), {v}), within);
    if ((reach & on_cycle).empty()) out.insert(v);
  }
  return out;
}

bool gauge_ideal_contained(const EdgeShift& shift, const InvariantSet& f, const InvariantSet& g) {
  return hereditary_set(shift, f).subset_of(hereditary_set(shift, g));
}

IdealCatalog build_catalog(const EdgeShift& shift) {
  IdealCatalog c;
  c.lattice = enumerate_invariant_sets(shift);
  c.primes = primes(shift, c.lattice);
  c.gauge_invariant = gauge_invariant_ideals(shift, c.lattice);
  c.primitive = primitive_ideals(shift, c.lattice, c.primes);
  c.maximal = maximal_ideals(shift, c.lattice, c.primes);
  c.quotients = simple_quotients(shift, c.maximal);
  c.verdict = global_verdict(shift);
  return c;
}

}  // namespace shiftcat
