#include <shiftcat/graph_util.hpp>
#include <shiftcat/ideal_catalog.hpp>

#include "test_support.hpp"

#include <algorithm>

namespace shiftcat {
namespace {

using test::names;
using test::shift_of;

std::vector<std::string> described(const EdgeShift& s, const std::vector<IdealDescriptor>& ideals) {
  std::vector<std::string> out;
  for (const auto& d : ideals) out.push_back(describe(s, d));
  return out;
}

Rational r(long long p, long long q) { return Rational(p, q); }

TEST(SpectralParam, RootsOfUnityReduce) {
  EXPECT_TRUE(SpectralParam::formal().is_formal());
  EXPECT_EQ(SpectralParam::formal().to_string(), "w");
  EXPECT_EQ(SpectralParam::root_of_unity(3, 2).angle(), r(1, 2));
  EXPECT_EQ(SpectralParam::root_of_unity(-1, 4).angle(), r(3, 4));
  EXPECT_EQ(SpectralParam::root_of_unity(2, 4), SpectralParam::root_of_unity(1, 2));
  EXPECT_EQ(SpectralParam::root_of_unity(5, 5).angle(), 0);
  EXPECT_EQ(SpectralParam::root_of_unity(1, 3).to_string(), "exp(2πi·1/3)");
  EXPECT_ERRC(SpectralParam::root_of_unity(1, 0), Errc::NotApplicable);
}

TEST(Catalog, FullShift) {
  const auto s = shift_of(fixtures::full_shift(2));
  const auto c = build_catalog(s);
  EXPECT_EQ(c.gauge_invariant.size(), 2u);
  EXPECT_EQ(described(s, c.primitive), (std::vector<std::string>{"PrimAper({v})"}));
  EXPECT_EQ(described(s, c.maximal), (std::vector<std::string>{"PrimAper({v})"}));
  ASSERT_EQ(c.quotients.size(), 1u);
  EXPECT_EQ(c.quotients[0].kind, QuotientKind::PurelyInfinite);
  ASSERT_EQ(c.quotients[0].certificates.size(), 4u);
  EXPECT_STREQ(certificate_name(c.quotients[0].certificates[0]), "StrongTransitivity");
  EXPECT_STREQ(certificate_name(c.quotients[0].certificates[1]), "NonInjectivityWitness");
  EXPECT_STREQ(certificate_name(c.quotients[0].certificates[2]), "GrowthBound");
  EXPECT_STREQ(certificate_name(c.quotients[0].certificates[3]), "TraceVanishing");
  EXPECT_TRUE(c.verdict.simple);
  EXPECT_FALSE(c.verdict.injective);
  EXPECT_EQ(c.verdict.purely_infinite, true);
  ASSERT_TRUE(c.verdict.witness.has_value());
  EXPECT_EQ(c.verdict.witness->vertex, "v");
  EXPECT_EQ(c.verdict.witness->in_degree, 2u);
}

TEST(Catalog, Cycles) {
  for (std::size_t n : {1, 2, 3, 5}) {
    const auto s = shift_of(fixtures::cycle(n));
    const auto c = build_catalog(s);
    ASSERT_EQ(c.primitive.size(), 1u);
    EXPECT_EQ(c.primitive[0].kind, IdealKind::PrimPer);
    EXPECT_EQ(c.primitive[0].w, SpectralParam::formal());
    EXPECT_TRUE(c.primitive[0].maximal);
    EXPECT_FALSE(c.primitive[0].gauge_invariant);
    ASSERT_EQ(c.quotients.size(), 1u);
    EXPECT_EQ(c.quotients[0].kind, QuotientKind::MatrixAlgebra);
    EXPECT_EQ(c.quotients[0].matrix_size, n);
    EXPECT_FALSE(c.verdict.simple);
    EXPECT_TRUE(c.verdict.injective);
    EXPECT_FALSE(c.verdict.purely_infinite.has_value());
    EXPECT_FALSE(c.verdict.witness.has_value());
  }
}

TEST(Catalog, Reducible) {
  const auto s = shift_of(fixtures::reducible());
  const auto c = build_catalog(s);
  EXPECT_EQ(described(s, c.gauge_invariant),
            (std::vector<std::string>{"GaugeInvariant({u,v})", "GaugeInvariant({u})", "GaugeInvariant({})"}));
  EXPECT_EQ(described(s, c.primitive), (std::vector<std::string>{"PrimPer({u}, w)", "PrimAper({u,v})"}));
  EXPECT_EQ(described(s, c.maximal), (std::vector<std::string>{"PrimPer({u}, w)"}));
  ASSERT_EQ(c.quotients.size(), 1u);
  EXPECT_EQ(c.quotients[0].kind, QuotientKind::MatrixAlgebra);
  EXPECT_EQ(c.quotients[0].matrix_size, 1u);
  EXPECT_FALSE(c.verdict.simple);
}

TEST(Catalog, EnteringEdge) {
  const auto s = shift_of(fixtures::entering_edge());
  const auto c = build_catalog(s);
  EXPECT_EQ(described(s, c.primitive), (std::vector<std::string>{"PrimPer({w}, w)", "PrimPer({w,u,v}, w)"}));
  EXPECT_EQ(described(s, c.maximal), (std::vector<std::string>{"PrimPer({w}, w)"}));
}

TEST(Catalog, DisjointCycles) {
  const auto s = shift_of(fixtures::disjoint_cycles());
  const auto c = build_catalog(s);
  EXPECT_EQ(c.gauge_invariant.size(), 4u);
  EXPECT_EQ(described(s, c.maximal), (std::vector<std::string>{"PrimPer({a}, w)", "PrimPer({b}, w)"}));
  for (const auto& q : c.quotients) EXPECT_EQ(q.matrix_size, 1u);
}

TEST(QuotientSplit, Reducible) {
  const auto s = shift_of(fixtures::reducible());
  const auto lat = enumerate_invariant_sets(s);
  const auto split = quotient_split(s, lat.elements[1]);
  EXPECT_EQ(split.quotient.vertices, (std::vector<std::string>{"u"}));
  ASSERT_EQ(split.quotient.edges.size(), 1u);
  EXPECT_EQ(split.quotient.edges[0].id, "a");
  EXPECT_EQ(split.ideal_side.vertices, (std::vector<std::string>{"v"}));
  EXPECT_EQ(split.ideal_side.edges.size(), 3u);
  EXPECT_EQ(split.open_edges, (std::vector<std::string>{"b"}));
  EXPECT_ERRC(quotient_split(s, lat.elements.front()), Errc::TrivialSet);
  EXPECT_ERRC(quotient_split(s, lat.elements.back()), Errc::TrivialSet);
}

TEST(Trace, GoldenMeanValues) {
  const auto s = shift_of(fixtures::golden_mean());
  EXPECT_EQ(trace_obstruction_sequence(s, 10),
            (std::vector<Rational>{r(1, 1), r(1, 2), r(1, 2), r(1, 4), r(1, 4), r(1, 8), r(1, 8), r(1, 16), r(1, 16),
                                   r(1, 32)}));
  const auto cert = trace_certificate(s);
  EXPECT_EQ(cert.sequence.size(), 22u);
  EXPECT_EQ(cert.threshold_index, 22u);
}

TEST(Trace, FullShiftHalves) {
  const auto s = shift_of(fixtures::full_shift(2));
  const auto seq = trace_obstruction_sequence(s, 12);
  for (std::size_t n = 1; n <= seq.size(); ++n) EXPECT_EQ(seq[n - 1], Rational(BigInt(1), pow2(n)));
  EXPECT_EQ(trace_certificate(s).threshold_index, 11u);
  EXPECT_ERRC(trace_obstruction_sequence(s, 0), Errc::DepthTooSmall);
}

TEST(Trace, CycleIsConstant) {
  const auto s = shift_of(fixtures::cycle(3));
  for (const auto& v : trace_obstruction_sequence(s, 9)) EXPECT_EQ(v, 1);
  EXPECT_FALSE(trace_certificate(s).threshold_index.has_value());
}

TEST(Growth, Examples) {
  const auto f = growth_certificate(shift_of(fixtures::full_shift(2)));
  EXPECT_EQ(f.covering_time, 1u);
  EXPECT_TRUE(f.holds);
  for (std::size_t k = 0; k < f.min_counts.size(); ++k) EXPECT_EQ(f.min_counts[k], pow2(k));
  const auto g = growth_certificate(shift_of(fixtures::golden_mean()));
  EXPECT_EQ(g.covering_time, 2u);
  EXPECT_TRUE(g.holds);
  EXPECT_EQ(g.min_counts.size(), 13u);
  EXPECT_ERRC(growth_certificate(shift_of(fixtures::cycle(2))), Errc::NotApplicable);
  EXPECT_ERRC(growth_certificate(shift_of(fixtures::reducible())), Errc::NotApplicable);
}

TEST(Hereditary, Reducible) {
  const auto s = shift_of(fixtures::reducible());
  const auto lat = enumerate_invariant_sets(s);
  EXPECT_EQ(hereditary_set(s, lat.elements[0]), s.all_vertices());
  EXPECT_EQ(hereditary_set(s, lat.elements[1]), names(s, {"v"}));
  EXPECT_TRUE(hereditary_set(s, lat.elements[2]).empty());
}

// Properties over every essential graph with at most 3 vertices and 5 edges.

TEST(CatalogProperties, IdealOrderReversesLatticeOrder) {
  for (const auto& s : test::small_shifts()) {
    const auto lat = enumerate_invariant_sets(s);
    for (const auto& f : lat.elements)
      for (const auto& g : lat.elements) ASSERT_EQ(gauge_ideal_contained(s, f, g), contained_in(g, f));
  }
}

TEST(CatalogProperties, MaximalAmongPrimitive) {
  for (const auto& s : test::small_shifts()) {
    const auto c = build_catalog(s);
    ASSERT_FALSE(c.maximal.empty());
    for (const auto& m : c.maximal) {
      ASSERT_TRUE(m.primitive);
      const auto hit = std::find_if(c.primitive.begin(), c.primitive.end(), [&](const IdealDescriptor& p) {
        return p.kind == m.kind && p.set == m.set;
      });
      ASSERT_NE(hit, c.primitive.end());
      // A larger primitive ideal would need a strictly smaller closed set.
      for (const auto& p : c.primitive)
        if (p.set != m.set) ASSERT_FALSE(contained_in(p.set, m.set));
    }
    ASSERT_EQ(c.quotients.size(), c.maximal.size());
  }
}

TEST(CatalogProperties, NoCrossedProductQuotient) {
  for (const auto& s : test::small_shifts())
    for (const auto& q : build_catalog(s).quotients) ASSERT_NE(q.kind, QuotientKind::CrossedProductHomeo);
}

TEST(CatalogProperties, SimpleIffTwoIdealsAndAperiodic) {
  for (const auto& s : test::small_shifts()) {
    const auto c = build_catalog(s);
    const bool per = std::any_of(c.primes.begin(), c.primes.end(),
                                 [](const PrimeClass& p) { return p.kind == PrimeKind::Per; });
    ASSERT_EQ(c.verdict.simple, c.gauge_invariant.size() == 2 && !per);
    if (c.verdict.simple) ASSERT_EQ(c.verdict.purely_infinite, !c.verdict.injective);
  }
}

TEST(CatalogProperties, TraceSequence) {
  for (const auto& s : test::small_shifts()) {
    const auto seq = trace_obstruction_sequence(s, 12);
    for (std::size_t i = 1; i < seq.size(); ++i) ASSERT_LE(seq[i], seq[i - 1]);
    for (std::size_t i = 0; i < seq.size(); ++i)
      for (std::size_t j = 0; i + j + 1 < seq.size(); ++j) ASSERT_LE(seq[i + j + 1], seq[i] * seq[j]);
    // A loop at an in-degree-1 vertex keeps s_n at 1 even when the map is not injective.
    if (is_injective(s))
      ASSERT_TRUE(std::all_of(seq.begin(), seq.end(), [](const Rational& v) { return v == 1; }));
    if (is_strongly_connected(s) && !is_injective(s)) ASSERT_TRUE(trace_certificate(s).threshold_index.has_value());
  }
}

TEST(CatalogProperties, GrowthBoundOnStronglyConnectedGraphs) {
  for (const auto& s : test::small_shifts()) {
    if (!is_strongly_connected(s) || is_injective(s)) {
      EXPECT_ERRC(growth_certificate(s), Errc::NotApplicable);
      continue;
    }
    ASSERT_TRUE(growth_certificate(s).holds);
  }
}

}  // namespace
}  // namespace shiftcat
