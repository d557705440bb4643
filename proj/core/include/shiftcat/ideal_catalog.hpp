#pragma once

// Ideal catalog of the groupoid C*-algebra of an edge shift, read off from
// the invariant-set lattice: gauge-invariant, primitive and maximal ideals,
// simple quotients and the global simplicity verdict.

#include <shiftcat/invariant_lattice.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shiftcat {

/// The circle parameter of a periodic primitive family: either the formal
/// parameter w or an exact root of unity exp(2 pi i p/q).
class SpectralParam {
 public:
  static SpectralParam formal() { return SpectralParam(); }
  /// Angle p/q taken modulo 1 and reduced. Throws NotApplicable for q = 0.
  static SpectralParam root_of_unity(long long p, long long q);

  bool is_formal() const noexcept { return formal_; }
  const Rational& angle() const noexcept { return angle_; }
  std::string to_string() const;

  bool operator==(const SpectralParam&) const = default;

 private:
  SpectralParam() = default;
  bool formal_ = true;
  Rational angle_ = 0;
};

enum class IdealKind { GaugeInvariant, PrimAper, PrimPer };

const char* to_string(IdealKind kind) noexcept;

struct IdealDescriptor {
  IdealKind kind;
  /// F for GaugeInvariant, A otherwise.
  InvariantSet set;
  /// Present for PrimPer only.
  std::optional<SpectralParam> w;
  InvariantSet rho;
  bool primitive = false;
  bool maximal = false;
  bool gauge_invariant = false;
};

struct StrongTransitivityCert {
  std::vector<std::string> vertices;
};

struct NonInjectivityCert {
  std::string vertex;
  std::size_t in_degree;
};

struct GrowthCert {
  std::size_t covering_time;
  std::size_t verified_up_to;
  /// min_preimage_count(k) for k = 0..verified_up_to.
  std::vector<BigInt> min_counts;
  bool holds;
};

struct TraceCert {
  /// s_1 .. s_N.
  std::vector<Rational> sequence;
  unsigned threshold_exponent;
  /// First n with s_n < 2^-threshold_exponent.
  std::optional<std::size_t> threshold_index;
};

using Certificate = std::variant<StrongTransitivityCert, NonInjectivityCert, GrowthCert, TraceCert>;

const char* certificate_name(const Certificate& c) noexcept;

enum class QuotientKind { MatrixAlgebra, CrossedProductHomeo, PurelyInfinite };

const char* to_string(QuotientKind kind) noexcept;

struct QuotientReport {
  IdealDescriptor maximal_ideal;
  QuotientKind kind;
  /// n for MatrixAlgebra(n).
  std::optional<std::size_t> matrix_size;
  std::vector<Certificate> certificates;
};

struct GlobalVerdict {
  bool simple;
  bool injective;
  /// Decided only for simple algebras.
  std::optional<bool> purely_infinite;
  std::optional<NonInjectivityCert> witness;
  std::vector<std::string> notes;
};

/// One descriptor per lattice element, larger F (smaller ideal) first.
std::vector<IdealDescriptor> gauge_invariant_ideals(const EdgeShift& shift, const InvariantLattice& lattice);

struct QuotientSplit {
  /// Subgraph of F.
  GraphPresentation quotient;
  /// Vertices outside F, the edges among them and the edges joining them to
  /// F. Generally not essential.
  GraphPresentation ideal_side;
  /// Edges of ideal_side with an endpoint in F.
  std::vector<std::string> open_edges;
};

/// Throws TrivialSet for F empty or F = Y.
QuotientSplit quotient_split(const EdgeShift& shift, const InvariantSet& f);

std::vector<IdealDescriptor> primitive_ideals(const EdgeShift& shift, const InvariantLattice& lattice,
                                              const std::vector<PrimeClass>& primes);

/// Maximal ideals among the primitive ones: PrimAper(F) for infinite minimal
/// F, and PrimPer(A, w) when A is a single cycle with no entrance.
std::vector<IdealDescriptor> maximal_ideals(const EdgeShift& shift, const InvariantLattice& lattice,
                                            const std::vector<PrimeClass>& primes);

std::vector<QuotientReport> simple_quotients(const EdgeShift& shift, const std::vector<IdealDescriptor>& maximal);

GlobalVerdict global_verdict(const EdgeShift& shift);

/// s_n = max over paths e_1..e_n of prod in-degree(dst(e_j))^-1, n = 1..N.
/// Throws DepthTooSmall for N = 0.
std::vector<Rational> trace_obstruction_sequence(const EdgeShift& shift, std::size_t n);

/// Trace sequence long enough to cross 2^-t when the shift is strongly
/// connected and not injective.
TraceCert trace_certificate(const EdgeShift& shift, unsigned t = 10);

/// Throws NotApplicable unless strongly transitive and not injective.
GrowthCert growth_certificate(const EdgeShift& shift, std::size_t k_max = 12);

/// I(F) contained in I(G), decided through the hereditary vertex sets of the
/// complements rather than through F and G.
bool gauge_ideal_contained(const EdgeShift& shift, const InvariantSet& f, const InvariantSet& g);

/// Vertices v such that no infinite path from v stays inside F's carrier.
VertexSet hereditary_set(const EdgeShift& shift, const InvariantSet& f);

struct IdealCatalog {
  InvariantLattice lattice;
  std::vector<PrimeClass> primes;
  std::vector<IdealDescriptor> gauge_invariant;
  std::vector<IdealDescriptor> primitive;
  std::vector<IdealDescriptor> maximal;
  std::vector<QuotientReport> quotients;
  GlobalVerdict verdict;
};

IdealCatalog build_catalog(const EdgeShift& shift);

std::string describe(const EdgeShift& shift, const IdealDescriptor& ideal);
std::string format_set(const EdgeShift& shift, const VertexSet& set);

}  // namespace shiftcat
