#pragma once

// Graph input, analysis reports and DOT output.
//
// Input schema:
//   {"vertices": ["u", ...],
//    "edges": [{"id": "a", "src": "u", "dst": "u"}, ...],
//    "subshift": false}            (optional)
//
// Reports are plain data so they can be compared and round-tripped; big
// integers are decimal strings and rationals are {"num", "den"} string pairs.

#include <shiftcat/af_core.hpp>
#include <shiftcat/ideal_catalog.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shiftcat {

/// Throws ParseError with 1-based line and column: Syntax for malformed text
/// or missing fields, DuplicateEdge, DuplicateVertex, UnknownVertex.
GraphPresentation parse_graph(std::string_view text);

std::string graph_to_json(const GraphPresentation& graph);

struct RationalText {
  std::string num;
  std::string den;
  bool operator==(const RationalText&) const = default;
};

struct IdealEntry {
  std::string kind;
  std::string label;
  std::vector<std::string> set;
  std::vector<std::string> rho;
  std::optional<std::string> w;
  bool primitive = false;
  bool maximal = false;
  bool gauge_invariant = false;
  bool operator==(const IdealEntry&) const = default;
};

struct CertificateEntry {
  std::string kind;
  std::string statement;
  std::vector<std::string> vertices;
  std::optional<std::size_t> in_degree;
  std::optional<std::size_t> covering_time;
  std::optional<std::size_t> verified_up_to;
  std::vector<std::string> min_counts;
  std::optional<bool> holds;
  std::vector<RationalText> sequence;
  std::optional<std::size_t> threshold_exponent;
  std::optional<std::size_t> threshold_index;
  bool operator==(const CertificateEntry&) const = default;
};

struct QuotientEntry {
  IdealEntry maximal_ideal;
  std::string kind;
  std::optional<std::size_t> matrix_size;
  std::vector<CertificateEntry> certificates;
  bool operator==(const QuotientEntry&) const = default;
};

struct PrimeEntry {
  std::vector<std::string> set;
  std::string kind;
  std::vector<std::string> witness_cycle;
  bool topologically_free = false;
  bool operator==(const PrimeEntry&) const = default;
};

struct LatticeEntry {
  std::vector<std::vector<std::string>> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<PrimeEntry> primes;
  std::vector<std::vector<std::string>> minimal;
  bool strongly_transitive = false;
  std::optional<std::size_t> covering_time;
  bool operator==(const LatticeEntry&) const = default;
};

struct AfPrimeEntry {
  std::vector<std::string> survivors;
  std::vector<std::string> witness_cycle;
  bool operator==(const AfPrimeEntry&) const = default;
};

struct AfEntry {
  std::size_t levels = 0;
  std::vector<std::string> vertices;
  /// ranks[n][v].
  std::vector<std::vector<std::string>> ranks;
  std::vector<std::vector<std::size_t>> multiplicity;
  bool recursion_holds = false;
  std::vector<std::string> min_rank_growth;
  /// Lattice size at depth 1..levels.
  std::vector<std::size_t> ideal_counts;
  std::size_t stabilization_depth = 0;
  std::vector<std::vector<std::string>> stable_survivors;
  std::vector<AfPrimeEntry> stable_primes;
  bool operator==(const AfEntry&) const = default;
};

struct VerdictEntry {
  bool simple = false;
  bool injective = false;
  std::optional<bool> purely_infinite;
  std::optional<std::string> witness_vertex;
  std::vector<std::string> notes;
  bool operator==(const VerdictEntry&) const = default;
};

struct OracleEntry {
  std::string name;
  bool agree = false;
  std::string detail;
  bool operator==(const OracleEntry&) const = default;
};

struct AnalysisReport {
  GraphPresentation input;
  VerdictEntry verdict;
  LatticeEntry lattice;
  std::vector<IdealEntry> gauge_invariant;
  std::vector<IdealEntry> primitive;
  std::vector<IdealEntry> maximal;
  std::vector<QuotientEntry> quotients;
  /// Absent when the graph is too large for the AF enumeration.
  std::optional<AfEntry> af;
  std::optional<std::vector<OracleEntry>> oracle;
  bool operator==(const AnalysisReport&) const = default;
};

struct ReportOptions {
  /// Bratteli levels; 0 means |V| + 2.
  std::size_t af_levels = 0;
  std::optional<std::size_t> oracle_depth;
};

AnalysisReport make_report(const EdgeShift& shift, const ReportOptions& options = {});

IdealEntry to_entry(const EdgeShift& shift, const IdealDescriptor& ideal);
CertificateEntry to_entry(const Certificate& cert);
AfEntry make_af_entry(const EdgeShift& shift, std::size_t levels);

enum class Format { Json, Text };

enum Section : unsigned {
  kInput = 1u << 0,
  kVerdict = 1u << 1,
  kLattice = 1u << 2,
  kGauge = 1u << 3,
  kPrimitive = 1u << 4,
  kMaximal = 1u << 5,
  kQuotients = 1u << 6,
  kAf = 1u << 7,
  kOracle = 1u << 8,
  kAllSections = (1u << 9) - 1,
};

/// Deterministic rendering; JSON keys are sorted.
std::string emit_report(const AnalysisReport& report, Format format, unsigned sections = kAllSections);

/// Inverse of the JSON rendering of a full report. Throws ParseError.
AnalysisReport parse_report(std::string_view json_text);

/// Hasse diagram of the invariant-set lattice.
std::string emit_dot(const EdgeShift& shift, const InvariantLattice& lattice);

/// Levels of the Bratteli diagram with ranks and edge multiplicities.
std::string emit_dot(const EdgeShift& shift, const BratteliDiagram& diagram);

}  // namespace shiftcat
