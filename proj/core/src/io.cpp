#include <shiftcat/io.hpp>

#include <shiftcat/error.hpp>
#include <shiftcat/graph_util.hpp>
#include <shiftcat/oracle.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace shiftcat {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Start offsets of the top-level "vertices" array and of each object inside
// the top-level "edges" array. nlohmann drops positions after parsing, so a
// small scanner recovers them for semantic errors.
struct Positions {
  std::size_t vertices = 0;
  std::vector<std::size_t> edges;
};

Positions scan_positions(std::string_view text) {
  Positions pos;
  std::vector<char> stack;
  std::string last_string;
  std::string top_key;
  bool in_edges = false;
  std::size_t edges_depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
        if (i < text.size()) s += text[i];
      }
      last_string = std::move(s);
      continue;
    }
    if (c == ':' && stack.size() == 1) top_key = last_string;
    if (c == '{' || c == '[') {
      if (stack.size() == 1 && c == '[' && top_key == "vertices") pos.vertices = i;
      if (stack.size() == 1 && c == '[' && top_key == "edges") {
        in_edges = true;
        edges_depth = stack.size() + 1;
      } else if (in_edges && c == '{' && stack.size() == edges_depth) {
        pos.edges.push_back(i);
      }
      stack.push_back(c);
    } else if (c == '}' || c == ']') {
      if (!stack.empty()) stack.pop_back();
      if (in_edges && stack.size() < edges_depth) in_edges = false;
    }
  }
  return pos;
}

[[noreturn]] void fail_at(Errc code, std::string_view text, std::size_t offset, const std::string& what) {
  const auto [line, col] = line_column(text, offset);
  throw ParseError(code, line, col, what);
}

std::vector<std::string> names_of(const EdgeShift& shift, const VertexSet& set) {
  std::vector<std::string> out;
  for (auto v : set.members()) out.push_back(shift.vertex_name(v));
  return out;
}

std::vector<std::string> edge_names(const EdgeShift& shift, const Word& w) {
  std::vector<std::string> out;
  for (auto e : w) out.push_back(shift.edge(e).name);
  return out;
}

RationalText to_text(const Rational& r) {
  return {boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()};
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

constexpr const char* kTagVerdict =
    "simple iff the space is infinite and the map strongly transitive; purely infinite iff not injective";
constexpr const char* kTagLattice = "gauge-invariant ideals correspond to closed totally invariant sets";
constexpr const char* kTagPrimitive =
    "primitive ideals: one kernel per aperiodic prime, one circle family per periodic prime";
constexpr const char* kTagMaximal = "maximal ideals come from infinite minimal sets and finite orbits";
constexpr const char* kTagQuotients = "simple quotients are full matrix algebras or purely infinite";
constexpr const char* kTagAf = "the AF core is the inductive limit of the fixed-point tower";
constexpr const char* kTagOracle = "depth-bounded word-level cross-check";
constexpr const char* kTagInput = "input presentation";

}  // namespace

GraphPresentation parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto col = what.find("column");
    const auto colon = col == std::string::npos ? std::string::npos : what.find(": ", col);
    fail_at(Errc::Syntax, text, offset, colon == std::string::npos ? what : what.substr(colon + 2));
  }
  const Positions pos = scan_positions(text);
  if (!doc.is_object()) fail_at(Errc::Syntax, text, 0, "top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    fail_at(Errc::Syntax, text, 0, "missing 'vertices' array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) fail_at(Errc::Syntax, text, 0, "missing 'edges' array");

  GraphPresentation g;
  std::set<std::string> vertex_names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) fail_at(Errc::Syntax, text, pos.vertices, "vertex names must be strings");
    const auto name = v.get<std::string>();
    if (!vertex_names.insert(name).second)
      fail_at(Errc::DuplicateVertex, text, pos.vertices, "vertex '" + name + "' declared twice");
    g.vertices.push_back(name);
  }
  std::set<std::string> edge_ids;
  const auto& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::size_t at = i < pos.edges.size() ? pos.edges[i] : 0;
    const auto& e = edges[i];
    if (!e.is_object()) fail_at(Errc::Syntax, text, at, "edge " + std::to_string(i) + " is not an object");
    EdgeDecl d;
    for (const char* key : {"id", "src", "dst"}) {
      if (!e.contains(key)) fail_at(Errc::Syntax, text, at, "edge " + std::to_string(i) + " is missing '" + key + "'");
      if (!e[key].is_string()) fail_at(Errc::Syntax, text, at, std::string("edge field '") + key + "' must be a string");
    }
    d.id = e["id"].get<std::string>();
    d.src = e["src"].get<std::string>();
    d.dst = e["dst"].get<std::string>();
    if (!edge_ids.insert(d.id).second) fail_at(Errc::DuplicateEdge, text, at, "edge id '" + d.id + "' used twice");
    for (const auto& end : {d.src, d.dst})
      if (!vertex_names.count(end))
        fail_at(Errc::UnknownVertex, text, at, "edge '" + d.id + "' refers to unknown vertex '" + end + "'");
    g.edges.push_back(std::move(d));
  }
  if (doc.contains("subshift")) {
    if (!doc["subshift"].is_boolean()) fail_at(Errc::Syntax, text, 0, "'subshift' must be a boolean");
    g.from_subshift = doc["subshift"].get<bool>();
  }
  return g;
}

namespace {

json graph_json(const GraphPresentation& g) {
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
  json j = {{"vertices", g.vertices}, {"edges", edges}};
  if (g.from_subshift) j["subshift"] = true;
  return j;
}

GraphPresentation graph_from(const json& j) {
  GraphPresentation g;
  g.vertices = j.at("vertices").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("id").get<std::string>(), e.at("src").get<std::string>(), e.at("dst").get<std::string>()});
  g.from_subshift = j.value("subshift", false);
  return g;
}

}  // namespace

std::string graph_to_json(const GraphPresentation& graph) { return graph_json(graph).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Report construction

IdealEntry to_entry(const EdgeShift& shift, const IdealDescriptor& d) {
  IdealEntry e;
  e.kind = to_string(d.kind);
  e.label = describe(shift, d);
  e.set = names_of(shift, d.set.vertices);
  e.rho = names_of(shift, d.rho.vertices);
  if (d.w) e.w = d.w->to_string();
  e.primitive = d.primitive;
  e.maximal = d.maximal;
  e.gauge_invariant = d.gauge_invariant;
  return e;
}

CertificateEntry to_entry(const Certificate& cert) {
  CertificateEntry e;
  e.kind = certificate_name(cert);
  if (const auto* st = std::get_if<StrongTransitivityCert>(&cert)) {
    e.statement = "the carrier graph is strongly connected";
    e.vertices = st->vertices;
  } else if (const auto* ni = std::get_if<NonInjectivityCert>(&cert)) {
    e.statement = "a vertex with in-degree at least 2 gives points with several preimages";
    e.vertices = {ni->vertex};
    e.in_degree = ni->in_degree;
  } else if (const auto* g = std::get_if<GrowthCert>(&cert)) {
    e.statement = "min_z #preimages_k(z) >= 2^floor(k/m)";
    e.covering_time = g->covering_time;
    e.verified_up_to = g->verified_up_to;
    for (const auto& c : g->min_counts) e.min_counts.push_back(to_string(c));
    e.holds = g->holds;
  } else if (const auto* t = std::get_if<TraceCert>(&cert)) {
    e.statement = "s_n = max over paths of the product of inverse in-degrees tends to 0";
    for (const auto& r : t->sequence) e.sequence.push_back(to_text(r));
    e.threshold_exponent = t->threshold_exponent;
    e.threshold_index = t->threshold_index;
  }
  return e;
}

AfEntry make_af_entry(const EdgeShift& shift, std::size_t levels) {
  AfEntry a;
  a.levels = levels;
  for (VertexId v = 0; v < shift.vertex_count(); ++v) a.vertices.push_back(shift.vertex_name(v));
  const auto diagram = bratteli(shift, levels);
  for (const auto& lvl : diagram.levels) {
    std::vector<std::string> row;
    for (const auto& r : lvl.ranks) row.push_back(to_string(r));
    a.ranks.push_back(std::move(row));
  }
  a.multiplicity = diagram.multiplicity;
  a.recursion_holds = diagram.recursion_holds();
  for (const auto& m : min_rank_growth(shift, levels)) a.min_rank_growth.push_back(to_string(m));
  for (std::size_t d = 1; d <= levels; ++d) a.ideal_counts.push_back(af_ideal_lattice(shift, d).size());
  const auto stable = af_stable_lattice(shift);
  a.stabilization_depth = stable.stabilization_depth;
  for (const auto& e : stable.elements) a.stable_survivors.push_back(names_of(shift, e.survivors));
  for (const auto& p : af_primes(shift, stable.depth)) {
    AfPrimeEntry pe{names_of(shift, p.ideal.survivors), {}};
    if (p.witness) pe.witness_cycle = edge_names(shift, p.witness->cycle());
    a.stable_primes.push_back(std::move(pe));
  }
  return a;
}

AnalysisReport make_report(const EdgeShift& shift, const ReportOptions& options) {
  AnalysisReport r;
  r.input = shift.presentation();
  const auto cat = build_catalog(shift);

  r.verdict.simple = cat.verdict.simple;
  r.verdict.injective = cat.verdict.injective;
  r.verdict.purely_infinite = cat.verdict.purely_infinite;
  if (cat.verdict.witness) r.verdict.witness_vertex = cat.verdict.witness->vertex;
  r.verdict.notes = cat.verdict.notes;

  for (const auto& e : cat.lattice.elements) r.lattice.elements.push_back(names_of(shift, e.vertices));
  r.lattice.covers = cat.lattice.covers;
  for (const auto& p : cat.primes)
    r.lattice.primes.push_back({names_of(shift, p.set.vertices), to_string(p.kind), edge_names(shift, p.witness.cycle()),
                                is_topologically_free(shift, cat.lattice, p.set)});
  for (const auto& m : minimal_sets(cat.lattice)) r.lattice.minimal.push_back(names_of(shift, m.vertices));
  r.lattice.strongly_transitive = is_strongly_transitive(shift);
  r.lattice.covering_time = covering_time(shift);

  for (const auto& d : cat.gauge_invariant) r.gauge_invariant.push_back(to_entry(shift, d));
  for (const auto& d : cat.primitive) r.primitive.push_back(to_entry(shift, d));
  for (const auto& d : cat.maximal) r.maximal.push_back(to_entry(shift, d));
  for (const auto& q : cat.quotients) {
    QuotientEntry qe{to_entry(shift, q.maximal_ideal), to_string(q.kind), q.matrix_size, {}};
    for (const auto& c : q.certificates) qe.certificates.push_back(to_entry(c));
    r.quotients.push_back(std::move(qe));
  }

  const std::size_t levels = options.af_levels ? options.af_levels : shift.vertex_count() + 2;
  try {
    r.af = make_af_entry(shift, levels);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
  }

  if (options.oracle_depth) {
    std::vector<OracleEntry> checks;
    for (auto& c : cross_check(shift, *options.oracle_depth)) checks.push_back({c.name, c.agree, c.detail});
    r.oracle = std::move(checks);
  }
  return r;
}

// ---------------------------------------------------------------------------
// JSON

void to_json(json& j, const RationalText& r) { j = {{"num", r.num}, {"den", r.den}}; }
void from_json(const json& j, RationalText& r) {
  r.num = j.at("num").get<std::string>();
  r.den = j.at("den").get<std::string>();
}

void to_json(json& j, const IdealEntry& e) {
  j = {{"kind", e.kind},           {"label", e.label},         {"set", e.set},
       {"rho", e.rho},             {"w", opt(e.w)},            {"primitive", e.primitive},
       {"maximal", e.maximal},     {"gauge_invariant", e.gauge_invariant}};
}
void from_json(const json& j, IdealEntry& e) {
  e.kind = j.at("kind").get<std::string>();
  e.label = j.at("label").get<std::string>();
  e.set = j.at("set").get<std::vector<std::string>>();
  e.rho = j.at("rho").get<std::vector<std::string>>();
  e.w = get_opt<std::string>(j, "w");
  e.primitive = j.at("primitive").get<bool>();
  e.maximal = j.at("maximal").get<bool>();
  e.gauge_invariant = j.at("gauge_invariant").get<bool>();
}

void to_json(json& j, const CertificateEntry& c) {
  j = {{"kind", c.kind},
       {"statement", c.statement},
       {"vertices", c.vertices},
       {"in_degree", opt(c.in_degree)},
       {"covering_time", opt(c.covering_time)},
       {"verified_up_to", opt(c.verified_up_to)},
       {"min_counts", c.min_counts},
       {"holds", opt(c.holds)},
       {"sequence", c.sequence},
       {"threshold_exponent", opt(c.threshold_exponent)},
       {"threshold_index", opt(c.threshold_index)}};
}
void from_json(const json& j, CertificateEntry& c) {
  c.kind = j.at("kind").get<std::string>();
  c.statement = j.at("statement").get<std::string>();
  c.vertices = j.at("vertices").get<std::vector<std::string>>();
  c.in_degree = get_opt<std::size_t>(j, "in_degree");
  c.covering_time = get_opt<std::size_t>(j, "covering_time");
  c.verified_up_to = get_opt<std::size_t>(j, "verified_up_to");
  c.min_counts = j.at("min_counts").get<std::vector<std::string>>();
  c.holds = get_opt<bool>(j, "holds");
  c.sequence = j.at("sequence").get<std::vector<RationalText>>();
  c.threshold_exponent = get_opt<std::size_t>(j, "threshold_exponent");
  c.threshold_index = get_opt<std::size_t>(j, "threshold_index");
}

void to_json(json& j, const QuotientEntry& q) {
  j = {{"maximal_ideal", q.maximal_ideal},
       {"kind", q.kind},
       {"matrix_size", opt(q.matrix_size)},
       {"certificates", q.certificates}};
}
void from_json(const json& j, QuotientEntry& q) {
  q.maximal_ideal = j.at("maximal_ideal").get<IdealEntry>();
  q.kind = j.at("kind").get<std::string>();
  q.matrix_size = get_opt<std::size_t>(j, "matrix_size");
  q.certificates = j.at("certificates").get<std::vector<CertificateEntry>>();
}

void to_json(json& j, const PrimeEntry& p) {
  j = {{"set", p.set}, {"kind", p.kind}, {"witness_cycle", p.witness_cycle}, {"topologically_free", p.topologically_free}};
}
void from_json(const json& j, PrimeEntry& p) {
  p.set = j.at("set").get<std::vector<std::string>>();
  p.kind = j.at("kind").get<std::string>();
  p.witness_cycle = j.at("witness_cycle").get<std::vector<std::string>>();
  p.topologically_free = j.at("topologically_free").get<bool>();
}

void to_json(json& j, const AfPrimeEntry& p) { j = {{"survivors", p.survivors}, {"witness_cycle", p.witness_cycle}}; }
void from_json(const json& j, AfPrimeEntry& p) {
  p.survivors = j.at("survivors").get<std::vector<std::string>>();
  p.witness_cycle = j.at("witness_cycle").get<std::vector<std::string>>();
}

void to_json(json& j, const OracleEntry& o) { j = {{"name", o.name}, {"agree", o.agree}, {"detail", o.detail}}; }
void from_json(const json& j, OracleEntry& o) {
  o.name = j.at("name").get<std::string>();
  o.agree = j.at("agree").get<bool>();
  o.detail = j.at("detail").get<std::string>();
}

namespace {

json section_json(const AnalysisReport& r, Section s) {
  switch (s) {
    case kInput: return {{"theorem", kTagInput}, {"graph", graph_json(r.input)}};
    case kVerdict:
      return {{"theorem", kTagVerdict},
              {"simple", r.verdict.simple},
              {"injective", r.verdict.injective},
              {"purely_infinite", opt(r.verdict.purely_infinite)},
              {"witness_vertex", opt(r.verdict.witness_vertex)},
              {"notes", r.verdict.notes}};
    case kLattice: {
      json covers = json::array();
      for (const auto& [a, b] : r.lattice.covers) covers.push_back({a, b});
      return {{"theorem", kTagLattice},
              {"elements", r.lattice.elements},
              {"covers", covers},
              {"primes", r.lattice.primes},
              {"minimal", r.lattice.minimal},
              {"strongly_transitive", r.lattice.strongly_transitive},
              {"covering_time", opt(r.lattice.covering_time)}};
    }
    case kGauge: return {{"theorem", kTagLattice}, {"ideals", r.gauge_invariant}};
    case kPrimitive: return {{"theorem", kTagPrimitive}, {"ideals", r.primitive}};
    case kMaximal: return {{"theorem", kTagMaximal}, {"ideals", r.maximal}};
    case kQuotients: return {{"theorem", kTagQuotients}, {"quotients", r.quotients}};
    case kAf: {
      if (!r.af) return {{"theorem", kTagAf}, {"available", false}};
      const auto& a = *r.af;
      return {{"theorem", kTagAf},
              {"available", true},
              {"levels", a.levels},
              {"vertices", a.vertices},
              {"ranks", a.ranks},
              {"multiplicity", a.multiplicity},
              {"recursion_holds", a.recursion_holds},
              {"min_rank_growth", a.min_rank_growth},
              {"ideal_counts", a.ideal_counts},
              {"stabilization_depth", a.stabilization_depth},
              {"stable_survivors", a.stable_survivors},
              {"stable_primes", a.stable_primes}};
    }
    case kOracle:
      if (!r.oracle) return nullptr;
      return {{"theorem", kTagOracle}, {"checks", *r.oracle}};
    default: return nullptr;
  }
}

const std::pair<Section, const char*> kSectionKeys[] = {
    {kInput, "input"},         {kVerdict, "verdict"},     {kLattice, "lattice"},
    {kGauge, "gauge_invariant"}, {kPrimitive, "primitive"}, {kMaximal, "maximal"},
    {kQuotients, "quotients"}, {kAf, "af_core"},          {kOracle, "oracle"},
};

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string braces(const std::vector<std::string>& xs) { return "{" + join(xs) + "}"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void text_section(std::ostringstream& os, const AnalysisReport& r, Section s) {
  switch (s) {
    case kInput:
      os << "input: " << r.input.vertices.size() << " vertices, " << r.input.edges.size() << " edges\n";
      break;
    case kVerdict:
      os << "verdict:\n  simple: " << yes_no(r.verdict.simple) << "\n  injective: " << yes_no(r.verdict.injective)
         << "\n  purely infinite: "
         << (r.verdict.purely_infinite ? yes_no(*r.verdict.purely_infinite) : "n/a") << "\n";
      if (r.verdict.witness_vertex) os << "  branching vertex: " << *r.verdict.witness_vertex << "\n";
      for (const auto& n : r.verdict.notes) os << "  note: " << n << "\n";
      break;
    case kLattice:
      os << "invariant sets (" << r.lattice.elements.size() << "):\n";
      for (std::size_t i = 0; i < r.lattice.elements.size(); ++i)
        os << "  [" << i << "] " << braces(r.lattice.elements[i]) << "\n";
      for (const auto& [a, b] : r.lattice.covers) os << "  cover " << a << " < " << b << "\n";
      for (const auto& p : r.lattice.primes)
        os << "  prime " << braces(p.set) << " " << p.kind << " witness (" << join(p.witness_cycle, " ")
           << ")^inf\n";
      for (const auto& m : r.lattice.minimal) os << "  minimal " << braces(m) << "\n";
      os << "  strongly transitive: " << yes_no(r.lattice.strongly_transitive) << "\n  covering time: "
         << (r.lattice.covering_time ? std::to_string(*r.lattice.covering_time) : "none") << "\n";
      break;
    case kGauge:
    case kPrimitive:
    case kMaximal: {
      const auto& list = s == kGauge ? r.gauge_invariant : s == kPrimitive ? r.primitive : r.maximal;
      os << (s == kGauge ? "gauge-invariant ideals" : s == kPrimitive ? "primitive ideals" : "maximal ideals") << " ("
         << list.size() << "):\n";
      for (const auto& e : list) {
        os << "  " << e.label << "  rho=" << braces(e.rho);
        if (e.primitive) os << " primitive";
        if (e.maximal) os << " maximal";
        if (e.gauge_invariant) os << " gauge-invariant";
        os << "\n";
      }
      break;
    }
    case kQuotients:
      os << "simple quotients (" << r.quotients.size() << "):\n";
      for (const auto& q : r.quotients) {
        os << "  " << q.maximal_ideal.label << " -> " << q.kind;
        if (q.matrix_size) os << "(" << *q.matrix_size << ")";
        os << "\n";
        for (const auto& c : q.certificates) {
          os << "    " << c.kind << ": " << c.statement;
          if (c.covering_time) os << " [m=" << *c.covering_time << ", k<=" << *c.verified_up_to << "]";
          if (c.threshold_index)
            os << " [s_" << *c.threshold_index << " < 2^-" << *c.threshold_exponent << "]";
          if (!c.vertices.empty()) os << " " << braces(c.vertices);
          os << "\n";
        }
      }
      break;
    case kAf:
      if (!r.af) {
        os << "af core: not available (graph too large)\n";
        break;
      }
      os << "af core (" << r.af->levels << " levels):\n";
      for (std::size_t n = 0; n < r.af->ranks.size(); ++n) {
        os << "  level " << n << ":";
        for (std::size_t v = 0; v < r.af->vertices.size(); ++v)
          os << " " << r.af->vertices[v] << "=" << r.af->ranks[n][v];
        os << "\n";
      }
      os << "  rank recursion: " << yes_no(r.af->recursion_holds) << "\n  min rank growth: "
         << join(r.af->min_rank_growth, " ") << "\n  ideal counts by depth:";
      for (auto c : r.af->ideal_counts) os << " " << c;
      os << "\n  stabilization depth: " << r.af->stabilization_depth << "\n";
      for (const auto& s2 : r.af->stable_survivors) os << "  stable " << braces(s2) << "\n";
      for (const auto& p : r.af->stable_primes)
        os << "  prime " << braces(p.survivors) << " witness ("
           << (p.witness_cycle.empty() ? "none" : join(p.witness_cycle, " ")) << ")\n";
      break;
    case kOracle:
      if (!r.oracle) break;
      os << "oracle cross-check:\n";
      for (const auto& c : *r.oracle) os << "  " << (c.agree ? "agree" : "DISAGREE") << " " << c.name << ": " << c.detail << "\n";
      break;
    default: break;
  }
}

}  // namespace

std::string emit_report(const AnalysisReport& report, Format format, unsigned sections) {
  if (format == Format::Json) {
    json j = json::object();
    for (const auto& [s, key] : kSectionKeys) {
      if (!(sections & s)) continue;
      json part = section_json(report, s);
      if (!part.is_null()) j[key] = std::move(part);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& [s, key] : kSectionKeys)
    if (sections & s) text_section(os, report, s);
  return os.str();
}

AnalysisReport parse_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail_at(Errc::Syntax, text, e.byte > 0 ? e.byte - 1 : 0, "report is not valid JSON");
  }
  try {
    AnalysisReport r;
    r.input = graph_from(j.at("input").at("graph"));
    const auto& v = j.at("verdict");
    r.verdict.simple = v.at("simple").get<bool>();
    r.verdict.injective = v.at("injective").get<bool>();
    r.verdict.purely_infinite = get_opt<bool>(v, "purely_infinite");
    r.verdict.witness_vertex = get_opt<std::string>(v, "witness_vertex");
    r.verdict.notes = v.at("notes").get<std::vector<std::string>>();
    const auto& l = j.at("lattice");
    r.lattice.elements = l.at("elements").get<std::vector<std::vector<std::string>>>();
    for (const auto& c : l.at("covers")) r.lattice.covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    r.lattice.primes = l.at("primes").get<std::vector<PrimeEntry>>();
    r.lattice.minimal = l.at("minimal").get<std::vector<std::vector<std::string>>>();
    r.lattice.strongly_transitive = l.at("strongly_transitive").get<bool>();
    r.lattice.covering_time = get_opt<std::size_t>(l, "covering_time");
    r.gauge_invariant = j.at("gauge_invariant").at("ideals").get<std::vector<IdealEntry>>();
    r.primitive = j.at("primitive").at("ideals").get<std::vector<IdealEntry>>();
    r.maximal = j.at("maximal").at("ideals").get<std::vector<IdealEntry>>();
    r.quotients = j.at("quotients").at("quotients").get<std::vector<QuotientEntry>>();
    const auto& a = j.at("af_core");
    if (a.at("available").get<bool>()) {
      AfEntry af;
      af.levels = a.at("levels").get<std::size_t>();
      af.vertices = a.at("vertices").get<std::vector<std::string>>();
      af.ranks = a.at("ranks").get<std::vector<std::vector<std::string>>>();
      af.multiplicity = a.at("multiplicity").get<std::vector<std::vector<std::size_t>>>();
      af.recursion_holds = a.at("recursion_holds").get<bool>();
      af.min_rank_growth = a.at("min_rank_growth").get<std::vector<std::string>>();
      af.ideal_counts = a.at("ideal_counts").get<std::vector<std::size_t>>();
      af.stabilization_depth = a.at("stabilization_depth").get<std::size_t>();
      af.stable_survivors = a.at("stable_survivors").get<std::vector<std::vector<std::string>>>();
      af.stable_primes = a.at("stable_primes").get<std::vector<AfPrimeEntry>>();
      r.af = std::move(af);
    }
    if (j.contains("oracle")) r.oracle = j.at("oracle").at("checks").get<std::vector<OracleEntry>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(Errc::Syntax, 1, 1, std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// DOT

std::string emit_dot(const EdgeShift& shift, const InvariantLattice& lattice) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    os << "  n" << i << " [label=\"" << format_set(shift, lattice.elements[i].vertices) << "\"];\n";
  for (const auto& [a, b] : lattice.covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_dot(const EdgeShift& shift, const BratteliDiagram& diagram) {
  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (const auto& lvl : diagram.levels) {
    os << "  subgraph level" << lvl.level << " {\n    rank=same;\n";
    for (VertexId v = 0; v < lvl.ranks.size(); ++v)
      os << "    l" << lvl.level << "_" << v << " [label=\"" << shift.vertex_name(v) << ":" << to_string(lvl.ranks[v])
         << "\"];\n";
    os << "  }\n";
  }
  for (std::size_t n = 0; n + 1 < diagram.levels.size(); ++n)
    for (std::size_t u = 0; u < diagram.multiplicity.size(); ++u)
      for (std::size_t v = 0; v < diagram.multiplicity[u].size(); ++v) {
        const auto m = diagram.multiplicity[u][v];
        if (m == 0) continue;
        os << "  l" << n << "_" << u << " -> l" << n + 1 << "_" << v;
        if (m > 1) os << " [label=\"" << m << "\"]";
        os << ";\n";
      }
  os << "}\n";
  return os.str();
}

}  // namespace shiftcat
