// shiftcat: ideal catalog of an edge shift from the command line.
//
// Exit codes: 0 success, 1 not applicable or oracle disagreement, 2 usage,
// 3 input error.

#include <shiftcat/error.hpp>
#include <shiftcat/fixtures.hpp>
#include <shiftcat/io.hpp>
#include <shiftcat/oracle.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace shiftcat;

constexpr int kOk = 0;
constexpr int kNotApplicable = 1;
constexpr int kUsage = 2;
constexpr int kInputError = 3;

struct Options {
  std::string format = "json";
  std::string seed_dir;
  std::string graph_path;
  std::size_t oracle_depth = 0;
  std::size_t levels = 0;
  std::size_t depth = 6;
  bool dot = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Syntax, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

EdgeShift load(const Options& opt) { return validate(parse_graph(read_input(opt.graph_path))); }

Format format_of(const Options& opt) { return opt.format == "text" ? Format::Text : Format::Json; }

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotApplicable:
    case Errc::TooLarge:
    case Errc::NotPrime:
    case Errc::TrivialSet:
    case Errc::Internal: return kNotApplicable;
    case Errc::DepthTooSmall: return kUsage;
    default: return kInputError;
  }
}

void seed_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, graph] : fixtures::all()) {
    std::ofstream out(std::filesystem::path(dir) / (name + ".json"), std::ios::binary);
    if (!out) throw Error(Errc::Syntax, "cannot write into '" + dir + "'");
    out << graph_to_json(graph);
  }
}

int cmd_validate(const Options& opt) {
  const EdgeShift s = load(opt);
  if (format_of(opt) == Format::Text) {
    std::cout << "valid: " << s.vertex_count() << " vertices, " << s.edge_count() << " edges\n";
    for (VertexId u = 0; u < s.vertex_count(); ++u) {
      std::cout << "  " << s.vertex_name(u) << ":";
      for (VertexId v = 0; v < s.vertex_count(); ++v) std::cout << " " << s.adjacency(u, v);
      std::cout << "\n";
    }
    return kOk;
  }
  nlohmann::json j = {{"valid", true},
                      {"vertices", s.vertex_count()},
                      {"edges", s.edge_count()},
                      {"adjacency", s.adjacency_matrix()}};
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_sections(const Options& opt, unsigned sections) {
  const EdgeShift s = load(opt);
  ReportOptions ro;
  ro.af_levels = opt.levels;
  if (opt.oracle_depth) ro.oracle_depth = opt.oracle_depth;
  const auto report = make_report(s, ro);
  std::cout << emit_report(report, format_of(opt), sections);
  if (report.oracle)
    for (const auto& c : *report.oracle)
      if (!c.agree) return kNotApplicable;
  return kOk;
}

int cmd_lattice(const Options& opt) {
  if (!opt.dot) return cmd_sections(opt, kLattice | kGauge);
  const EdgeShift s = load(opt);
  std::cout << emit_dot(s, enumerate_invariant_sets(s));
  return kOk;
}

int cmd_afcore(const Options& opt) {
  const EdgeShift s = load(opt);
  if (opt.dot) {
    std::cout << emit_dot(s, bratteli(s, opt.levels));
    return kOk;
  }
  AnalysisReport r;
  r.input = s.presentation();
  r.af = make_af_entry(s, opt.levels);
  std::cout << emit_report(r, format_of(opt), kAf);
  return kOk;
}

int cmd_certify(const Options& opt) {
  const EdgeShift s = load(opt);
  const auto verdict = global_verdict(s);
  std::vector<Certificate> certs;
  if (!verdict.simple) throw Error(Errc::NotApplicable, "the algebra is not simple; see 'quotients' for per-quotient certificates");
  if (!verdict.witness) throw Error(Errc::NotApplicable, "the shift map is injective; no pure infiniteness certificate");
  StrongTransitivityCert st;
  for (VertexId v = 0; v < s.vertex_count(); ++v) st.vertices.push_back(s.vertex_name(v));
  certs.emplace_back(std::move(st));
  certs.emplace_back(*verdict.witness);
  certs.emplace_back(growth_certificate(s));
  certs.emplace_back(trace_certificate(s));
  if (format_of(opt) == Format::Text) {
    std::cout << "purely infinite simple: certified\n";
    for (const auto& c : certs) {
      const auto e = to_entry(c);
      std::cout << "  " << e.kind << ": " << e.statement << "\n";
    }
    return kOk;
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : certs) {
    const auto e = to_entry(c);
    nlohmann::json j = {{"kind", e.kind}, {"statement", e.statement}, {"vertices", e.vertices}};
    if (e.covering_time) j["covering_time"] = *e.covering_time;
    if (e.verified_up_to) j["verified_up_to"] = *e.verified_up_to;
    if (e.holds) j["holds"] = *e.holds;
    if (!e.min_counts.empty()) j["min_counts"] = e.min_counts;
    if (e.threshold_index) j["threshold_index"] = *e.threshold_index;
    if (e.threshold_exponent) j["threshold_exponent"] = *e.threshold_exponent;
    list.push_back(std::move(j));
  }
  nlohmann::json out = {{"theorem", "purely infinite iff not injective, for simple algebras"},
                        {"purely_infinite", true},
                        {"certificates", list}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_oracle(const Options& opt) {
  const EdgeShift s = load(opt);
  const auto checks = cross_check(s, opt.depth);
  bool all = true;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    all = all && c.agree;
    list.push_back({{"name", c.name}, {"agree", c.agree}, {"detail", c.detail}});
  }
  if (format_of(opt) == Format::Text) {
    for (const auto& c : checks) std::cout << (c.agree ? "agree    " : "DISAGREE ") << c.name << ": " << c.detail << "\n";
  } else {
    std::cout << nlohmann::json{{"depth", opt.depth}, {"checks", list}, {"all_agree", all}}.dump(2) << "\n";
  }
  return all ? kOk : kNotApplicable;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Ideal catalog of the C*-algebra of a one-sided edge shift", "shiftcat"};
  app.set_version_flag("--version", "shiftcat 0.1.0");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed-fixtures", opt.seed_dir, "Write the built-in example graphs as JSON into DIR");
  app.require_subcommand(0, 1);

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", opt.graph_path, "Graph file in JSON, or - for stdin")->required();
  };
  auto* validate_cmd = app.add_subcommand("validate", "Check that the graph is essential");
  graph_arg(validate_cmd);
  auto* analyze = app.add_subcommand("analyze", "Full report");
  graph_arg(analyze);
  analyze->add_option("--oracle-depth", opt.oracle_depth, "Also cross-check against the word oracle at this depth")
      ->check(CLI::Range(2, 12));
  analyze->add_option("--levels", opt.levels, "Bratteli levels in the AF section (default |V|+2)");
  auto* lattice = app.add_subcommand("lattice", "Invariant-set lattice and gauge-invariant ideals");
  graph_arg(lattice);
  lattice->add_flag("--dot", opt.dot, "Hasse diagram in DOT");
  auto* prim = app.add_subcommand("prim", "Primitive ideals");
  graph_arg(prim);
  auto* maximal = app.add_subcommand("maximal", "Maximal ideals");
  graph_arg(maximal);
  auto* quotients = app.add_subcommand("quotients", "Simple quotients with certificates");
  graph_arg(quotients);
  auto* afcore = app.add_subcommand("afcore", "Bratteli diagram and AF ideal lattice");
  graph_arg(afcore);
  afcore->add_option("--levels", opt.levels, "Number of level steps")->required()->check(CLI::Range(1, 64));
  afcore->add_flag("--dot", opt.dot, "Diagram in DOT");
  auto* certify = app.add_subcommand("certify", "Pure infiniteness certificates for a simple algebra");
  graph_arg(certify);
  auto* oracle = app.add_subcommand("oracle-check", "Compare every predicate with the word oracle");
  graph_arg(oracle);
  oracle->add_option("--depth", opt.depth, "Word depth")->required()->check(CLI::Range(2, 12));

  if (argc <= 1) {
    std::cerr << app.help();
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!opt.seed_dir.empty()) seed_fixtures(opt.seed_dir);
    if (*validate_cmd) return cmd_validate(opt);
    if (*analyze) return cmd_sections(opt, kAllSections);
    if (*lattice) return cmd_lattice(opt);
    if (*prim) return cmd_sections(opt, kPrimitive);
    if (*maximal) return cmd_sections(opt, kMaximal);
    if (*quotients) return cmd_sections(opt, kQuotients);
    if (*afcore) return cmd_afcore(opt);
    if (*certify) return cmd_certify(opt);
    if (*oracle) return cmd_oracle(opt);
    if (opt.seed_dir.empty()) {
      std::cerr << app.help();
      return kUsage;
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "shiftcat: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
