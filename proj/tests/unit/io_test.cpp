#include <shiftcat/io.hpp>

#include "test_support.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>

namespace shiftcat {
namespace {

using test::shift_of;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

ParseError parse_failure(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(Errc::Internal, 0, 0, "no error");
}

TEST(ParseGraph, Minimal) {
  const auto g = parse_graph(R"({"vertices": ["v"], "edges": [{"id": "a", "src": "v", "dst": "v"}]})");
  EXPECT_EQ(g.vertices, (std::vector<std::string>{"v"}));
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0], (EdgeDecl{"a", "v", "v"}));
  EXPECT_FALSE(g.from_subshift);
  EXPECT_TRUE(parse_graph(R"({"vertices": ["v"], "edges": [], "subshift": true})").from_subshift);
}

TEST(ParseGraph, PositionedErrors) {
  const auto syntax = parse_failure("{\n  \"vertices\": [\"u\",\n}");
  EXPECT_EQ(syntax.code(), Errc::Syntax);
  EXPECT_EQ(syntax.line(), 3u);

  const auto dup = parse_failure(
      "{\"vertices\": [\"u\"],\n"
      " \"edges\": [{\"id\": \"a\", \"src\": \"u\", \"dst\": \"u\"},\n"
      "           {\"id\": \"a\", \"src\": \"u\", \"dst\": \"u\"}]}");
  EXPECT_EQ(dup.code(), Errc::DuplicateEdge);
  EXPECT_EQ(dup.line(), 3u);
  EXPECT_EQ(dup.column(), 12u);

  const auto unknown = parse_failure(
      "{\"vertices\": [\"u\"],\n"
      " \"edges\": [{\"id\": \"a\", \"src\": \"u\", \"dst\": \"x\"}]}");
  EXPECT_EQ(unknown.code(), Errc::UnknownVertex);
  EXPECT_EQ(unknown.line(), 2u);
  EXPECT_NE(std::string(unknown.what()).find("'x'"), std::string::npos);

  EXPECT_EQ(parse_failure(R"({"vertices": ["u", "u"], "edges": []})").code(), Errc::DuplicateVertex);
  EXPECT_EQ(parse_failure(R"({"vertices": ["u"]})").code(), Errc::Syntax);
  EXPECT_EQ(parse_failure(R"({"vertices": ["u"], "edges": [{"id": "a", "src": "u"}]})").code(), Errc::Syntax);
  EXPECT_EQ(parse_failure(R"([1, 2])").code(), Errc::Syntax);
  EXPECT_EQ(parse_failure(R"({"vertices": [1], "edges": []})").code(), Errc::Syntax);
}

TEST(ParseGraph, RoundTripsFixtures) {
  for (const auto& [name, g] : fixtures::all()) {
    EXPECT_EQ(parse_graph(graph_to_json(g)), g) << name;
    EXPECT_EQ(parse_graph(slurp(std::filesystem::path(SHIFTCAT_FIXTURE_DIR) / (name + ".json"))), g) << name;
  }
}

TEST(Report, RoundTripsThroughJson) {
  for (const auto& s : test::fixture_shifts()) {
    ReportOptions opt;
    opt.oracle_depth = 4;
    const auto report = make_report(s, opt);
    const auto text = emit_report(report, Format::Json);
    EXPECT_EQ(parse_report(text), report);
    EXPECT_EQ(emit_report(parse_report(text), Format::Json), text);
  }
  EXPECT_ERRC(parse_report("{"), Errc::Syntax);
}

TEST(Report, IsDeterministic) {
  for (const auto& s : test::fixture_shifts()) {
    EXPECT_EQ(emit_report(make_report(s), Format::Json), emit_report(make_report(s), Format::Json));
    EXPECT_EQ(emit_report(make_report(s), Format::Text), emit_report(make_report(s), Format::Text));
  }
}

TEST(Report, FullShiftContents) {
  const auto r = make_report(shift_of(fixtures::full_shift(2)));
  EXPECT_TRUE(r.verdict.simple);
  EXPECT_EQ(r.verdict.purely_infinite, true);
  ASSERT_EQ(r.primitive.size(), 1u);
  EXPECT_EQ(r.primitive[0].label, "PrimAper({v})");
  ASSERT_TRUE(r.af.has_value());
  EXPECT_EQ(r.af->levels, 3u);
  EXPECT_EQ(r.af->min_rank_growth, (std::vector<std::string>{"2", "4", "8"}));
  EXPECT_FALSE(r.oracle.has_value());
  ASSERT_EQ(r.quotients.size(), 1u);
  const auto& trace = r.quotients[0].certificates.back();
  EXPECT_EQ(trace.kind, "TraceVanishing");
  EXPECT_EQ(trace.threshold_index, 11u);
  EXPECT_EQ(trace.sequence.front(), (RationalText{"1", "2"}));
}

TEST(Report, SectionsSelectKeys) {
  const auto r = make_report(shift_of(fixtures::golden_mean()));
  const auto only = emit_report(r, Format::Json, kPrimitive);
  EXPECT_NE(only.find("\"primitive\""), std::string::npos);
  EXPECT_EQ(only.find("\"lattice\""), std::string::npos);
  EXPECT_EQ(only.find("\"af_core\""), std::string::npos);
  const auto text = emit_report(r, Format::Text, kVerdict);
  EXPECT_NE(text.find("simple"), std::string::npos);
}

TEST(Dot, ReducibleLattice) {
  const auto s = shift_of(fixtures::reducible());
  const auto dot = emit_dot(s, enumerate_invariant_sets(s));
  EXPECT_EQ(dot.rfind("digraph lattice {", 0), 0u);
  std::size_t nodes = 0;
  std::size_t arrows = 0;
  for (std::size_t at = 0; (at = dot.find("[label=", at)) != std::string::npos; ++at) ++nodes;
  for (std::size_t at = 0; (at = dot.find(" -> ", at)) != std::string::npos; ++at) ++arrows;
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(arrows, 2u);
  EXPECT_NE(dot.find("\"{u,v}\""), std::string::npos);
}

TEST(Dot, Bratteli) {
  const auto s = shift_of(fixtures::golden_mean());
  const auto dot = emit_dot(s, bratteli(s, 2));
  EXPECT_NE(dot.find("l2_0 [label=\"u:3\"]"), std::string::npos);
  EXPECT_NE(dot.find("l0_0 -> l1_1;"), std::string::npos);
}

}  // namespace
}  // namespace shiftcat
