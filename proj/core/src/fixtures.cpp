#include <shiftcat/fixtures.hpp>

#include <shiftcat/error.hpp>

namespace shiftcat::fixtures {

GraphPresentation full_shift(std::size_t k) {
  if (k == 0 || k > 26) throw Error(Errc::EmptyGraph, "full shift needs 1..26 symbols");
  GraphPresentation g{{"v"}, {}, false};
  for (std::size_t i = 0; i < k; ++i) g.edges.push_back({std::string(1, static_cast<char>('a' + i)), "v", "v"});
  return g;
}

GraphPresentation golden_mean() {
  return {{"u", "v"}, {{"a", "u", "u"}, {"b", "u", "v"}, {"c", "v", "u"}}, false};
}

GraphPresentation cycle(std::size_t n) {
  if (n == 0) throw Error(Errc::EmptyGraph, "cycle needs at least one vertex");
  GraphPresentation g;
  for (std::size_t i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    g.edges.push_back({"e" + std::to_string(i), g.vertices[i], g.vertices[(i + 1) % n]});
  return g;
}

GraphPresentation reducible() {
  return {{"u", "v"}, {{"a", "u", "u"}, {"b", "u", "v"}, {"c", "v", "v"}, {"d", "v", "v"}}, false};
}

GraphPresentation entering_edge() {
  return {{"w", "u", "v"}, {{"a", "w", "w"}, {"b", "w", "u"}, {"c", "u", "v"}, {"d", "v", "u"}}, false};
}

GraphPresentation disjoint_cycles() {
  return {{"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}}, false};
}

GraphPresentation connected_cycles() {
  return {{"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}, {"z", "a", "b"}}, false};
}

std::vector<std::pair<std::string, GraphPresentation>> all() {
  return {
      {"full2", full_shift(2)},
      {"full3", full_shift(3)},
      {"golden_mean", golden_mean()},
      {"cycle1", cycle(1)},
      {"cycle2", cycle(2)},
      {"cycle3", cycle(3)},
      {"cycle5", cycle(5)},
      {"reducible", reducible()},
      {"entering_edge", entering_edge()},
      {"disjoint_cycles", disjoint_cycles()},
      {"connected_cycles", connected_cycles()},
  };
}

}  // namespace shiftcat::fixtures
