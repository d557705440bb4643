#pragma once

#include <shiftcat/error.hpp>
#include <shiftcat/fixtures.hpp>
#include <shiftcat/oracle.hpp>

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace shiftcat::test {

inline EdgeShift shift_of(const GraphPresentation& g) { return validate(g); }

inline const std::vector<EdgeShift>& small_shifts() {
  static const std::vector<EdgeShift> all = [] {
    std::vector<EdgeShift> out;
    for (const auto& g : small_essential_graphs(3, 5)) out.push_back(validate(g));
    return out;
  }();
  return all;
}

inline std::vector<EdgeShift> fixture_shifts() {
  std::vector<EdgeShift> out;
  for (const auto& [name, g] : fixtures::all()) out.push_back(validate(g));
  return out;
}

inline VertexSet names(const EdgeShift& s, std::initializer_list<const char*> vs) {
  VertexSet out(s.vertex_count());
  for (const auto* v : vs) out.insert(*s.find_vertex(v));
  return out;
}

inline Word word(const EdgeShift& s, std::initializer_list<const char*> es) {
  Word out;
  for (const auto* e : es) out.push_back(*s.find_edge(e));
  return out;
}

#define EXPECT_ERRC(stmt, expected)                         \
  do {                                                      \
    try {                                                   \
      stmt;                                                 \
      ADD_FAILURE() << "expected " << errc_name(expected);  \
    } catch (const ::shiftcat::Error& e) {                  \
      EXPECT_EQ(e.code(), expected) << e.what();            \
    }                                                       \
  } while (0)

}  // namespace shiftcat::test
