#include <shiftcat/graph_util.hpp>
#include <shiftcat/io.hpp>
#include <shiftcat/oracle.hpp>

#include "test_support.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace shiftcat {
namespace {

using test::names;
using test::shift_of;
using test::word;

TEST(Words, Tables) {
  const auto g = shift_of(fixtures::golden_mean());
  const auto t = words(g, 3);
  EXPECT_EQ(t.words.size(), 8u);
  EXPECT_TRUE(std::is_sorted(t.words.begin(), t.words.end()));
  const auto aaa = *t.index_of(word(g, {"a", "a", "a"}));
  // Preimages of aaa are aaa and caa; images are aaa and aab.
  EXPECT_EQ(t.preimages[aaa].size(), 2u);
  EXPECT_EQ(t.images[aaa].size(), 2u);
  EXPECT_FALSE(t.index_of(word(g, {"b", "b", "c"})).has_value());
  EXPECT_EQ(words(shift_of(fixtures::full_shift(2)), 4).words.size(), 16u);
  EXPECT_ERRC(words(g, 0), Errc::DepthTooSmall);
}

TEST(FamilyInvariance, Examples) {
  const auto r = shift_of(fixtures::reducible());
  const auto t = words(r, 3);
  EXPECT_TRUE(check_family_invariance(r, t, family_inside(r, t, names(r, {"u"})), FamilyMode::TotallyInvariant));
  EXPECT_TRUE(check_family_invariance(r, t, family_inside(r, t, r.all_vertices()), FamilyMode::TotallyInvariant));
  // b c c is a preimage of c c c but leaves v.
  EXPECT_FALSE(check_family_invariance(r, t, family_inside(r, t, names(r, {"v"})), FamilyMode::TotallyInvariant));
  EXPECT_ERRC(check_family_invariance(r, words(r, 1), WordFamily(4, true), FamilyMode::Saturated), Errc::DepthTooSmall);

  // Every depth-3 word of the golden mean shift is saturated with the others.
  const auto g = shift_of(fixtures::golden_mean());
  const auto tg = words(g, 3);
  EXPECT_TRUE(check_family_invariance(g, tg, WordFamily(tg.words.size(), true), FamilyMode::Saturated));
  WordFamily one(tg.words.size(), false);
  one[0] = true;
  EXPECT_FALSE(check_family_invariance(g, tg, one, FamilyMode::Saturated));
}

TEST(Cover, Examples) {
  const auto f = shift_of(fixtures::full_shift(2));
  EXPECT_TRUE(check_cover(f, word(f, {"a", "b"}), 2, 3));
  EXPECT_FALSE(check_cover(f, word(f, {"a", "b"}), 1, 3));
  const auto r = shift_of(fixtures::reducible());
  EXPECT_TRUE(check_cover(r, word(r, {"a"}), 4, 3));
  EXPECT_FALSE(check_cover(r, word(r, {"c"}), 6, 3));
  EXPECT_TRUE(oracle_strongly_transitive(shift_of(fixtures::golden_mean()), 3));
  EXPECT_FALSE(oracle_strongly_transitive(r, 3));
}

TEST(Covering, Examples) {
  EXPECT_EQ(oracle_covering_time(shift_of(fixtures::full_shift(2)), 3), 1u);
  EXPECT_EQ(oracle_covering_time(shift_of(fixtures::golden_mean()), 3), 2u);
  EXPECT_EQ(oracle_covering_time(shift_of(fixtures::cycle(3)), 3), std::nullopt);
  EXPECT_EQ(oracle_covering_time(shift_of(fixtures::reducible()), 3), std::nullopt);
}

TEST(Isolation, Examples) {
  const auto c = shift_of(fixtures::cycle(2));
  EXPECT_TRUE(check_isolation(c, word(c, {"e0", "e1"}), 6));
  const auto g = shift_of(fixtures::golden_mean());
  EXPECT_FALSE(check_isolation(g, word(g, {"a"}), 4));
  EXPECT_FALSE(check_isolation(g, word(g, {"b", "c"}), 8));
  const auto r = shift_of(fixtures::reducible());
  EXPECT_TRUE(check_isolation(r, word(r, {"a"}), 5));
  EXPECT_FALSE(check_isolation(r, word(r, {"c"}), 5));
  EXPECT_ERRC(check_isolation(r, word(r, {"a"}), 4), Errc::DepthTooSmall);
  EXPECT_ERRC(check_isolation(r, word(r, {"b"}), 5), Errc::IllegalCycle);
}

TEST(Primes, UnionPrimeFamilies) {
  // Chain {} < {x} < {x, y}: both nonempty members are prime.
  const std::vector<WordFamily> chain{{false, false}, {true, false}, {true, true}};
  EXPECT_EQ(oracle_primes(chain), (std::vector<std::size_t>{1, 2}));
  // Boolean square: the top is the union of the two atoms.
  const std::vector<WordFamily> square{{false, false}, {true, false}, {false, true}, {true, true}};
  EXPECT_EQ(oracle_primes(square), (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(oracle_contained_in_union(square[3], square[1], square[2]));
  EXPECT_FALSE(oracle_contained_in_union(square[3], square[1], square[1]));
}

TEST(SmallGraphs, Census) {
  const auto all = small_essential_graphs(3, 5);
  EXPECT_EQ(all.size(), 111u);
  std::map<std::size_t, std::size_t> by_vertices;
  for (const auto& g : all) ++by_vertices[g.vertices.size()];
  EXPECT_EQ(by_vertices, (std::map<std::size_t, std::size_t>{{1, 5}, {2, 35}, {3, 71}}));
  EXPECT_EQ(small_essential_graphs(1, 5).size(), 5u);
}

TEST(SmallGraphs, EssentialAndPairwiseNonIsomorphic) {
  const auto all = small_essential_graphs(3, 5);
  std::set<std::vector<std::vector<std::size_t>>> canonical;
  for (const auto& g : all) {
    const auto s = validate(g);
    ASSERT_LE(s.edge_count(), 5u);
    // Smallest adjacency matrix over all vertex orders, as an isomorphism invariant.
    std::vector<std::size_t> perm(s.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> best;
    do {
      std::vector<std::vector<std::size_t>> m(perm.size(), std::vector<std::size_t>(perm.size()));
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j) m[i][j] = s.adjacency(perm[i], perm[j]);
      if (best.empty() || m < best) best = m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    ASSERT_TRUE(canonical.insert(best).second) << graph_to_json(g);
  }
}

TEST(CrossCheck, Fixtures) {
  for (const auto& s : test::fixture_shifts())
    for (const auto& c : cross_check(s, 6)) EXPECT_TRUE(c.agree) << c.name << ": " << c.detail;
  EXPECT_ERRC(cross_check(shift_of(fixtures::golden_mean()), 1), Errc::DepthTooSmall);
}

TEST(CrossCheck, AllSmallGraphsAtDepthSix) {
  std::size_t disagreements = 0;
  for (const auto& s : test::small_shifts())
    for (const auto& c : cross_check(s, 6))
      if (!c.agree) {
        ++disagreements;
        ADD_FAILURE() << c.name << " on " << graph_to_json(s.presentation()) << ": " << c.detail;
      }
  EXPECT_EQ(disagreements, 0u);
}

}  // namespace
}  // namespace shiftcat
