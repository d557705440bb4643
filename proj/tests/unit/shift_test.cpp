#include <shiftcat/shift.hpp>

#include "test_support.hpp"

namespace shiftcat {
namespace {

using test::shift_of;

TEST(Validate, FullShiftHasSingleEntryAdjacency) {
  const auto s = shift_of(fixtures::full_shift(2));
  EXPECT_EQ(s.adjacency_matrix(), (std::vector<std::vector<std::size_t>>{{2}}));
}

TEST(Validate, SinkIsRejected) {
  GraphPresentation g{{"u", "v"}, {{"e", "u", "v"}}, false};
  try {
    validate(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SinkVertex);
    EXPECT_NE(std::string(e.what()).find("'v'"), std::string::npos);
  }
}

TEST(Validate, TwoCycle) {
  const auto s = shift_of(fixtures::cycle(2));
  EXPECT_EQ(s.adjacency_matrix(), (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}));
}

TEST(Validate, Errors) {
  EXPECT_ERRC(validate(GraphPresentation{}), Errc::EmptyGraph);
  EXPECT_ERRC(validate(GraphPresentation{{"u"}, {}, false}), Errc::EmptyGraph);
  EXPECT_ERRC(validate(GraphPresentation{{"u", "u"}, {{"a", "u", "u"}}, false}), Errc::DuplicateVertex);
  EXPECT_ERRC(validate(GraphPresentation{{"u"}, {{"a", "u", "x"}}, false}), Errc::UnknownVertex);
  EXPECT_ERRC(validate(GraphPresentation{{"u"}, {{"a", "u", "u"}, {"a", "u", "u"}}, false}), Errc::DuplicateEdge);
  EXPECT_ERRC(validate(GraphPresentation{{"u", "v"}, {{"a", "u", "u"}, {"b", "v", "u"}}, false}), Errc::SourceVertex);
}

TEST(MValue, Examples) {
  EXPECT_EQ(m_value(shift_of(fixtures::full_shift(2)), "v"), 2u);
  EXPECT_EQ(m_value(shift_of(fixtures::cycle(3)), "v1"), 1u);
  EXPECT_EQ(m_value(shift_of(fixtures::golden_mean()), "u"), 2u);
  EXPECT_ERRC(m_value(shift_of(fixtures::golden_mean()), "nope"), Errc::UnknownVertex);
}

TEST(MValue, MatchesFiberCountOnWords) {
  // #{y : sigma(y) = sigma(x)} read on depth-3 cylinders: words sharing the tail.
  for (const auto& s : test::fixture_shifts()) {
    for_each_word(s, 3, [&](const Word& w) {
      std::size_t same_tail = 0;
      for_each_word(s, 3, [&](const Word& y) {
        if (y[1] == w[1] && y[2] == w[2]) ++same_tail;
      });
      EXPECT_EQ(same_tail, m_value(s, s.edge(w[0]).dst));
    });
  }
}

TEST(MValue, OfPointIsInDegreeOfFirstRange) {
  const auto s = shift_of(fixtures::golden_mean());
  const auto x = EventuallyPeriodicPoint::periodic(s, test::word(s, {"b", "c"}));
  EXPECT_EQ(m_of_point(s, x), 1u);
  const auto y = EventuallyPeriodicPoint::periodic(s, test::word(s, {"c", "b"}));
  EXPECT_EQ(m_of_point(s, y), 2u);
}

TEST(PreimageCount, Examples) {
  EXPECT_EQ(preimage_count(shift_of(fixtures::full_shift(2)), 5, 0), 32);
  for (const auto& s : test::fixture_shifts())
    for (VertexId v = 0; v < s.vertex_count(); ++v) EXPECT_EQ(preimage_count(s, 0, v), 1);
  // Length-5 paths end at u in 13 ways and at v in 8 ways.
  const auto g = shift_of(fixtures::golden_mean());
  EXPECT_EQ(preimage_count(g, 5, 0), 13);
  EXPECT_EQ(preimage_count(g, 5, 1), 8);
  EXPECT_EQ(min_preimage_count(g, 5), 8);
}

TEST(CountWords, Examples) {
  EXPECT_EQ(count_words(shift_of(fixtures::full_shift(2)), 3), 8);
  EXPECT_EQ(count_words(shift_of(fixtures::cycle(3)), 7), 3);
  EXPECT_EQ(count_words(shift_of(fixtures::golden_mean()), 3), 8);
  EXPECT_EQ(count_words(shift_of(fixtures::golden_mean()), 4), 13);
}

TEST(PartitionUnity, Examples) {
  EXPECT_TRUE(partition_unity_check(shift_of(fixtures::full_shift(2)), 4));
  EXPECT_TRUE(partition_unity_check(shift_of(fixtures::cycle(4)), 3));
  EXPECT_TRUE(partition_unity_check(shift_of(fixtures::golden_mean()), 6));
  EXPECT_ERRC(partition_unity_check(shift_of(fixtures::golden_mean()), 0), Errc::DepthTooSmall);
}

TEST(SpaceInfinite, Examples) {
  EXPECT_FALSE(is_space_infinite(shift_of(fixtures::cycle(3))));
  EXPECT_TRUE(is_space_infinite(shift_of(fixtures::full_shift(2))));
  EXPECT_FALSE(is_space_infinite(shift_of(fixtures::disjoint_cycles())));
  // u loop, u -> v, v loop: u has two exits, so the space is infinite.
  EXPECT_TRUE(is_space_infinite(shift_of(fixtures::connected_cycles())));
  EXPECT_EQ(count_words(shift_of(fixtures::connected_cycles()), 6), 8);
}

TEST(Points, Construction) {
  const auto s = shift_of(fixtures::golden_mean());
  EXPECT_ERRC(EventuallyPeriodicPoint::make(s, {}, {}), Errc::IllegalCycle);
  EXPECT_ERRC(EventuallyPeriodicPoint::make(s, {}, test::word(s, {"b"})), Errc::IllegalCycle);
  EXPECT_ERRC(EventuallyPeriodicPoint::make(s, test::word(s, {"c"}), test::word(s, {"c", "b"})), Errc::IllegalWord);
  const auto x = EventuallyPeriodicPoint::make(s, test::word(s, {"c"}), test::word(s, {"a"}));
  EXPECT_EQ(x.take(4), test::word(s, {"c", "a", "a", "a"}));
  EXPECT_FALSE(x.is_periodic());
}

TEST(Words, EmptyWordHasNoEndpoints) {
  const auto s = shift_of(fixtures::full_shift(2));
  EXPECT_ERRC(word_source(s, {}), Errc::IllegalWord);
  std::size_t n = 0;
  for_each_word(s, 0, [&](const Word& w) {
    EXPECT_TRUE(w.empty());
    ++n;
  });
  EXPECT_EQ(n, 1u);
}

// Properties over every essential graph with at most 3 vertices and 5 edges.

TEST(ShiftProperties, PreimageRecursion) {
  for (const auto& s : test::small_shifts()) {
    for (std::size_t k = 0; k < 8; ++k) {
      const auto p = preimage_counts(s, k);
      const auto q = preimage_counts(s, k + 1);
      for (VertexId v = 0; v < s.vertex_count(); ++v) {
        BigInt sum = 0;
        for (VertexId u = 0; u < s.vertex_count(); ++u) sum += p[u] * s.adjacency(u, v);
        ASSERT_EQ(q[v], sum);
      }
    }
  }
}

TEST(ShiftProperties, PartitionOfUnityEverywhere) {
  for (const auto& s : test::small_shifts())
    for (std::size_t d = 1; d <= 4; ++d) ASSERT_TRUE(partition_unity_check(s, d));
}

TEST(ShiftProperties, SurjectiveAtEveryDepth) {
  for (const auto& s : test::small_shifts())
    for (std::size_t k = 0; k < 10; ++k) ASSERT_GE(min_preimage_count(s, k), 1);
}

TEST(ShiftProperties, CountWordsMatchesEnumerationAndPreimageSum) {
  for (const auto& s : test::small_shifts()) {
    for (std::size_t k = 0; k <= 5; ++k) {
      std::size_t enumerated = 0;
      for_each_word(s, k, [&](const Word& w) {
        ASSERT_TRUE(is_path(s, w));
        ++enumerated;
      });
      BigInt sum = 0;
      for (const auto& c : preimage_counts(s, k)) sum += c;
      ASSERT_EQ(count_words(s, k), enumerated);
      if (k > 0) ASSERT_EQ(count_words(s, k), sum);
    }
  }
}

TEST(ShiftProperties, InfiniteIffWordCountKeepsGrowing) {
  for (const auto& s : test::small_shifts()) {
    const std::size_t k = s.edge_count() + s.vertex_count() + 2;
    ASSERT_EQ(is_space_infinite(s), count_words(s, k + 1) > count_words(s, k));
  }
}

TEST(ShiftProperties, WordsAreLexicographic) {
  for (const auto& s : test::small_shifts()) {
    Word prev;
    bool first = true;
    for_each_word(s, 3, [&](const Word& w) {
      if (!first) ASSERT_LT(prev, w);
      prev = w;
      first = false;
    });
  }
}

}  // namespace
}  // namespace shiftcat
