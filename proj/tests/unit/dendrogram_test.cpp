#include <gtest/gtest.h>

#include "asymclust/clustering.hpp"
#include "asymclust/dendrogram.hpp"
#include "fixtures.hpp"

namespace asymclust {
namespace {

UltrametricMatrix ultra(std::vector<std::string> labels, std::vector<std::vector<double>> rows) {
  return {std::move(labels), Matrix::from_rows(rows)};
}

UltrametricMatrix three_node_reciprocal() {
  return ultra({"x1", "x2", "x3"}, {{0, 2, 3}, {2, 0, 3}, {3, 3, 0}});
}

TEST(UltrametricToDendrogramTest, TwoNodeSingleEvent) {
  const auto d = ultrametric_to_dendrogram(ultra({"p", "q"}, {{0, 3}, {3, 0}}));
  ASSERT_EQ(d.events.size(), 1u);
  EXPECT_EQ(d.events[0], (MergeEvent{3.0, {0, 1}, 2}));
}

TEST(UltrametricToDendrogramTest, ThreeNodeMergesX1X2First) {
  const auto d = ultrametric_to_dendrogram(reciprocal(testing::three_node()));
  ASSERT_EQ(d.events.size(), 2u);
  EXPECT_EQ(d.events[0], (MergeEvent{2.0, {0, 1}, 3}));
  EXPECT_EQ(d.events[1], (MergeEvent{3.0, {3, 2}, 4}));
}

TEST(UltrametricToDendrogramTest, EquilateralIsOneThreeWayEvent) {
  const auto d = ultrametric_to_dendrogram(ultra({"a", "b", "c"}, {{0, 5, 5}, {5, 0, 5}, {5, 5, 0}}));
  ASSERT_EQ(d.events.size(), 1u);
  EXPECT_EQ(d.events[0], (MergeEvent{5.0, {0, 1, 2}, 3}));
}

TEST(UltrametricToDendrogramTest, SimultaneousMergesAreSeparateEvents) {
  // {a,b} and {c,d} both form at 1, then join at 2.
  const auto d = ultrametric_to_dendrogram(
      ultra({"a", "b", "c", "d"}, {{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}}));
  ASSERT_EQ(d.events.size(), 3u);
  EXPECT_EQ(d.events[0], (MergeEvent{1.0, {0, 1}, 4}));
  EXPECT_EQ(d.events[1], (MergeEvent{1.0, {2, 3}, 5}));
  EXPECT_EQ(d.events[2], (MergeEvent{2.0, {4, 5}, 6}));
  EXPECT_TRUE(validate_dendrogram(d).passed);
}

TEST(UltrametricToDendrogramTest, RejectsNonUltrametric) {
  try {
    ultrametric_to_dendrogram(ultra({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUltrametric);
  }
}

TEST(DendrogramToUltrametricTest, Inverses) {
  const Dendrogram single{{"p", "q"}, {{3.0, {0, 1}, 2}}};
  EXPECT_EQ(dendrogram_to_ultrametric(single), ultra({"p", "q"}, {{0, 3}, {3, 0}}));

  const Dendrogram chained{{"x1", "x2", "x3"}, {{2.0, {0, 1}, 3}, {3.0, {3, 2}, 4}}};
  EXPECT_EQ(dendrogram_to_ultrametric(chained), three_node_reciprocal());
  EXPECT_EQ(ultrametric_to_dendrogram(dendrogram_to_ultrametric(chained)), chained);
}

TEST(DendrogramToUltrametricTest, RejectsInvalidTree) {
  const Dendrogram open{{"a", "b", "c"}, {{1.0, {0, 1}, 3}}};
  try {
    dendrogram_to_ultrametric(open);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidDendrogram);
  }
}

TEST(CutTest, Examples) {
  const auto d = ultrametric_to_dendrogram(three_node_reciprocal());
  EXPECT_EQ(cut(d, 0.0).blocks, (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
  EXPECT_EQ(cut(d, 2.5).blocks, (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
  EXPECT_EQ(cut(d, 2.0).blocks, (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
  EXPECT_EQ(cut(d, 3.0).blocks, (std::vector<std::vector<std::size_t>>{{0, 1, 2}}));
  EXPECT_EQ(cut(d, 100.0).blocks, (std::vector<std::vector<std::size_t>>{{0, 1, 2}}));
  EXPECT_EQ(cut(d, 2.5).resolution, 2.5);
  EXPECT_EQ(block_labels(cut(d, 2.5), d.labels),
            (std::vector<std::vector<std::string>>{{"x1", "x2"}, {"x3"}}));
}

TEST(CutTest, Refinement) {
  const auto d = ultrametric_to_dendrogram(three_node_reciprocal());
  EXPECT_TRUE(refines(cut(d, 2.0), cut(d, 3.0)));
  EXPECT_FALSE(refines(cut(d, 3.0), cut(d, 2.0)));
}

TEST(ValidateDendrogramTest, ConstructedTreesPass) {
  const auto r = validate_dendrogram(ultrametric_to_dendrogram(three_node_reciprocal()));
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.counterexample.has_value());
  ASSERT_EQ(r.subchecks.size(), 3u);
}

const VerificationReport& sub(const VerificationReport& r, const std::string& name) {
  for (const auto& s : r.subchecks)
    if (s.check_name == name) return s;
  throw std::runtime_error("missing subcheck " + name);
}

TEST(ValidateDendrogramTest, NotAllNodesUnifiedFailsD1) {
  const auto r = validate_dendrogram({{"a", "b", "c"}, {{1.0, {0, 1}, 3}}});
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(sub(r, "D1").passed);
  EXPECT_TRUE(sub(r, "D2").passed);
}

TEST(ValidateDendrogramTest, MergeAtZeroFailsD1) {
  const auto r = validate_dendrogram({{"a", "b"}, {{0.0, {0, 1}, 2}}});
  EXPECT_FALSE(sub(r, "D1").passed);
}

TEST(ValidateDendrogramTest, SplitFailsD2) {
  // Node 0 joins cluster 3 and is then merged again on its own.
  const auto r = validate_dendrogram({{"a", "b", "c"}, {{1.0, {0, 1}, 3}, {2.0, {0, 2}, 4}}});
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(sub(r, "D2").passed);
  EXPECT_EQ(sub(r, "D2").counterexample->indices, std::vector<std::size_t>{1});
}

TEST(ValidateDendrogramTest, DecreasingResolutionFailsD2) {
  const auto r = validate_dendrogram({{"a", "b", "c"}, {{2.0, {0, 1}, 3}, {1.0, {3, 2}, 4}}});
  EXPECT_FALSE(sub(r, "D2").passed);
}

TEST(ValidateDendrogramTest, StructuralErrors) {
  EXPECT_FALSE(sub(validate_dendrogram({{"a", "b"}, {{1.0, {0}, 2}}}), "structure").passed);
  EXPECT_FALSE(sub(validate_dendrogram({{"a", "b"}, {{1.0, {0, 7}, 2}}}), "structure").passed);
  EXPECT_FALSE(sub(validate_dendrogram({{"a", "b"}, {{1.0, {0, 1}, 1}}}), "structure").passed);
  EXPECT_FALSE(sub(validate_dendrogram({{"a", "a"}, {{1.0, {0, 1}, 2}}}), "structure").passed);
}

TEST(NewickTest, Examples) {
  EXPECT_EQ(to_newick(ultrametric_to_dendrogram(ultra({"p", "q"}, {{0, 3}, {3, 0}}))), "(p:3,q:3);");
  EXPECT_EQ(to_newick(ultrametric_to_dendrogram(three_node_reciprocal())), "((x1:2,x2:2):1,x3:3);");
  EXPECT_EQ(to_newick(Dendrogram{{"x"}, {}}), "x;");
}

TEST(NewickTest, ChildrenOrderedByLeastMember) {
  // c (index 2) merges with a first, so cluster {a,c} precedes b.
  const auto d = ultrametric_to_dendrogram(ultra({"a", "b", "c"}, {{0, 4, 1}, {4, 0, 4}, {1, 4, 0}}));
  EXPECT_EQ(to_newick(d), "((a:1,c:1):3,b:4);");
}

TEST(NewickTest, QuotesSpecialLabels) {
  const auto d = ultrametric_to_dendrogram(ultra({"a b", "it's"}, {{0, 1}, {1, 0}}));
  EXPECT_EQ(to_newick(d), "('a b':1,'it''s':1);");
}

}  // namespace
}  // namespace asymclust
