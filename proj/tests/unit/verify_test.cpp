#include <gtest/gtest.h>

#include "asymclust/clustering.hpp"
#include "asymclust/verify.hpp"
#include "fixtures.hpp"

namespace asymclust {
namespace {

TEST(CheckUltrametricTest, MethodOutputPasses) {
  EXPECT_TRUE(check_ultrametric(nonreciprocal(testing::three_node()).values).passed);
  EXPECT_TRUE(check_ultrametric(reciprocal(testing::cycle()).values).passed);
}

TEST(CheckUltrametricTest, CollinearPointsFail) {
  const auto m = Matrix::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  const auto r = check_ultrametric(m);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.counterexample->indices, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(r.counterexample->values, (std::vector<double>{2, 1, 1}));
}

TEST(CheckUltrametricTest, EquilateralPasses) {
  EXPECT_TRUE(check_ultrametric(Matrix::from_rows({{0, 7, 7}, {7, 0, 7}, {7, 7, 0}})).passed);
}

TEST(CheckUltrametricTest, PairwiseConditions) {
  EXPECT_FALSE(check_ultrametric(Matrix::from_rows({{0, 1}, {2, 0}})).passed);
  EXPECT_FALSE(check_ultrametric(Matrix::from_rows({{1, 1}, {1, 0}})).passed);
  EXPECT_FALSE(check_ultrametric(Matrix::from_rows({{0, 0}, {0, 0}})).passed);
}

TEST(BruteForceTest, DirectedCost) {
  EXPECT_EQ(brute_force_directed_cost(testing::three_node(), 2, 1), 2.0);
  EXPECT_EQ(brute_force_directed_cost(testing::two_node(1, 3), 0, 1), 1.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) EXPECT_EQ(brute_force_directed_cost(testing::cycle(), i, j), 0.5);
}

TEST(BruteForceTest, TooLarge) {
  std::mt19937_64 rng(1);
  const auto net = random_network(9, rng);
  try {
    brute_force_directed_cost(net, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_NO_THROW(brute_force_directed_cost(net, 0, 1, 9));
  EXPECT_THROW(brute_force_method(net, Method::Reciprocal), Error);
}

TEST(BruteForceTest, Methods) {
  const auto nr = brute_force_method(testing::cycle(), "nonreciprocal");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(nr(i, j), i == j ? 0.0 : 0.5);
  EXPECT_EQ(brute_force_method(testing::two_node(1, 3), "reciprocal")(0, 1), 3.0);
  EXPECT_EQ(brute_force_method(testing::two_node(1, 3), "nonreciprocal")(0, 1), 3.0);
  EXPECT_THROW(brute_force_method(testing::cycle(), "bogus"), Error);
}

TEST(AxiomValueTest, Examples) {
  EXPECT_TRUE(check_axiom_value("reciprocal", 1, 3).passed);
  EXPECT_TRUE(check_axiom_value("nonreciprocal", 5, 5).passed);
  EXPECT_TRUE(check_axiom_value("nonreciprocal", 0.25, 4).passed);
  EXPECT_THROW(check_axiom_value("nope", 1, 2), Error);
}

TEST(ReducingMapTest, DeterministicAndReducing) {
  const auto net = testing::three_node();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = generate_reducing_map(net, seed);
    const auto b = generate_reducing_map(net, seed);
    EXPECT_EQ(a.mapping, b.mapping);
    EXPECT_EQ(a.target, b.target);
    EXPECT_TRUE(is_dissimilarity_reducing(a));
    EXPECT_GE(a.target.size(), 1u);
    EXPECT_LE(a.target.size(), 3u);
  }
}

TEST(ReducingMapTest, QuotientOfTwoNodesTakesMinimum) {
  // Collapse x1, x2 into one image; x3 stays.
  const auto net = testing::three_node();
  const Network target({"a", "b"}, {{0, 2}, {2, 0}});  // A(x1->x3)=3, A(x2->x3)=2; back 2, 3
  const auto map = make_node_map(net, target, {0, 0, 1});
  EXPECT_TRUE(is_dissimilarity_reducing(map));
  EXPECT_THROW(make_node_map(net, Network({"a", "b"}, {{0, 2.5}, {2, 0}}), {0, 0, 1}), Error);
}

TEST(AxiomTransformationTest, FigureMapPasses) {
  const auto map = make_node_map(testing::three_node(), testing::cycle(), {0, 1, 2});
  EXPECT_TRUE(check_axiom_transformation("reciprocal", map).passed);
  EXPECT_TRUE(check_axiom_transformation("nonreciprocal", map).passed);
  // x1, x2 co-clustered at 2 reciprocally forces y1, y2 together at 2.
  EXPECT_LE(reciprocal(testing::cycle())(0, 1), reciprocal(testing::three_node())(0, 1));
}

TEST(AxiomTransformationTest, HalvingHalvesOutputs) {
  const auto net = testing::three_node();
  Matrix half = net.dissim();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) half(i, j) /= 2;
  const auto map = make_node_map(net, Network(net.labels(), half), {0, 1, 2});
  for (Method m : {Method::Reciprocal, Method::Nonreciprocal}) {
    EXPECT_TRUE(check_axiom_transformation(m, map).passed);
    const auto ux = run_method(m, net), uy = run_method(m, map.target);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(uy(i, j), ux(i, j) / 2);
  }
}

TEST(AxiomTransformationTest, IdentityPasses) {
  const auto net = testing::cycle();
  EXPECT_TRUE(check_axiom_transformation(Method::Nonreciprocal, make_node_map(net, net, {0, 1, 2})).passed);
}

TEST(AxiomTransformationTest, DetectsViolatingMethodOutput) {
  // A map that increases dissimilarity is not reducing: the check reports it.
  const auto x = Network({"a", "b"}, {{0, 1}, {1, 0}});
  const auto y = Network({"c", "d"}, {{0, 5}, {5, 0}});
  const NodeMap bad{x, y, {0, 1}};
  EXPECT_FALSE(is_dissimilarity_reducing(bad));
  const auto r = check_axiom_transformation(Method::Reciprocal, bad);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.counterexample->values, (std::vector<double>{1, 5}));
}

TEST(SandwichTest, BoundsAttained) {
  for (const auto& net : {testing::three_node(), testing::cycle()}) {
    EXPECT_TRUE(check_sandwich(net, reciprocal(net)).passed);
    EXPECT_TRUE(check_sandwich(net, nonreciprocal(net)).passed);
  }
}

TEST(SandwichTest, CandidateAboveUpperBoundFails) {
  const auto net = testing::cycle();
  UltrametricMatrix two{net.labels(), Matrix::from_rows({{0, 2, 2}, {2, 0, 2}, {2, 2, 0}})};
  const auto r = check_sandwich(net, two);
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.counterexample->values, (std::vector<double>{0.5, 2, 1}));
}

TEST(SandwichTest, LabelMismatch) {
  try {
    check_sandwich(testing::cycle(), reciprocal(testing::three_node()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LabelMismatch);
  }
}

TEST(ProvenanceTest, DetectsInventedValues) {
  const auto net = testing::three_node();
  EXPECT_TRUE(check_value_provenance(nonreciprocal(net).values, net.dissim()).passed);
  auto forged = nonreciprocal(net).values;
  forged(0, 1) = 2.5;
  EXPECT_FALSE(check_value_provenance(forged, net.dissim()).passed);
}

TEST(ReportTest, CombineLiftsFirstFailure) {
  auto r = VerificationReport::combine(
      "parent", {VerificationReport::pass("a", 3),
                 VerificationReport::fail("b", 2, Counterexample{{1}, {}, "broken"}),
                 VerificationReport::fail("c", 1, Counterexample{{2}, {}, "later"})});
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.trials, 6u);
  EXPECT_EQ(r.counterexample->violated, "b: broken");
}

TEST(SuiteTest, EverySuitePassesAndIsSeedDeterministic) {
  const SuiteConfig cfg{20, 3, kDefaultEnumerationBound};
  for (Suite s : {Suite::Axioms, Suite::Oracle, Suite::Sandwich}) {
    const auto a = run_suite(s, cfg);
    EXPECT_TRUE(a.passed) << a.check_name << ": "
                          << (a.counterexample ? a.counterexample->violated : "");
    EXPECT_GT(a.trials, 0u);
    EXPECT_EQ(a.trials, run_suite(s, cfg).trials);
  }
  EXPECT_EQ(parse_suite("all"), Suite::All);
  EXPECT_THROW(parse_suite("everything"), Error);
}

}  // namespace
}  // namespace asymclust
