#include <gtest/gtest.h>

#include "support.hpp"

using namespace canvas_color;
using namespace cc_test;

namespace {

ViolationKind kind_of(const std::variant<Canvas, Violation>& r) { return std::get<Violation>(r).kind; }

}  // namespace

TEST(ColorSet, Basics) {
  ColorSet s{3, 1, 2};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.smallest(), 1);
  EXPECT_EQ(s.smallest(2), (ColorSet{1, 2}));
  EXPECT_EQ((s - ColorSet{2}).to_vector(), (std::vector<Color>{1, 3}));
  EXPECT_TRUE(ColorSet{1}.subset_of(s));
  EXPECT_THROW(ColorSet{64}, std::out_of_range);
  EXPECT_EQ(to_string(s), "{1,2,3}");
}

TEST(ValidateCanvas, PinnedEdgeTriangle) {
  const auto g = triangle();
  const ListAssignment l{{0, {1}}, {1, {2}}, {2, {1, 2, 3}}};
  EXPECT_TRUE(std::holds_alternative<Canvas>(validate_canvas(g, {{0, 1}, {}}, l)));
}

TEST(ValidateCanvas, SameSingletonOnEdge) {
  const ListAssignment l{{0, {1}}, {1, {1}}, {2, {1, 2, 3}}};
  EXPECT_EQ(kind_of(validate_canvas(triangle(), {{0, 1}, {}}, l)), ViolationKind::SNotProperlyColorable);
}

TEST(ValidateCanvas, InteriorNeedsFive) {
  const auto g = hub_inside(3, {0, 1, 2});
  auto l = uniform(g, {1, 2, 3});
  l[3] = ColorSet{1, 2, 3, 4};
  const auto r = validate_canvas(g, {{0}, {}}, l);
  EXPECT_EQ(kind_of(r), ViolationKind::InteriorListTooSmall);
  EXPECT_EQ(std::get<Violation>(r).witness, std::optional<Vertex>{3});
}

TEST(ValidateCanvas, BoundaryNeedsThree) {
  const auto g = harness::cycle_graph(4);
  auto l = uniform(g, {1, 2, 3});
  l[2] = ColorSet{1, 2};
  EXPECT_EQ(kind_of(validate_canvas(g, {{0}, {}}, l)), ViolationKind::BoundaryListTooSmall);
  EXPECT_TRUE(std::holds_alternative<Canvas>(validate_canvas(g, {{0}, {2}}, l)));
}

TEST(ValidateCanvas, SMustBeOnBoundary) {
  const auto g = hub_inside(3, {0, 1, 2});
  auto l = uniform(g, {1, 2, 3, 4, 5});
  EXPECT_EQ(kind_of(validate_canvas(g, {{3}, {}}, l)), ViolationKind::SNotOnBoundary);
}

TEST(ValidateCanvas, ReportsFirstViolationInOrder) {
  // Interior too small and S improperly colorable: the interior check comes first.
  const auto g = hub_inside(3, {0, 1, 2});
  ListAssignment l{{0, {1}}, {1, {1}}, {2, {1, 2, 3}}, {3, {1}}};
  EXPECT_EQ(kind_of(validate_canvas(g, {{0, 1}, {}}, l)), ViolationKind::InteriorListTooSmall);
}

TEST(ValidateDemTwo, FiveCycleSingleVertexP) {
  const auto g = harness::cycle_graph(5);
  auto l = uniform(g, {1, 2, 3});
  l[0] = {1, 2};
  l[2] = {1, 2};
  const Canvas c{g, {{0}, {2}}, l};
  const auto r = validate_demtwo(c);
  ASSERT_TRUE(std::holds_alternative<DemTwoInstance>(r));
  EXPECT_EQ(std::get<DemTwoInstance>(r).l0, (ColorSet{1, 2}));
  EXPECT_EQ(std::get<DemTwoInstance>(r).u, 2);
}

TEST(ValidateDemTwo, LongPathNeedsTwoConnected) {
  const auto g = bowtie();
  auto l = uniform(g, {1, 2, 3});
  l[0] = l[1] = {1, 2};
  l[4] = {1, 3};
  const Canvas c{g, {{0, 1}, {4}}, l};
  ASSERT_FALSE(canvas_violation(c.graph, c.s, c.lists));
  EXPECT_EQ(std::get<Violation>(validate_demtwo(c)).kind, ViolationKind::NotTwoConnected);
}

TEST(ValidateDemTwo, MixedPLists) {
  const auto g = harness::cycle_graph(5);
  auto l = uniform(g, {1, 2, 3});
  l[0] = {1, 2};
  l[1] = {1, 3};
  l[3] = {1, 2};
  EXPECT_EQ(std::get<Violation>(validate_demtwo({g, {{0, 1}, {3}}, l})).kind, ViolationKind::MixedPLists);
}

TEST(ValidateDemTwo, OtherReports) {
  const auto g = harness::cycle_graph(5);
  auto l = uniform(g, {1, 2, 3});
  l[0] = l[1] = l[2] = {1, 2};
  l[4] = {1};
  EXPECT_EQ(std::get<Violation>(validate_demtwo({g, {{0, 1, 2}, {4}}, l})).kind, ViolationKind::UListTooSmall);
  EXPECT_EQ(std::get<Violation>(validate_demtwo({g, {{0, 1, 2}, {}}, l})).kind, ViolationKind::WrongSShape);

  // u next to the middle of P through the chord 1-4.
  const auto h = chorded(6, {make_edge(1, 4)});
  auto lh = uniform(h, {1, 2, 3});
  lh[0] = lh[1] = lh[2] = {1, 2};
  EXPECT_EQ(std::get<Violation>(validate_demtwo({h, {{0, 1, 2}, {4}}, lh})).kind, ViolationKind::UAdjacentInternal);

  // Chord 1-4 separates P-vertex 0 from u = 3.
  auto ls = uniform(h, {1, 2, 3});
  ls[0] = ls[1] = {1, 2};
  EXPECT_EQ(std::get<Violation>(validate_demtwo({h, {{0, 1}, {3}}, ls})).kind, ViolationKind::SeparatingChordAtP);
}

TEST(DetectException, TriangleAllEqual) {
  const auto g = triangle();
  const auto inst = std::get<DemTwoInstance>(validate_demtwo({g, {{0, 1}, {2}}, uniform(g, {1, 2})}));
  const auto cert = detect_exception(inst);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->odd_cycle.size(), 3u);
  EXPECT_EQ(cert->witnessed_l0, (ColorSet{1, 2}));
}

TEST(DetectException, TriangleDifferentU) {
  const auto g = triangle();
  auto l = uniform(g, {1, 2});
  l[2] = {1, 3};
  EXPECT_FALSE(detect_exception(std::get<DemTwoInstance>(validate_demtwo({g, {{0, 1}, {2}}, l}))));
}

TEST(DetectException, FiveCycle) {
  const auto g = harness::cycle_graph(5);
  const auto l = uniform(g, {1, 2});
  const auto cert = detect_exception(std::get<DemTwoInstance>(validate_demtwo({g, {{0, 1, 2, 3}, {4}}, l})));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->odd_cycle, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(solve_exact(g, l));
}

TEST(DetectException, EvenCycleNever) {
  const auto g = harness::cycle_graph(6);
  EXPECT_FALSE(detect_exception(std::get<DemTwoInstance>(validate_demtwo({g, {{0, 1, 2, 3, 4}, {5}}, uniform(g, {1, 2})}))));
}

TEST(ReduceLists, Examples) {
  const ListAssignment l{{1, {1, 2, 3}}, {2, {1, 2, 3}}};
  EXPECT_EQ(reduce_lists(l, {1}, {1, 2}).at(1), (ColorSet{3}));
  EXPECT_EQ(reduce_lists(l, {1}, {1, 2}).at(2), (ColorSet{1, 2, 3}));
  EXPECT_EQ(reduce_lists(l, {1}, {4}).at(1), (ColorSet{1, 2, 3}));
  try {
    reduce_lists(l, {2}, {1, 2, 3});
    FAIL();
  } catch (const ListError& e) {
    EXPECT_EQ(e.vertex(), 2);
  }
}
