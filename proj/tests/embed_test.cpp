#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace canvas_color;
using namespace cc_test;

TEST(Build, TriangleHasTwoFaces) {
  const auto g = build_embedded({1, 2, 3}, {{1, {2, 3}}, {2, {3, 1}}, {3, {1, 2}}}, Dart{1, 2});
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.num_faces(), 2u);
}

TEST(Build, SquareWithDiagonalHasThreeFaces) {
  const auto g = chorded(4, {make_edge(0, 2)});
  EXPECT_EQ(g.num_faces(), 3u);
  EXPECT_EQ(static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + static_cast<long>(g.num_faces()), 2);
}

TEST(Build, RejectsOneSidedAdjacency) {
  try {
    build_embedded({1, 2, 3}, {{1, {2, 3}}, {2, {3}}, {3, {1, 2}}}, Dart{1, 2});
    FAIL() << "expected NonSymmetricRotation";
  } catch (const EmbedError& e) {
    EXPECT_EQ(e.kind(), EmbedErrorKind::NonSymmetricRotation);
  }
}

TEST(Build, RejectsNonPlanarRotation) {
  // K4 with rotations that give a torus-like face count.
  try {
    build_embedded({0, 1, 2, 3}, {{0, {1, 2, 3}}, {1, {0, 2, 3}}, {2, {0, 1, 3}}, {3, {0, 1, 2}}}, Dart{0, 1});
    FAIL() << "expected EulerViolation";
  } catch (const EmbedError& e) {
    EXPECT_EQ(e.kind(), EmbedErrorKind::EulerViolation);
  }
}

TEST(Build, RejectsWitnessOffTheGraph) {
  EXPECT_THROW(build_embedded({1, 2, 3}, {{1, {2, 3}}, {2, {3, 1}}, {3, {1, 2}}}, Dart{1, 4}), EmbedError);
}

TEST(OuterWalk, Triangle) {
  const auto w = outer_walk(triangle());
  EXPECT_EQ(w.length(), 3u);
  EXPECT_EQ(std::set<Vertex>(w.vertices.begin(), w.vertices.end()), (std::set<Vertex>{0, 1, 2}));
}

TEST(OuterWalk, CutvertexRepeats) {
  const auto w = outer_walk(bowtie());
  EXPECT_EQ(w.length(), 6u);
  EXPECT_EQ(std::count(w.vertices.begin(), w.vertices.end(), 2), 2);
}

TEST(OuterWalk, SquareWithDiagonal) {
  const auto g = chorded(4, {make_edge(0, 2)});
  EXPECT_EQ(outer_walk(g).length(), 4u);
  EXPECT_EQ(outer_cycle(g).size(), 4u);
}

TEST(Chords, Diagonal) {
  EXPECT_EQ(outer_chords(chorded(4, {make_edge(1, 3)})), (std::vector<Edge>{make_edge(1, 3)}));
}

TEST(Chords, WheelHasNone) { EXPECT_TRUE(outer_chords(harness::wheel_graph(5)).empty()); }

TEST(Chords, HexagonWithTwoChords) {
  const auto g = chorded(6, {make_edge(0, 2), make_edge(3, 5)});
  EXPECT_EQ(outer_chords(g), (std::vector<Edge>{make_edge(0, 2), make_edge(3, 5)}));
}

TEST(Chords, NeedsTwoConnected) {
  try {
    outer_chords(bowtie());
    FAIL();
  } catch (const EmbedError& e) {
    EXPECT_EQ(e.kind(), EmbedErrorKind::NotTwoConnected);
  }
}

TEST(Cutvertices, Examples) {
  EXPECT_EQ(cutvertices(bowtie()), (std::set<Vertex>{2}));
  EXPECT_TRUE(cutvertices(harness::cycle_graph(7)).empty());
  EXPECT_TRUE(is_two_connected(harness::cycle_graph(7)));
  const auto path = harness::from_drawing({{0, 0}, {1, 0}, {2, 1}}, {make_edge(0, 1), make_edge(1, 2)});
  EXPECT_EQ(cutvertices(path), (std::set<Vertex>{1}));
  EXPECT_FALSE(is_two_connected(path));
}

TEST(SplitAt, BowtieAtCutvertex) {
  const auto g = bowtie();
  const auto sep = separate(g, {2}, {0});
  const auto [a, b] = split_at(g, sep);
  EXPECT_EQ(a.vertices(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(b.vertices(), (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(outer_cycle(a).size(), 3u);
  EXPECT_EQ(outer_cycle(b).size(), 3u);
}

TEST(SplitAt, SquareAtDiagonal) {
  const auto g = chorded(4, {make_edge(0, 2)});
  const auto [a, b] = split_at(g, separate(g, {0, 2}, {1}));
  EXPECT_EQ(a.num_edges(), 3u);
  EXPECT_EQ(b.num_edges(), 3u);
}

TEST(SplitAt, HexagonIntoTwoSquares) {
  const auto g = chorded(6, {make_edge(0, 3)});
  const auto [a, b] = split_at(g, separate(g, {0, 3}, {1}));
  EXPECT_EQ(a.vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(b.vertices(), (std::vector<Vertex>{0, 3, 4, 5}));
  EXPECT_EQ(outer_cycle(a).size(), 4u);
  EXPECT_EQ(outer_cycle(b).size(), 4u);
  EXPECT_EQ(a.num_edges() + b.num_edges(), g.num_edges() + 1);
}

TEST(SplitAt, RejectsBogusSeparation) {
  const auto g = harness::cycle_graph(5);
  Separation sep{SeparationKind::Chord, {0, 2}, {0, 1, 2}, {0, 2, 3, 4}};
  EXPECT_THROW(split_at(g, sep), EmbedError);
}

TEST(EdgeSeparates, HexagonChord) {
  const auto g = chorded(6, {make_edge(0, 3)});
  EXPECT_TRUE(edge_separates(g, 0, 3, 1, 4));
  EXPECT_FALSE(edge_separates(g, 0, 3, 1, 2));
}

TEST(EdgeSeparates, CycleEdgeNeverSeparates) {
  const auto g = harness::cycle_graph(6);
  for (Vertex x = 2; x < 6; ++x)
    for (Vertex y = 2; y < 6; ++y)
      if (x != y) EXPECT_FALSE(edge_separates(g, 0, 1, x, y));
}

TEST(EdgeSeparates, AgreesWithComponentCount) {
  for (const auto& ng : harness::enumerate_small_plane_graphs(7)) {
    const auto& g = ng.graph;
    for (const Edge& e : g.edges()) {
      const auto comps = components(g, {e.first, e.second});
      for (Vertex x : g.vertices())
        for (Vertex y : g.vertices()) {
          if (x == y || x == e.first || x == e.second || y == e.first || y == e.second) continue;
          bool together = false;
          for (const auto& c : comps) together = together || (c.count(x) && c.count(y));
          EXPECT_EQ(edge_separates(g, e.first, e.second, x, y), !together) << ng.name;
        }
    }
  }
}

TEST(ShortCycles, TriangleAroundInteriorVertex) {
  const auto found = short_cycles_with_interior(hub_inside(3, {0, 1, 2}));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].cycle, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(found[0].interior, (std::set<Vertex>{3}));
}

TEST(ShortCycles, OuterplanarHasNone) {
  for (const auto& ng : harness::enumerate_small_plane_graphs(7, {harness::Family::Cycles, harness::Family::ChordedCycles}))
    EXPECT_TRUE(short_cycles_with_interior(ng.graph).empty()) << ng.name;
}

TEST(ShortCycles, SquareAroundHubOnly) {
  const auto found = short_cycles_with_interior(hub_inside(4, {0, 1, 2, 3}));
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].cycle, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(found[0].interior, (std::set<Vertex>{4}));
}

namespace {

bool inside_polygon(const harness::Point& p, const std::vector<harness::Point>& poly) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const auto& a = poly[i];
    const auto& b = poly[j];
    if ((a.second > p.second) != (b.second > p.second) &&
        p.first < (b.first - a.first) * (p.second - a.second) / (b.second - a.second) + a.first)
      in = !in;
  }
  return in;
}

}  // namespace

// Interiors decided from face structure must match point-in-polygon tests on
// the straight-line drawing.
TEST(ShortCycles, MatchGeometryOnRandomStackings) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = harness::detail::base_triangle();
    const int n = 4 + static_cast<int>(rng() % 7);
    while (static_cast<int>(d.points.size()) < n) d = harness::detail::stack_into(d, rng() % d.triangles.size());
    const auto g = harness::detail::draw(d);
    std::map<std::vector<Vertex>, std::set<Vertex>> found;
    for (const auto& c : short_cycles_with_interior(g)) found[c.cycle] = c.interior;
    for (const auto& cycle : short_cycles(g)) {
      std::vector<harness::Point> poly;
      for (Vertex v : cycle) poly.push_back(d.points[v]);
      // short_cycles lists 4-cycles in walk order, so the polygon is simple.
      std::set<Vertex> want;
      for (Vertex v : g.vertices())
        if (std::find(cycle.begin(), cycle.end(), v) == cycle.end() && inside_polygon(d.points[v], poly)) want.insert(v);
      const auto it = found.find(cycle);
      EXPECT_EQ(it == found.end() ? std::set<Vertex>{} : it->second, want) << "trial " << trial;
    }
  }
}

TEST(Derived, OuterFaceSurvivesDeletion) {
  const auto w = harness::wheel_graph(5);
  const auto g = w.without_vertices({0});
  EXPECT_TRUE(g.on_outer_face(5));
  EXPECT_EQ(outer_cycle(g).size(), 5u);
  const auto h = w.without_edges({make_edge(0, 1)});
  EXPECT_EQ(outer_cycle(h).size(), 6u);
}

TEST(Derived, MirrorKeepsOuterFace) {
  const auto g = harness::fan_graph(4);
  const auto m = g.mirrored();
  EXPECT_EQ(m.outer_vertices(), g.outer_vertices());
  EXPECT_EQ(m.num_faces(), g.num_faces());
}
