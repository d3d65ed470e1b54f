#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

using namespace canvas_color;
using namespace cc_test;
namespace h = canvas_color::harness;

TEST(Enumerate, TriangleOnly) {
  const auto gs = h::enumerate_small_plane_graphs(3);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].graph.num_edges(), 3u);
}

TEST(Enumerate, FourVertices) {
  const auto gs = h::enumerate_small_plane_graphs(4);
  std::multiset<std::pair<std::size_t, std::size_t>> shapes;
  for (const auto& g : gs) shapes.insert({g.graph.num_vertices(), g.graph.num_edges()});
  // Triangle, 4-cycle, 4-cycle with chord, K4.
  EXPECT_EQ(shapes, (std::multiset<std::pair<std::size_t, std::size_t>>{{3, 3}, {4, 4}, {4, 5}, {4, 6}}));
}

TEST(Enumerate, SixVertexSnapshot) { EXPECT_EQ(h::enumerate_small_plane_graphs(6).size(), 22u); }

TEST(Enumerate, AllTwoConnectedAndDistinct) {
  const auto gs = h::enumerate_small_plane_graphs(8);
  std::set<std::vector<int>> codes;
  for (const auto& g : gs) {
    EXPECT_TRUE(is_two_connected(g.graph)) << g.name;
    EXPECT_TRUE(codes.insert(h::canonical_code(g.graph)).second) << g.name;
  }
}

TEST(Enumerate, GluedFamilyHasCutvertices) {
  for (const auto& g : h::enumerate_small_plane_graphs(7, {h::Family::Glued})) EXPECT_EQ(cutvertices(g.graph).size(), 1u) << g.name;
}

TEST(CanonicalCode, MirrorAndRelabelInvariant) {
  const auto g = h::generate_near_triangulation(9, 4);
  std::map<Vertex, Vertex> shift;
  for (Vertex v : g.vertices()) shift[v] = 100 - v;
  EXPECT_EQ(h::canonical_code(g), h::canonical_code(g.mirrored()));
  EXPECT_EQ(h::canonical_code(g), h::canonical_code(g.relabeled(shift)));
}

TEST(NearTriangulation, Examples) {
  EXPECT_EQ(h::generate_near_triangulation(3, 5).num_edges(), 3u);
  const auto g = h::generate_near_triangulation(8, 1);
  EXPECT_EQ(g.num_vertices(), 8u);
  EXPECT_TRUE(is_two_connected(g));
  EXPECT_EQ(static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + static_cast<long>(g.num_faces()), 2);
  EXPECT_EQ(h::graph_to_json(g).dump(), h::graph_to_json(h::generate_near_triangulation(8, 1)).dump());
}

TEST(Suites, ValidInstancesPassTheirValidators) {
  h::CorpusSpec spec;
  spec.max_vertices = 6;
  spec.random_count = 30;
  for (const auto& i : h::demtwo_suite(spec).valid) EXPECT_FALSE(h::demtwo_check(i.canvas)) << i.id;
  for (const auto& i : h::twotwos_suite(spec).valid) EXPECT_FALSE(canvas_violation(i.canvas.graph, i.canvas.s, i.canvas.lists));
  for (const auto& i : h::thom_suite(spec).valid) {
    EXPECT_EQ(i.canvas.lists.at(i.canvas.s.path[0]).size(), 1);
    EXPECT_TRUE(i.canvas.graph.boundary_edge(i.canvas.s.path[0], i.canvas.s.path[1]));
  }
}

TEST(Suites, RejectedInstancesCarryTheirReport) {
  h::CorpusSpec spec;
  spec.max_vertices = 6;
  spec.random_count = 30;
  const auto suite = h::demtwo_suite(spec);
  std::set<ViolationKind> kinds;
  for (const auto& i : suite.rejected) {
    const auto v = h::demtwo_check(i.canvas);
    ASSERT_TRUE(v) << i.id;
    EXPECT_EQ(v->kind, i.violation.kind) << i.id;
    kinds.insert(v->kind);
  }
  EXPECT_TRUE(kinds.count(ViolationKind::UAdjacentInternal));
  EXPECT_TRUE(kinds.count(ViolationKind::SeparatingChordAtP));
}

TEST(Suites, ContainExceptionFamily) {
  h::CorpusSpec spec;
  spec.max_vertices = 5;
  spec.random_count = 0;
  int exceptional = 0;
  for (const auto& i : h::demtwo_suite(spec).valid)
    exceptional += detect_exception(std::get<DemTwoInstance>(validate_demtwo(i.canvas))).has_value();
  EXPECT_GT(exceptional, 0);
}

TEST(Suites, Deterministic) {
  h::CorpusSpec spec;
  spec.max_vertices = 6;
  spec.random_count = 25;
  auto dump = [&] {
    std::string out;
    for (const auto& i : h::demtwo_suite(spec).valid) out += i.id + h::canvas_to_json(i.canvas).dump();
    return out;
  };
  EXPECT_EQ(dump(), dump());
}

TEST(Io, CanvasRoundTrip) {
  const auto g = h::generate_near_triangulation(10, 2);
  const Canvas c{g, {{*g.outer_vertices().begin()}, {}}, standard(g)};
  const auto j = h::canvas_to_json(c);
  const Canvas back = h::canvas_from_json(j);
  EXPECT_EQ(back.graph.rotation_table(), g.rotation_table());
  EXPECT_EQ(back.graph.outer_vertices(), g.outer_vertices());
  EXPECT_EQ(back.lists, c.lists);
  EXPECT_EQ(back.s, c.s);
  EXPECT_EQ(h::canvas_to_json(back).dump(), j.dump());
}

TEST(Io, ColoringFormat) {
  const Coloring c{{3, 1}, {10, 4}};
  EXPECT_EQ(h::coloring_to_json(c).dump(), R"({"coloring":{"10":4,"3":1}})");
  EXPECT_EQ(h::coloring_from_json(h::coloring_to_json(c)), c);
}

TEST(Io, RejectsBadWitness) {
  auto j = h::graph_to_json(triangle());
  j["outer"] = {0, 0, 1};
  EXPECT_THROW(h::graph_from_json(j), EmbedError);
}

TEST(Check, ReportsAreDeterministicAndPass) {
  h::CorpusSpec spec;
  spec.max_vertices = 6;
  spec.random_count = 20;
  for (auto mode : {h::CheckMode::DemTwo, h::CheckMode::TwoTwos, h::CheckMode::Thom, h::CheckMode::Critical}) {
    const auto a = h::run_theorem_check(spec, mode);
    const auto b = h::run_theorem_check(spec, mode);
    EXPECT_TRUE(a.ok) << h::to_string(mode);
    EXPECT_EQ(a.to_jsonl(), b.to_jsonl());
  }
}

TEST(Check, FanWitnessArchived) {
  h::CorpusSpec spec;
  spec.max_vertices = 6;
  spec.random_count = 20;
  const auto dir = std::filesystem::temp_directory_path() / "canvas_color_fan_test";
  std::filesystem::remove_all(dir);
  h::CheckOptions opt;
  opt.archive_dir = dir;
  const auto r = h::run_theorem_check(spec, h::CheckMode::BadPaths, opt);
  EXPECT_TRUE(r.ok);
  ASSERT_TRUE(r.summary.contains("fan_witness"));
  const auto file = dir / r.summary["fan_witness"]["file"].get<std::string>();
  ASSERT_TRUE(std::filesystem::exists(file));
  const Canvas c = h::canvas_from_json(h::read_json_file(file.string()));
  const auto& p = c.s.path;
  EXPECT_TRUE(has_fan_path(c.graph, p[0], p[1], p[2]));
  EXPECT_GE(bad_path_colorings(c.graph, {p[0], p[1], p[2]}, c.lists).size(), 2u);
  std::filesystem::remove_all(dir);
}

TEST(Check, CounterexampleIsArchived) {
  // A wrong report entry: feed the recorder a failure directly.
  const auto dir = std::filesystem::temp_directory_path() / "canvas_color_cx_test";
  std::filesystem::remove_all(dir);
  h::CheckOptions opt;
  opt.archive_dir = dir;
  h::detail::Recorder rec(h::CheckMode::DemTwo, h::CorpusSpec{}, opt);
  const auto g = triangle();
  const Canvas c{g, {{0, 1}, {2}}, uniform(g, {1, 2})};
  rec.add({{"id", "C3/x"}}, false, &c);
  const auto report = rec.finish();
  EXPECT_FALSE(report.ok);
  const auto name = report.lines.at(0).at("counterexample").get<std::string>();
  const Canvas back = h::canvas_from_json(h::read_json_file((dir / name).string()));
  EXPECT_EQ(h::canvas_to_json(back).dump(), h::canvas_to_json(c).dump());
  std::filesystem::remove_all(dir);
}
