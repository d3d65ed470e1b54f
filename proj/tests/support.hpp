#pragma once

// Shared fixtures: small hand-built plane graphs and a brute-force
// list-coloring enumerator that shares no code with the oracle.

#include <functional>
#include <map>
#include <vector>

#include "canvas_color.hpp"

namespace cc_test {

using namespace canvas_color;

inline EmbeddedGraph triangle() { return harness::cycle_graph(3); }

// Two triangles 0-1-2 and 2-3-4 sharing vertex 2.
inline EmbeddedGraph bowtie() {
  return harness::from_drawing({{-2, 1}, {-2, -1}, {0, 0}, {2, -1}, {2, 1}},
                               {make_edge(0, 1), make_edge(1, 2), make_edge(0, 2), make_edge(2, 3), make_edge(3, 4),
                                make_edge(2, 4)});
}

// n-gon with extra straight diagonals.
inline EmbeddedGraph chorded(int n, std::vector<Edge> chords) {
  auto edges = harness::cycle_edges(n);
  edges.insert(edges.end(), chords.begin(), chords.end());
  return harness::from_drawing(harness::polygon(n), edges);
}

// Outer n-gon with one interior vertex n joined to the given rim vertices.
inline EmbeddedGraph hub_inside(int n, const std::vector<int>& spokes) {
  auto pts = harness::polygon(n);
  pts.push_back({0, 0});
  auto edges = harness::cycle_edges(n);
  for (int i : spokes) edges.push_back(make_edge(i, n));
  return harness::from_drawing(pts, edges);
}

inline ListAssignment uniform(const EmbeddedGraph& g, ColorSet colors) {
  ListAssignment out;
  for (Vertex v : g.vertices()) out[v] = colors;
  return out;
}

// 5-lists inside, 3-lists on the outer face.
inline ListAssignment standard(const EmbeddedGraph& g) {
  ListAssignment out;
  for (Vertex v : g.vertices()) out[v] = g.on_outer_face(v) ? ColorSet{1, 2, 3} : ColorSet{1, 2, 3, 4, 5};
  return out;
}

// Number of proper L-colorings by plain product enumeration.
inline long count_colorings(const EmbeddedGraph& g, const ListAssignment& lists, const Coloring& pinned = {}) {
  const auto& vs = g.vertices();
  std::map<Vertex, Color> cur;
  long count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == vs.size()) {
      for (const Edge& e : g.edges())
        if (cur.at(e.first) == cur.at(e.second)) return;
      ++count;
      return;
    }
    const Vertex v = vs[i];
    auto it = pinned.find(v);
    for (Color c : lists.at(v).to_vector()) {
      if (it != pinned.end() && it->second != c) continue;
      cur[v] = c;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

}  // namespace cc_test
