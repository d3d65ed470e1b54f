#pragma once

// Plane graph families for exhaustive and randomized checks. Every family is
// drawn with straight lines, so rotation systems come from angular order and
// the outer face is the unique negatively oriented face orbit.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canvas_color/embed.hpp"

namespace canvas_color::harness {

enum class Family { Cycles, ChordedCycles, Wheels, Fans, Stacked, Glued };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::Cycles: return "cycles";
    case Family::ChordedCycles: return "chorded-cycles";
    case Family::Wheels: return "wheels";
    case Family::Fans: return "fans";
    case Family::Stacked: return "stacked-triangulations";
    case Family::Glued: return "glued";
  }
  return "?";
}

inline std::set<Family> two_connected_families() {
  return {Family::Cycles, Family::ChordedCycles, Family::Wheels, Family::Fans, Family::Stacked};
}

using Point = std::pair<double, double>;

// Straight-line drawing: vertex i sits at points[i].
inline EmbeddedGraph from_drawing(const std::vector<Point>& points, const std::vector<Edge>& edge_list) {
  const int n = static_cast<int>(points.size());
  EmbeddedGraph::Rotation rot;
  for (int v = 0; v < n; ++v) rot[v];
  for (const Edge& e : edge_list) {
    rot[e.first].push_back(e.second);
    rot[e.second].push_back(e.first);
  }
  auto angle = [&](int from, int to) {
    return std::atan2(points[to].second - points[from].second, points[to].first - points[from].first);
  };
  for (auto& [v, nbrs] : rot)
    std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) { return angle(v, a) > angle(v, b); });

  std::vector<Vertex> vs(n);
  for (int v = 0; v < n; ++v) vs[v] = v;
  if (edge_list.empty()) return EmbeddedGraph::build(vs, rot, std::nullopt);

  auto succ = [&](Vertex at, Vertex from) {
    const auto& r = rot.at(at);
    const auto it = std::find(r.begin(), r.end(), from);
    return std::next(it) == r.end() ? r.front() : *std::next(it);
  };
  std::set<Dart> seen;
  std::optional<Dart> witness;
  double best = 0;
  for (const auto& [v, nbrs] : rot)
    for (Vertex n2 : nbrs) {
      const Dart start{v, n2};
      if (seen.count(start)) continue;
      double area = 0;
      Dart d = start;
      do {
        seen.insert(d);
        const auto& a = points[d.tail];
        const auto& b = points[d.head];
        area += a.first * b.second - b.first * a.second;
        d = Dart{d.head, succ(d.head, d.tail)};
      } while (!(d == start));
      // The outer orbit is the only negative one; a tree has a single orbit.
      if (!witness || area < best - 1e-9) {
        witness = start;
        best = area;
      }
    }
  return EmbeddedGraph::build(vs, rot, witness);
}

inline std::vector<Point> polygon(int n, double cx = 0, double cy = 0, double r = 1, double phase = 0) {
  std::vector<Point> out;
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    const double t = phase + 2 * pi * i / n;
    out.push_back({cx + r * std::cos(t), cy + r * std::sin(t)});
  }
  return out;
}

inline std::vector<Edge> cycle_edges(int n, int offset = 0) {
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i) out.push_back(make_edge(offset + i, offset + (i + 1) % n));
  return out;
}

inline EmbeddedGraph cycle_graph(int n) { return from_drawing(polygon(n), cycle_edges(n)); }

// Hub n inside the rim 0..n-1.
inline EmbeddedGraph wheel_graph(int rim) {
  auto pts = polygon(rim);
  pts.push_back({0, 0});
  auto edges = cycle_edges(rim);
  for (int i = 0; i < rim; ++i) edges.push_back(make_edge(i, rim));
  return from_drawing(pts, edges);
}

// Hub 0 on the outer face joined to every vertex of the path 1..k.
inline EmbeddedGraph fan_graph(int path_len) {
  std::vector<Point> pts{{0, 0}};
  const double pi = std::acos(-1.0);
  for (int i = 0; i < path_len; ++i) {
    const double t = pi * (0.15 + 0.7 * i / std::max(1, path_len - 1));
    pts.push_back({std::cos(t), std::sin(t)});
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= path_len; ++i) edges.push_back(make_edge(0, i));
  for (int i = 1; i < path_len; ++i) edges.push_back(make_edge(i, i + 1));
  return from_drawing(pts, edges);
}

// Every set of pairwise non-crossing diagonals of a convex n-gon.
inline std::vector<std::vector<Edge>> dissections(int n) {
  std::vector<Edge> diag;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) diag.push_back({a, b});
  auto crosses = [](Edge x, Edge y) {
    auto strictly_between = [](int lo, int hi, int v) { return lo < v && v < hi; };
    const bool y1 = strictly_between(x.first, x.second, y.first);
    const bool y2 = strictly_between(x.first, x.second, y.second);
    const bool shared = x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second;
    return !shared && y1 != y2;
  };
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == diag.size()) {
      out.push_back(chosen);
      return;
    }
    go(i + 1);
    for (const Edge& e : chosen)
      if (crosses(e, diag[i])) return;
    chosen.push_back(diag[i]);
    go(i + 1);
    chosen.pop_back();
  };
  go(0);
  return out;
}

// Breadth-first relabeling from an outer dart; equal codes mean the plane
// graphs with their outer faces are isomorphic.
inline std::vector<int> code_from(const EmbeddedGraph& g, Dart start) {
  std::map<Vertex, int> label;
  std::vector<Vertex> order{start.tail};
  std::map<Vertex, Vertex> ref{{start.tail, start.head}};
  label[start.tail] = 0;
  std::vector<int> code{static_cast<int>(g.num_vertices())};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    const auto& r = g.rotation(v);
    const auto at = std::find(r.begin(), r.end(), ref.at(v)) - r.begin();
    code.push_back(-1 - static_cast<int>(r.size()));
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Vertex n = r[(at + k) % r.size()];
      if (!label.count(n)) {
        label[n] = static_cast<int>(order.size());
        order.push_back(n);
        ref[n] = v;
      }
      code.push_back(label.at(n) * 2 + (g.is_outer_dart({v, n}) ? 1 : 0));
    }
  }
  return code;
}

inline std::vector<int> canonical_code(const EmbeddedGraph& g) {
  if (g.num_edges() == 0) return {static_cast<int>(g.num_vertices())};
  std::vector<int> best;
  for (const EmbeddedGraph& h : {g, g.mirrored()})
    for (const Dart& d : h.outer_darts()) {
      auto c = code_from(h, d);
      if (best.empty() || c < best) best = std::move(c);
    }
  return best;
}

namespace detail {

struct Drawing {
  std::vector<Point> points;
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> triangles;  // bounded triangular faces
};

inline Drawing base_triangle() {
  return {{{0, 0}, {12, 0}, {5, 9}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};
}

inline Drawing stack_into(const Drawing& d, std::size_t face) {
  Drawing out = d;
  const auto t = d.triangles[face];
  const int w = static_cast<int>(d.points.size());
  Point c{0, 0};
  for (int v : t) {
    c.first += d.points[v].first / 3;
    c.second += d.points[v].second / 3;
  }
  out.points.push_back(c);
  for (int v : t) out.edges.push_back(make_edge(v, w));
  out.triangles.erase(out.triangles.begin() + static_cast<long>(face));
  out.triangles.push_back({t[0], t[1], w});
  out.triangles.push_back({t[1], t[2], w});
  out.triangles.push_back({t[0], t[2], w});
  return out;
}

inline EmbeddedGraph draw(const Drawing& d) { return from_drawing(d.points, d.edges); }

}  // namespace detail

struct NamedGraph {
  Family family;
  std::string name;
  EmbeddedGraph graph;
};

// Families up to `max_vertices` vertices, deduplicated by canonical code,
// ordered by vertex count then family then construction order.
inline std::vector<NamedGraph> enumerate_small_plane_graphs(int max_vertices,
                                                            const std::set<Family>& families = two_connected_families()) {
  std::vector<NamedGraph> all;
  for (int n = 3; n <= max_vertices; ++n) {
    if (families.count(Family::Cycles)) all.push_back({Family::Cycles, "C" + std::to_string(n), cycle_graph(n)});
    if (families.count(Family::ChordedCycles)) {
      int k = 0;
      for (const auto& chords : dissections(n)) {
        if (chords.empty()) continue;
        auto edges = cycle_edges(n);
        edges.insert(edges.end(), chords.begin(), chords.end());
        all.push_back({Family::ChordedCycles, "C" + std::to_string(n) + "+d" + std::to_string(k++),
                       from_drawing(polygon(n), edges)});
      }
    }
    if (families.count(Family::Wheels) && n >= 4) all.push_back({Family::Wheels, "W" + std::to_string(n - 1), wheel_graph(n - 1)});
    if (families.count(Family::Fans) && n >= 4) all.push_back({Family::Fans, "F" + std::to_string(n - 1), fan_graph(n - 1)});
    if (families.count(Family::Glued)) {
      int k = 0;
      for (int a = 3; a <= n - 2; ++a) {
        const int b = n + 1 - a;
        if (b < 3 || b < a) continue;
        for (const auto& da : dissections(a))
          for (const auto& db : dissections(b)) {
            const double pi = std::acos(-1.0);
            auto pa = polygon(a, 1, 0, 1, pi);
            auto pb = polygon(b, -1, 0, 1, 0);
            // Vertex 0 of each polygon sits at the origin; merge them.
            std::vector<Point> pts = pa;
            for (int i = 1; i < b; ++i) pts.push_back(pb[i]);
            auto map_b = [&](int i) { return i == 0 ? 0 : a + i - 1; };
            std::vector<Edge> edges = cycle_edges(a);
            edges.insert(edges.end(), da.begin(), da.end());
            for (int i = 0; i < b; ++i) edges.push_back(make_edge(map_b(i), map_b((i + 1) % b)));
            for (const Edge& e : db) edges.push_back(make_edge(map_b(e.first), map_b(e.second)));
            all.push_back({Family::Glued, "G" + std::to_string(a) + "." + std::to_string(b) + "#" + std::to_string(k++),
                           from_drawing(pts, edges)});
          }
      }
    }
  }
  if (families.count(Family::Stacked)) {
    std::vector<detail::Drawing> level{detail::base_triangle()};
    for (int n = 4; n <= max_vertices; ++n) {
      std::vector<detail::Drawing> next;
      std::set<std::vector<int>> seen;
      for (const auto& d : level)
        for (std::size_t f = 0; f < d.triangles.size(); ++f) {
          auto e = detail::stack_into(d, f);
          if (seen.insert(canonical_code(detail::draw(e))).second) next.push_back(std::move(e));
        }
      int k = 0;
      for (const auto& d : next) all.push_back({Family::Stacked, "T" + std::to_string(n) + "#" + std::to_string(k++), detail::draw(d)});
      level = std::move(next);
    }
    all.push_back({Family::Stacked, "T3", detail::draw(detail::base_triangle())});
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const NamedGraph& x, const NamedGraph& y) { return x.graph.num_vertices() < y.graph.num_vertices(); });
  std::vector<NamedGraph> out;
  std::set<std::vector<int>> seen;
  for (auto& g : all)
    if (seen.insert(canonical_code(g.graph)).second) out.push_back(std::move(g));
  return out;
}

// Random stacking inside a triangle followed by edge deletions that keep
// the graph 2-connected. Same (n, seed) gives the same graph.
inline EmbeddedGraph generate_near_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("near-triangulation needs n >= 3");
  std::mt19937_64 rng(seed);
  detail::Drawing d = detail::base_triangle();
  for (int v = 3; v < n; ++v) {
    const std::size_t f = rng() % d.triangles.size();
    d = detail::stack_into(d, f);
  }
  EmbeddedGraph g = detail::draw(d);
  const int attempts = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  for (int i = 0; i < attempts; ++i) {
    const auto edges = g.edges();
    const Edge e = edges[rng() % edges.size()];
    EmbeddedGraph h = g.without_edges({e});
    if (is_two_connected(h)) g = std::move(h);
  }
  return g;
}

}  // namespace canvas_color::harness
