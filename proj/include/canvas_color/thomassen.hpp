#pragma once

// Constructive five-list coloring of near-triangulation-like plane graphs
// with a precolored boundary edge, and the short-cycle extension built on it.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "canvas_color/canvas.hpp"
#include "canvas_color/embed.hpp"
#include "canvas_color/oracle.hpp"

namespace canvas_color {

// Raised when a colorer reaches a state its hypotheses rule out.
class SolverBug : public std::logic_error {
 public:
  explicit SolverBug(const std::string& what) : std::logic_error("SolverBug: " + what) {}
};

namespace detail {

inline Coloring restrict_to(const Coloring& c, const EmbeddedGraph& g) {
  Coloring out;
  for (const auto& [v, col] : c)
    if (g.has_vertex(v)) out[v] = col;
  return out;
}

inline std::optional<Vertex> outer_neighbor(const EmbeddedGraph& g, Vertex v) {
  for (Vertex n : g.rotation(v))
    if (g.is_outer_dart({v, n})) return n;
  return std::nullopt;
}

inline Coloring thom2(const EmbeddedGraph& g, const ListAssignment& lists, const Coloring& pins);

// Two adjacent pins on the outer cycle of a 2-connected graph.
inline Coloring thom2_block(const EmbeddedGraph& g, const ListAssignment& lists, Vertex p1, Vertex p2,
                            const Coloring& pins) {
  const auto chords = outer_chords(g);
  if (!chords.empty()) {
    const Edge xy = chords.front();
    std::set<Vertex> anchor{p1, p2};
    anchor.erase(xy.first);
    anchor.erase(xy.second);
    const auto sep = *peel_component(g, {xy.first, xy.second}, anchor);
    Coloring out = thom2(g.induced(sep.side_a), lists, pins);
    Coloring rest = thom2(g.induced(sep.side_b), lists, {{xy.first, out.at(xy.first)}, {xy.second, out.at(xy.second)}});
    out.merge(rest);
    return out;
  }

  const auto cycle = outer_cycle(g);
  const auto [before, after] = cycle_neighbors(cycle, p1);
  const Vertex vk = before == p2 ? after : before;
  const auto [vb, va] = cycle_neighbors(cycle, vk);
  const Vertex prev = vb == p1 ? va : vb;

  const ColorSet reserve = (lists.at(vk) - ColorSet{pins.at(p1)}).smallest(2);
  if (reserve.size() < 2) throw SolverBug("boundary vertex " + std::to_string(vk) + " has too few colors");
  std::set<Vertex> inner;
  for (Vertex n : g.rotation(vk))
    if (n != p1 && n != prev) inner.insert(n);
  Coloring out = thom2(g.without_vertices({vk}), reduce_lists(lists, inner, reserve), pins);
  out[vk] = (reserve - ColorSet{out.at(prev)}).smallest();
  return out;
}

// Pins: at most two precolored vertices; two pins must form a boundary edge.
inline Coloring thom2(const EmbeddedGraph& g, const ListAssignment& lists, const Coloring& pins) {
  Coloring out;
  if (g.empty()) return out;
  const auto comps = components(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      const EmbeddedGraph part = g.induced(comp);
      Coloring sub = thom2(part, lists, restrict_to(pins, part));
      out.merge(sub);
    }
    return out;
  }

  Coloring pin = restrict_to(pins, g);
  if (g.num_vertices() == 1) {
    const Vertex v = g.vertices().front();
    if (pin.empty()) pin[v] = lists.at(v).smallest();
    return pin;
  }
  if (pin.empty()) {
    const Vertex a = *g.outer_vertices().begin();
    pin[a] = lists.at(a).smallest();
  }
  if (pin.size() == 1) {
    const auto [c, col] = *pin.begin();
    const auto w = outer_neighbor(g, c);
    if (!w) throw SolverBug("pinned vertex " + std::to_string(c) + " is not on the outer face");
    const ColorSet rest = lists.at(*w) - ColorSet{col};
    if (rest.empty()) throw SolverBug("no color left next to the pin");
    pin[*w] = rest.smallest();
  }
  if (pin.size() != 2) throw SolverBug("more than two pinned vertices");
  const Vertex p1 = pin.begin()->first;
  const Vertex p2 = std::next(pin.begin())->first;
  if (!g.boundary_edge(p1, p2)) throw SolverBug("pins do not form a boundary edge");
  if (pin.at(p1) == pin.at(p2)) throw SolverBug("pins share a color");
  if (g.num_vertices() == 2) return pin;

  if (is_two_connected(g)) return thom2_block(g, lists, p1, p2, pin);

  // Walk the block tree outward from the block holding p1p2.
  auto bl = blocks(g);
  std::vector<bool> done(bl.size(), false);
  out = pin;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    if (bl[i].count(p1) && bl[i].count(p2)) {
      const EmbeddedGraph b = g.induced(bl[i]);
      out = b.num_vertices() == 2 ? pin : thom2_block(b, lists, p1, p2, pin);
      done[i] = true;
    }
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < bl.size(); ++i) {
      if (done[i]) continue;
      std::optional<Vertex> shared;
      for (Vertex v : bl[i])
        if (out.count(v)) shared = v;
      if (!shared) continue;
      Coloring sub = thom2(g.induced(bl[i]), lists, {{*shared, out.at(*shared)}});
      out.merge(sub);
      done[i] = true;
      progress = true;
    }
  }
  return out;
}

inline void check_result(const EmbeddedGraph& g, const ListAssignment& lists, const Coloring& c) {
  if (!verify(g, lists, c)) throw SolverBug("produced coloring fails verification");
}

}  // namespace detail

// Colors a canvas whose S is the boundary edge p1p2 with singleton lists.
inline Coloring color_with_precolored_edge(const EmbeddedGraph& g, Vertex p1, Vertex p2, const ListAssignment& lists) {
  if (auto v = canvas_violation(g, SDesignation{{p1, p2}, {}}, lists)) throw HypothesisViolation(*v);
  if (lists.at(p1).size() != 1 || lists.at(p2).size() != 1)
    throw HypothesisViolation(Violation{ViolationKind::HypothesisViolation, p1, "precolored vertices need singleton lists"});
  Coloring out = detail::thom2(g, lists, {{p1, lists.at(p1).smallest()}, {p2, lists.at(p2).smallest()}});
  detail::check_result(g, lists, out);
  return out;
}

// Extends a coloring of S (a path of at most two vertices) to the canvas.
inline Coloring color_with_colored_short_path(const Canvas& canvas, const Coloring& pinned) {
  const auto& s = canvas.s;
  if (s.path.size() > 2 || !s.isolated.empty())
    throw HypothesisViolation(Violation{ViolationKind::WrongSShape, std::nullopt, "S must be a path on at most two vertices"});
  if (auto v = canvas_violation(canvas.graph, s, canvas.lists)) throw HypothesisViolation(*v);
  Coloring pins;
  for (Vertex p : s.path) {
    auto it = pinned.find(p);
    if (it == pinned.end() || !canvas.lists.at(p).contains(it->second))
      throw HypothesisViolation(Violation{ViolationKind::SNotProperlyColorable, p, "S vertex lacks a color from its list"});
    pins[p] = it->second;
  }
  if (s.path.size() == 2 && pins.at(s.path[0]) == pins.at(s.path[1]))
    throw HypothesisViolation(Violation{ViolationKind::SNotProperlyColorable, s.path[1], "S coloring is not proper"});
  Coloring out = detail::thom2(canvas.graph, canvas.lists, pins);
  detail::check_result(canvas.graph, canvas.lists, out);
  return out;
}

// Colors the interior of a cycle of length at most four whose vertices are
// already colored, with interior lists of size >= 5. Returns interior colors.
inline Coloring extend_into_short_cycle_interior(const EmbeddedGraph& g, const std::vector<Vertex>& cycle,
                                                 const Coloring& boundary, const ListAssignment& lists) {
  const auto region = cycle_region(g, cycle);
  if (region.interior.empty()) return {};
  std::set<Vertex> disk(region.interior);
  disk.insert(cycle.begin(), cycle.end());
  EmbeddedGraph d = g.induced(disk);
  std::set<Edge> outside;
  for (const Edge& e : d.edges()) {
    if (region.interior.count(e.first) || region.interior.count(e.second)) continue;
    const bool on_cycle = [&] {
      for (std::size_t i = 0; i < cycle.size(); ++i)
        if (make_edge(cycle[i], cycle[(i + 1) % cycle.size()]) == e) return true;
      return false;
    }();
    if (!on_cycle && !region.interior_chords.count(e)) outside.insert(e);
  }
  if (!outside.empty()) d = d.without_edges(outside);

  Coloring pins;
  for (Vertex q : cycle) pins[q] = boundary.at(q);

  Coloring out;
  try {
    ListAssignment reduced = lists;
    std::set<Vertex> drop;
    for (std::size_t i = 2; i < cycle.size(); ++i) {
      const Vertex q = cycle[i];
      drop.insert(q);
      std::set<Vertex> victims;
      for (Vertex n : d.rotation(q))
        if (region.interior.count(n)) victims.insert(n);
      reduced = reduce_lists(reduced, victims, ColorSet{pins.at(q)});
    }
    out = detail::thom2(d.without_vertices(drop), reduced, {{cycle[0], pins.at(cycle[0])}, {cycle[1], pins.at(cycle[1])}});
    for (std::size_t i = 2; i < cycle.size(); ++i) out[cycle[i]] = pins.at(cycle[i]);
    if (!verify(d, lists, out)) out.clear();
  } catch (const std::exception&) {
    out.clear();
  }
  if (out.empty()) {
    auto exact = solve_exact(d, lists, pins);
    if (!exact) throw SolverBug("short cycle interior does not extend");
    out = std::move(*exact);
  }
  Coloring inner;
  for (Vertex v : region.interior) inner[v] = out.at(v);
  return inner;
}

}  // namespace canvas_color
