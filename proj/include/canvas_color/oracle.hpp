#pragma once

// Exhaustive ground truth: backtracking L-coloring, verification, extension
// tests, criticality, and bad precolorings of three-vertex boundary paths.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "canvas_color/canvas.hpp"
#include "canvas_color/embed.hpp"

namespace canvas_color {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("BudgetExceeded: oracle time budget exhausted") {}
};

class InputColorable : public std::invalid_argument {
 public:
  InputColorable() : std::invalid_argument("InputColorable: canvas already has an L-coloring") {}
};

// Optional wall-clock cap for a single oracle search.
struct OracleBudget {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static OracleBudget unlimited() { return {}; }
  static OracleBudget milliseconds(long ms) {
    return {std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)};
  }
};

inline bool verify(const EmbeddedGraph& g, const ListAssignment& lists, const Coloring& coloring) {
  for (Vertex v : g.vertices()) {
    auto c = coloring.find(v);
    if (c == coloring.end()) return false;
    auto l = lists.find(v);
    if (l == lists.end() || !l->second.contains(c->second)) return false;
  }
  for (const Edge& e : g.edges())
    if (coloring.at(e.first) == coloring.at(e.second)) return false;
  return true;
}

namespace detail {

class Backtracker {
 public:
  Backtracker(const EmbeddedGraph& g, const ListAssignment& lists, const OracleBudget& budget)
      : budget_(budget) {
    verts_ = g.vertices();
    std::sort(verts_.begin(), verts_.end(), [&](Vertex a, Vertex b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
    std::map<Vertex, int> index;
    for (std::size_t i = 0; i < verts_.size(); ++i) index[verts_[i]] = static_cast<int>(i);
    nbrs_.resize(verts_.size());
    domain_.resize(verts_.size());
    color_.assign(verts_.size(), -1);
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      for (Vertex n : g.rotation(verts_[i])) nbrs_[i].push_back(index.at(n));
      domain_[i] = lists.at(verts_[i]).bits();
    }
  }

  std::optional<Coloring> run(const Coloring& pinned) {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      auto it = pinned.find(verts_[i]);
      if (it == pinned.end()) continue;
      if (!ColorSet::from_bits(domain_[i]).contains(it->second)) return std::nullopt;
      domain_[i] = ColorSet{it->second}.bits();
    }
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (!pinned.count(verts_[i])) continue;
      const std::uint64_t bit = domain_[i];
      color_[i] = std::countr_zero(bit);
      for (int n : nbrs_[i]) {
        domain_[n] &= ~bit;
        if (domain_[n] == 0) return std::nullopt;
      }
    }
    if (!search(0)) return std::nullopt;
    Coloring out;
    for (std::size_t i = 0; i < verts_.size(); ++i) out[verts_[i]] = color_[i];
    return out;
  }

 private:
  bool search(std::size_t i) {
    if (budget_.deadline && (++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > *budget_.deadline)
      throw BudgetExceeded();
    while (i < verts_.size() && color_[i] >= 0) ++i;
    if (i == verts_.size()) return true;
    for (std::uint64_t rest = domain_[i]; rest; rest &= rest - 1) {
      const int c = std::countr_zero(rest);
      const std::uint64_t bit = std::uint64_t{1} << c;
      color_[i] = c;
      std::vector<int> touched;
      bool dead = false;
      for (int n : nbrs_[i]) {
        if (color_[n] >= 0 || !(domain_[n] & bit)) continue;
        domain_[n] &= ~bit;
        touched.push_back(n);
        if (domain_[n] == 0) {
          dead = true;
          break;
        }
      }
      if (!dead && search(i + 1)) return true;
      for (int n : touched) domain_[n] |= bit;
      color_[i] = -1;
    }
    return false;
  }

  OracleBudget budget_;
  std::vector<Vertex> verts_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> color_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Some L-coloring extending `pinned`, or none if no such coloring exists.
// Static vertex order: degree descending, then id; colors ascending.
inline std::optional<Coloring> solve_exact(const EmbeddedGraph& g, const ListAssignment& lists,
                                           const Coloring& pinned = {},
                                           const OracleBudget& budget = OracleBudget::unlimited()) {
  return detail::Backtracker(g, lists, budget).run(pinned);
}

inline bool extends_from(const EmbeddedGraph& g, const ListAssignment& lists, const Coloring& precolored,
                         const OracleBudget& budget = OracleBudget::unlimited()) {
  return solve_exact(g, lists, precolored, budget).has_value();
}

inline std::set<Edge> s_edges(const SDesignation& s) {
  std::set<Edge> out;
  for (std::size_t i = 1; i < s.path.size(); ++i) out.insert(make_edge(s.path[i - 1], s.path[i]));
  return out;
}

inline bool is_critical(const Canvas& canvas, const OracleBudget& budget = OracleBudget::unlimited()) {
  if (solve_exact(canvas.graph, canvas.lists, {}, budget)) return false;
  const auto keep = s_edges(canvas.s);
  for (const Edge& e : canvas.graph.edges()) {
    if (keep.count(e)) continue;
    if (!solve_exact(canvas.graph.without_edges({e}), canvas.lists, {}, budget)) return false;
  }
  return true;
}

// Deletes non-S edges in ascending order while the canvas stays uncolorable,
// rescanning from the start after each deletion, then drops isolated non-S
// vertices.
inline Canvas extract_critical(const Canvas& canvas, const OracleBudget& budget = OracleBudget::unlimited()) {
  if (solve_exact(canvas.graph, canvas.lists, {}, budget)) throw InputColorable();
  const auto keep = s_edges(canvas.s);
  EmbeddedGraph g = canvas.graph;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : g.edges()) {
      if (keep.count(e)) continue;
      EmbeddedGraph smaller = g.without_edges({e});
      if (!solve_exact(smaller, canvas.lists, {}, budget)) {
        g = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  const auto s_verts = canvas.s.vertices();
  std::set<Vertex> drop;
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0 && !s_verts.count(v)) drop.insert(v);
  if (!drop.empty()) g = g.without_vertices(drop);
  ListAssignment lists;
  for (Vertex v : g.vertices()) lists[v] = canvas.lists.at(v);
  return Canvas{std::move(g), canvas.s, std::move(lists)};
}

struct StructureDefect {
  enum class Kind { InessentialCutvertex, InessentialChord, FilledShortCycle } kind;
  std::vector<Vertex> vertices;
};

inline const char* to_string(StructureDefect::Kind k) {
  switch (k) {
    case StructureDefect::Kind::InessentialCutvertex: return "InessentialCutvertex";
    case StructureDefect::Kind::InessentialChord: return "InessentialChord";
    case StructureDefect::Kind::FilledShortCycle: return "FilledShortCycle";
  }
  return "?";
}

// Cutvertices and chords with a component free of S, and cycles of length
// at most four with vertices inside. Critical canvases should have none.
inline std::vector<StructureDefect> structure_defects(const Canvas& canvas) {
  using Kind = StructureDefect::Kind;
  const auto& g = canvas.graph;
  const auto s = canvas.s.vertices();
  auto has_s_free_component = [&](const std::set<Vertex>& removed) {
    for (const auto& comp : components(g, removed)) {
      bool hit = false;
      for (Vertex v : comp) hit = hit || s.count(v);
      if (!hit) return true;
    }
    return false;
  };
  std::vector<StructureDefect> out;
  for (Vertex c : cutvertices(g))
    if (has_s_free_component({c})) out.push_back({Kind::InessentialCutvertex, {c}});
  for (const Edge& e : outer_walk_chords(g))
    if (has_s_free_component({e.first, e.second})) out.push_back({Kind::InessentialChord, {e.first, e.second}});
  for (const auto& c : short_cycles_with_interior(g))
    if (!c.interior.empty()) out.push_back({Kind::FilledShortCycle, c.cycle});
  return out;
}

// Proper L-colorings of the path p[0] p[1] p[2] that do not extend to g.
inline std::vector<Coloring> bad_path_colorings(const EmbeddedGraph& g, const std::array<Vertex, 3>& p,
                                                const ListAssignment& lists,
                                                const OracleBudget& budget = OracleBudget::unlimited()) {
  std::vector<Coloring> bad;
  for (Color a : lists.at(p[0]).to_vector())
    for (Color b : lists.at(p[1]).to_vector()) {
      if (b == a) continue;
      for (Color c : lists.at(p[2]).to_vector()) {
        if (c == b) continue;
        Coloring pin{{p[0], a}, {p[1], b}, {p[2], c}};
        if (!extends_from(g, lists, pin, budget)) bad.push_back(std::move(pin));
      }
    }
  return bad;
}

// A path from p1 to p3 through outer vertices that are all adjacent to p2.
inline bool has_fan_path(const EmbeddedGraph& g, Vertex p1, Vertex p2, Vertex p3) {
  auto usable = [&](Vertex w) { return w != p2 && g.on_outer_face(w) && g.adjacent(w, p2); };
  if (!usable(p1) || !usable(p3)) return false;
  std::set<Vertex> seen{p1};
  std::vector<Vertex> stack{p1};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == p3) return true;
    for (Vertex n : g.rotation(v))
      if (usable(n) && seen.insert(n).second) stack.push_back(n);
  }
  return false;
}

}  // namespace canvas_color
