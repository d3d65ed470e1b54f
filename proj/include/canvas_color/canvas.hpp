#pragma once

// List assignments, canvases and the hypothesis checks for the two-lists
// theorems.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "canvas_color/embed.hpp"

namespace canvas_color {

using Color = int;

inline constexpr Color kMaxColor = 63;

// Set of colors in [0, 63].
class ColorSet {
 public:
  constexpr ColorSet() = default;
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static constexpr ColorSet from_bits(std::uint64_t bits) {
    ColorSet s;
    s.bits_ = bits;
    return s;
  }

  template <typename Range>
  static ColorSet of(const Range& colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Color c) const { return c >= 0 && c <= kMaxColor && ((bits_ >> c) & 1U); }

  void insert(Color c) {
    if (c < 0 || c > kMaxColor) throw std::out_of_range("color outside [0, 63]: " + std::to_string(c));
    bits_ |= std::uint64_t{1} << c;
  }
  void erase(Color c) {
    if (c >= 0 && c <= kMaxColor) bits_ &= ~(std::uint64_t{1} << c);
  }

  Color smallest() const {
    if (empty()) throw std::logic_error("smallest() of an empty color set");
    return std::countr_zero(bits_);
  }

  // The k smallest colors (all of them if fewer).
  ColorSet smallest(int k) const {
    ColorSet out;
    std::uint64_t rest = bits_;
    while (rest && k-- > 0) {
      const int c = std::countr_zero(rest);
      out.bits_ |= std::uint64_t{1} << c;
      rest &= rest - 1;
    }
    return out;
  }

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (std::uint64_t rest = bits_; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest));
    return out;
  }

  bool subset_of(const ColorSet& other) const { return (bits_ & ~other.bits_) == 0; }

  friend ColorSet operator-(ColorSet a, ColorSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend ColorSet operator&(ColorSet a, ColorSet b) { return from_bits(a.bits_ & b.bits_); }
  friend ColorSet operator|(ColorSet a, ColorSet b) { return from_bits(a.bits_ | b.bits_); }
  friend bool operator==(ColorSet a, ColorSet b) { return a.bits_ == b.bits_; }
  friend bool operator<(ColorSet a, ColorSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

inline std::string to_string(const ColorSet& s) {
  std::string out = "{";
  bool first = true;
  for (Color c : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

// Every vertex of the graph maps to a non-empty list.
using ListAssignment = std::map<Vertex, ColorSet>;
using Coloring = std::map<Vertex, Color>;

class ListError : public std::runtime_error {
 public:
  explicit ListError(Vertex v)
      : std::runtime_error("EmptiedList: list of vertex " + std::to_string(v) + " became empty"), vertex_(v) {}
  Vertex vertex() const noexcept { return vertex_; }

 private:
  Vertex vertex_;
};

// Removes `removed` from the lists of `victims`.
inline ListAssignment reduce_lists(ListAssignment lists, const std::set<Vertex>& victims, ColorSet removed) {
  for (Vertex v : victims) {
    auto it = lists.find(v);
    if (it == lists.end()) continue;
    it->second = it->second - removed;
    if (it->second.empty()) throw ListError(v);
  }
  return lists;
}

// S = a path (possibly empty or a single vertex) plus isolated vertices.
struct SDesignation {
  std::vector<Vertex> path;
  std::vector<Vertex> isolated;

  std::set<Vertex> vertices() const {
    std::set<Vertex> out(path.begin(), path.end());
    out.insert(isolated.begin(), isolated.end());
    return out;
  }
  friend bool operator==(const SDesignation&, const SDesignation&) = default;
};

struct Canvas {
  EmbeddedGraph graph;
  SDesignation s;
  ListAssignment lists;
};

enum class ViolationKind {
  MissingList,
  SNotAPath,
  SNotOnBoundary,
  InteriorListTooSmall,
  BoundaryListTooSmall,
  SNotProperlyColorable,
  WrongSShape,
  MixedPLists,
  UListTooSmall,
  NotTwoConnected,
  UAdjacentInternal,
  SeparatingChordAtP,
  HypothesisViolation,
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingList: return "MissingList";
    case ViolationKind::SNotAPath: return "SNotAPath";
    case ViolationKind::SNotOnBoundary: return "SNotOnBoundary";
    case ViolationKind::InteriorListTooSmall: return "InteriorListTooSmall";
    case ViolationKind::BoundaryListTooSmall: return "BoundaryListTooSmall";
    case ViolationKind::SNotProperlyColorable: return "SNotProperlyColorable";
    case ViolationKind::WrongSShape: return "WrongSShape";
    case ViolationKind::MixedPLists: return "MixedPLists";
    case ViolationKind::UListTooSmall: return "UListTooSmall";
    case ViolationKind::NotTwoConnected: return "NotTwoConnected";
    case ViolationKind::UAdjacentInternal: return "UAdjacentInternal";
    case ViolationKind::SeparatingChordAtP: return "SeparatingChordAtP";
    case ViolationKind::HypothesisViolation: return "HypothesisViolation";
  }
  return "?";
}

struct Violation {
  ViolationKind kind = ViolationKind::HypothesisViolation;
  std::optional<Vertex> witness;
  std::string message;
};

inline std::string to_string(const Violation& v) {
  std::string out = to_string(v.kind);
  if (v.witness) out += " at " + std::to_string(*v.witness);
  if (!v.message.empty()) out += ": " + v.message;
  return out;
}

class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(Violation v) : std::runtime_error(to_string(v)), violation_(std::move(v)) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

// Whether a path admits a proper coloring from its lists.
inline bool path_list_colorable(const std::vector<Vertex>& path, const ListAssignment& lists) {
  if (path.empty()) return true;
  ColorSet reachable = lists.at(path.front());
  for (std::size_t i = 1; i < path.size(); ++i) {
    const ColorSet here = lists.at(path[i]);
    ColorSet next;
    for (Color c : here.to_vector())
      if (!(reachable - ColorSet{c}).empty()) next.insert(c);
    reachable = next;
    if (reachable.empty()) return false;
  }
  return true;
}

// Checks, in this order: lists present and non-empty; S well formed; S on the
// outer boundary; interior lists >= 5; boundary lists >= 3 off S; S colorable.
inline std::optional<Violation> canvas_violation(const EmbeddedGraph& graph, const SDesignation& s,
                                                 const ListAssignment& lists) {
  for (Vertex v : graph.vertices()) {
    auto it = lists.find(v);
    if (it == lists.end() || it->second.empty())
      return Violation{ViolationKind::MissingList, v, "every vertex needs a non-empty list"};
  }

  std::set<Vertex> seen;
  for (Vertex v : s.path)
    if (!graph.has_vertex(v) || !seen.insert(v).second)
      return Violation{ViolationKind::SNotAPath, v, "path vertices must be distinct graph vertices"};
  for (std::size_t i = 1; i < s.path.size(); ++i)
    if (!graph.adjacent(s.path[i - 1], s.path[i]))
      return Violation{ViolationKind::SNotAPath, s.path[i], "consecutive path vertices must be adjacent"};
  for (Vertex v : s.isolated)
    if (!graph.has_vertex(v) || !seen.insert(v).second)
      return Violation{ViolationKind::SNotAPath, v, "isolated S vertices must be distinct and off the path"};

  for (Vertex v : seen)
    if (!graph.on_outer_face(v))
      return Violation{ViolationKind::SNotOnBoundary, v, "S vertex not on the outer face"};
  for (std::size_t i = 1; i < s.path.size(); ++i)
    if (!graph.boundary_edge(s.path[i - 1], s.path[i]))
      return Violation{ViolationKind::SNotOnBoundary, s.path[i], "path edge not on the outer face"};

  for (Vertex v : graph.vertices()) {
    const int size = lists.at(v).size();
    if (!graph.on_outer_face(v) && size < 5)
      return Violation{ViolationKind::InteriorListTooSmall, v, "interior list has " + std::to_string(size) + " colors"};
    if (graph.on_outer_face(v) && !seen.count(v) && size < 3)
      return Violation{ViolationKind::BoundaryListTooSmall, v, "boundary list has " + std::to_string(size) + " colors"};
  }

  if (!path_list_colorable(s.path, lists))
    return Violation{ViolationKind::SNotProperlyColorable, s.path.empty() ? std::nullopt : std::optional{s.path.front()},
                     "S has no proper L-coloring"};
  return std::nullopt;
}

inline std::variant<Canvas, Violation> validate_canvas(EmbeddedGraph graph, SDesignation s, ListAssignment lists) {
  if (auto v = canvas_violation(graph, s, lists)) return *v;
  return Canvas{std::move(graph), std::move(s), std::move(lists)};
}

// Canvas whose S is a path P with every list equal to a 2-set L0, plus one
// isolated vertex u.
struct DemTwoInstance {
  Canvas canvas;
  ColorSet l0;
  Vertex u = 0;

  const std::vector<Vertex>& path() const { return canvas.s.path; }
  const EmbeddedGraph& graph() const { return canvas.graph; }
  const ListAssignment& lists() const { return canvas.lists; }
};

struct ExceptionCertificate {
  std::vector<Vertex> odd_cycle;
  ColorSet witnessed_l0;
};

// Hypothesis checks on an already valid canvas, in order: S shape; P lists;
// |L(u)|; then, when |V(P)| >= 2, 2-connectivity, u against internal P
// vertices, and separating chords at P.
inline std::optional<Violation> demtwo_violation(const Canvas& canvas) {
  const auto& g = canvas.graph;
  const auto& s = canvas.s;
  if (s.path.empty() || s.isolated.size() != 1)
    return Violation{ViolationKind::WrongSShape, std::nullopt, "S must be a non-empty path plus one isolated vertex"};
  const Vertex u = s.isolated.front();

  const ColorSet l0 = canvas.lists.at(s.path.front());
  if (l0.size() != 2) return Violation{ViolationKind::MixedPLists, s.path.front(), "P lists must have exactly two colors"};
  for (Vertex p : s.path)
    if (!(canvas.lists.at(p) == l0)) return Violation{ViolationKind::MixedPLists, p, "P lists differ"};
  if (canvas.lists.at(u).size() < 2) return Violation{ViolationKind::UListTooSmall, u, "|L(u)| < 2"};

  if (s.path.size() < 2) return std::nullopt;
  if (!is_two_connected(g)) return Violation{ViolationKind::NotTwoConnected, std::nullopt, "|V(P)| >= 2 needs a 2-connected graph"};
  for (std::size_t i = 1; i + 1 < s.path.size(); ++i)
    if (g.adjacent(u, s.path[i])) return Violation{ViolationKind::UAdjacentInternal, s.path[i], "u adjacent to internal P vertex"};
  const std::set<Vertex> on_p(s.path.begin(), s.path.end());
  for (const Edge& e : outer_walk_chords(g)) {
    if (!on_p.count(e.first) && !on_p.count(e.second)) continue;
    if (e.first == u || e.second == u) continue;
    for (Vertex p : s.path) {
      if (p == e.first || p == e.second) continue;
      if (edge_separates(g, e.first, e.second, p, u))
        return Violation{ViolationKind::SeparatingChordAtP, p,
                         "chord " + std::to_string(e.first) + "-" + std::to_string(e.second) + " separates P from u"};
    }
  }
  return std::nullopt;
}

inline std::variant<DemTwoInstance, Violation> validate_demtwo(const Canvas& canvas) {
  if (auto v = demtwo_violation(canvas)) return *v;
  return DemTwoInstance{canvas, canvas.lists.at(canvas.s.path.front()), canvas.s.isolated.front()};
}

// Certificate iff L(u) = L0 and V(S) induces an odd cycle.
inline std::optional<ExceptionCertificate> detect_exception(const DemTwoInstance& inst) {
  if (!(inst.lists().at(inst.u) == inst.l0)) return std::nullopt;
  std::vector<Vertex> cycle = inst.path();
  cycle.push_back(inst.u);
  if (cycle.size() < 3 || cycle.size() % 2 == 0) return std::nullopt;
  const std::set<Vertex> on(cycle.begin(), cycle.end());
  const auto& g = inst.graph();
  for (Vertex v : cycle) {
    int inside = 0;
    for (Vertex n : g.rotation(v)) inside += on.count(n) ? 1 : 0;
    if (inside != 2) return std::nullopt;
  }
  // Degree two everywhere; P is a path, so closing it at u gives one cycle.
  if (!g.adjacent(cycle.back(), cycle.front()) || !g.adjacent(cycle.back(), cycle[cycle.size() - 2]))
    return std::nullopt;
  return ExceptionCertificate{std::move(cycle), inst.l0};
}

}  // namespace canvas_color
