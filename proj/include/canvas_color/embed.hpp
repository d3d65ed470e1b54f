#pragma once

// Combinatorial plane graphs: rotation systems, face orbits, the outer face,
// and the structural queries (blocks, chords, separations, short cycles)
// used by the colorers.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canvas_color {

using Vertex = int;

// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;

  Dart reversed() const { return {head, tail}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

enum class EmbedErrorKind {
  NonSymmetricRotation,
  EulerViolation,
  BadOuterWitness,
  NotConnected,
  NotTwoConnected,
  InvalidSeparation,
};

inline const char* to_string(EmbedErrorKind kind) {
  switch (kind) {
    case EmbedErrorKind::NonSymmetricRotation: return "NonSymmetricRotation";
    case EmbedErrorKind::EulerViolation: return "EulerViolation";
    case EmbedErrorKind::BadOuterWitness: return "BadOuterWitness";
    case EmbedErrorKind::NotConnected: return "NotConnected";
    case EmbedErrorKind::NotTwoConnected: return "NotTwoConnected";
    case EmbedErrorKind::InvalidSeparation: return "InvalidSeparation";
  }
  return "?";
}

class EmbedError : public std::runtime_error {
 public:
  EmbedError(EmbedErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  EmbedErrorKind kind() const noexcept { return kind_; }

 private:
  EmbedErrorKind kind_;
};

// A walk in the graph. Closed walks do not repeat their first vertex at the end.
struct Walk {
  std::vector<Vertex> vertices;
  bool closed = true;

  std::size_t length() const {
    if (closed) return vertices.size();
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
};

enum class SeparationKind { Cutvertex, Chord };

// G = G[side_a] ∪ G[side_b] with side_a ∩ side_b = attachment.
struct Separation {
  SeparationKind kind = SeparationKind::Cutvertex;
  std::vector<Vertex> attachment;
  std::set<Vertex> side_a;
  std::set<Vertex> side_b;
};

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

// Plane graph given by a rotation system (clockwise neighbor order per vertex)
// plus a designated outer face.
//
// Faces are the orbits of next(u->v) = (v -> successor of u in rotation(v)).
// Immutable; every structural edit returns a new graph. Derived graphs keep
// track of which orbits lie in the region of the original outer face, so the
// outer face stays correct under vertex and edge deletion.
class EmbeddedGraph {
 public:
  using Rotation = std::map<Vertex, std::vector<Vertex>>;

  EmbeddedGraph() = default;

  // Validates symmetry, simplicity, Euler's formula and the witness.
  // The witness is a dart on the outer face; it must be absent exactly when
  // the graph has no edges. Only connected graphs are accepted here.
  static EmbeddedGraph build(std::vector<Vertex> vertices, Rotation rotation,
                             std::optional<Dart> outer_witness) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw EmbedError(EmbedErrorKind::NonSymmetricRotation, "duplicate vertex id");
    const std::set<Vertex> known(vertices.begin(), vertices.end());
    for (const auto& [v, nbrs] : rotation) {
      if (!known.count(v))
        throw EmbedError(EmbedErrorKind::NonSymmetricRotation,
                         "rotation given for unknown vertex " + std::to_string(v));
      std::set<Vertex> seen;
      for (Vertex n : nbrs) {
        if (n == v)
          throw EmbedError(EmbedErrorKind::NonSymmetricRotation, "loop at " + std::to_string(v));
        if (!known.count(n))
          throw EmbedError(EmbedErrorKind::NonSymmetricRotation,
                           "unknown neighbor " + std::to_string(n) + " of " + std::to_string(v));
        if (!seen.insert(n).second)
          throw EmbedError(EmbedErrorKind::NonSymmetricRotation,
                           "repeated neighbor " + std::to_string(n) + " at " + std::to_string(v));
      }
    }
    for (Vertex v : vertices) rotation[v];  // isolated vertices get an empty rotation
    for (const auto& [v, nbrs] : rotation) {
      for (Vertex n : nbrs) {
        const auto& back = rotation.at(n);
        if (std::find(back.begin(), back.end(), v) == back.end())
          throw EmbedError(EmbedErrorKind::NonSymmetricRotation,
                           std::to_string(v) + " lists " + std::to_string(n) + " but not vice versa");
      }
    }

    EmbeddedGraph g(std::move(vertices), std::move(rotation));
    const std::size_t comps = g.count_components();
    const long long euler = static_cast<long long>(g.num_vertices()) -
                            static_cast<long long>(g.num_edges()) +
                            static_cast<long long>(g.num_faces() + g.count_isolated());
    if (euler != 2 * static_cast<long long>(comps))
      throw EmbedError(EmbedErrorKind::EulerViolation,
                       "V-E+F=" + std::to_string(euler) + " with " + std::to_string(comps) +
                           " component(s)");
    if (comps > 1)
      throw EmbedError(EmbedErrorKind::NotConnected, "input graph must be connected");

    if (g.num_edges() == 0) {
      if (outer_witness)
        throw EmbedError(EmbedErrorKind::BadOuterWitness, "edgeless graph takes no witness");
      g.mark_outer({}, std::set<Vertex>(g.vertices_.begin(), g.vertices_.end()));
      return g;
    }
    if (!outer_witness || !g.has_dart(*outer_witness))
      throw EmbedError(EmbedErrorKind::BadOuterWitness, "witness is not a dart of the graph");
    g.mark_outer({*outer_witness}, {});
    return g;
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return face_of_.size() / 2; }
  std::size_t num_faces() const { return faces_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(Vertex v) const { return rotation_.count(v) != 0; }

  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(v); }
  const Rotation& rotation_table() const { return rotation_; }
  std::size_t degree(Vertex v) const { return rotation_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const { return face_of_.count(Dart{a, b}) != 0; }
  bool has_dart(Dart d) const { return face_of_.count(d) != 0; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [d, f] : face_of_)
      if (d.tail < d.head) out.push_back({d.tail, d.head});
    return out;
  }

  Dart next_in_face(Dart d) const { return {d.head, successor(d.head, d.tail)}; }

  // Neighbor following `from` clockwise around `at`.
  Vertex successor(Vertex at, Vertex from) const {
    const auto& rot = rotation_.at(at);
    const auto it = std::find(rot.begin(), rot.end(), from);
    const auto i = static_cast<std::size_t>(it - rot.begin());
    return rot[(i + 1) % rot.size()];
  }

  Vertex predecessor(Vertex at, Vertex from) const {
    const auto& rot = rotation_.at(at);
    const auto it = std::find(rot.begin(), rot.end(), from);
    const auto i = static_cast<std::size_t>(it - rot.begin());
    return rot[(i + rot.size() - 1) % rot.size()];
  }

  std::size_t face_of(Dart d) const { return face_of_.at(d); }
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  bool is_outer_face(std::size_t f) const { return outer_face_.at(f); }
  bool is_outer_dart(Dart d) const { return outer_face_.at(face_of_.at(d)); }
  bool on_outer_face(Vertex v) const { return outer_vertices_.count(v) != 0; }
  const std::set<Vertex>& outer_vertices() const { return outer_vertices_; }

  // Smallest dart of the outer face, if the graph has edges.
  std::optional<Dart> outer_witness() const {
    for (const auto& [d, f] : face_of_)
      if (outer_face_[f]) return d;
    return std::nullopt;
  }

  bool boundary_edge(Vertex a, Vertex b) const {
    return adjacent(a, b) && (is_outer_dart({a, b}) || is_outer_dart({b, a}));
  }

  EmbeddedGraph induced(const std::set<Vertex>& keep) const { return derive(keep, {}); }

  EmbeddedGraph without_vertices(const std::set<Vertex>& drop) const {
    std::set<Vertex> keep;
    for (Vertex v : vertices_)
      if (!drop.count(v)) keep.insert(v);
    return derive(keep, {});
  }

  EmbeddedGraph without_edges(const std::set<Edge>& drop) const {
    return derive(std::set<Vertex>(vertices_.begin(), vertices_.end()), drop);
  }

  // New vertex w adjacent to a and b, drawn in the outer face next to the
  // boundary edge ab so that w lies on the new outer face.
  EmbeddedGraph with_vertex_beside_outer_edge(Vertex w, Vertex a, Vertex b) const {
    if (has_vertex(w)) throw std::invalid_argument("vertex id already in use");
    Dart d{a, b};
    if (!has_dart(d)) throw std::invalid_argument("not an edge");
    if (!is_outer_dart(d)) d = d.reversed();
    if (!is_outer_dart(d)) throw std::invalid_argument("edge is not on the outer face");

    Rotation rot = rotation_;
    auto& rx = rot[d.tail];
    rx.insert(std::find(rx.begin(), rx.end(), d.head), w);
    auto& ry = rot[d.head];
    ry.insert(std::find(ry.begin(), ry.end(), d.tail) + 1, w);
    rot[w] = {d.tail, d.head};

    std::set<Dart> seeds = outer_darts();
    seeds.erase(d);
    seeds.insert({d.tail, w});
    seeds.insert({w, d.head});
    std::vector<Vertex> vs = vertices_;
    vs.insert(std::upper_bound(vs.begin(), vs.end(), w), w);
    EmbeddedGraph g(std::move(vs), std::move(rot));
    g.mark_outer(seeds, {});
    return g;
  }

  // Adds edge ab across bounded face `face`, using the first corner of each
  // endpoint along the face.
  EmbeddedGraph with_edge_in_face(Vertex a, Vertex b, std::size_t face) const {
    if (a == b || adjacent(a, b)) throw std::invalid_argument("edge would not be simple");
    if (outer_face_.at(face)) throw std::invalid_argument("edges are only added in bounded faces");
    const auto into_a = corner_in_face(a, face);
    const auto into_b = corner_in_face(b, face);
    if (!into_a || !into_b) throw std::invalid_argument("endpoint not on face");
    Rotation rot = rotation_;
    auto& ra = rot[a];
    ra.insert(std::find(ra.begin(), ra.end(), into_a->tail) + 1, b);
    auto& rb = rot[b];
    rb.insert(std::find(rb.begin(), rb.end(), into_b->tail) + 1, a);
    EmbeddedGraph g(vertices_, std::move(rot));
    g.mark_outer(outer_darts(), {});
    return g;
  }

  // New degree-one vertex w hanging off a inside `face`.
  EmbeddedGraph with_pendant_in_face(Vertex w, Vertex a, std::size_t face) const {
    if (has_vertex(w)) throw std::invalid_argument("vertex id already in use");
    const auto into_a = corner_in_face(a, face);
    if (!into_a) throw std::invalid_argument("vertex not on face");
    Rotation rot = rotation_;
    auto& ra = rot[a];
    ra.insert(std::find(ra.begin(), ra.end(), into_a->tail) + 1, w);
    rot[w] = {a};
    std::set<Dart> seeds = outer_darts();
    if (outer_face_.at(face)) {
      seeds.insert({a, w});
      seeds.insert({w, a});
    }
    std::vector<Vertex> vs = vertices_;
    vs.insert(std::upper_bound(vs.begin(), vs.end(), w), w);
    EmbeddedGraph g(std::move(vs), std::move(rot));
    g.mark_outer(seeds, {});
    return g;
  }

  // Reflection: reverses every rotation; the outer face maps to the reversed darts.
  EmbeddedGraph mirrored() const {
    Rotation rot = rotation_;
    for (auto& [v, nbrs] : rot) std::reverse(nbrs.begin(), nbrs.end());
    std::set<Dart> seeds;
    for (const Dart& d : outer_darts()) seeds.insert(d.reversed());
    EmbeddedGraph g(vertices_, std::move(rot));
    g.mark_outer(seeds, isolated_outer());
    return g;
  }

  EmbeddedGraph relabeled(const std::map<Vertex, Vertex>& to) const {
    Rotation rot;
    for (const auto& [v, nbrs] : rotation_) {
      auto& out = rot[to.at(v)];
      for (Vertex n : nbrs) out.push_back(to.at(n));
    }
    std::vector<Vertex> vs;
    for (Vertex v : vertices_) vs.push_back(to.at(v));
    std::sort(vs.begin(), vs.end());
    std::set<Dart> seeds;
    for (const Dart& d : outer_darts()) seeds.insert({to.at(d.tail), to.at(d.head)});
    std::set<Vertex> iso;
    for (Vertex v : isolated_outer()) iso.insert(to.at(v));
    EmbeddedGraph g(std::move(vs), std::move(rot));
    g.mark_outer(seeds, iso);
    return g;
  }

  std::set<Dart> outer_darts() const {
    std::set<Dart> out;
    for (const auto& [d, f] : face_of_)
      if (outer_face_[f]) out.insert(d);
    return out;
  }

 private:
  EmbeddedGraph(std::vector<Vertex> vertices, Rotation rotation)
      : vertices_(std::move(vertices)), rotation_(std::move(rotation)) {
    for (Vertex v : vertices_) rotation_[v];
    trace_faces();
  }

  void trace_faces() {
    face_of_.clear();
    faces_.clear();
    for (const auto& [v, nbrs] : rotation_)
      for (Vertex n : nbrs) face_of_[Dart{v, n}] = static_cast<std::size_t>(-1);
    for (auto& [start, f] : face_of_) {
      if (f != static_cast<std::size_t>(-1)) continue;
      const std::size_t id = faces_.size();
      faces_.emplace_back();
      Dart d = start;
      do {
        face_of_[d] = id;
        faces_[id].push_back(d);
        d = next_in_face(d);
      } while (!(d == start));
    }
    outer_face_.assign(faces_.size(), false);
  }

  void mark_outer(const std::set<Dart>& seeds, const std::set<Vertex>& isolated) {
    outer_face_.assign(faces_.size(), false);
    outer_vertices_.clear();
    for (const Dart& d : seeds) {
      auto it = face_of_.find(d);
      if (it != face_of_.end()) outer_face_[it->second] = true;
    }
    for (std::size_t f = 0; f < faces_.size(); ++f)
      if (outer_face_[f])
        for (const Dart& d : faces_[f]) outer_vertices_.insert(d.tail);
    for (Vertex v : isolated)
      if (has_vertex(v) && rotation_.at(v).empty()) outer_vertices_.insert(v);
  }

  std::set<Vertex> isolated_outer() const {
    std::set<Vertex> out;
    for (Vertex v : outer_vertices_)
      if (rotation_.at(v).empty()) out.insert(v);
    return out;
  }

  std::optional<Dart> corner_in_face(Vertex v, std::size_t face) const {
    for (const Dart& d : faces_.at(face))
      if (d.head == v) return d;
    return std::nullopt;
  }

  std::size_t count_isolated() const {
    std::size_t n = 0;
    for (const auto& [v, nbrs] : rotation_) n += nbrs.empty() ? 1 : 0;
    return n;
  }

  std::size_t count_components() const {
    std::set<Vertex> seen;
    std::size_t comps = 0;
    for (Vertex s : vertices_) {
      if (seen.count(s)) continue;
      ++comps;
      std::vector<Vertex> stack{s};
      seen.insert(s);
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex n : rotation_.at(v))
          if (seen.insert(n).second) stack.push_back(n);
      }
    }
    return comps;
  }

  // Subgraph on `keep` minus `drop`. Old faces merged by a deleted edge are
  // united; a new orbit is outer iff its old faces belong to the outer class.
  EmbeddedGraph derive(const std::set<Vertex>& keep, const std::set<Edge>& drop) const {
    Rotation rot;
    std::vector<Vertex> vs;
    for (Vertex v : vertices_) {
      if (!keep.count(v)) continue;
      vs.push_back(v);
      auto& out = rot[v];
      for (Vertex n : rotation_.at(v))
        if (keep.count(n) && !drop.count(make_edge(v, n))) out.push_back(n);
    }

    detail::DisjointSets classes(faces_.size());
    for (const auto& [d, f] : face_of_) {
      if (d.tail > d.head) continue;
      const bool removed = !keep.count(d.tail) || !keep.count(d.head) || drop.count({d.tail, d.head});
      if (removed) classes.unite(f, face_of_.at(d.reversed()));
    }
    std::optional<std::size_t> outer_root;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (!outer_face_[f]) continue;
      if (outer_root)
        classes.unite(*outer_root, f);
      else
        outer_root = f;
    }
    if (outer_root) outer_root = classes.find(*outer_root);

    EmbeddedGraph g(std::move(vs), std::move(rot));
    std::set<Dart> seeds;
    if (outer_root)
      for (const auto& [d, f] : g.face_of_)
        if (classes.find(face_of_.at(d)) == *outer_root) seeds.insert(d);
    std::set<Vertex> iso;
    for (const auto& [v, nbrs] : g.rotation_) {
      if (!nbrs.empty()) continue;
      const auto& old = rotation_.at(v);
      if (old.empty()) {
        if (outer_vertices_.count(v)) iso.insert(v);
      } else if (outer_root && classes.find(face_of_.at(Dart{v, old.front()})) == *outer_root) {
        iso.insert(v);
      }
    }
    g.mark_outer(seeds, iso);
    return g;
  }

  std::vector<Vertex> vertices_;
  Rotation rotation_;
  std::map<Dart, std::size_t> face_of_;
  std::vector<std::vector<Dart>> faces_;
  std::vector<bool> outer_face_;
  std::set<Vertex> outer_vertices_;
};

inline EmbeddedGraph build_embedded(std::vector<Vertex> vertices, EmbeddedGraph::Rotation rotation,
                                    std::optional<Dart> outer_witness) {
  return EmbeddedGraph::build(std::move(vertices), std::move(rotation), outer_witness);
}

// ---------------------------------------------------------------------------
// Connectivity

// Components of g with `removed` deleted, ordered by smallest vertex.
inline std::vector<std::set<Vertex>> components(const EmbeddedGraph& g,
                                                const std::set<Vertex>& removed = {}) {
  std::vector<std::set<Vertex>> out;
  std::set<Vertex> seen(removed);
  for (Vertex s : g.vertices()) {
    if (seen.count(s)) continue;
    std::set<Vertex> comp{s};
    std::vector<Vertex> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex n : g.rotation(v))
        if (seen.insert(n).second) {
          comp.insert(n);
          stack.push_back(n);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const EmbeddedGraph& g) { return components(g).size() <= 1; }

namespace detail {

// Hopcroft-Tarjan lowpoint search; collects articulation points and the
// vertex sets of biconnected components (bridges give two-vertex blocks).
struct BlockSearch {
  const EmbeddedGraph& g;
  std::map<Vertex, int> order;
  std::map<Vertex, int> low;
  std::vector<Edge> stack;
  std::set<Vertex> cut;
  std::vector<std::set<Vertex>> blocks;
  int counter = 0;

  explicit BlockSearch(const EmbeddedGraph& graph) : g(graph) {
    for (Vertex s : g.vertices()) {
      if (order.count(s)) continue;
      if (g.degree(s) == 0) {
        blocks.push_back({s});
        order[s] = counter++;
        continue;
      }
      int children = 0;
      order[s] = low[s] = counter++;
      for (Vertex n : g.rotation(s)) {
        if (order.count(n)) continue;
        ++children;
        stack.push_back(make_edge(s, n));
        visit(n, s);
        pop_block(s, n);
      }
      if (children > 1) cut.insert(s);
    }
  }

  void visit(Vertex v, Vertex parent) {
    order[v] = low[v] = counter++;
    for (Vertex n : g.rotation(v)) {
      if (n == parent) continue;
      if (!order.count(n)) {
        stack.push_back(make_edge(v, n));
        visit(n, v);
        low[v] = std::min(low[v], low[n]);
        if (low[n] >= order[v]) {
          cut.insert(v);
          pop_block(v, n);
        }
      } else if (order[n] < order[v]) {
        stack.push_back(make_edge(v, n));
        low[v] = std::min(low[v], order[n]);
      }
    }
  }

  void pop_block(Vertex v, Vertex child) {
    const Edge stop = make_edge(v, child);
    std::set<Vertex> block;
    while (!stack.empty()) {
      const Edge e = stack.back();
      stack.pop_back();
      block.insert(e.first);
      block.insert(e.second);
      if (e == stop) break;
    }
    blocks.push_back(std::move(block));
  }
};

}  // namespace detail

inline std::set<Vertex> cutvertices(const EmbeddedGraph& g) { return detail::BlockSearch(g).cut; }

inline bool is_two_connected(const EmbeddedGraph& g) {
  return g.num_vertices() >= 3 && is_connected(g) && cutvertices(g).empty();
}

// Vertex sets of the blocks, sorted.
inline std::vector<std::set<Vertex>> blocks(const EmbeddedGraph& g) {
  auto out = detail::BlockSearch(g).blocks;
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Outer boundary

// Boundary walk of the outer face starting from its smallest dart.
inline Walk outer_walk(const EmbeddedGraph& g) {
  if (g.num_vertices() == 1) return Walk{{g.vertices().front()}, true};
  if (!is_connected(g)) throw EmbedError(EmbedErrorKind::NotConnected, "outer walk of a disconnected graph");
  const auto start = g.outer_witness();
  if (!start) throw EmbedError(EmbedErrorKind::NotConnected, "graph has no edges");
  Walk w;
  Dart d = *start;
  do {
    w.vertices.push_back(d.tail);
    d = g.next_in_face(d);
  } while (!(d == *start));
  return w;
}

// Outer cycle of a 2-connected graph.
inline std::vector<Vertex> outer_cycle(const EmbeddedGraph& g) {
  if (!is_two_connected(g)) throw EmbedError(EmbedErrorKind::NotTwoConnected, "outer cycle needs a 2-connected graph");
  return outer_walk(g).vertices;
}

// Edges joining two outer vertices that do not bound the outer face.
// Works for any graph; for 2-connected graphs these are the outer-cycle chords.
inline std::vector<Edge> outer_walk_chords(const EmbeddedGraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (g.on_outer_face(e.first) && g.on_outer_face(e.second) && !g.boundary_edge(e.first, e.second))
      out.push_back(e);
  return out;
}

inline std::vector<Edge> outer_chords(const EmbeddedGraph& g) {
  if (!is_two_connected(g)) throw EmbedError(EmbedErrorKind::NotTwoConnected, "chords need a 2-connected graph");
  return outer_walk_chords(g);
}

// Neighbors of v along the outer cycle of a 2-connected graph.
inline std::pair<Vertex, Vertex> cycle_neighbors(const std::vector<Vertex>& cycle, Vertex v) {
  const auto it = std::find(cycle.begin(), cycle.end(), v);
  const auto i = static_cast<std::size_t>(it - cycle.begin());
  const std::size_t n = cycle.size();
  return {cycle[(i + n - 1) % n], cycle[(i + 1) % n]};
}

// ---------------------------------------------------------------------------
// Separations

inline bool edge_separates(const EmbeddedGraph& g, Vertex u, Vertex v, Vertex x, Vertex y) {
  for (const auto& comp : components(g, {u, v}))
    if (comp.count(x)) return !comp.count(y);
  return false;
}

inline void check_separation(const EmbeddedGraph& g, const Separation& sep) {
  const std::set<Vertex> att(sep.attachment.begin(), sep.attachment.end());
  const std::size_t want = sep.kind == SeparationKind::Cutvertex ? 1 : 2;
  if (att.size() != want || sep.attachment.size() != want)
    throw EmbedError(EmbedErrorKind::InvalidSeparation, "wrong attachment size");
  if (sep.kind == SeparationKind::Chord && !g.adjacent(sep.attachment[0], sep.attachment[1]))
    throw EmbedError(EmbedErrorKind::InvalidSeparation, "chord attachment is not an edge");
  std::set<Vertex> both;
  std::set_intersection(sep.side_a.begin(), sep.side_a.end(), sep.side_b.begin(), sep.side_b.end(),
                        std::inserter(both, both.end()));
  if (both != att) throw EmbedError(EmbedErrorKind::InvalidSeparation, "sides must meet in the attachment");
  std::set<Vertex> all(sep.side_a);
  all.insert(sep.side_b.begin(), sep.side_b.end());
  if (all != std::set<Vertex>(g.vertices().begin(), g.vertices().end()))
    throw EmbedError(EmbedErrorKind::InvalidSeparation, "sides must cover the graph");
  if (sep.side_a.size() == att.size() || sep.side_b.size() == att.size())
    throw EmbedError(EmbedErrorKind::InvalidSeparation, "a side is empty beyond the attachment");
  for (const Edge& e : g.edges()) {
    const bool a_only = (sep.side_a.count(e.first) && !att.count(e.first)) ||
                        (sep.side_a.count(e.second) && !att.count(e.second));
    const bool b_only = (sep.side_b.count(e.first) && !att.count(e.first)) ||
                        (sep.side_b.count(e.second) && !att.count(e.second));
    if (a_only && b_only) throw EmbedError(EmbedErrorKind::InvalidSeparation, "edge crosses the separation");
  }
}

// Separation at `attachment` whose side A collects every component of
// G - attachment that meets `anchor`; side B takes the rest.
inline Separation separate(const EmbeddedGraph& g, std::vector<Vertex> attachment,
                           const std::set<Vertex>& anchor) {
  Separation sep;
  sep.kind = attachment.size() == 1 ? SeparationKind::Cutvertex : SeparationKind::Chord;
  const std::set<Vertex> att(attachment.begin(), attachment.end());
  sep.side_a = att;
  sep.side_b = att;
  for (const auto& comp : components(g, att)) {
    const bool anchored = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return anchor.count(v); });
    (anchored ? sep.side_a : sep.side_b).insert(comp.begin(), comp.end());
  }
  sep.attachment = std::move(attachment);
  check_separation(g, sep);
  return sep;
}

// Separation whose side B is the first component of G - attachment that
// avoids `anchor`; side A takes everything else. With one component on side B
// the attachment stays on the outer face of G[side_b].
inline std::optional<Separation> peel_component(const EmbeddedGraph& g, std::vector<Vertex> attachment,
                                                const std::set<Vertex>& anchor) {
  const std::set<Vertex> att(attachment.begin(), attachment.end());
  const auto parts = components(g, att);
  if (parts.size() < 2) return std::nullopt;
  for (const auto& comp : parts) {
    if (std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return anchor.count(v) != 0; })) continue;
    Separation sep;
    sep.kind = attachment.size() == 1 ? SeparationKind::Cutvertex : SeparationKind::Chord;
    sep.side_b = att;
    sep.side_b.insert(comp.begin(), comp.end());
    sep.side_a = att;
    for (Vertex v : g.vertices())
      if (!comp.count(v)) sep.side_a.insert(v);
    sep.attachment = std::move(attachment);
    check_separation(g, sep);
    return sep;
  }
  return std::nullopt;
}

inline std::pair<EmbeddedGraph, EmbeddedGraph> split_at(const EmbeddedGraph& g, const Separation& sep) {
  check_separation(g, sep);
  return {g.induced(sep.side_a), g.induced(sep.side_b)};
}

// ---------------------------------------------------------------------------
// Cycle interiors

struct CycleRegion {
  std::set<Vertex> interior;        // vertices strictly inside
  std::set<Edge> interior_chords;   // cycle diagonals drawn inside the disk
};

// Region bounded by a simple cycle. Faces reachable from the outer face
// without crossing a cycle edge are outside; the remaining faces are inside.
// Computed within the cycle's component.
inline CycleRegion cycle_region(const EmbeddedGraph& g, const std::vector<Vertex>& cycle) {
  std::set<Vertex> comp_of_cycle;
  for (const auto& comp : components(g))
    if (comp.count(cycle.front())) comp_of_cycle = comp;
  const EmbeddedGraph h = comp_of_cycle.size() == g.num_vertices() ? g : g.induced(comp_of_cycle);

  std::set<Edge> on_cycle;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    on_cycle.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));

  std::vector<bool> outside(h.num_faces(), false);
  std::vector<std::size_t> queue;
  for (std::size_t f = 0; f < h.num_faces(); ++f)
    if (h.is_outer_face(f)) {
      outside[f] = true;
      queue.push_back(f);
    }
  while (!queue.empty()) {
    const std::size_t f = queue.back();
    queue.pop_back();
    for (const Dart& d : h.faces()[f]) {
      if (on_cycle.count(make_edge(d.tail, d.head))) continue;
      const std::size_t other = h.face_of(d.reversed());
      if (!outside[other]) {
        outside[other] = true;
        queue.push_back(other);
      }
    }
  }
  const std::set<Vertex> on(cycle.begin(), cycle.end());
  CycleRegion region;
  for (std::size_t f = 0; f < h.num_faces(); ++f) {
    if (outside[f]) continue;
    for (const Dart& d : h.faces()[f]) {
      if (!on.count(d.tail)) region.interior.insert(d.tail);
      const Edge e = make_edge(d.tail, d.head);
      if (on.count(d.tail) && on.count(d.head) && !on_cycle.count(e)) region.interior_chords.insert(e);
    }
  }
  return region;
}

inline std::set<Vertex> interior_vertices(const EmbeddedGraph& g, const std::vector<Vertex>& cycle) {
  return cycle_region(g, cycle).interior;
}

// All simple cycles of length 3 and 4, each listed once, starting at its
// smallest vertex.
inline std::vector<std::vector<Vertex>> short_cycles(const EmbeddedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex a : g.vertices())
    for (Vertex b : g.rotation(a)) {
      if (b <= a) continue;
      for (Vertex c : g.rotation(b)) {
        if (c <= a) continue;
        if (g.adjacent(c, a) && b < c) out.push_back({a, b, c});
        for (Vertex d : g.rotation(c)) {
          if (d <= a || d == b || !g.adjacent(d, a) || b >= d) continue;
          out.push_back({a, b, c, d});
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

struct CycleWithInterior {
  std::vector<Vertex> cycle;
  std::set<Vertex> interior;
};

// Cycles of length at most four that enclose at least one vertex.
inline std::vector<CycleWithInterior> short_cycles_with_interior(const EmbeddedGraph& g) {
  std::vector<CycleWithInterior> out;
  for (auto& cycle : short_cycles(g)) {
    auto inside = interior_vertices(g, cycle);
    if (!inside.empty()) out.push_back({std::move(cycle), std::move(inside)});
  }
  return out;
}

}  // namespace canvas_color
