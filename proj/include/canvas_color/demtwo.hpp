#pragma once

// Solver for canvases with a precolored-by-two-lists path P and one extra
// two-list vertex u, following the minimal-counterexample recursion case by
// case. Also the two-vertex entry point and the reduction that recovers the
// precolored-edge theorem from it.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "canvas_color/canvas.hpp"
#include "canvas_color/embed.hpp"
#include "canvas_color/oracle.hpp"
#include "canvas_color/thomassen.hpp"

namespace canvas_color {

enum class CaseLabel {
  ShortCycle,
  Split,
  Cutvertex,
  V1EqualsV2,
  BadChordA,
  BadChordB,
  PathShrink,
  ListTrim,
  ListsDiffer,
  NoSecondChord,
  SecondChord,
};

inline const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::ShortCycle: return "ShortCycle";
    case CaseLabel::Split: return "Split";
    case CaseLabel::Cutvertex: return "Cutvertex";
    case CaseLabel::V1EqualsV2: return "V1EqualsV2";
    case CaseLabel::BadChordA: return "BadChordA";
    case CaseLabel::BadChordB: return "BadChordB";
    case CaseLabel::PathShrink: return "PathShrink";
    case CaseLabel::ListTrim: return "ListTrim";
    case CaseLabel::ListsDiffer: return "ListsDiffer";
    case CaseLabel::NoSecondChord: return "NoSecondChord";
    case CaseLabel::SecondChord: return "SecondChord";
  }
  return "?";
}

struct TraceEntry {
  CaseLabel label = CaseLabel::Split;
  std::vector<Vertex> vertices;
  int depth = 0;
  std::size_t graph_size = 0;
  std::size_t path_size = 0;
  std::string note;
};

using CaseTrace = std::vector<TraceEntry>;

using SolveOutcome = std::variant<Coloring, ExceptionCertificate, Violation>;

struct DemTwoResult {
  SolveOutcome outcome;
  CaseTrace trace;
};

namespace detail {

using DemOutcome = std::variant<Coloring, ExceptionCertificate>;

inline ListAssignment lists_on(const EmbeddedGraph& g, const ListAssignment& lists) {
  ListAssignment out;
  for (Vertex v : g.vertices()) out[v] = lists.at(v);
  return out;
}

inline std::set<Vertex> neighbors_of_set(const EmbeddedGraph& g, const std::set<Vertex>& of) {
  std::set<Vertex> out;
  for (Vertex v : of)
    for (Vertex n : g.rotation(v))
      if (!of.count(n)) out.insert(n);
  return out;
}

// Colors P alternately from l0 so that no P vertex clashes with an already
// colored neighbor in `phi`. Tries the alternation starting with the smaller
// color first.
inline bool extend_path(const EmbeddedGraph& g, const std::vector<Vertex>& path, ColorSet l0, Coloring& phi) {
  const auto colors = l0.to_vector();
  for (int start = 0; start < 2; ++start) {
    Coloring trial = phi;
    bool ok = true;
    for (std::size_t i = 0; i < path.size() && ok; ++i) {
      const Color c = colors[(start + i) % 2];
      for (Vertex n : g.rotation(path[i])) {
        auto it = trial.find(n);
        if (it != trial.end() && it->second == c) ok = false;
      }
      trial[path[i]] = c;
    }
    if (ok) {
      phi = std::move(trial);
      return true;
    }
  }
  return false;
}

// Proper coloring of G[V(S)] with P from L0 and u from L(u).
inline std::optional<Coloring> color_s(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u,
                                       const ListAssignment& lists) {
  for (Color cu : lists.at(u).to_vector()) {
    Coloring phi{{u, cu}};
    if (extend_path(g, path, lists.at(path.front()), phi)) return phi;
  }
  return std::nullopt;
}

// Runs the boundary-edge colorer after checking its hypotheses.
inline Coloring finish_thom(const EmbeddedGraph& g, ListAssignment lists, const Coloring& pins) {
  lists = lists_on(g, lists);
  std::vector<Vertex> path;
  for (const auto& [v, c] : pins) {
    path.push_back(v);
    lists[v] = ColorSet{c};
  }
  if (auto bad = canvas_violation(g, SDesignation{path, {}}, lists))
    throw SolverBug("boundary-edge colorer called outside its hypotheses: " + to_string(*bad));
  return thom2(g, lists, pins);
}

inline Coloring merged(Coloring a, const Coloring& b) {
  for (const auto& [v, c] : b) a[v] = c;
  return a;
}

class DemTwoSolver {
 public:
  explicit DemTwoSolver(CaseTrace& trace) : trace_(trace) {}

  DemOutcome solve(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u, const ListAssignment& lists,
                   int depth) {
    depth_ = depth;
    const ColorSet l0 = lists.at(path.front());
    const DemTwoInstance inst{Canvas{g, SDesignation{path, {u}}, lists}, l0, u};
    if (auto cert = detect_exception(inst)) return *cert;

    std::set<Vertex> s_set(path.begin(), path.end());
    s_set.insert(u);

    if (g.num_vertices() == s_set.size()) {
      auto phi = color_s(g, path, u, lists);
      if (!phi) throw SolverBug("S has no coloring yet is not exceptional");
      return *phi;
    }

    if (auto r = short_cycle_case(g, path, u, lists)) return *r;
    if (auto r = split_case(g, path, u, lists, s_set)) return *r;
    if (auto r = cutvertex_case(g, path, u, lists)) return *r;

    const auto cycle = outer_cycle(g);
    const auto chords = outer_chords(g);
    for (const Edge& e : chords)
      if ((e.first != u && s_set.count(e.first)) || (e.second != u && s_set.count(e.second)))
        throw SolverBug("chord with an end in P survived the splits");

    Vertex v1 = 0;
    Vertex v2 = 0;
    if (path.size() == 1) {
      std::tie(v1, v2) = cycle_neighbors(cycle, path.front());
    } else {
      const auto [a1, b1] = cycle_neighbors(cycle, path.front());
      v1 = a1 == path[1] ? b1 : a1;
      const auto [a2, b2] = cycle_neighbors(cycle, path.back());
      v2 = a2 == path[path.size() - 2] ? b2 : a2;
    }

    if (v1 == v2) return both_u_case(g, path, u, lists);

    auto chord_end = [&](Vertex x) {
      return std::any_of(chords.begin(), chords.end(), [&](const Edge& e) { return e.first == x || e.second == x; });
    };
    for (int i = 0; i < 2; ++i) {
      const Vertex vi = i == 0 ? v1 : v2;
      if (vi == u || chord_end(vi)) continue;
      return bad_chord_case(g, path, u, lists, vi, i == 0, v1, v2);
    }

    if (v1 == u || v2 == u) throw SolverBug("neighbor of P equals u but is not on a chord");
    if (!g.adjacent(v1, v2)) throw SolverBug("v1v2 is not a chord");

    if (path.size() >= 2) return path_shrink_case(g, path, u, lists, v1, v2);

    const Vertex v = path.front();
    for (int i = 0; i < 2; ++i) {
      const Vertex vi = i == 0 ? v1 : v2;
      const Vertex other = i == 0 ? v2 : v1;
      const ColorSet li = lists.at(vi);
      std::optional<Color> c;
      if (li.size() >= 4) c = l0.smallest();
      else if (!l0.subset_of(li)) c = (l0 - li).smallest();
      if (!c) continue;
      return list_trim_case(g, v, u, lists, vi, other, *c);
    }

    auto other_chord = [&](Vertex x, Vertex skip) {
      std::vector<Vertex> ends;
      for (const Edge& e : chords) {
        if (e == make_edge(x, skip)) continue;
        if (e.first == x) ends.push_back(e.second);
        if (e.second == x) ends.push_back(e.first);
      }
      return ends;
    };

    if (!(lists.at(v1) == lists.at(v2))) {
      Vertex near = v1;
      if (!other_chord(v1, v2).empty()) near = v2;
      if (!other_chord(near, near == v1 ? v2 : v1).empty()) throw SolverBug("both neighbors of P carry further chords");
      return lists_differ_case(g, v, u, lists, near, near == v1 ? v2 : v1, cycle);
    }

    if (other_chord(v1, v2).empty() && other_chord(v2, v1).empty()) return no_second_chord_case(g, v, u, lists, v1, v2);

    const Vertex far = other_chord(v2, v1).empty() ? v1 : v2;
    const Vertex near = far == v1 ? v2 : v1;
    return second_chord_case(g, v, u, lists, near, far, other_chord(far, near), cycle);
  }

 private:
  void record(CaseLabel label, std::vector<Vertex> vertices, const EmbeddedGraph& g, std::size_t path_size,
              std::string note = {}) {
    trace_.push_back({label, std::move(vertices), depth_, g.num_vertices(), path_size, std::move(note)});
  }

  // Validates a sub-instance, checks that the measure drops, and solves it.
  DemOutcome recurse(const EmbeddedGraph& parent, std::size_t parent_path, const EmbeddedGraph& g,
                     const std::vector<Vertex>& path, Vertex u, const ListAssignment& lists) {
    const auto measure = [](std::size_t n, std::size_t p) { return std::pair<long, long>(long(n), -long(p)); };
    if (!(measure(g.num_vertices(), path.size()) < measure(parent.num_vertices(), parent_path)))
      throw SolverBug("recursion measure did not decrease");
    ListAssignment sub = lists_on(g, lists);
    Canvas canvas{g, SDesignation{path, {u}}, sub};
    if (auto bad = canvas_violation(canvas.graph, canvas.s, canvas.lists))
      throw SolverBug("sub-instance is not a canvas: " + to_string(*bad));
    if (auto bad = demtwo_violation(canvas)) throw SolverBug("sub-instance breaks hypotheses: " + to_string(*bad));
    const int depth = depth_;
    DemOutcome out = solve(g, path, u, sub, depth + 1);
    depth_ = depth;
    return out;
  }

  static Coloring colored(DemOutcome r, const char* where) {
    if (auto* c = std::get_if<Coloring>(&r)) return std::move(*c);
    throw SolverBug(std::string("unexpected exceptional sub-instance in ") + where);
  }

  std::optional<DemOutcome> short_cycle_case(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u,
                                             const ListAssignment& lists) {
    for (const auto& [cycle, interior] : short_cycles_with_interior(g)) {
      const EmbeddedGraph shell = g.without_vertices(interior);
      Canvas canvas{shell, SDesignation{path, {u}}, lists_on(shell, lists)};
      if (canvas_violation(canvas.graph, canvas.s, canvas.lists) || demtwo_violation(canvas)) continue;
      record(CaseLabel::ShortCycle, cycle, g, path.size());
      Coloring phi = colored(recurse(g, path.size(), shell, path, u, lists), "short cycle shell");
      Coloring boundary;
      for (Vertex q : cycle) boundary[q] = phi.at(q);
      return merged(phi, extend_into_short_cycle_interior(g, cycle, boundary, lists));
    }
    return std::nullopt;
  }

  std::optional<DemOutcome> split_case(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u,
                                       const ListAssignment& lists, const std::set<Vertex>& s_set) {
    const auto comps = components(g);
    if (comps.size() > 1) {
      std::set<Vertex> with_s;
      std::optional<std::set<Vertex>> u_comp;
      for (const auto& comp : comps) {
        if (comp.count(path.front())) with_s = comp;
        if (comp.count(u)) u_comp = comp;
      }
      record(CaseLabel::Split, {}, g, path.size(), "components");
      Coloring phi;
      if (with_s.count(u)) {
        const EmbeddedGraph part = g.induced(with_s);
        phi = colored(recurse(g, path.size(), part, path, u, lists), "component split");
      } else {
        const Vertex p = path.front();
        phi = finish_thom(g.induced(with_s), lists, {{p, lists.at(p).smallest()}});
        phi = merged(phi, finish_thom(g.induced(*u_comp), lists, {{u, lists.at(u).smallest()}}));
      }
      std::set<Vertex> rest;
      for (Vertex v : g.vertices())
        if (!phi.count(v)) rest.insert(v);
      if (!rest.empty()) phi = merged(phi, finish_thom(g.induced(rest), lists, {}));
      return phi;
    }

    for (Vertex c : cutvertices(g)) {
      const auto found = peel_component(g, {c}, s_set);
      if (!found) continue;
      const Separation& sep = *found;
      record(CaseLabel::Split, {c}, g, path.size(), "cutvertex");
      Coloring phi = colored(recurse(g, path.size(), g.induced(sep.side_a), path, u, lists), "cutvertex split");
      return merged(phi, finish_thom(g.induced(sep.side_b), lists, {{c, phi.at(c)}}));
    }

    for (const Edge& e : outer_walk_chords(g)) {
      std::set<Vertex> anchor(s_set);
      anchor.erase(e.first);
      anchor.erase(e.second);
      const auto found = peel_component(g, {e.first, e.second}, anchor);
      if (!found) continue;
      const Separation& sep = *found;
      record(CaseLabel::Split, {e.first, e.second}, g, path.size(), "chord");
      Coloring phi = colored(recurse(g, path.size(), g.induced(sep.side_a), path, u, lists), "chord split");
      return merged(phi, finish_thom(g.induced(sep.side_b), lists, {{e.first, phi.at(e.first)}, {e.second, phi.at(e.second)}}));
    }
    return std::nullopt;
  }

  std::optional<DemOutcome> cutvertex_case(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u,
                                           const ListAssignment& lists) {
    const auto cuts = cutvertices(g);
    if (cuts.empty()) return std::nullopt;
    if (path.size() != 1) throw SolverBug("essential cutvertex with a long path");
    const Vertex c = *cuts.begin();
    const Vertex p = path.front();
    const auto sep = separate(g, {c}, {p});
    if (sep.side_a.count(u)) throw SolverBug("essential cutvertex does not separate P from u");
    record(CaseLabel::Cutvertex, {c}, g, 1);

    const EmbeddedGraph g1 = g.induced(sep.side_a);
    const EmbeddedGraph g2 = g.induced(sep.side_b);
    Coloring phi1 = colored(recurse(g, 1, g1, path, c, lists), "cutvertex side one");
    ListAssignment l1 = lists;
    l1[c] = lists.at(c) - ColorSet{phi1.at(c)};
    Coloring phi2 = colored(recurse(g, 1, g1, path, c, l1), "cutvertex side one again");
    ListAssignment l2 = lists;
    l2[c] = ColorSet{phi1.at(c), phi2.at(c)};
    Coloring phi = colored(recurse(g, 1, g2, {c}, u, l2), "cutvertex side two");
    return merged(phi, phi.at(c) == phi1.at(c) ? phi1 : phi2);
  }

  DemOutcome both_u_case(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u,
                         const ListAssignment& lists) {
    record(CaseLabel::V1EqualsV2, {u}, g, path.size());
    auto phi = color_s(g, path, u, lists);
    if (!phi) throw SolverBug("S cycle has no coloring");
    const std::set<Vertex> p_set(path.begin(), path.end());
    auto victims = neighbors_of_set(g, p_set);
    victims.erase(u);
    const ListAssignment reduced = reduce_lists(lists, victims, lists.at(path.front()));
    return merged(*phi, finish_thom(g.without_vertices(p_set), reduced, {{u, phi->at(u)}}));
  }

  DemOutcome bad_chord_case(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u,
                            const ListAssignment& lists, Vertex vi, bool front, Vertex v1, Vertex v2) {
    const ColorSet l0 = lists.at(path.front());
    const std::set<Vertex> p_set(path.begin(), path.end());
    const ColorSet extra = lists.at(vi) - l0;
    if (extra.size() >= 2) {
      record(CaseLabel::BadChordA, {vi}, g, path.size());
      auto victims = neighbors_of_set(g, p_set);
      victims.erase(v1);
      victims.erase(v2);
      ListAssignment sub = reduce_lists(lists, victims, l0);
      sub[vi] = extra.smallest(2);
      Coloring phi = colored(recurse(g, path.size(), g.without_vertices(p_set), {vi}, u, sub), "bad chord subcase a");
      if (!extend_path(g, path, l0, phi)) throw SolverBug("P does not extend after deleting it");
      return phi;
    }

    if (!(l0.subset_of(lists.at(vi)) && lists.at(vi).size() == 3))
      throw SolverBug("neighbor of P has an unexpected list");
    std::vector<Vertex> longer = path;
    if (front) longer.insert(longer.begin(), vi);
    else longer.push_back(vi);
    ListAssignment sub = lists;
    sub[vi] = l0;
    record(CaseLabel::BadChordB, {vi}, g, path.size());
    DemOutcome r = recurse(g, path.size(), g, longer, u, sub);
    if (auto* phi = std::get_if<Coloring>(&r)) return *phi;

    trace_.back().note = "exception";
    Coloring phi{{vi, extra.smallest()}};
    std::vector<Vertex> rest = path;
    rest.push_back(u);
    if (!front) std::reverse(rest.begin(), rest.end());
    // S' minus vi is the path P..u; color it alternately.
    if (!extend_path(g, rest, l0, phi)) throw SolverBug("odd S cycle does not color around vi");
    std::set<Vertex> s_set(p_set);
    s_set.insert(u);
    std::set<Vertex> victims = neighbors_of_set(g, s_set);
    victims.erase(vi);
    const ListAssignment reduced = reduce_lists(lists, victims, l0);
    return merged(phi, finish_thom(g.without_vertices(s_set), reduced, {{vi, phi.at(vi)}}));
  }

  DemOutcome path_shrink_case(const EmbeddedGraph& g, const std::vector<Vertex>& path, Vertex u,
                              const ListAssignment& lists, Vertex v1, Vertex v2) {
    const ColorSet l0 = lists.at(path.front());
    const std::set<Vertex> p_set(path.begin(), path.end());
    const auto sep = separate(g, {v1, v2}, p_set);
    if (sep.side_a.count(u)) throw SolverBug("chord v1v2 does not separate P from u");
    record(CaseLabel::PathShrink, {v1, v2}, g, path.size());

    const EmbeddedGraph g2 = g.induced(sep.side_b);
    const Vertex w = g.vertices().back() + 1;
    ListAssignment sub = lists;
    sub[w] = l0;
    Coloring phi = colored(recurse(g, path.size(), g2.with_vertex_beside_outer_edge(w, v1, v2), {w}, u, sub), "path shrink");
    phi.erase(w);
    if (!extend_path(g, path, l0, phi)) throw SolverBug("P does not extend between v1 and v2");

    const EmbeddedGraph g1 = g.induced(sep.side_a);
    auto victims = neighbors_of_set(g1, p_set);
    victims.erase(v1);
    victims.erase(v2);
    const ListAssignment reduced = reduce_lists(lists, victims, l0);
    return merged(phi, finish_thom(g1.without_vertices(p_set), reduced, {{v1, phi.at(v1)}, {v2, phi.at(v2)}}));
  }

  DemOutcome list_trim_case(const EmbeddedGraph& g, Vertex v, Vertex u, const ListAssignment& lists, Vertex vi,
                            Vertex other, Color c) {
    record(CaseLabel::ListTrim, {vi}, g, 1, "c=" + std::to_string(c));
    std::set<Vertex> victims(g.rotation(v).begin(), g.rotation(v).end());
    ListAssignment sub = reduce_lists(lists, victims, ColorSet{c});
    sub[other] = sub.at(other).smallest(2);
    Coloring phi = colored(recurse(g, 1, g.without_vertices({v}), {other}, u, sub), "list trim");
    phi[v] = c;
    return phi;
  }

  DemOutcome lists_differ_case(const EmbeddedGraph& g, Vertex v, Vertex u, const ListAssignment& lists, Vertex near,
                               Vertex far, const std::vector<Vertex>& cycle) {
    const ColorSet l0 = lists.at(v);
    const auto [a, b] = cycle_neighbors(cycle, near);
    const Vertex vprime = a == v ? b : a;
    const Color c = (lists.at(near) - l0).smallest();
    record(CaseLabel::ListsDiffer, {near, vprime}, g, 1, "c=" + std::to_string(c));

    std::set<Vertex> victims(g.rotation(near).begin(), g.rotation(near).end());
    victims.erase(v);
    ListAssignment sub = reduce_lists(lists, victims, ColorSet{c});
    const EmbeddedGraph rest = g.without_vertices({v, near});
    Coloring phi;
    if (vprime != u) {
      sub[vprime] = sub.at(vprime).smallest(2);
      phi = colored(recurse(g, 1, rest, {vprime}, u, sub), "lists differ");
    } else {
      phi = finish_thom(rest, sub, {{u, sub.at(u).smallest()}});
    }
    phi[near] = c;
    if (!extend_path(g, {v}, l0, phi)) throw SolverBug("v does not extend in the lists-differ case");
    (void)far;
    return phi;
  }

  DemOutcome no_second_chord_case(const EmbeddedGraph& g, Vertex v, Vertex u, const ListAssignment& lists, Vertex v1,
                                  Vertex v2) {
    const ColorSet l0 = lists.at(v);
    const Color c = (lists.at(v1) - l0).smallest();
    const EmbeddedGraph rest = g.without_vertices({v});
    for (Color a : l0.to_vector()) {
      const ColorSet l1{c, a};
      ListAssignment sub = lists;
      sub[v1] = l1;
      sub[v2] = l1;
      const DemTwoInstance probe{Canvas{rest, SDesignation{{v1, v2}, {u}}, lists_on(rest, sub)}, l1, u};
      if (detect_exception(probe)) continue;
      record(CaseLabel::NoSecondChord, {v, v1, v2}, g, 1, "L1=" + to_string(l1));
      Coloring phi = colored(recurse(g, 1, rest, {v1, v2}, u, sub), "no second chord");
      if (!extend_path(g, {v}, l0, phi)) throw SolverBug("v does not extend in the no-second-chord case");
      return phi;
    }
    throw SolverBug("both candidate lists give an exceptional sub-instance");
  }

  DemOutcome second_chord_case(const EmbeddedGraph& g, Vertex v, Vertex u, const ListAssignment& lists, Vertex near,
                               Vertex far, const std::vector<Vertex>& far_chords, const std::vector<Vertex>& cycle) {
    const ColorSet l0 = lists.at(v);
    // Walk C - far starting at near, away from v; the first chord end is u1.
    std::optional<Vertex> u1;
    Vertex prev = v;
    Vertex cur = near;
    while (cur != far && !u1) {
      if (cur != near && std::find(far_chords.begin(), far_chords.end(), cur) != far_chords.end()) u1 = cur;
      const auto [a, b] = cycle_neighbors(cycle, cur);
      const Vertex next = a == prev ? b : a;
      prev = cur;
      cur = next;
    }
    if (!u1) throw SolverBug("no second chord found at the far neighbor");

    const auto sep = separate(g, {far, *u1}, {v});
    if (sep.side_a.count(u)) throw SolverBug("second chord does not separate v from u");
    const EmbeddedGraph g1 = g.induced(sep.side_a);
    const EmbeddedGraph g2 = g.induced(sep.side_b);

    Color c = 0;
    std::string note;
    if (g.adjacent(near, *u1)) {
      if (g1.num_vertices() != 4) throw SolverBug("triangle side of the second chord is not empty");
      c = (lists.at(near) - l0).smallest();
      note = "adjacent";
    } else {
      const auto bad = bad_path_colorings(g1, {v, far, *u1}, lists);
      if (bad.size() > 1) throw SolverBug("more than one bad coloring of the path v far u1");
      c = bad.empty() ? lists.at(*u1).smallest() : bad.front().at(*u1);
      note = "bad=" + std::to_string(bad.size());
    }
    record(CaseLabel::SecondChord, {far, *u1}, g, 1, note + " c=" + std::to_string(c));

    ListAssignment sub = lists;
    sub[*u1] = (lists.at(*u1) - ColorSet{c}).smallest(2);
    Coloring phi = colored(recurse(g, 1, g2, {*u1}, u, sub), "second chord");

    const Color cf = phi.at(far);
    const Color cu = phi.at(*u1);
    if (g.adjacent(near, *u1)) {
      Coloring ext = phi;
      if (l0.contains(cf)) {
        ext[near] = c;
        ext[v] = (l0 - ColorSet{cf}).smallest();
      } else {
        const ColorSet for_near = l0 - ColorSet{cu};
        ext[near] = for_near.smallest();
        ext[v] = (l0 - ColorSet{ext[near]}).smallest();
      }
      if (!verify(g1, lists, ext)) throw SolverBug("explicit extension into the small side failed");
      return merged(phi, ext);
    }
    for (Color cv : (l0 - ColorSet{cf}).to_vector()) {
      auto ext = solve_exact(g1, lists, {{v, cv}, {far, cf}, {*u1, cu}});
      if (ext) return merged(phi, *ext);
    }
    throw SolverBug("coloring does not extend into the v side of the second chord");
  }

  CaseTrace& trace_;
  int depth_ = 0;
};

}  // namespace detail

inline DemTwoResult solve_demtwo(const DemTwoInstance& inst) {
  DemTwoResult result;
  detail::DemTwoSolver solver(result.trace);
  auto out = solver.solve(inst.graph(), inst.path(), inst.u, inst.lists(), 0);
  if (auto* phi = std::get_if<Coloring>(&out)) {
    if (!verify(inst.graph(), inst.lists(), *phi)) throw SolverBug("DemTwo coloring fails verification");
    result.outcome = std::move(*phi);
  } else {
    result.outcome = std::get<ExceptionCertificate>(out);
  }
  return result;
}

inline DemTwoResult solve_demtwo(const Canvas& canvas) {
  if (auto v = canvas_violation(canvas.graph, canvas.s, canvas.lists)) return {*v, {}};
  auto inst = validate_demtwo(canvas);
  if (auto* v = std::get_if<Violation>(&inst)) return {*v, {}};
  return solve_demtwo(std::get<DemTwoInstance>(inst));
}

// Two boundary vertices with lists of size >= 2, every other boundary list
// >= 3, interior lists >= 5. Always colorable.
inline Coloring solve_two_twos(const EmbeddedGraph& g, Vertex v1, Vertex v2, const ListAssignment& lists,
                               CaseTrace* trace = nullptr) {
  if (v1 == v2)
    throw HypothesisViolation(Violation{ViolationKind::WrongSShape, v1, "the two special vertices must differ"});
  if (auto v = canvas_violation(g, SDesignation{{}, {v1, v2}}, lists)) throw HypothesisViolation(*v);
  for (Vertex x : {v1, v2})
    if (lists.at(x).size() < 2)
      throw HypothesisViolation(Violation{ViolationKind::UListTooSmall, x, "special vertex needs two colors"});
  ListAssignment trimmed = lists;
  trimmed[v1] = lists.at(v1).smallest(2);
  CaseTrace local;
  detail::DemTwoSolver solver(trace ? *trace : local);
  auto out = solver.solve(g, {v1}, v2, trimmed, 0);
  auto* phi = std::get_if<Coloring>(&out);
  if (!phi) throw SolverBug("two-twos instance reported exceptional");
  if (!verify(g, lists, *phi)) throw SolverBug("two-twos coloring fails verification");
  return *phi;
}

namespace detail {

inline Coloring derive_thom(const EmbeddedGraph& g, const ListAssignment& lists, Vertex p1, Vertex p2, Color c1,
                            Color c2) {
  Coloring out{{p1, c1}, {p2, c2}};
  const auto comps = components(g);
  if (comps.size() > 1) {
    for (const auto& comp : comps) {
      const EmbeddedGraph part = g.induced(comp);
      if (comp.count(p1)) {
        out = merged(out, derive_thom(part, lists, p1, p2, c1, c2));
      } else if (part.num_vertices() == 1) {
        out[*comp.begin()] = lists.at(*comp.begin()).smallest();
      } else {
        const Dart d = *part.outer_witness();
        const Color a = lists.at(d.tail).smallest();
        const Color b = (lists.at(d.head) - ColorSet{a}).smallest();
        out = merged(out, derive_thom(part, lists, d.tail, d.head, a, b));
      }
    }
    return out;
  }
  if (g.num_vertices() == 2) return out;

  const auto cuts = cutvertices(g);
  if (!cuts.empty()) {
    const Vertex c = *cuts.begin();
    std::set<Vertex> anchor{p1, p2};
    anchor.erase(c);
    const auto sep = *peel_component(g, {c}, anchor);
    out = merged(out, derive_thom(g.induced(sep.side_a), lists, p1, p2, c1, c2));
    const EmbeddedGraph g2 = g.induced(sep.side_b);
    const Vertex w = *outer_neighbor(g2, c);
    const Color cw = (lists.at(w) - ColorSet{out.at(c)}).smallest();
    return merged(out, derive_thom(g2, lists, c, w, out.at(c), cw));
  }

  const auto chords = outer_chords(g);
  if (!chords.empty()) {
    const Edge xy = chords.front();
    std::set<Vertex> anchor{p1, p2};
    anchor.erase(xy.first);
    anchor.erase(xy.second);
    const auto sep = *peel_component(g, {xy.first, xy.second}, anchor);
    out = merged(out, derive_thom(g.induced(sep.side_a), lists, p1, p2, c1, c2));
    return merged(out, derive_thom(g.induced(sep.side_b), lists, xy.first, xy.second, out.at(xy.first), out.at(xy.second)));
  }

  const auto cycle = outer_cycle(g);
  const auto [a1, b1] = cycle_neighbors(cycle, p1);
  const Vertex v1 = a1 == p2 ? b1 : a1;
  const auto [a2, b2] = cycle_neighbors(cycle, p2);
  const Vertex v2 = a2 == p1 ? b2 : a2;
  ListAssignment reduced = lists;
  if (v1 == v2) {
    const Color c = (lists.at(v1) - ColorSet{c1, c2}).smallest();
    std::set<Vertex> victims(g.rotation(v1).begin(), g.rotation(v1).end());
    victims.erase(p1);
    victims.erase(p2);
    reduced = reduce_lists(lists, victims, ColorSet{c});
    out = merged(out, derive_thom(g.without_vertices({v1}), reduced, p1, p2, c1, c2));
    out[v1] = c;
    return out;
  }
  std::set<Vertex> n1(g.rotation(p1).begin(), g.rotation(p1).end());
  std::set<Vertex> n2(g.rotation(p2).begin(), g.rotation(p2).end());
  n1.erase(p2);
  n2.erase(p1);
  reduced = reduce_lists(reduce_lists(lists, n1, ColorSet{c1}), n2, ColorSet{c2});
  const EmbeddedGraph rest = g.without_vertices({p1, p2});
  return merged(out, solve_two_twos(rest, v1, v2, lists_on(rest, reduced)));
}

}  // namespace detail

// The precolored-edge theorem recovered through the two-twos solver.
inline Coloring derive_thom_via_two_twos(const EmbeddedGraph& g, Vertex p1, Vertex p2, const ListAssignment& lists) {
  if (auto v = canvas_violation(g, SDesignation{{p1, p2}, {}}, lists)) throw HypothesisViolation(*v);
  if (lists.at(p1).size() != 1 || lists.at(p2).size() != 1)
    throw HypothesisViolation(Violation{ViolationKind::HypothesisViolation, p1, "precolored vertices need singleton lists"});
  Coloring out = detail::derive_thom(g, lists, p1, p2, lists.at(p1).smallest(), lists.at(p2).smallest());
  if (!verify(g, lists, out)) throw SolverBug("derived coloring fails verification");
  return out;
}

}  // namespace canvas_color
