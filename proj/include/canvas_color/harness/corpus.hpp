#pragma once

// Instance suites over the graph families: list assignments sampled to meet
// each theorem's hypotheses exactly, deliberate exceptional instances, and
// tagged near-misses for the validators.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "canvas_color/canvas.hpp"
#include "canvas_color/embed.hpp"
#include "canvas_color/harness/generate.hpp"
#include "canvas_color/oracle.hpp"

namespace canvas_color::harness {

struct CorpusSpec {
  int max_vertices = 8;
  int palette_size = 5;
  std::set<Family> families = {Family::Cycles, Family::ChordedCycles, Family::Wheels,
                               Family::Fans,   Family::Stacked,       Family::Glued};
  std::uint64_t seed = 1;
  int samples_per_shape = 2;
  int configs_per_graph = 6;
  int random_count = 1000;
  int random_max_vertices = 14;
};

struct Instance {
  std::string id;
  Canvas canvas;
};

struct RejectedInstance {
  std::string id;
  Canvas canvas;
  Violation violation;
};

struct Suite {
  std::vector<Instance> valid;
  std::vector<RejectedInstance> rejected;
};

namespace detail {

class Sampler {
 public:
  Sampler(std::uint64_t seed, int palette) : rng_(seed), palette_(palette) {}

  std::uint64_t next() { return rng_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool coin(int num, int den) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(den)) < num; }

  // k distinct colors from `from`, chosen uniformly.
  ColorSet subset(int k, ColorSet from) {
    auto pool = from.to_vector();
    ColorSet out;
    for (int i = 0; i < k && !pool.empty(); ++i) {
      const std::size_t j = below(pool.size());
      out.insert(pool[j]);
      pool.erase(pool.begin() + static_cast<long>(j));
    }
    return out;
  }

  ColorSet palette() const {
    ColorSet all;
    for (int c = 0; c < palette_; ++c) all.insert(c);
    return all;
  }

  ColorSet subset(int k) { return subset(k, palette()); }

 private:
  std::mt19937_64 rng_;
  int palette_;
};

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Boundary 3-lists, interior 5-lists.
inline ListAssignment base_lists(const EmbeddedGraph& g, Sampler& s, ColorSet boundary_palette) {
  ListAssignment out;
  for (Vertex v : g.vertices()) out[v] = g.on_outer_face(v) ? s.subset(3, boundary_palette) : s.subset(5);
  return out;
}

inline std::vector<Vertex> boundary_sequence(const EmbeddedGraph& g) {
  if (is_two_connected(g)) return outer_cycle(g);
  return std::vector<Vertex>(g.outer_vertices().begin(), g.outer_vertices().end());
}

}  // namespace detail

struct NamedInstanceGraph {
  std::string name;
  EmbeddedGraph graph;
  bool random = false;
};

inline std::vector<NamedInstanceGraph> corpus_graphs(const CorpusSpec& spec) {
  std::vector<NamedInstanceGraph> out;
  for (auto& g : enumerate_small_plane_graphs(spec.max_vertices, spec.families)) out.push_back({g.name, std::move(g.graph)});
  detail::Sampler s(detail::mix(spec.seed, 0xA11CE), spec.palette_size);
  const int lo = std::min(5, spec.random_max_vertices);
  for (int i = 0; i < spec.random_count; ++i) {
    const int n = lo + static_cast<int>(s.below(static_cast<std::size_t>(spec.random_max_vertices - lo + 1)));
    out.push_back({"R" + std::to_string(i) + "n" + std::to_string(n), generate_near_triangulation(n, detail::mix(spec.seed, i)), true});
  }
  return out;
}

inline void file(Suite& suite, std::string id, Canvas canvas, const std::optional<Violation>& bad) {
  if (bad) suite.rejected.push_back({std::move(id), std::move(canvas), *bad});
  else suite.valid.push_back({std::move(id), std::move(canvas)});
}

inline std::optional<Violation> demtwo_check(const Canvas& c) {
  if (auto v = canvas_violation(c.graph, c.s, c.lists)) return v;
  return demtwo_violation(c);
}

// Path P plus isolated u, P lists equal to a 2-set L0.
inline Suite demtwo_suite(const CorpusSpec& spec) {
  Suite suite;
  const auto graphs = corpus_graphs(spec);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& [name, g, random] = graphs[gi];
    detail::Sampler s(detail::mix(spec.seed, 1000 + gi), spec.palette_size);
    const auto seq = detail::boundary_sequence(g);
    const bool cyc = is_two_connected(g);

    struct Config {
      std::vector<Vertex> path;
      Vertex u;
    };
    std::vector<Config> configs;
    const std::size_t m = seq.size();
    for (std::size_t len = 1; len < m; ++len) {
      if (len > 1 && !cyc) break;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Vertex> path;
        for (std::size_t k = 0; k < len; ++k) path.push_back(seq[(i + k) % m]);
        for (std::size_t k = len; k < m; ++k) configs.push_back({path, seq[(i + k) % m]});
      }
    }
    const int want = random ? 1 : spec.configs_per_graph;
    const int samples = random ? 1 : spec.samples_per_shape;
    for (int c = 0; c < want && !configs.empty(); ++c) {
      const Config cfg = configs[s.below(configs.size())];
      for (int k = 0; k < samples; ++k) {
        ListAssignment lists = detail::base_lists(g, s, s.palette());
        const ColorSet l0 = s.subset(2);
        for (Vertex v : g.vertices())
          if (g.on_outer_face(v) && s.coin(1, 2)) lists[v] = l0 | s.subset(1, s.palette() - l0);
        for (Vertex p : cfg.path) lists[p] = l0;
        lists[cfg.u] = s.coin(1, 2) ? l0 : (s.coin(1, 2) ? s.subset(2) : s.subset(3));
        Canvas canvas{g, SDesignation{cfg.path, {cfg.u}}, lists};
        const auto bad = demtwo_check(canvas);
        file(suite, name + "/c" + std::to_string(c) + "s" + std::to_string(k), std::move(canvas), bad);
      }
    }

    // Odd chordless outer cycle with every S list equal: the exceptional family.
    if (cyc && !random && m % 2 == 1 && outer_chords(g).empty()) {
      ListAssignment lists = detail::base_lists(g, s, s.palette());
      const ColorSet l0 = s.subset(2);
      for (Vertex v : seq) lists[v] = l0;
      std::vector<Vertex> path(seq.begin(), seq.end() - 1);
      Canvas canvas{g, SDesignation{path, {seq.back()}}, lists};
      const auto bad = demtwo_check(canvas);
      file(suite, name + "/odd", std::move(canvas), bad);
    }
  }
  return suite;
}

// Two isolated vertices with lists of size >= 2.
inline Suite twotwos_suite(const CorpusSpec& spec) {
  Suite suite;
  const auto graphs = corpus_graphs(spec);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& [name, g, random] = graphs[gi];
    detail::Sampler s(detail::mix(spec.seed, 2000 + gi), spec.palette_size);
    const auto seq = detail::boundary_sequence(g);
    const int want = random ? 1 : spec.configs_per_graph;
    const int samples = random ? 1 : spec.samples_per_shape;
    for (int c = 0; c < want; ++c) {
      const Vertex v1 = seq[s.below(seq.size())];
      Vertex v2 = seq[s.below(seq.size())];
      if (v1 == v2) v2 = seq[(std::find(seq.begin(), seq.end(), v1) - seq.begin() + 1) % seq.size()];
      for (int k = 0; k < samples; ++k) {
        ListAssignment lists = detail::base_lists(g, s, s.palette());
        lists[v1] = s.subset(2);
        lists[v2] = s.coin(3, 4) ? s.subset(2) : s.subset(3);
        Canvas canvas{g, SDesignation{{}, {v1, v2}}, lists};
        auto bad = canvas_violation(canvas.graph, canvas.s, canvas.lists);
        file(suite, name + "/c" + std::to_string(c) + "s" + std::to_string(k), std::move(canvas), bad);
      }
    }
  }
  return suite;
}

// Boundary edge with distinct singleton lists.
inline Suite thom_suite(const CorpusSpec& spec) {
  Suite suite;
  const auto graphs = corpus_graphs(spec);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& [name, g, random] = graphs[gi];
    detail::Sampler s(detail::mix(spec.seed, 3000 + gi), spec.palette_size);
    const auto darts = g.outer_darts();
    const std::vector<Dart> dv(darts.begin(), darts.end());
    const int want = random ? 1 : spec.configs_per_graph;
    const int samples = random ? 1 : spec.samples_per_shape;
    for (int c = 0; c < want && !dv.empty(); ++c) {
      const Dart d = dv[s.below(dv.size())];
      for (int k = 0; k < samples; ++k) {
        ListAssignment lists = detail::base_lists(g, s, s.palette());
        const ColorSet pair = s.subset(2);
        const auto cols = pair.to_vector();
        lists[d.tail] = ColorSet{cols[0]};
        lists[d.head] = ColorSet{cols[1]};
        Canvas canvas{g, SDesignation{{d.tail, d.head}, {}}, lists};
        auto bad = canvas_violation(canvas.graph, canvas.s, canvas.lists);
        file(suite, name + "/c" + std::to_string(c) + "s" + std::to_string(k), std::move(canvas), bad);
      }
    }
  }
  return suite;
}

// Three consecutive outer-cycle vertices as P, on 2-connected graphs. Lists
// come from a four-color boundary palette so that bad path colorings occur.
inline Suite boundary_path_suite(const CorpusSpec& spec) {
  Suite suite;
  const auto graphs = corpus_graphs(spec);
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& [name, g, random] = graphs[gi];
    if (!is_two_connected(g)) continue;
    detail::Sampler s(detail::mix(spec.seed, 4000 + gi), spec.palette_size);
    const auto cycle = outer_cycle(g);
    const ColorSet small = s.palette().smallest(4);
    const std::size_t m = cycle.size();
    const int samples = random ? 1 : spec.samples_per_shape;
    for (std::size_t i = 0; i < m; ++i) {
      if (random && i > 0) break;
      const std::vector<Vertex> path{cycle[i], cycle[(i + 1) % m], cycle[(i + 2) % m]};
      for (int k = 0; k < samples; ++k) {
        ListAssignment lists = detail::base_lists(g, s, small);
        for (Vertex p : path) lists[p] = s.subset(s.coin(1, 2) ? 2 : 3, small);
        Canvas canvas{g, SDesignation{path, {}}, lists};
        auto bad = canvas_violation(canvas.graph, canvas.s, canvas.lists);
        file(suite, name + "/p" + std::to_string(i) + "s" + std::to_string(k), std::move(canvas), bad);
      }
    }
  }
  return suite;
}

// Uncolorable canvases: exceptional DemTwo instances, plus boundary-path canvases
// with P pinned to a coloring that does not extend.
inline std::vector<Instance> critical_sources(const CorpusSpec& spec, std::size_t cap = 300) {
  std::vector<Instance> out;
  CorpusSpec small = spec;
  small.random_count = std::min(spec.random_count, 100);
  for (const auto& inst : demtwo_suite(small).valid) {
    if (out.size() >= cap / 2) break;
    if (!solve_exact(inst.canvas.graph, inst.canvas.lists)) out.push_back(inst);
  }
  for (const auto& inst : boundary_path_suite(small).valid) {
    if (out.size() >= cap) break;
    const auto& p = inst.canvas.s.path;
    const auto bad = bad_path_colorings(inst.canvas.graph, {p[0], p[1], p[2]}, inst.canvas.lists);
    if (bad.empty()) continue;
    Canvas pinned = inst.canvas;
    for (Vertex v : p) pinned.lists[v] = ColorSet{bad.front().at(v)};
    out.push_back({inst.id + "/pinned", std::move(pinned)});
  }
  return out;
}

}  // namespace canvas_color::harness
