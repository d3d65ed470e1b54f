#pragma once

// JSON interchange: .pg.json graphs, .canvas.json canvases, colorings and
// solver outcomes.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "canvas_color/canvas.hpp"
#include "canvas_color/demtwo.hpp"
#include "canvas_color/embed.hpp"

namespace canvas_color::harness {

using nlohmann::json;

inline json graph_to_json(const EmbeddedGraph& g) {
  json j;
  j["vertices"] = g.vertices();
  json rot = json::object();
  for (const auto& [v, nbrs] : g.rotation_table()) rot[std::to_string(v)] = nbrs;
  j["rotation"] = rot;
  if (auto w = g.outer_witness()) j["outer"] = {w->tail, w->head};
  return j;
}

inline EmbeddedGraph graph_from_json(const json& j) {
  std::vector<Vertex> vs = j.at("vertices").get<std::vector<Vertex>>();
  EmbeddedGraph::Rotation rot;
  for (const auto& [key, nbrs] : j.at("rotation").items()) rot[std::stoi(key)] = nbrs.get<std::vector<Vertex>>();
  std::optional<Dart> witness;
  if (j.contains("outer") && !j.at("outer").is_null()) {
    const auto pair = j.at("outer").get<std::vector<Vertex>>();
    if (pair.size() != 2) throw EmbedError(EmbedErrorKind::BadOuterWitness, "outer must name two vertices");
    witness = Dart{pair[0], pair[1]};
  }
  return EmbeddedGraph::build(std::move(vs), std::move(rot), witness);
}

inline json lists_to_json(const ListAssignment& lists) {
  json j = json::object();
  for (const auto& [v, l] : lists) j[std::to_string(v)] = l.to_vector();
  return j;
}

inline ListAssignment lists_from_json(const json& j) {
  ListAssignment out;
  for (const auto& [key, colors] : j.items()) out[std::stoi(key)] = ColorSet::of(colors.get<std::vector<Color>>());
  return out;
}

inline json canvas_to_json(const Canvas& c) {
  json j = graph_to_json(c.graph);
  j["lists"] = lists_to_json(c.lists);
  j["S"] = {{"path", c.s.path}, {"isolated", c.s.isolated}};
  return j;
}

// Graph, lists and S without validating the canvas conditions.
inline Canvas canvas_from_json(const json& j) {
  Canvas c;
  c.graph = graph_from_json(j);
  c.lists = lists_from_json(j.at("lists"));
  if (j.contains("S")) {
    const auto& s = j.at("S");
    if (s.contains("path")) c.s.path = s.at("path").get<std::vector<Vertex>>();
    if (s.contains("isolated")) c.s.isolated = s.at("isolated").get<std::vector<Vertex>>();
  }
  return c;
}

inline json coloring_to_json(const Coloring& c) {
  json j = json::object();
  for (const auto& [v, col] : c) j[std::to_string(v)] = col;
  return {{"coloring", j}};
}

inline Coloring coloring_from_json(const json& j) {
  Coloring out;
  for (const auto& [key, col] : j.at("coloring").items()) out[std::stoi(key)] = col.get<Color>();
  return out;
}

inline json violation_to_json(const Violation& v) {
  json j{{"kind", to_string(v.kind)}, {"message", v.message}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

inline json trace_to_json(const CaseTrace& trace) {
  json out = json::array();
  for (const auto& t : trace) {
    json e{{"case", to_string(t.label)}, {"vertices", t.vertices}, {"depth", t.depth}, {"n", t.graph_size},
           {"p", t.path_size}};
    if (!t.note.empty()) e["note"] = t.note;
    out.push_back(e);
  }
  return out;
}

inline json outcome_to_json(const DemTwoResult& r) {
  json j;
  if (const auto* c = std::get_if<Coloring>(&r.outcome)) {
    j["outcome"] = "colored";
    j["coloring"] = coloring_to_json(*c).at("coloring");
  } else if (const auto* e = std::get_if<ExceptionCertificate>(&r.outcome)) {
    j["outcome"] = "exception";
    j["certificate"] = {{"odd_cycle", e->odd_cycle}, {"L0", e->witnessed_l0.to_vector()}};
  } else {
    j["outcome"] = "violation";
    j["violation"] = violation_to_json(std::get<Violation>(r.outcome));
  }
  j["trace"] = trace_to_json(r.trace);
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace canvas_color::harness
