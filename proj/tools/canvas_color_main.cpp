// canvas-color: command line front end for the solvers, the oracle and the
// corpus checks. Every subcommand prints JSON with --json; exit status is
// 0 on success, 1 on a failed check or invalid coloring, 2 on bad input.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "canvas_color.hpp"

namespace cc = canvas_color;
namespace h = canvas_color::harness;

namespace {

long budget_ms_from_env() {
  const char* raw = std::getenv("CANVAS_COLOR_BUDGET_MS");
  if (!raw || !*raw) return 0;
  try {
    return std::stol(raw);
  } catch (const std::exception&) {
    throw CLI::ValidationError("CANVAS_COLOR_BUDGET_MS", std::string("not an integer: ") + raw);
  }
}

cc::OracleBudget budget() {
  const long ms = budget_ms_from_env();
  return ms > 0 ? cc::OracleBudget::milliseconds(ms) : cc::OracleBudget::unlimited();
}

void print_coloring(const cc::Coloring& c, bool json) {
  if (json) {
    std::cout << h::coloring_to_json(c).dump() << "\n";
    return;
  }
  for (const auto& [v, col] : c) std::cout << v << " " << col << "\n";
}

struct Options {
  std::string mode;
  std::string input;
  std::string coloring;
  std::string archive;
  std::uint64_t seed = 1;
  int max_n = 8;
  int palette = 5;
  int random_count = 1000;
  int random_max_n = 14;
  bool json = false;
};

h::CorpusSpec spec_from(const Options& o) {
  h::CorpusSpec spec;
  spec.seed = o.seed;
  spec.max_vertices = o.max_n;
  spec.palette_size = o.palette;
  spec.random_count = o.random_count;
  spec.random_max_vertices = o.random_max_n;
  return spec;
}

int run_solve(const Options& o) {
  const cc::Canvas c = h::canvas_from_json(h::read_json_file(o.input));
  if (o.mode == "demtwo") {
    const auto r = cc::solve_demtwo(c);
    if (o.json) {
      std::cout << h::outcome_to_json(r).dump() << "\n";
    } else if (const auto* col = std::get_if<cc::Coloring>(&r.outcome)) {
      print_coloring(*col, false);
    } else if (const auto* e = std::get_if<cc::ExceptionCertificate>(&r.outcome)) {
      std::cout << "exception: odd cycle";
      for (cc::Vertex v : e->odd_cycle) std::cout << " " << v;
      std::cout << " with L0 = " << cc::to_string(e->witnessed_l0) << "\n";
    } else {
      std::cout << "violation: " << cc::to_string(std::get<cc::Violation>(r.outcome)) << "\n";
    }
    return std::holds_alternative<cc::Violation>(r.outcome) ? 2 : 0;
  }

  cc::Coloring col;
  try {
    if (o.mode == "twotwos") {
      if (c.s.isolated.size() != 2 || !c.s.path.empty())
        throw cc::HypothesisViolation({cc::ViolationKind::WrongSShape, std::nullopt, "S must be two isolated vertices"});
      col = cc::solve_two_twos(c.graph, c.s.isolated[0], c.s.isolated[1], c.lists);
    } else if (o.mode == "thomassen" || o.mode == "thom") {
      if (c.s.path.size() == 2 && c.lists.at(c.s.path[0]).size() == 1 && c.lists.at(c.s.path[1]).size() == 1) {
        col = cc::color_with_precolored_edge(c.graph, c.s.path[0], c.s.path[1], c.lists);
      } else {
        // Pin the path with its smallest proper colors.
        cc::Coloring pins;
        for (cc::Vertex p : c.s.path) {
          cc::ColorSet avail = c.lists.at(p);
          for (const auto& [q, qc] : pins) avail = avail - cc::ColorSet{qc};
          if (avail.empty()) throw cc::HypothesisViolation({cc::ViolationKind::SNotProperlyColorable, p, "no proper pin"});
          pins[p] = avail.smallest();
        }
        col = cc::color_with_colored_short_path(c, pins);
      }
    } else if (o.mode == "thom-reduction") {
      if (c.s.path.size() != 2)
        throw cc::HypothesisViolation({cc::ViolationKind::WrongSShape, std::nullopt, "S must be a boundary edge"});
      col = cc::derive_thom_via_two_twos(c.graph, c.s.path[0], c.s.path[1], c.lists);
    } else {
      throw CLI::ValidationError("--mode", "unknown solve mode " + o.mode);
    }
  } catch (const cc::HypothesisViolation& e) {
    if (o.json)
      std::cout << h::json{{"outcome", "violation"}, {"violation", h::violation_to_json(e.violation())}}.dump() << "\n";
    else
      std::cout << "violation: " << e.what() << "\n";
    return 2;
  }
  if (o.json)
    std::cout << h::json{{"outcome", "colored"}, {"coloring", h::coloring_to_json(col).at("coloring")}}.dump() << "\n";
  else
    print_coloring(col, false);
  return 0;
}

int run_verify(const Options& o) {
  const cc::Canvas c = h::canvas_from_json(h::read_json_file(o.input));
  const cc::Coloring col = h::coloring_from_json(h::read_json_file(o.coloring));
  const bool ok = cc::verify(c.graph, c.lists, col);
  if (o.json)
    std::cout << h::json{{"valid", ok}}.dump() << "\n";
  else
    std::cout << (ok ? "valid" : "invalid") << "\n";
  return ok ? 0 : 1;
}

int run_oracle_solve(const Options& o) {
  const cc::Canvas c = h::canvas_from_json(h::read_json_file(o.input));
  const auto col = cc::solve_exact(c.graph, c.lists, {}, budget());
  if (!col) {
    std::cout << (o.json ? h::json{{"coloring", nullptr}}.dump() : std::string("uncolorable")) << "\n";
    return 1;
  }
  print_coloring(*col, o.json);
  return 0;
}

int run_critical(const Options& o) {
  const cc::Canvas c = h::canvas_from_json(h::read_json_file(o.input));
  const auto b = budget();
  const cc::Canvas k = cc::extract_critical(c, b);
  const auto defects = cc::structure_defects(k);
  if (o.json) {
    h::json d = h::json::array();
    for (const auto& x : defects) d.push_back({{"kind", cc::to_string(x.kind)}, {"vertices", x.vertices}});
    std::cout << h::json{{"canvas", h::canvas_to_json(k)}, {"critical", cc::is_critical(k, b)}, {"defects", d}}.dump() << "\n";
  } else {
    std::cout << "critical subcanvas: " << k.graph.num_vertices() << " vertices, " << k.graph.num_edges() << " edges\n";
    for (const cc::Edge& e : k.graph.edges()) std::cout << "  " << e.first << "-" << e.second << "\n";
    for (const auto& x : defects) std::cout << "defect " << cc::to_string(x.kind) << "\n";
  }
  return 0;
}

int run_gen(const Options& o) {
  const h::CorpusSpec spec = spec_from(o);
  if (o.mode == "graphs" || o.mode.empty()) {
    for (const auto& g : h::enumerate_small_plane_graphs(spec.max_vertices, spec.families)) {
      if (o.json) {
        h::json j = h::graph_to_json(g.graph);
        j["family"] = h::to_string(g.family);
        j["name"] = g.name;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << g.name << " (" << h::to_string(g.family) << "): " << g.graph.num_vertices() << " vertices, "
                  << g.graph.num_edges() << " edges\n";
      }
    }
    return 0;
  }
  if (o.mode == "random") {
    const auto g = h::generate_near_triangulation(o.max_n, o.seed);
    std::cout << h::graph_to_json(g).dump(o.json ? -1 : 2) << "\n";
    return 0;
  }
  h::Suite suite;
  if (o.mode == "demtwo") suite = h::demtwo_suite(spec);
  else if (o.mode == "twotwos") suite = h::twotwos_suite(spec);
  else if (o.mode == "thom") suite = h::thom_suite(spec);
  else if (o.mode == "lemma4") suite = h::boundary_path_suite(spec);
  else throw CLI::ValidationError("--mode", "unknown gen mode " + o.mode);
  for (const auto& i : suite.valid) {
    h::json j = h::canvas_to_json(i.canvas);
    j["id"] = i.id;
    std::cout << j.dump() << "\n";
  }
  for (const auto& i : suite.rejected) {
    h::json j = h::canvas_to_json(i.canvas);
    j["id"] = i.id;
    j["rejected"] = h::violation_to_json(i.violation);
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_check(const Options& o) {
  const h::CorpusSpec spec = spec_from(o);
  h::CheckOptions opt;
  opt.budget_ms = budget_ms_from_env();
  if (!o.archive.empty()) opt.archive_dir = o.archive;
  std::vector<h::CheckMode> modes;
  if (o.mode == "all") {
    modes = {h::CheckMode::DemTwo, h::CheckMode::TwoTwos, h::CheckMode::Thom, h::CheckMode::BadPaths, h::CheckMode::Critical};
  } else if (auto m = h::parse_check_mode(o.mode)) {
    modes = {*m};
  } else {
    throw CLI::ValidationError("--mode", "unknown check mode " + o.mode);
  }
  bool ok = true;
  for (h::CheckMode m : modes) {
    const auto report = h::run_theorem_check(spec, m, opt);
    ok = ok && report.ok;
    if (o.json) {
      std::cout << report.to_jsonl();
    } else {
      std::cout << h::to_string(m) << ": " << report.summary.at("instances") << " instances, "
                << report.summary.at("failures") << " failures, " << (report.ok ? "ok" : "FAILED") << "\n";
      for (const auto& line : report.lines)
        if (!line.at("pass").get<bool>()) std::cout << "  " << line.dump() << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List coloring of plane canvases: constructive solvers checked against an exhaustive oracle"};
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Print JSON"); };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Corpus seed")->capture_default_str();
    sub->add_option("--max-n", o.max_n, "Largest enumerated graph")->capture_default_str()->check(CLI::Range(3, 10));
    sub->add_option("--palette", o.palette, "Palette size")->capture_default_str()->check(CLI::Range(5, 64));
    sub->add_option("--random-count", o.random_count, "Random near-triangulations")->capture_default_str();
    sub->add_option("--random-max-n", o.random_max_n, "Largest random graph")->capture_default_str()->check(CLI::Range(3, 30));
  };

  auto* solve = app.add_subcommand("solve", "Color a .canvas.json instance");
  solve->add_option("--mode", o.mode, "demtwo | twotwos | thomassen | thom-reduction")->required();
  solve->add_option("--input", o.input, "Canvas file")->required()->check(CLI::ExistingFile);
  add_json(solve);

  auto* verify = app.add_subcommand("verify", "Check a coloring against a canvas");
  verify->add_option("--input", o.input, "Canvas file")->required()->check(CLI::ExistingFile);
  verify->add_option("--coloring", o.coloring, "Coloring file {\"coloring\":{...}}")->required()->check(CLI::ExistingFile);
  add_json(verify);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search");
  oracle->require_subcommand(1);
  auto* oracle_solve = oracle->add_subcommand("solve", "Find any L-coloring");
  oracle_solve->add_option("--input", o.input, "Canvas file")->required()->check(CLI::ExistingFile);
  add_json(oracle_solve);
  auto* oracle_critical = oracle->add_subcommand("critical", "Extract a critical subcanvas");
  oracle_critical->add_option("--input", o.input, "Canvas file")->required()->check(CLI::ExistingFile);
  add_json(oracle_critical);

  auto* critical = app.add_subcommand("critical", "Extract a critical subcanvas and report structure defects");
  critical->add_option("--input", o.input, "Canvas file")->required()->check(CLI::ExistingFile);
  add_json(critical);

  auto* gen = app.add_subcommand("gen", "Generate graphs or instance suites");
  gen->add_option("--mode", o.mode, "graphs | random | demtwo | twotwos | thom | lemma4");
  add_corpus(gen);
  add_json(gen);

  auto* check = app.add_subcommand("check", "Run a corpus check against the oracle");
  check->add_option("--mode", o.mode, "demtwo | twotwos | thom | lemma4 | critical | all")->required();
  check->add_option("--archive", o.archive, "Directory for counterexamples and witnesses");
  add_corpus(check);
  add_json(check);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(o);
    if (verify->parsed()) return run_verify(o);
    if (oracle_solve->parsed()) return run_oracle_solve(o);
    if (oracle_critical->parsed() || critical->parsed()) return run_critical(o);
    if (gen->parsed()) return run_gen(o);
    if (check->parsed()) return run_check(o);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 2;
  } catch (const cc::InputColorable& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const cc::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
