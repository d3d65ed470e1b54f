#pragma once

// Corpus-wide agreement checks between the constructive colorers and the
// exhaustive oracle. Reports are JSON lines sorted by instance id and carry
// no timings, so identical specs give identical bytes.

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "canvas_color/canvas.hpp"
#include "canvas_color/demtwo.hpp"
#include "canvas_color/harness/corpus.hpp"
#include "canvas_color/harness/io.hpp"
#include "canvas_color/oracle.hpp"
#include "canvas_color/thomassen.hpp"

namespace canvas_color::harness {

enum class CheckMode { DemTwo, TwoTwos, Thom, BadPaths, Critical };

inline const char* to_string(CheckMode m) {
  switch (m) {
    case CheckMode::DemTwo: return "demtwo";
    case CheckMode::TwoTwos: return "twotwos";
    case CheckMode::Thom: return "thom";
    case CheckMode::BadPaths: return "lemma4";
    case CheckMode::Critical: return "critical";
  }
  return "?";
}

inline std::optional<CheckMode> parse_check_mode(const std::string& s) {
  for (CheckMode m : {CheckMode::DemTwo, CheckMode::TwoTwos, CheckMode::Thom, CheckMode::BadPaths, CheckMode::Critical})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

struct CheckOptions {
  // Where counterexamples and the fan-path witness go; nothing is written if unset.
  std::optional<std::filesystem::path> archive_dir;
  // Per-instance oracle cap; zero means unlimited.
  long budget_ms = 0;
};

struct CheckReport {
  CheckMode mode{};
  std::vector<json> lines;
  json summary;
  bool ok = true;

  std::string to_jsonl() const {
    std::string out;
    for (const auto& l : lines) out += l.dump() + "\n";
    out += summary.dump() + "\n";
    return out;
  }
};

inline json spec_to_json(const CorpusSpec& spec) {
  json fams = json::array();
  for (Family f : spec.families) fams.push_back(to_string(f));
  return {{"max_vertices", spec.max_vertices}, {"palette", spec.palette_size},   {"seed", spec.seed},
          {"families", fams},                  {"samples", spec.samples_per_shape}, {"configs", spec.configs_per_graph},
          {"random_count", spec.random_count}, {"random_max_vertices", spec.random_max_vertices}};
}

namespace detail {

inline OracleBudget budget_for(const CheckOptions& opt) {
  return opt.budget_ms > 0 ? OracleBudget::milliseconds(opt.budget_ms) : OracleBudget::unlimited();
}

inline std::string file_stem(const std::string& id) {
  std::string out;
  for (char c : id) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.') ? c : '_';
  return out;
}

class Recorder {
 public:
  Recorder(CheckMode mode, const CorpusSpec& spec, const CheckOptions& opt) : opt_(opt) {
    report_.mode = mode;
    report_.summary = {{"mode", to_string(mode)}, {"spec", spec_to_json(spec)}};
  }

  void add(json line, bool passed, const Canvas* canvas = nullptr) {
    line["pass"] = passed;
    if (!passed) {
      ++failures_;
      if (canvas) {
        const std::string name = to_string(report_.mode) + std::string("-") + file_stem(line.at("id")) + ".canvas.json";
        line["counterexample"] = name;
        archive(name, canvas_to_json(*canvas));
      }
    }
    report_.lines.push_back(std::move(line));
  }

  void archive(const std::string& name, const json& j) const {
    if (!opt_.archive_dir) return;
    std::filesystem::create_directories(*opt_.archive_dir);
    write_json_file((*opt_.archive_dir / name).string(), j);
  }

  json& summary() { return report_.summary; }

  CheckReport finish(bool extra_ok = true) {
    std::stable_sort(report_.lines.begin(), report_.lines.end(),
                     [](const json& a, const json& b) { return a.at("id").get<std::string>() < b.at("id").get<std::string>(); });
    report_.summary["instances"] = report_.lines.size();
    report_.summary["failures"] = failures_;
    report_.ok = failures_ == 0 && extra_ok;
    report_.summary["ok"] = report_.ok;
    return std::move(report_);
  }

 private:
  const CheckOptions& opt_;
  CheckReport report_;
  std::size_t failures_ = 0;
};

// Oracle verdict as a string, or "budget" when the cap ran out.
inline std::string oracle_verdict(const Canvas& c, const OracleBudget& budget) {
  try {
    return solve_exact(c.graph, c.lists, {}, budget) ? "colorable" : "uncolorable";
  } catch (const BudgetExceeded&) {
    return "budget";
  }
}

inline CheckReport check_demtwo(const CorpusSpec& spec, const CheckOptions& opt) {
  Recorder rec(CheckMode::DemTwo, spec, opt);
  const Suite suite = demtwo_suite(spec);
  std::size_t colored = 0, exceptions = 0, confirmed = 0;
  for (const auto& inst : suite.valid) {
    json line{{"id", inst.id}};
    bool pass = false;
    try {
      const DemTwoResult r = solve_demtwo(inst.canvas);
      const std::string oracle = oracle_verdict(inst.canvas, budget_for(opt));
      line["oracle"] = oracle;
      if (const auto* c = std::get_if<Coloring>(&r.outcome)) {
        line["outcome"] = "colored";
        pass = verify(inst.canvas.graph, inst.canvas.lists, *c) && oracle == "colorable";
        colored += pass;
      } else if (std::holds_alternative<ExceptionCertificate>(r.outcome)) {
        line["outcome"] = "exception";
        pass = oracle == "uncolorable";
        ++exceptions;
        confirmed += pass;
      } else {
        line["outcome"] = "violation";
      }
    } catch (const std::exception& e) {
      line["outcome"] = "error";
      line["error"] = e.what();
    }
    rec.add(std::move(line), pass, &inst.canvas);
  }
  for (const auto& inst : suite.rejected) {
    json line{{"id", inst.id}, {"expected", to_string(inst.violation.kind)}};
    const DemTwoResult r = solve_demtwo(inst.canvas);
    const auto* v = std::get_if<Violation>(&r.outcome);
    line["outcome"] = v ? to_string(v->kind) : "accepted";
    rec.add(std::move(line), v && v->kind == inst.violation.kind, &inst.canvas);
  }
  rec.summary()["valid"] = suite.valid.size();
  rec.summary()["rejected"] = suite.rejected.size();
  rec.summary()["colored"] = colored;
  rec.summary()["exceptions"] = exceptions;
  rec.summary()["exceptions_confirmed"] = confirmed;
  return rec.finish();
}

inline CheckReport check_twotwos(const CorpusSpec& spec, const CheckOptions& opt) {
  Recorder rec(CheckMode::TwoTwos, spec, opt);
  const Suite suite = twotwos_suite(spec);
  for (const auto& inst : suite.valid) {
    json line{{"id", inst.id}};
    bool pass = false;
    try {
      const Coloring c = solve_two_twos(inst.canvas.graph, inst.canvas.s.isolated[0], inst.canvas.s.isolated[1], inst.canvas.lists);
      line["oracle"] = oracle_verdict(inst.canvas, budget_for(opt));
      line["outcome"] = "colored";
      pass = verify(inst.canvas.graph, inst.canvas.lists, c) && line["oracle"] == "colorable";
    } catch (const std::exception& e) {
      line["outcome"] = "error";
      line["error"] = e.what();
    }
    rec.add(std::move(line), pass, &inst.canvas);
  }
  rec.summary()["valid"] = suite.valid.size();
  rec.summary()["rejected"] = suite.rejected.size();
  return rec.finish();
}

inline CheckReport check_thom(const CorpusSpec& spec, const CheckOptions& opt) {
  Recorder rec(CheckMode::Thom, spec, opt);
  const Suite suite = thom_suite(spec);
  for (const auto& inst : suite.valid) {
    const auto& c = inst.canvas;
    json line{{"id", inst.id}};
    auto attempt = [&](const char* key, auto&& fn) {
      try {
        const Coloring col = fn();
        line[key] = verify(c.graph, c.lists, col) ? "verified" : "unverified";
      } catch (const std::exception& e) {
        line[key] = std::string("error: ") + e.what();
      }
      return line[key] == "verified";
    };
    const bool direct = attempt("direct", [&] { return color_with_precolored_edge(c.graph, c.s.path[0], c.s.path[1], c.lists); });
    const bool derived = attempt("derived", [&] { return derive_thom_via_two_twos(c.graph, c.s.path[0], c.s.path[1], c.lists); });
    line["oracle"] = oracle_verdict(c, budget_for(opt));
    rec.add(std::move(line), direct && derived && line["oracle"] == "colorable", &c);
  }
  rec.summary()["valid"] = suite.valid.size();
  rec.summary()["rejected"] = suite.rejected.size();
  return rec.finish();
}

inline CheckReport check_bad_paths(const CorpusSpec& spec, const CheckOptions& opt) {
  Recorder rec(CheckMode::BadPaths, spec, opt);
  const Suite suite = boundary_path_suite(spec);
  std::size_t with_fan = 0, fan_multi = 0;
  std::optional<Instance> witness;
  for (const auto& inst : suite.valid) {
    const auto& p = inst.canvas.s.path;
    json line{{"id", inst.id}};
    bool pass = false;
    try {
      const auto bad = bad_path_colorings(inst.canvas.graph, {p[0], p[1], p[2]}, inst.canvas.lists, budget_for(opt));
      const bool fan = has_fan_path(inst.canvas.graph, p[0], p[1], p[2]);
      line["fan"] = fan;
      line["bad"] = bad.size();
      pass = fan || bad.size() <= 1;
      if (fan) {
        ++with_fan;
        if (bad.size() >= 2) {
          ++fan_multi;
          if (!witness || inst.id < witness->id) witness = inst;
        }
      }
    } catch (const std::exception& e) {
      line["error"] = e.what();
    }
    rec.add(std::move(line), pass, &inst.canvas);
  }
  rec.summary()["valid"] = suite.valid.size();
  rec.summary()["with_fan"] = with_fan;
  rec.summary()["fan_with_two_or_more_bad"] = fan_multi;
  if (witness) {
    const std::string name = "fan-witness.canvas.json";
    rec.summary()["fan_witness"] = {{"id", witness->id}, {"file", name}};
    rec.archive(name, canvas_to_json(witness->canvas));
  }
  return rec.finish(witness.has_value());
}

inline CheckReport check_critical(const CorpusSpec& spec, const CheckOptions& opt) {
  Recorder rec(CheckMode::Critical, spec, opt);
  for (const auto& inst : critical_sources(spec)) {
    json line{{"id", inst.id}};
    bool pass = false;
    try {
      const auto budget = budget_for(opt);
      const Canvas k = extract_critical(inst.canvas, budget);
      const bool critical = is_critical(k, budget);
      const auto defects = structure_defects(k);
      json d = json::array();
      for (const auto& x : defects) d.push_back({{"kind", to_string(x.kind)}, {"vertices", x.vertices}});
      line["n"] = k.graph.num_vertices();
      line["m"] = k.graph.num_edges();
      line["critical"] = critical;
      line["defects"] = d;
      pass = critical && defects.empty();
    } catch (const std::exception& e) {
      line["error"] = e.what();
    }
    rec.add(std::move(line), pass, &inst.canvas);
  }
  return rec.finish();
}

}  // namespace detail

inline CheckReport run_theorem_check(const CorpusSpec& spec, CheckMode mode, const CheckOptions& opt = {}) {
  switch (mode) {
    case CheckMode::DemTwo: return detail::check_demtwo(spec, opt);
    case CheckMode::TwoTwos: return detail::check_twotwos(spec, opt);
    case CheckMode::Thom: return detail::check_thom(spec, opt);
    case CheckMode::BadPaths: return detail::check_bad_paths(spec, opt);
    case CheckMode::Critical: return detail::check_critical(spec, opt);
  }
  throw std::invalid_argument("unknown check mode");
}

}  // namespace canvas_color::harness
