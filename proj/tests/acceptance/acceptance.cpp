// Acceptance runner: one PASS/FAIL line per headline criterion over the
// default corpus. Usage: acceptance [path-to-canvas-color] [archive-dir]

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "canvas_color.hpp"

namespace h = canvas_color::harness;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& name, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << n << ". " << name << " - " << detail << std::endl;
  failures += pass ? 0 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Timed {
  h::CheckReport report;
  double seconds;
};

Timed timed_check(const h::CorpusSpec& spec, h::CheckMode mode, const h::CheckOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = h::run_theorem_check(spec, mode, opt);
  return {std::move(r), seconds_since(t0)};
}

std::string first_failure(const h::CheckReport& r) {
  for (const auto& l : r.lines)
    if (!l.at("pass").get<bool>()) return "; first failure " + l.dump();
  return "";
}

std::string counts(const Timed& t) {
  std::ostringstream out;
  out << t.report.summary.at("instances") << " instances, " << t.report.summary.at("failures") << " failures, "
      << static_cast<int>(t.seconds * 10) / 10.0 << "s";
  return out.str();
}

std::optional<std::string> capture(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  char buf[1 << 16];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::filesystem::path archive = argc > 2 ? argv[2] : std::filesystem::current_path() / "acceptance_artifacts";
  h::CorpusSpec spec;
  h::CheckOptions opt;
  opt.archive_dir = archive;

  const auto demtwo = timed_check(spec, h::CheckMode::DemTwo, opt);
  report(1, demtwo.report.ok && demtwo.seconds <= 300, "DemTwo dichotomy agrees with the oracle",
         counts(demtwo) + ", " + std::to_string(demtwo.report.summary.at("colored").get<int>()) + " colored, " +
             std::to_string(demtwo.report.summary.at("exceptions").get<int>()) + " exceptions" + first_failure(demtwo.report));

  const auto twotwos = timed_check(spec, h::CheckMode::TwoTwos, opt);
  report(2, twotwos.report.ok && twotwos.seconds <= 120, "two 2-lists always colorable", counts(twotwos) + first_failure(twotwos.report));

  const auto thom = timed_check(spec, h::CheckMode::Thom, opt);
  report(3, thom.report.ok, "precolored edge: direct and reduction colorers both verify", counts(thom) + first_failure(thom.report));

  const auto badpaths = timed_check(spec, h::CheckMode::BadPaths, opt);
  {
    const auto& s = badpaths.report.summary;
    std::string detail = counts(badpaths) + ", " + std::to_string(s.at("fan_with_two_or_more_bad").get<int>()) +
                         " fan instances with >= 2 bad colorings";
    if (s.contains("fan_witness")) detail += ", witness " + (archive / s.at("fan_witness").at("file").get<std::string>()).string();
    report(4, badpaths.report.ok, "at most one bad path coloring without a fan path", detail + first_failure(badpaths.report));
  }

  const auto critical = timed_check(spec, h::CheckMode::Critical, opt);
  report(5, critical.report.ok, "critical canvases: essential cuts only, empty short cycles",
         counts(critical) + first_failure(critical.report));

  {
    const auto& s = demtwo.report.summary;
    const int exc = s.at("exceptions").get<int>();
    const int confirmed = s.at("exceptions_confirmed").get<int>();
    report(6, exc > 0 && exc == confirmed, "every exception certificate is uncolorable",
           std::to_string(confirmed) + " of " + std::to_string(exc) + " confirmed by the oracle");
  }

  {
    std::string a, b, how;
    if (!cli.empty() && std::filesystem::exists(cli)) {
      const std::string cmd = "\"" + cli + "\" check --mode all --json --seed 1";
      a = capture(cmd).value_or("");
      b = capture(cmd).value_or("");
      how = "two CLI runs";
    } else {
      for (auto m : {h::CheckMode::DemTwo, h::CheckMode::TwoTwos, h::CheckMode::Thom, h::CheckMode::BadPaths, h::CheckMode::Critical}) {
        a += h::run_theorem_check(spec, m).to_jsonl();
        b += h::run_theorem_check(spec, m).to_jsonl();
      }
      how = "two in-process runs";
    }
    report(7, !a.empty() && a == b, "check reports are byte-identical",
           how + ", " + std::to_string(a.size()) + " bytes each");
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
