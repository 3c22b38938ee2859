// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "naads/checkers.hpp"
#include "naads/corpus.hpp"
#include "naads/flow.hpp"
#include "naads/hull.hpp"
#include "oracles.hpp"

using namespace naads;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void need(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

double num(const PropertyReport& r, const char* key) { return std::stod(r.detail_value(key)); }

Outcome ac1() {
  Outcome o;
  const auto f = corpus("example1_tent_sqrt").family;
  const auto half = periodicity_check(f, 0.5, 2, 25);
  o.need(half.verdict == Verdict::EvidenceFor, "x=1/2 verdict");
  o.need(num(half, "max_deviation") <= 1e-12, "x=1/2 deviation");
  const auto quarter = periodicity_check(f, 0.25, 2, 25);
  o.need(quarter.verdict == Verdict::Refuted, "x=1/4 verdict");
  o.need(!quarter.witnesses.empty() && quarter.witnesses[0].time == 2, "x=1/4 witness time");
  o.need(std::fabs(omega(f, 2, 0.25) - (1.0 - std::pow(8.0, -0.5))) <= 1e-12, "omega_2(1/4)");
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto f = corpus("example2_powers").family;
  int tried = 0, passed = 0;
  for (std::uint64_t i = 1; tried < 100; ++i) {
    const double x = 0.05 + 0.9 * oracle::halton(i, 2);
    const double y = 0.05 + 0.9 * oracle::halton(i, 3);
    if (std::fabs(x - y) < 0.3) continue;
    ++tried;
    if (li_yorke_classify(f, x, y, 200, 1e-3, 0.25).verdict == Verdict::EvidenceFor) ++passed;
  }
  o.need(passed >= 95, std::to_string(passed) + "/100 pairs");
  if (o.ok) o.note = std::to_string(passed) + "/100 pairs";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto f = corpus("circle_settling").family;
  const auto set = return_time_set(f, 0.0, 0.3, 20);
  o.need(set.times == std::vector<std::int64_t>{-3, -2, 0, 2, 3}, "return set");
  for (std::int64_t N : {20, 40, 80}) {
    o.need(return_time_set(f, 0.0, 0.3, N).censored_right_gap == N - 3, "censored gap at N=" + std::to_string(N));
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto f = corpus("circle_ex4").family;
  const auto rep = minimality_certificate(f, 1.0 / 8.0, 9, 8);
  o.need(rep.verdict == Verdict::Certified, "certificate verdict");
  o.need(rep.detail_value("k") == "9", "k");
  for (int j = 0; j < 16 && o.ok; ++j) {
    const auto hull = hull_sample(f, j / 16.0, 9, 8).points;
    for (int c = 0; c < 16; ++c) {
      double best = 1.0;
      for (double p : hull) best = std::min(best, oracle::circle_dist(p, c / 16.0));
      o.need(best < 1.0 / 8.0, "enumeration");
    }
  }
  o.need(exact_periodicity_report(f, 2, 50).verdict == Verdict::Certified, "exact period 2");
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto f = corpus("circle_harmonic").family;
  o.need(orbit_density(f, 0.0, 0.05, 120).verdict == Verdict::EvidenceFor, "dense orbit");
  const auto r2 = r_transitivity_check(f, 2);
  o.need(r2.verdict == Verdict::EvidenceAgainst, "2-transitivity verdict");
  o.need(r2.detail_value("identity_blocks_exact") == "yes", "identity blocks");
  o.need(num(equicontinuity_modulus(f, 0.1), "delta") == 0.1, "delta");
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto f = corpus("interval_square_sqrt").family;
  const auto rep = minimality_certificate(f, 0.1);
  o.need(rep.verdict == Verdict::Refuted, "verdict");
  o.need(rep.detail_value("witness_x") == "0", "witness x");
  const auto pts = hull_sample(f, 0.5, 1, 2).points;
  const std::vector<double> expected{std::pow(2.0, -4.0), std::pow(2.0, -2.0), 0.5, std::pow(2.0, -0.5),
                                     std::pow(2.0, -0.25)};
  o.need(pts.size() == expected.size(), "hull size");
  for (double e : expected) {
    bool found = false;
    for (double p : pts) found = found || std::fabs(p - e) <= 1e-12;
    o.need(found, "hull point");
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const char* name : {"circle_ex4", "circle_harmonic"}) {
    const auto f = corpus(name).family;
    for (int j = 0; j < 16; ++j) {
      const auto rep = hull_periodicity_property(f, j / 16.0, 2, 8, 6, 25, 1e-9);
      o.need(rep.detail_value("failing_points") == "0", std::string(name) + " failing points");
    }
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  for (const auto& listing : list_corpus()) {
    const auto f = corpus(listing.name).family;
    const bool circle = f.space() == SpaceKind::Circle;
    int bad = 0, bad_forward_first = 0;
    for (int i = 0; i < 100; ++i) {
      const double x = circle ? i / 100.0 : i / 99.0;
      for (std::int64_t n = -100; n <= 100; ++n) {
        if (distance(f.space(), omega(f, -n, omega(f, n, x)), x) > 1e-9) {
          ++bad;
          if (n > 0) ++bad_forward_first;
        }
      }
    }
    o.need(bad == 0, listing.name + " inversion: " + std::to_string(bad) + "/20100 round trips exceed 1e-9, " +
                         std::to_string(bad_forward_first) + " of them with n > 0");
    if (!f.declared_isometric()) continue;
    for (int i = 0; i < 100; i += 3) {
      for (int j = i + 1; j < 100; j += 7) {
        const double x = i / 100.0, y = j / 100.0, d = distance(f.space(), x, y);
        for (std::int64_t n = -100; n <= 100; ++n) {
          o.need(std::fabs(distance(f.space(), omega(f, n, x), omega(f, n, y)) - d) <= 1e-12,
                 listing.name + " isometry");
        }
      }
    }
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto h = transitivity_scan(corpus("circle_harmonic").family, 1.0 / 16.0, 120, 16);
  o.need(h.verdict == Verdict::EvidenceFor, "harmonic verdict");
  o.need(h.detail_value("subverdicts_agree") == "yes", "harmonic agreement");
  const auto e = transitivity_scan(corpus("circle_ex4").family, 1.0 / 16.0, 120, 16);
  o.need(e.verdict == Verdict::EvidenceAgainst, "ex4 verdict");
  o.need(e.detail_value("subverdicts_agree") == "yes", "ex4 agreement");
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome ac10() {
  Outcome o;
  const fs::path base = fs::current_path() / "acceptance_runs";
  std::vector<fs::path> scenarios;
  for (const auto& e : fs::directory_iterator(NAADS_SCENARIO_DIR)) {
    if (e.path().extension() == ".json") scenarios.push_back(e.path());
  }
  std::sort(scenarios.begin(), scenarios.end());
  o.need(!scenarios.empty(), "no scenarios");
  for (const auto& s : scenarios) {
    std::vector<std::string> runs;
    for (const char* tag : {"a", "b"}) {
      const fs::path out = base / tag;
      fs::remove_all(out);
      fs::create_directories(out);
      const std::string cmd = std::string("\"") + NAADS_CLI_PATH + "\" --no-timestamp run --out-dir \"" +
                              out.string() + "\" \"" + s.string() + "\" >/dev/null 2>&1";
      const int raw = std::system(cmd.c_str());
      o.need(WIFEXITED(raw) && WEXITSTATUS(raw) == 0, s.filename().string() + " exit status");
      std::string all;
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(out)) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) all += f.filename().string() + "\n" + slurp(f);
      o.need(!files.empty(), s.filename().string() + " wrote nothing");
      runs.push_back(all);
    }
    o.need(runs[0] == runs[1], s.filename().string() + " differs between runs");
  }
  if (o.ok) o.note = std::to_string(scenarios.size()) + " scenarios";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 example1_tent_sqrt periodic point and non-periodic image", ac1},
      {"AC2 example2_powers Li-Yorke pairs", ac2},
      {"AC3 settling family return times", ac3},
      {"AC4 circle_ex4 minimality certificate and period two", ac4},
      {"AC5 harmonic density, 2-transitivity, equicontinuity", ac5},
      {"AC6 square/root hull split", ac6},
      {"AC7 hull periodicity on grids", ac7},
      {"AC8 inversion and isometry invariants", ac8},
      {"AC9 transitivity sub-verdict coherence", ac9},
      {"AC10 deterministic scenario reports", ac10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
