// naads: command-line front end.
//
//   naads run <scenario.json> [--out-dir DIR]
//   naads corpus list
//   naads check <family> <task> [--param k=v ...] [--expect VERDICT] [--report PATH]
//
// Global flags: --no-timestamp, --seed N, --random-sampling.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "naads/corpus.hpp"
#include "naads/errors.hpp"
#include "naads/scenario.hpp"

namespace {

naads::Record parse_param_flags(const std::vector<std::string>& flags) {
  naads::Record out;
  for (const auto& f : flags) {
    const auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0) throw naads::UsageError("--param expects k=v, got '" + f + "'");
    out.emplace_back(f.substr(0, eq), f.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-scale checkers for non-autonomous systems on the interval and the circle"};
  app.require_subcommand(1);

  bool no_timestamp = false;
  bool random_sampling = false;
  std::optional<std::uint64_t> seed;
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp line from reports");
  app.add_flag("--random-sampling", random_sampling, "Sample balls with a seeded generator");
  app.add_option("--seed", seed, "Seed for random ball sampling");

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_path;
  std::string out_dir;
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--out-dir", out_dir, "Directory for relative output paths");

  auto* corpus_cmd = app.add_subcommand("corpus", "Corpus commands");
  corpus_cmd->require_subcommand(1);
  auto* list = corpus_cmd->add_subcommand("list", "List the corpus families");

  auto* check = app.add_subcommand("check", "Run one task on a corpus family");
  std::string family_name;
  std::string task;
  std::vector<std::string> param_flags;
  std::string expect_text;
  std::string report_path;
  check->add_option("family", family_name, "Corpus family name")->required();
  check->add_option("task", task, "Task name")->required();
  check->add_option("--param", param_flags, "Task parameter k=v (repeatable)");
  check->add_option("--expect", expect_text, "Expected verdict");
  check->add_option("--report", report_path, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return naads::kExitUsage;
  }

  naads::RunOptions opts;
  opts.seed = seed;
  opts.random_sampling = random_sampling;

  try {
    if (*run) {
      const naads::Scenario s = naads::load_scenario(scenario_path);
      naads::ScenarioRunSettings settings;
      settings.run = opts;
      settings.timestamp = !no_timestamp;
      settings.out_dir = out_dir;
      return naads::run_scenario(s, settings, std::cout);
    }
    if (*list) {
      for (const auto& e : naads::list_corpus()) std::cout << e.name << "\t" << e.locus << "\n";
      return 0;
    }
    const naads::Record params = parse_param_flags(param_flags);
    std::optional<naads::Verdict> expect;
    if (!expect_text.empty()) {
      try {
        expect = naads::parse_verdict(expect_text);
      } catch (const std::invalid_argument& e) {
        throw naads::UsageError(e.what());
      }
    }
    const naads::CorpusEntry entry = naads::corpus(family_name);
    naads::resolve_params(task, params);
    const naads::PropertyReport rep = naads::run_task(entry.family, task, params, opts);
    const std::string text =
        naads::render_report({entry.name, entry.family.space(), task, expect, !no_timestamp}, rep);
    if (report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream(report_path, std::ios::binary) << text;
    }
    return naads::exit_status(rep.verdict, expect);
  } catch (const std::exception& e) {
    std::cerr << "naads: " << e.what() << "\n";
    return naads::exit_code_for(e);
  }
}
