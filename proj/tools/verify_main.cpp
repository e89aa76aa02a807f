// Copyright 2026 The levyfp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "levyfp/experiments.hpp"

namespace {

struct Options {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<std::string> out;
  bool dump_config = false;
};

void print_summary(const levyfp::VerificationReport& r) {
  std::printf("%-10s %s  (%.1f s, censored %.4g)\n", r.experiment.c_str(), r.pass ? "PASS" : "FAIL",
              r.runtime_seconds, r.censored_fraction);
  for (const auto& row : r.rows) {
    if (!row.gated) continue;
    std::printf("    %-4s %-50s est=%-12.6g target=%-12.6g disc=%.4g %s (threshold %.4g)\n", row.pass ? "ok" : "FAIL",
                row.label.c_str(), row.estimate, row.target, row.discrepancy, row.units.c_str(), row.threshold);
  }
  for (const auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo verification of first-passage laws for stable Levy processes"};
  app.require_subcommand(0, 1);
  Options opt;
  app.add_option("--config", opt.config, "JSON config file (defaults profile when omitted)")->check(CLI::ExistingFile);
  app.add_option("--seed", opt.seed, "Override the master seed");
  app.add_option("--threads", opt.threads, "Worker threads (1 = bit-reproducible mode)")->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out, "Output directory (overrides LEVYFP_OUTPUT_DIR and the config)");
  app.add_flag("--dump-config", opt.dump_config, "Print the effective config as JSON and exit");

  std::vector<std::string> selected;
  for (const auto& e : levyfp::experiment_registry()) {
    auto* sub = app.add_subcommand(std::string(e.name), "Run the " + std::string(e.name) + " experiment");
    sub->fallthrough();
    sub->callback([&selected, name = std::string(e.name)] { selected = {name}; });
  }
  auto* all = app.add_subcommand("all", "Run every experiment");
  all->fallthrough();
  all->callback([&selected] {
    selected.clear();
    for (const auto& e : levyfp::experiment_registry()) selected.emplace_back(e.name);
  });

  CLI11_PARSE(app, argc, argv);

  try {
    levyfp::ExperimentConfig cfg = opt.config ? levyfp::ExperimentConfig::load(*opt.config) : levyfp::ExperimentConfig{};
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.threads) cfg.threads = *opt.threads;
    cfg.validate();
    if (opt.dump_config) {
      std::cout << cfg.to_json().dump(2) << "\n";
      return 0;
    }
    if (selected.empty()) {
      std::cerr << app.help();
      return 2;
    }
    const auto out = levyfp::resolve_output_dir(cfg, opt.out);
    bool ok = true;
    for (const auto& name : selected) {
      for (const auto& e : levyfp::experiment_registry()) {
        if (e.name != name) continue;
        const auto report = e.run(cfg);
        levyfp::emit(report, out / name);
        print_summary(report);
        ok = ok && report.pass;
      }
    }
    std::printf("%s\n", ok ? "all requested experiments passed" : "some experiments failed");
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "verify: %s\n", e.what());
    return 2;
  }
}
