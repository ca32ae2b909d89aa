// Copyright 2026 The stratify Authors
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

// Command-line front end: load a complex, validate it, run the codimension
// assignment, group strata and write the result as JSON or DOT.
//
// Exit status: 0 success, 1 malformed input or bad arguments, 2 the complex
// failed validation (report on stderr).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "stratify/field.hpp"
#include "stratify/generators.hpp"
#include "stratify/io.hpp"
#include "stratify/strata.hpp"
#include "stratify/stratcast.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using stratify::InputFormat;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
  std::string input;
  InputFormat format = InputFormat::kSimplices;
  std::uint32_t prime = 2;
  unsigned workers = 1;
  bool deep_validate = false;
  std::string output;
  std::string emit = "json";
  bool timings = false;
  std::vector<int> bench;
};

double seconds(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void write_output(const RunConfig& config, const std::string& text) {
  if (config.output.empty() || config.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw stratify::MalformedInput("cannot write " + config.output);
  out << text;
}

int run_main(const RunConfig& config) {
  const auto start = Clock::now();
  stratify::LabeledComplex input = stratify::load_complex(config.input, config.format);
  const stratify::CWComplex& complex = input.complex;

  if (config.deep_validate) {
    const stratify::ValidationReport report = stratify::validate(complex, true, config.prime);
    if (!report.ok()) throw stratify::ValidationError(report);
  }

  stratify::RunOptions options;
  options.prime = config.prime;
  options.workers = config.workers;
  stratify::RunResult result = stratify::run(complex, options);

  const auto strata_start = Clock::now();
  const stratify::Stratification strat = stratify::stratify(complex, result.state.codim);
  const double strata_seconds = seconds(strata_start);

  if (config.emit == "dot") {
    write_output(config, stratify::frontier_to_dot(strat));
    return kExitOk;
  }
  std::optional<stratify::RunMetadata> meta;
  if (config.timings) {
    meta = stratify::RunMetadata{config.workers, result.timings, strata_seconds, seconds(start)};
  }
  const auto doc = stratify::result_to_json(complex, config.prime, result.state.codim, strat, input.labels, meta);
  write_output(config, doc.dump(2) + "\n");
  return kExitOk;
}

// Grid tori have the same star size at every grid size, so time per cell
// should stay roughly flat as the grid grows.
int run_bench(const RunConfig& config) {
  std::ostringstream out;
  out << "# workers=" << config.workers << " p=" << config.prime << "\n";
  out << std::left << std::setw(8) << "grid" << std::setw(10) << "cells" << std::setw(14) << "total_s"
      << std::setw(14) << "stars_diffs_s" << "us_per_cell\n";
  for (int k : config.bench) {
    const stratify::SimplicialComplex sc = stratify::build_from_simplices(stratify::gen::grid_torus(k, k));
    const auto start = Clock::now();
    stratify::RunResult result = stratify::run(sc.complex, {config.prime, config.workers});
    const stratify::Stratification strat = stratify::stratify(sc.complex, result.state.codim);
    const double total = seconds(start);
    double ab = 0.0;
    for (const auto& t : result.timings) ab += t.star_and_diff;
    std::ostringstream grid;
    grid << k << "x" << k;
    out << std::left << std::setw(8) << grid.str() << std::setw(10) << sc.complex.size() << std::setw(14)
        << std::fixed << std::setprecision(4) << total << std::setw(14) << ab << std::setprecision(3)
        << 1e6 * total / static_cast<double>(sc.complex.size()) << "\n";
    if (strat.strata.size() != 1) throw stratify::InvariantViolation("torus did not give a single stratum");
  }
  write_output(config, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical stratification of regular CW complexes"};
  RunConfig config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());

  std::string format = "simplices";
  app.add_option("--input,-i", config.input, "Input complex");
  app.add_option("--format,-f", format, "Input format")->check(CLI::IsMember({"simplices", "cw"}));
  app.add_option("--coeff-p,-p", config.prime, "Coefficient field characteristic (prime)")
      ->check(CLI::Validator(
          [](const std::string& s) {
            try {
              const auto v = std::stoull(s);
              return v < (1ull << 31) && stratify::is_prime(v) ? std::string{} : s + " is not a prime below 2^31";
            } catch (const std::exception&) {
              return s + " is not a number";
            }
          },
          "PRIME"));
  app.add_option("--workers,-j", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--deep-validate", config.deep_validate, "Check that every cell boundary is a cohomology sphere");
  app.add_option("--output,-o", config.output, "Output path (default stdout)");
  app.add_option("--emit", config.emit, "Output format")->check(CLI::IsMember({"json", "dot"}));
  app.add_flag("--timings", config.timings, "Include run metadata (workers, wall time per phase) in JSON output");
  app.add_option("--bench", config.bench, "Benchmark grid tori of the given sizes (e.g. 13 41 129)")
      ->check(CLI::Range(3, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }
  config.format = format == "cw" ? InputFormat::kCw : InputFormat::kSimplices;

  try {
    if (!config.bench.empty()) return run_bench(config);
    if (config.input.empty()) {
      std::cerr << "error: --input is required\n";
      return kExitMalformed;
    }
    return run_main(config);
  } catch (const stratify::MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const stratify::ValidationError& e) {
    std::cerr << "validation failed: " << e.report().issues.size() << " issue(s)\n";
    for (const auto& issue : e.report().issues) std::cerr << "  " << issue.message << "\n";
    return kExitInvalid;
  }
}
