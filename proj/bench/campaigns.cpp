// Serial against parallel wall time for each campaign. Reports from both
// modes must agree byte for byte.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <omp.h>

#include "pathkit/checks.hpp"

using namespace pathkit;

namespace {

struct Timed {
  CheckReport report;
  double ms;
};

Timed timed(const std::string& law, const CampaignOptions& opts, int repeat) {
  Timed best{{}, 1e300};
  for (int i = 0; i < repeat; ++i) {
    auto start = std::chrono::steady_clock::now();
    CheckReport r = run_campaign(law, opts);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms < best.ms) best = {std::move(r), ms};
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Campaign throughput, serial and parallel"};
  double scale = 1.0;
  int repeat = 3;
  std::uint64_t seed = 1;
  app.add_option("--scale", scale, "Multiplier on the default sample counts")->capture_default_str();
  app.add_option("--repeat", repeat, "Runs per mode; the fastest is reported")->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  struct Row {
    const char* law;
    std::size_t samples;
    std::size_t depth;
  };
  const Row rows[] = {
      {"groupoid", 4000, 6},   {"termination", 20000, 8}, {"confluence", 1000, 6},
      {"equivalence", 4000, 4}, {"interchange", 800, 4},   {"pentagon", 400, 4},
      {"triangle", 400, 4},
  };

  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("%-12s %8s %12s %12s %8s %s\n", "law", "samples", "serial ms", "parallel ms", "speedup",
              "same");
  int mismatches = 0;
  for (const Row& row : rows) {
    CampaignOptions opts;
    opts.samples = static_cast<std::size_t>(static_cast<double>(row.samples) * scale);
    opts.seed = seed;
    opts.depth = row.depth;
    opts.oracle_subsample = opts.samples / 10;
    opts.execution = Execution::Serial;
    Timed serial = timed(row.law, opts, repeat);
    opts.execution = Execution::Parallel;
    Timed parallel = timed(row.law, opts, repeat);
    bool same = to_json(serial.report) == to_json(parallel.report);
    mismatches += !same;
    std::printf("%-12s %8zu %12.1f %12.1f %8.2f %s\n", row.law, opts.samples, serial.ms, parallel.ms,
                serial.ms / parallel.ms, same ? "yes" : "NO");
  }
  return mismatches == 0 ? 0 : 1;
}
