// Timing comparison of the serial reference survey against the parallel
// kernel, plus a census depth sweep. Not part of the test suite.
#include <chrono>
#include <cstdio>

#include "hecke/classes.hpp"

using namespace hecke;

namespace {

double time_survey(const RingContext& ctx, int max_len, int depth, Execution exec,
                   std::size_t* classes_out) {
  SurveyOptions opts;
  opts.max_len = max_len;
  opts.depth = depth;
  opts.exec = exec;
  const auto start = std::chrono::steady_clock::now();
  const Survey s = run_survey(ctx, opts);
  const auto stop = std::chrono::steady_clock::now();
  *classes_out = s.records.size();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main() {
  std::printf("%4s %8s %6s %10s %12s %12s %8s\n", "p", "max_len", "depth", "classes",
              "serial[s]", "parallel[s]", "speedup");
  struct Config {
    int p, max_len, depth;
  };
  const Config configs[] = {{3, 8, 10}, {4, 6, 10}, {4, 8, 10}, {5, 6, 9}, {6, 6, 8}};
  for (const Config& cfg : configs) {
    RingContext ctx(cfg.p);
    std::size_t classes = 0;
    const double serial = time_survey(ctx, cfg.max_len, cfg.depth, Execution::Serial, &classes);
    const double parallel =
        time_survey(ctx, cfg.max_len, cfg.depth, Execution::Parallel, &classes);
    std::printf("%4d %8d %6d %10zu %12.3f %12.3f %8.2f\n", cfg.p, cfg.max_len, cfg.depth,
                classes, serial, parallel, serial / parallel);
  }
  return 0;
}
