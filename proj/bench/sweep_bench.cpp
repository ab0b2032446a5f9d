// Wall-clock comparison of the parallel sweep kernel against the serial
// reference. Usage: sweep_bench [max_order] [workers...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

#include "ecindex/enumerate.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int max_order = argc > 1 ? std::atoi(argv[1]) : 7;
  std::vector<int> workers;
  for (int i = 2; i < argc; ++i) workers.push_back(std::atoi(argv[i]));
  if (workers.empty()) {
    workers = {1};
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw > 1) workers.push_back(hw);
  }

  std::printf("%-8s %3s %12s %12s %9s %s\n", "sweep", "n", "reference_s", "parallel_s",
              "workers", "match");
  for (bool trees : {false, true}) {
    const int top = trees ? std::min(max_order + 3, ecindex::kMaxSweepTreeOrder) : max_order;
    for (int n = 5; n <= top; ++n) {
      ecindex::SweepConfig config;
      config.order = n;
      config.trees_only = trees;
      ecindex::VerificationReport reference;
      // The reference canonicalizes every graph; skip it where that is slow.
      const bool run_reference = trees || n <= 6;
      const double ref_s =
          run_reference ? seconds([&] { reference = ecindex::verify_bound_reference(config); }) : 0.0;
      for (int w : workers) {
        config.worker_count = w;
        ecindex::VerificationReport fast;
        const double par_s = seconds([&] { fast = ecindex::verify_bound(config); });
        std::printf("%-8s %3d %12.4f %12.4f %9d %s\n", trees ? "trees" : "graphs", n, ref_s,
                    par_s, w, run_reference ? (fast.buckets == reference.buckets ? "yes" : "NO") : "-");
      }
    }
  }
  return 0;
}
