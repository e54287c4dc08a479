#pragma once

// Timing harness: for each n, `matrices` seeded random Hermitian inputs are
// decomposed `repeats` times each. Only the decomposition is timed; input
// generation and the copy that restores the input are outside the clock.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "transform.hpp"

namespace pauli_fwht {

inline constexpr unsigned kMaxBenchQubits = 14;

struct BenchConfig {
  unsigned n_min = 1;
  unsigned n_max = 10;
  unsigned repeats = 10;
  unsigned matrices = 10;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct BenchRecord {
  unsigned n = 0;
  unsigned run = 0;
  unsigned matrix_index = 0;
  double seconds = 0.0;
  std::uint64_t swaps = 0;
  std::uint64_t adds_plus_subs = 0;
};

struct BenchSummary {
  unsigned n = 0;
  double mean_seconds = 0.0;
  /// mean(n) / mean(n - 1); absent for the first size.
  std::optional<double> ratio_to_previous;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<BenchSummary> summary;
};

/// Seed of matrix `index` at size n; distinct streams for every (n, index).
constexpr std::uint64_t bench_matrix_seed(std::uint64_t seed, unsigned n, unsigned index) noexcept {
  SplitMix64 sm(seed ^ (std::uint64_t{n} << 40) ^ index);
  return sm.next();
}

inline void validate(const BenchConfig& cfg) {
  if (cfg.n_max > kMaxBenchQubits) {
    throw LimitError("bench n_max " + std::to_string(cfg.n_max) + " exceeds cap " +
                     std::to_string(kMaxBenchQubits));
  }
  if (cfg.n_min > cfg.n_max) throw LimitError("bench n_min exceeds n_max");
  if (cfg.repeats == 0 || cfg.matrices == 0) throw LimitError("bench needs at least one run");
}

/// Runs the benchmark. `on_size` (optional) is called after each n finishes.
template <class OnSize = void (*)(const BenchSummary&)>
BenchResult run_bench(const BenchConfig& cfg, OnSize on_size = [](const BenchSummary&) {}) {
  validate(cfg);
  BenchResult result;
  for (unsigned n = cfg.n_min; n <= cfg.n_max; ++n) {
    double total = 0.0;
    ComplexMatrix work(n);
    for (unsigned m = 0; m < cfg.matrices; ++m) {
      const ComplexMatrix input = random_hermitian(n, bench_matrix_seed(cfg.seed, n, m));
      for (unsigned run = 0; run < cfg.repeats; ++run) {
        std::copy(input.data().begin(), input.data().end(), work.data().begin());
        OpCounters counters;
        const auto start = std::chrono::steady_clock::now();
        decompose_in_place(work.data(), n, &counters, cfg.threads);
        const auto stop = std::chrono::steady_clock::now();
        const double seconds = std::chrono::duration<double>(stop - start).count();
        total += seconds;
        result.records.push_back(
            {n, run, m, seconds, counters.swaps, counters.complex_adds + counters.complex_subs});
      }
    }
    BenchSummary s{n, total / (double(cfg.matrices) * cfg.repeats), std::nullopt};
    if (!result.summary.empty()) s.ratio_to_previous = s.mean_seconds / result.summary.back().mean_seconds;
    result.summary.push_back(s);
    on_size(s);
  }
  return result;
}

inline void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << "n,run,matrix_index,seconds,swaps,adds_plus_subs\n";
  for (const BenchRecord& r : records) {
    out << r.n << ',' << r.run << ',' << r.matrix_index << ',' << format_double(r.seconds) << ','
        << r.swaps << ',' << r.adds_plus_subs << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed");
}

}  // namespace pauli_fwht
