#include <gtest/gtest.h>

#include <sstream>

#include <pauli_fwht/bench.hpp>
#include <pauli_fwht/verify.hpp>

using namespace pauli_fwht;

TEST(Verify, DefaultPasses) {
  const VerifyResult res = run_verify(VerifyConfig{});
  EXPECT_TRUE(res.passed);
  EXPECT_LE(res.max_deviation, 1e-12);
  EXPECT_EQ(res.rows.size(), 5u * 4u);
}

TEST(Verify, InjectedFaultFails) {
  VerifyConfig cfg;
  cfg.n_max = 3;
  cfg.trials = 2;
  cfg.inject_fault = true;
  const VerifyResult res = run_verify(cfg);
  EXPECT_FALSE(res.passed);
  EXPECT_GT(res.max_deviation, 1e-6);
}

TEST(Verify, CapEnforced) {
  VerifyConfig cfg;
  cfg.n_max = 9;
  EXPECT_THROW(run_verify(cfg), LimitError);
}

TEST(Bench, RowsAndCounters) {
  BenchConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 4;
  const BenchResult res = run_bench(cfg);
  ASSERT_EQ(res.records.size(), 3u * 10u * 10u);
  for (const BenchRecord& r : res.records) {
    EXPECT_EQ(r.swaps, expected_swaps(r.n));
    EXPECT_EQ(r.adds_plus_subs, std::uint64_t{r.n} << (2 * r.n));
    EXPECT_GE(r.seconds, 0.0);
  }
  ASSERT_EQ(res.summary.size(), 3u);
  EXPECT_FALSE(res.summary[0].ratio_to_previous);
  EXPECT_TRUE(res.summary[1].ratio_to_previous);
}

TEST(Bench, DeterministicExceptTimings) {
  BenchConfig cfg;
  cfg.n_min = 1;
  cfg.n_max = 3;
  cfg.repeats = 2;
  cfg.matrices = 3;
  auto strip = [](BenchResult r) {
    for (auto& rec : r.records) rec.seconds = 0.0;
    std::ostringstream out;
    write_bench_csv(r.records, out);
    return out.str();
  };
  EXPECT_EQ(strip(run_bench(cfg)), strip(run_bench(cfg)));
}

TEST(Bench, Limits) {
  BenchConfig cfg;
  cfg.n_max = kMaxBenchQubits + 1;
  EXPECT_THROW(run_bench(cfg), LimitError);
  cfg.n_max = 2;
  cfg.n_min = 3;
  EXPECT_THROW(run_bench(cfg), LimitError);
}
