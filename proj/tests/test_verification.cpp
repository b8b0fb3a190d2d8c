#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

#include "padichg/verification.hpp"

namespace padichg::verify {
namespace {

SuiteReport run_small(std::string_view name, std::uint64_t pmax, unsigned rmax, unsigned samples = 0) {
  SuiteOptions opts;
  opts.pmax = pmax;
  opts.rmax = rmax;
  opts.samples = samples;
  return run_suite(name, opts);
}

TEST(Suites, NamesAreComplete) {
  const auto& names = suite_names();
  for (const char* n : {"t13", "t14", "t15", "t16", "t17", "t18", "t19", "t110", "t111", "corollary",
                        "identity-splitting", "identity-reduction", "lemmas", "oracle"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  }
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(Suites, PairTheoremsPassOnSmallRanges) {
  for (const char* n : {"t13", "t14", "t15", "t16", "t17"}) {
    const SuiteReport rep = run_small(n, 11, 1, 6);
    EXPECT_GT(rep.instances.size(), 0u) << n;
    EXPECT_TRUE(rep.all_pass()) << n << ": " << rep.failed() << " failures";
  }
}

TEST(Suites, RationalFamiliesPassAtDegreeOne) {
  for (const char* n : {"t18", "t19", "t110", "t111"}) {
    const SuiteReport rep = run_small(n, 23, 1);
    EXPECT_GT(rep.instances.size(), 0u) << n;
    EXPECT_TRUE(rep.all_pass()) << n;
  }
}

TEST(Suites, LemmasAndOraclesPass) {
  EXPECT_TRUE(run_suite("lemmas").all_pass());
  EXPECT_TRUE(run_suite("oracle").all_pass());
}

TEST(Suites, DeterministicForFixedSeed) {
  const SuiteReport a = run_small("t14", 11, 1, 5), b = run_small("t14", 11, 1, 5);
  ASSERT_EQ(a.instances.size(), b.instances.size());
  for (std::size_t k = 0; k < a.instances.size(); ++k) EXPECT_EQ(a.instances[k].instance, b.instances[k].instance);
}

TEST(RunParallel, KeepsOrderAndCapturesExceptions) {
  std::vector<std::function<InstanceReport()>> tasks;
  for (int k = 0; k < 20; ++k) {
    tasks.push_back([k]() -> InstanceReport {
      if (k == 7) throw std::runtime_error("boom");
      return {std::to_string(k), "x", "x", true, {}};
    });
  }
  const auto out = run_parallel(tasks, 3);
  ASSERT_EQ(out.size(), 20u);
  for (int k = 0; k < 20; ++k) {
    if (k == 7) {
      EXPECT_FALSE(out[k].pass);
      EXPECT_NE(out[k].note.find("boom"), std::string::npos);
    } else {
      EXPECT_EQ(out[k].instance, std::to_string(k));
    }
  }
}

TEST(WorkerCount, HonoursEnvironmentCap) {
  ::setenv("PADIC_HG_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  ::setenv("PADIC_HG_THREADS", "junk", 1);
  EXPECT_GE(worker_count(), 1u);
  ::unsetenv("PADIC_HG_THREADS");
  EXPECT_GE(worker_count(), 1u);
}

}  // namespace
}  // namespace padichg::verify
