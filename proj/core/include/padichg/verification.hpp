#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Verification suites: each one enumerates or samples theorem / identity
/// instances, evaluates both sides independently and records agreement.
namespace padichg::verify {

struct InstanceReport {
  std::string instance;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<InstanceReport> instances;

  std::size_t passed() const;
  std::size_t failed() const { return instances.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
};

struct SuiteOptions {
  std::optional<std::uint64_t> pmax;  // suite default when unset
  std::optional<unsigned> rmax;
  std::uint64_t seed = 20240601;
  unsigned samples = 0;  // 0 selects the suite default
  unsigned threads = 0;  // 0 selects worker_count()
};

/// Suite names accepted by run_suite.
const std::vector<std::string_view>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// Hardware concurrency, capped by the PADIC_HG_THREADS environment
/// variable when it holds a positive integer.
unsigned worker_count();

/// Runs the tasks on up to `threads` workers; results keep task order.
/// Exceptions escaping a task become failed reports carrying the message.
std::vector<InstanceReport> run_parallel(const std::vector<std::function<InstanceReport()>>& tasks,
                                         unsigned threads);

}  // namespace padichg::verify
