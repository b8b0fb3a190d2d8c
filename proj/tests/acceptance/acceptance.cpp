// Runs the seven acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 iff the set of failing criteria equals --expect-fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "padichg/frobtrace.hpp"
#include "padichg/verification.hpp"

namespace {

using padichg::verify::InstanceReport;
using padichg::verify::run_suite;
using padichg::verify::SuiteReport;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string tally(const SuiteReport& r) {
  return r.suite + " " + std::to_string(r.passed()) + "/" + std::to_string(r.instances.size());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

Verdict corollary() {
  std::ostringstream os;
  bool pass = true;
  for (const auto& item : padichg::frobtrace::corollary_values()) {
    pass = pass && item.pass();
    os << "item " << item.item << ": G=" << item.g_value << " stated=" << item.stated_value
       << " from point counts=" << item.point_count_value << "; ";
  }
  return {pass, os.str()};
}

Verdict legendre_pairs() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport r = run_suite("t13");
  const double s = seconds_since(t0);
  return {r.all_pass() && s < 120.0, tally(r) + " in " + fixed(s) + " s"};
}

Verdict other_pairs() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"t14", "t15", "t16", "t17"}) {
    const SuiteReport r = run_suite(name);
    pass = pass && r.all_pass() && !r.instances.empty();
    detail += tally(r) + "; ";
  }
  return {pass, detail};
}

Verdict rational_families() {
  bool pass = true;
  std::size_t partner_ok = 0, partner_total = 0;
  std::size_t by_r_pass[4] = {}, by_r_total[4] = {}, by_r_match[4] = {};
  for (const char* name : {"t18", "t19", "t110", "t111"}) {
    const SuiteReport r = run_suite(name);
    pass = pass && r.all_pass();
    for (const InstanceReport& inst : r.instances) {
      if (inst.instance.find("partner") != std::string::npos) {
        ++partner_total;
        partner_ok += inst.pass;
        continue;
      }
      const auto pos = inst.instance.rfind(" r=");
      const unsigned deg = static_cast<unsigned>(std::stoul(inst.instance.substr(pos + 3)));
      if (deg > 3) continue;
      ++by_r_total[deg];
      by_r_pass[deg] += inst.pass;
      by_r_match[deg] += inst.lhs == inst.rhs;
    }
  }
  std::ostringstream os;
  os << "partner a_p = 0: " << partner_ok << "/" << partner_total;
  for (unsigned deg = 1; deg <= 3; ++deg) {
    os << "; r=" << deg << ": full pass " << by_r_pass[deg] << "/" << by_r_total[deg] << ", predicted = counted "
       << by_r_match[deg] << "/" << by_r_total[deg];
  }
  return {pass, os.str()};
}

Verdict identities() {
  const SuiteReport split = run_suite("identity-splitting");
  const SuiteReport red = run_suite("identity-reduction");
  std::size_t split_fail_outside = 0, red_fail_d2 = 0;
  for (const auto& inst : split.instances) split_fail_outside += !inst.pass && inst.note == "q != 1 mod 2d";
  for (const auto& inst : red.instances) red_fail_d2 += !inst.pass && inst.instance.find(" d=2 ") != std::string::npos;
  std::ostringstream os;
  os << tally(split) << " (failures with q != 1 mod 2d: " << split_fail_outside << "/" << split.failed() << "); "
     << tally(red) << " (failures with d = 2: " << red_fail_d2 << "/" << red.failed() << ")";
  return {split.all_pass() && red.all_pass(), os.str()};
}

Verdict suite_verdict(const char* name) {
  const SuiteReport r = run_suite(name);
  std::string detail = tally(r);
  for (const auto& inst : r.instances) {
    if (!inst.pass) detail += "; failed: " + inst.instance;
  }
  return {r.all_pass() && !r.instances.empty(), detail};
}

std::set<int> parse_list(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--expect-fail" && i + 1 < argc) {
      expected = parse_list(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--expect-fail 1,4,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"corollary values", corollary},
      {"legendre pair theorem, p in {5,7,11,13}, r <= 2", legendre_pairs},
      {"pair theorems for a1a3, fg and cd families", other_pairs},
      {"rational curve families, p <= 23, r <= 3", rational_families},
      {"splitting and reduction identities", identities},
      {"gamma and floor lemmas", [] { return suite_verdict("lemmas"); }},
      {"character-sum oracles", [] { return suite_verdict("oracle"); }},
  };

  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    if (!v.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << "  ["
              << v.detail << "] (" << fixed(seconds_since(t0)) << " s)" << std::endl;
  }

  auto join = [](const std::set<int>& s) {
    std::string out;
    for (int x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out.empty() ? std::string("none") : out;
  };
  const bool as_expected = failed == expected;
  std::cout << "failing criteria: " << join(failed) << "; expected: " << join(expected) << " -> "
            << (as_expected ? "as expected" : "UNEXPECTED") << std::endl;
  return as_expected ? 0 : 1;
}
