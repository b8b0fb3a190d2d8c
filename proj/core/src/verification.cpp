#include "padichg/verification.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "padichg/charsum.hpp"
#include "padichg/error.hpp"
#include "padichg/frobtrace.hpp"
#include "padichg/gamma_identities.hpp"
#include "padichg/gfunc.hpp"

namespace padichg::verify {
namespace {

using Task = std::function<InstanceReport()>;
using frobtrace::Theorem;

constexpr unsigned kIdentityPrecision = 3;

std::string str(i64 v) { return std::to_string(v); }

InstanceReport make_report(std::string instance, i64 lhs, i64 rhs, std::string note = {}) {
  return {std::move(instance), str(lhs), str(rhs), lhs == rhs, std::move(note)};
}

std::vector<u64> odd_primes(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 p = std::max<u64>(lo, 3); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

/// Fields are shared by every task of a suite; build each once.
class FieldCache {
 public:
  const FqField& get(u64 p, unsigned r) {
    auto it = fields_.find({p, r});
    if (it == fields_.end()) it = fields_.emplace(std::pair{p, r}, FqField::build(p, r)).first;
    return it->second;
  }
  std::shared_ptr<const GEvaluator> evaluator(u64 p, unsigned r, unsigned precision) {
    const auto key = std::tuple{p, r, precision};
    auto it = evaluators_.find(key);
    if (it == evaluators_.end()) {
      it = evaluators_.emplace(key, std::make_shared<const GEvaluator>(PadicCtx(get(p, r), precision))).first;
    }
    return it->second;
  }
  std::shared_ptr<const GEvaluator> trace_evaluator(u64 p, unsigned r) {
    const FqField& F = get(p, r);
    return evaluator(p, r, choose_precision(p, default_trace_bound(F.q())));
  }

 private:
  std::map<std::pair<u64, unsigned>, FqField> fields_;
  std::map<std::tuple<u64, unsigned, unsigned>, std::shared_ptr<const GEvaluator>> evaluators_;
};

struct Context {
  const SuiteOptions& options;
  std::mt19937_64 rng;
  FieldCache cache;

  u64 pmax(u64 fallback) const { return options.pmax.value_or(fallback); }
  unsigned rmax(unsigned fallback) const { return options.rmax.value_or(fallback); }
  unsigned samples(unsigned fallback) const { return options.samples ? options.samples : fallback; }
  u64 uniform(u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng); }
  i64 uniform_signed(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }
  FqElem nonzero(const FqField& F) { return FqElem(static_cast<std::uint32_t>(uniform(1, F.q() - 1))); }
};

std::string field_label(u64 p, unsigned r) { return "p=" + str(static_cast<i64>(p)) + " r=" + str(r); }

// ---------------------------------------------------------------------------
// Pair theorems over F_q.

std::vector<Task> t13_tasks(Context& c) {
  std::vector<Task> tasks;
  for (u64 p : odd_primes(5, c.pmax(13))) {
    for (unsigned r = 1; r <= c.rmax(2); ++r) {
      const FqField& F = c.cache.get(p, r);
      auto eval = c.cache.trace_evaluator(p, r);
      for (u64 code = 2; code < F.q(); ++code) {
        const FqElem lambda(static_cast<std::uint32_t>(code));
        if (lambda == F.neg(F.one())) continue;
        tasks.push_back([=] {
          const auto res = frobtrace::trace_sum_pair({Theorem::T13, lambda, {}}, *eval);
          return make_report(field_label(p, r) + " lambda=" + str(code), res.lhs, res.rhs);
        });
      }
    }
  }
  return tasks;
}

/// Random admissible (u, v) for the a1a3 / fg / cd families: nonzero and
/// nonsingular for both curves of the pair.
std::pair<FqElem, FqElem> sample_pair(Context& c, Theorem t, const FqField& F) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const FqElem u = c.nonzero(F), v = c.nonzero(F);
    const auto [a, b] = frobtrace::pair_curves({t, u, v}, F);
    if (!discriminant(to_weierstrass(a, F), F).is_zero() && !discriminant(to_weierstrass(b, F), F).is_zero()) {
      return {u, v};
    }
  }
  fail(Errc::SingularCurve, "no nonsingular pair found over F_" + str(static_cast<i64>(F.q())));
}

std::vector<Task> pair_tasks(Context& c, Theorem t) {
  std::vector<Task> tasks;
  for (u64 p : odd_primes(5, c.pmax(13))) {
    for (unsigned r = 1; r <= c.rmax(2); ++r) {
      const FqField& F = c.cache.get(p, r);
      try {
        frobtrace::check_field_hypotheses(t, F.ctx());
      } catch (const MathError&) {
        continue;
      }
      auto eval = c.cache.trace_evaluator(p, r);
      for (unsigned s = 0; s < c.samples(30); ++s) {
        const auto [u, v] = sample_pair(c, t, F);
        const std::string label = field_label(p, r) + " u=" + str(u.code()) + " v=" + str(v.code());
        tasks.push_back([=] {
          const auto res = frobtrace::trace_sum_pair({t, u, v}, *eval);
          return make_report(std::string(frobtrace::to_string(t)) + " " + label, res.lhs, res.rhs,
                             "G=" + str(res.g_value));
        });
        if (t == Theorem::T17_1 || t == Theorem::T17_2 || t == Theorem::T17_3) {
          tasks.push_back([=] {
            const auto six = frobtrace::trace_sum_pair({Theorem::T16, u, v}, *eval);
            const auto four = frobtrace::trace_sum_pair({t, u, v}, *eval);
            return make_report("t16-vs-" + std::string(frobtrace::to_string(t)) + " " + label, six.rhs, four.rhs);
          });
        }
      }
    }
  }
  return tasks;
}

std::vector<Task> t17_tasks(Context& c) {
  std::vector<Task> tasks;
  for (Theorem t : {Theorem::T17_1, Theorem::T17_2, Theorem::T17_3}) {
    auto part = pair_tasks(c, t);
    std::move(part.begin(), part.end(), std::back_inserter(tasks));
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// Curves over Q.

std::vector<Rational> rational_params(Theorem t) {
  if (t == Theorem::T18) return {Rational(2), Rational(1, 2)};
  return {Rational(1), Rational(2), Rational(3), Rational(-5), Rational(7, 2)};
}

std::vector<Task> rational_tasks(Context& c, Theorem t) {
  std::vector<Task> tasks;
  for (u64 p : odd_primes(5, c.pmax(23))) {
    for (const Rational& param : rational_params(t)) {
      frobtrace::RationalInstance base{t, param, p, 1};
      try {
        frobtrace::check_rational_hypotheses(base);
      } catch (const MathError&) {
        continue;
      }
      const std::string label = std::string(frobtrace::to_string(t)) + " p=" + str(static_cast<i64>(p)) +
                                " param=" + param.str();
      tasks.push_back([=] {
        const auto res = frobtrace::rational_curve_trace(base);
        return make_report(label + " partner a_p", res.partner_ap, 0);
      });
      for (unsigned r = 1; r <= c.rmax(3); ++r) {
        frobtrace::RationalInstance inst = base;
        inst.r = r;
        tasks.push_back([=] {
          const auto res = frobtrace::rational_curve_trace(inst);
          InstanceReport rep = make_report(label + " r=" + str(r), res.predicted, res.counted);
          rep.pass = res.pass();
          rep.note = "G=" + str(res.g_value) + " recurrence=" + str(res.recurrence) +
                     " power_trace=" + str(res.power_trace) + " a_p=" + str(res.ap);
          return rep;
        });
      }
    }
  }
  return tasks;
}

std::vector<Task> corollary_tasks(Context&) {
  std::vector<Task> tasks;
  auto items = std::make_shared<std::vector<frobtrace::CorollaryItem>>();
  auto once = std::make_shared<std::once_flag>();
  for (int k = 0; k < 4; ++k) {
    tasks.push_back([=] {
      std::call_once(*once, [&] { *items = frobtrace::corollary_values(); });
      const auto& it = (*items)[static_cast<std::size_t>(k)];
      return make_report("item " + str(it.item) + " q=" + str(static_cast<i64>(it.q)), it.g_value, it.stated_value,
                         "point-count value " + str(it.point_count_value));
    });
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// Identities.

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Rational random_rational(Context& c, i64 den) {
  for (;;) {
    const i64 num = c.uniform_signed(-2 * den, 2 * den);
    if (std::gcd(num, den) == 1) return Rational(num, den);
  }
}

std::vector<Task> splitting_tasks(Context& c) {
  std::vector<std::pair<u64, unsigned>> fields;
  for (u64 p : odd_primes(3, c.pmax(13))) {
    for (unsigned r = 1; r <= c.rmax(2); ++r) fields.emplace_back(p, r);
  }
  std::vector<Task> tasks;
  for (unsigned s = 0; s < c.samples(100); ++s) {
    const auto [p, r] = fields[c.uniform(0, fields.size() - 1)];
    const FqField& F = c.cache.get(p, r);
    const auto divs = divisors(F.q() - 1);
    std::array<Rational, 4> a;
    for (auto& x : a) x = random_rational(c, static_cast<i64>(divs[c.uniform(0, divs.size() - 1)]));
    const FqElem x = c.nonzero(F);
    auto eval = c.cache.evaluator(p, r, kIdentityPrecision);
    i64 d = 1;
    for (const auto& y : a) d = std::lcm(d, y.den());
    // The halved parameters have denominators dividing 2d.
    const std::string note = (F.q() - 1) % static_cast<u64>(2 * d) == 0 ? "q = 1 mod 2d" : "q != 1 mod 2d";
    const std::string label = field_label(p, r) + " a=(" + a[0].str() + "," + a[1].str() + ";" + a[2].str() + "," +
                              a[3].str() + ") x=" + str(x.code());
    tasks.push_back([=] {
      const bool ok = check_splitting_identity(a[0], a[1], a[2], a[3], x, *eval);
      return InstanceReport{label, ok ? "equal" : "differ", "equal", ok, note};
    });
  }
  return tasks;
}

std::vector<Task> reduction_tasks(Context& c) {
  static constexpr std::pair<u64, u64> kPairs[] = {{5, 2}, {5, 3}, {5, 6}, {7, 4}, {11, 4}, {11, 12}};
  static constexpr i64 kDens[] = {1, 2, 3, 4, 5, 6, 7, 8, 12};
  std::vector<Task> tasks;
  for (const auto& [p, d] : kPairs) {
    const FqField& F = c.cache.get(p, 1);
    auto eval = c.cache.evaluator(p, 1, kIdentityPrecision);
    for (unsigned s = 0; s < c.samples(20); ++s) {
      const std::size_t n = c.uniform(1, 3);
      std::vector<Rational> top, bottom;
      for (auto* row : {&top, &bottom}) {
        while (row->size() < n) {
          const i64 den = kDens[c.uniform(0, std::size(kDens) - 1)];
          if (den % static_cast<i64>(p) != 0) row->push_back(random_rational(c, den));
        }
      }
      const FqElem t = c.nonzero(F);
      std::string label = "p=" + str(static_cast<i64>(p)) + " d=" + str(static_cast<i64>(d)) + " top=";
      for (const auto& x : top) label += x.str() + ",";
      label += " bottom=";
      for (const auto& x : bottom) label += x.str() + ",";
      label += " t=" + str(t.code());
      tasks.push_back([=] {
        const bool ok = check_reduction_identity(top, bottom, d, t, *eval);
        return InstanceReport{label, ok ? "equal" : "differ", "equal", ok, {}};
      });
    }
  }
  return tasks;
}

/// Counts successes of `check` over a family of cases; one report per family.
template <class F>
InstanceReport tally(std::string label, std::size_t cases, F&& check) {
  std::size_t ok = 0;
  std::string first_failure;
  for (std::size_t k = 0; k < cases; ++k) {
    if (check(k)) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "first failure at case " + std::to_string(k);
    }
  }
  return InstanceReport{std::move(label), std::to_string(ok), std::to_string(cases), ok == cases, first_failure};
}

std::vector<Task> lemma_tasks(Context& c) {
  std::vector<Task> tasks;
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{5, 2}, {3, 3}, {7, 2}, {11, 2}}) {
    const FqField& F = c.cache.get(p, r);
    auto ctx = std::make_shared<const PadicCtx>(F, kIdentityPrecision);
    const u64 q = F.q();
    const std::string fl = "q=" + str(static_cast<i64>(q));
    const PrimePower pp = F.ctx();
    const i64 q1 = static_cast<i64>(q - 1);
    std::vector<i64> small;  // multipliers prime to p
    for (i64 m = 1; m <= 6; ++m) {
      if (m % static_cast<i64>(p) != 0) small.push_back(m);
    }

    tasks.push_back([=] {
      return tally("reflection " + fl, q - 1, [&](std::size_t a) {
        return identities::reflection_holds(Rational(static_cast<i64>(a), q1), *ctx);
      });
    });
    for (i64 m : small) {
      if (m < 2) continue;
      tasks.push_back([=] {
        return tally("product formula m=" + str(m) + " " + fl, q - 1, [&](std::size_t a) {
          return identities::product_formula_holds(Rational(static_cast<i64>(a), q1), static_cast<u64>(m), *ctx);
        });
      });
    }
    for (i64 t : small) {
      tasks.push_back([=] {
        return tally("shifted-down product t=" + str(t) + " " + fl, q - 1,
                     [&](std::size_t a) { return identities::shifted_down_product_holds(a, static_cast<u64>(t), *ctx); });
      });
      tasks.push_back([=] {
        return tally("shifted-up product t=" + str(t) + " " + fl, q - 1,
                     [&](std::size_t a) { return identities::shifted_up_product_holds(a, static_cast<u64>(t), *ctx); });
      });
    }
    tasks.push_back([=] {
      return tally("complementary product " + fl, q - 2,
                   [&](std::size_t k) { return identities::complementary_product_holds(k + 1, *ctx); });
    });
    tasks.push_back([=] {
      return tally("half-shift quotient " + fl, q - 1, [&](std::size_t a) {
        return 2 * a == q - 1 || identities::half_shift_quotient_holds(a, *ctx);
      });
    });
    for (i64 d : small) {
      if (d < 2) continue;
      tasks.push_back([=] {
        return tally("floor split d=" + str(d) + " " + fl, (q - 2) * r, [&](std::size_t k) {
          return identities::floor_split_holds(d, 1 + k / r, static_cast<unsigned>(k % r), pp);
        });
      });
    }
    for (i64 l : small) {
      tasks.push_back([=] {
        return tally("floor multiple l=" + str(l) + " " + fl, (q - 1) * r, [&](std::size_t k) {
          return identities::floor_multiple_holds(l, k / r, static_cast<unsigned>(k % r), pp);
        });
      });
    }
    tasks.push_back([=] {
      static const Rational xs[] = {Rational(0), Rational(1, 2), Rational(1, 3), Rational(-2, 3), Rational(1, 4),
                                    Rational(5, 6), Rational(7, 8), Rational(-11, 12)};
      const std::size_t per = (q - 1) * r * 2;
      return tally("floor halving " + fl, std::size(xs) * per, [&](std::size_t k) {
        const Rational& x = xs[k / per];
        const std::size_t rest = k % per;
        return identities::floor_halving_holds(x, rest / (2 * r), static_cast<unsigned>((rest / 2) % r), pp,
                                               rest % 2 == 1);
      });
    });
    if (q % 4 == 1) {
      tasks.push_back([=] {
        return tally("quarter quotient " + fl, q - 1, [&](std::size_t n) {
          return 4 * n == q - 1 || 4 * n == 3 * (q - 1) || identities::quarter_quotient_holds(n, *ctx);
        });
      });
    }
  }
  for (u64 p : {5, 7, 11, 13, 17, 19, 23}) {
    auto ctx = std::make_shared<const PadicCtx>(c.cache.get(p, 1), kIdentityPrecision);
    for (u64 d : divisors(p + 1)) {
      if (d < 2) continue;
      tasks.push_back([=] {
        return tally("root-pair quotient p=" + str(static_cast<i64>(p)) + " d=" + str(static_cast<i64>(d)), p - 1,
                     [&](std::size_t n) { return identities::root_pair_quotient_holds(d, n, *ctx); });
      });
    }
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// Oracles.

std::vector<Task> oracle_tasks(Context& c) {
  std::vector<Task> tasks;
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{13, 1}, {5, 2}, {7, 2}}) {
    auto table = std::make_shared<const charsum::CharTable>(c.cache.get(p, r));
    const u64 q = table->q();
    const std::string fl = "q=" + str(static_cast<i64>(q));
    tasks.push_back([=] {
      return tally("gauss product " + fl, q - 1, [&](std::size_t k) {
        return charsum::gauss_product_check(static_cast<i64>(k), *table, 1e-6 * static_cast<double>(q));
      });
    });
    if (q == 49) continue;
    for (u64 m : {2, 3, 4, 6}) {
      tasks.push_back([=] {
        return tally("davenport-hasse m=" + str(static_cast<i64>(m)) + " " + fl, q - 1, [&](std::size_t k) {
          return charsum::davenport_hasse_check(m, static_cast<i64>(k), *table, 1e-5);
        });
      });
    }
    tasks.push_back([=] {
      const FqField& F = table->field();
      std::size_t ok = 0, total = 0;
      std::string note;
      for (u64 code = 2; code < q; ++code) {
        const FqElem lambda(static_cast<std::uint32_t>(code));
        if (lambda == F.neg(F.one())) continue;
        ++total;
        const charsum::Complex v = charsum::koike_trace(lambda, *table);
        const double rounded = std::round(v.real());
        const bool good = std::abs(v - charsum::Complex(rounded, 0.0)) < 1e-4 &&
                          static_cast<i64>(rounded) == trace_of_frobenius(Legendre{lambda}, F);
        if (good) ++ok;
        else if (note.empty()) note = "first failure at lambda=" + str(code);
      }
      return InstanceReport{"koike bridge " + fl, std::to_string(ok), std::to_string(total), ok == total, note};
    });
    tasks.push_back([=] {
      // Greene's 2F1(phi, phi; eps) against McCarthy's 2F1*. With both
      // definitions as written the two differ by the factor q, not by
      // (phi choose eps) = -1/q.
      const FqField& F = table->field();
      const i64 half = static_cast<i64>((q - 1) / 2);
      const double qd = static_cast<double>(q);
      return tally("greene/mccarthy bridge q*F = F* " + fl, q - 3, [&](std::size_t k) {
        const FqElem lambda(static_cast<std::uint32_t>(k + 2));
        if (lambda == F.neg(F.one())) return true;
        const charsum::Complex f = charsum::greene_F({half, half}, {0}, lambda, *table);
        const charsum::Complex fs = charsum::mccarthy_Fstar({half, half}, {0}, lambda, *table);
        return std::abs(qd * f - fs) < 1e-6 * std::max(1.0, std::abs(fs));
      });
    });
  }
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{5, 2}, {3, 3}, {11, 2}}) {
    const FqField& F = c.cache.get(p, r);
    auto ctx = std::make_shared<const PadicCtx>(F, kIdentityPrecision);
    auto omega = std::make_shared<const TeichmullerTable>(*ctx);
    const u64 n = F.q() - 1;
    const bool spot = F.q() > 100;
    std::vector<std::pair<i64, i64>> cases;
    for (u64 a = 1; a < n; ++a) {
      for (u64 b = 1; b < n; ++b) {
        if ((a + b) % n == 0) continue;
        if (spot && (a * 7 + b * 3) % 97 != 0) continue;
        cases.emplace_back(static_cast<i64>(a), static_cast<i64>(b));
      }
    }
    tasks.push_back([=] {
      return tally("gross-koblitz jacobi q=" + str(static_cast<i64>(F.q())) + (spot ? " (spot)" : ""), cases.size(),
                   [&](std::size_t k) {
                     return charsum::gross_koblitz_jacobi_check(cases[k].first, cases[k].second, *ctx, *omega);
                   });
    });
  }
  for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {7, 1}, {13, 1}, {5, 2}, {11, 2}}) {
    const FqField& F = c.cache.get(p, r);
    auto eval = c.cache.trace_evaluator(p, r);
    tasks.push_back([=] {
      return tally("legendre 2G2 bridge q=" + str(static_cast<i64>(F.q())), F.q() - 2, [&](std::size_t k) {
        const FqElem lambda(static_cast<std::uint32_t>(k + 2));
        if (lambda == F.neg(F.one())) return true;
        const auto [trace, g] = frobtrace::legendre_bridge(lambda, *eval);
        return trace == g;
      });
    });
  }
  return tasks;
}

std::vector<Task> build_tasks(std::string_view name, Context& c) {
  if (name == "t13") return t13_tasks(c);
  if (name == "t14") return pair_tasks(c, Theorem::T14);
  if (name == "t15") return pair_tasks(c, Theorem::T15);
  if (name == "t16") return pair_tasks(c, Theorem::T16);
  if (name == "t17") return t17_tasks(c);
  if (name == "t18") return rational_tasks(c, Theorem::T18);
  if (name == "t19") return rational_tasks(c, Theorem::T19);
  if (name == "t110") return rational_tasks(c, Theorem::T110);
  if (name == "t111") return rational_tasks(c, Theorem::T111);
  if (name == "corollary") return corollary_tasks(c);
  if (name == "identity-splitting") return splitting_tasks(c);
  if (name == "identity-reduction") return reduction_tasks(c);
  if (name == "lemmas") return lemma_tasks(c);
  if (name == "oracle") return oracle_tasks(c);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [](const auto& i) { return i.pass; }));
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "t13",       "t14",  "t15",  "t16",       "t17",       "t18",    "t19", "t110",
      "t111",      "corollary", "identity-splitting", "identity-reduction", "lemmas", "oracle"};
  return names;
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PADIC_HG_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::vector<InstanceReport> run_parallel(const std::vector<Task>& tasks, unsigned threads) {
  std::vector<InstanceReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        out[k] = tasks[k]();
      } catch (const MathError& e) {
        out[k] = InstanceReport{"task " + std::to_string(k), "error", "-", false, e.what()};
      } catch (const std::exception& e) {
        out[k] = InstanceReport{"task " + std::to_string(k), "error", "-", false, e.what()};
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  return out;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  Context c{options, std::mt19937_64(options.seed), {}};
  const std::vector<Task> tasks = build_tasks(name, c);
  return SuiteReport{std::string(name), run_parallel(tasks, options.threads ? options.threads : worker_count())};
}

}  // namespace padichg::verify
