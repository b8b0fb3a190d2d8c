#include "padichg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "padichg/charsum.hpp"
#include "padichg/curve.hpp"
#include "padichg/error.hpp"
#include "padichg/ffield.hpp"
#include "padichg/gfunc.hpp"
#include "padichg/padic.hpp"
#include "padichg/rational.hpp"
#include "padichg/verification.hpp"

namespace padichg::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Invalid input that is not a mathematical failure (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Computation result plus the exit code it implies.
struct Outcome {
  Json payload;
  int code = kPass;
};

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError("bad rational '" + item + "': " + e.what());
    }
  }
  return out;
}

std::vector<i64> parse_ints(const std::string& text) {
  std::vector<i64> out;
  for (const Rational& x : parse_rationals(text)) {
    if (!x.is_integer()) throw UsageError("expected an integer, got " + x.str());
    out.push_back(x.num());
  }
  return out;
}

/// A nonnegative integer is a base-p code; a negative integer or a fraction
/// is reduced into F_p.
FqElem parse_element(const std::string& text, const FqField& field) {
  Rational x;
  try {
    x = Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad field element '" + text + "': " + e.what());
  }
  if (x.is_integer() && x.num() >= 0) {
    if (static_cast<u64>(x.num()) >= field.q()) {
      throw UsageError("field element code " + text + " is not below q = " + std::to_string(field.q()));
    }
    return field.from_code(static_cast<u64>(x.num()));
  }
  return field.from_rational(x);
}

Json rationals_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(x.str());
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

Json error_payload(std::string_view name, const std::string& message) {
  Json j;
  j["error"] = name;
  j["message"] = message;
  return j;
}

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << '\n';
}

void render(const Json& payload, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << payload.dump(2) << '\n';
    return;
  }
  const bool has_rows = payload.contains("instances") && payload["instances"].is_array();
  if (format == "csv") {
    if (has_rows) {
      write_csv_row(out, {"instance", "lhs", "rhs", "pass", "note"});
      for (const auto& row : payload["instances"]) {
        write_csv_row(out, {csv_field(row["instance"]), csv_field(row["lhs"]), csv_field(row["rhs"]),
                            csv_field(row["pass"]), csv_field(row["note"])});
      }
      return;
    }
    std::vector<std::string> keys, values;
    for (const auto& [k, v] : payload.items()) {
      keys.push_back(csv_field(k));
      values.push_back(csv_field(v));
    }
    write_csv_row(out, keys);
    write_csv_row(out, values);
    return;
  }
  for (const auto& [k, v] : payload.items()) {
    if (k == "instances") continue;
    out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  if (has_rows) {
    for (const auto& row : payload["instances"]) {
      out << (row["pass"].get<bool>() ? "PASS " : "FAIL ") << row["instance"].get<std::string>() << "  lhs="
          << row["lhs"].get<std::string>() << " rhs=" << row["rhs"].get<std::string>();
      if (!row["note"].get<std::string>().empty()) out << "  " << row["note"].get<std::string>();
      out << '\n';
    }
  }
}

// ---------------------------------------------------------------- eval-g

struct EvalArgs {
  u64 p = 0;
  unsigned r = 1;
  std::string top, bottom, t;
  std::optional<unsigned> precision;
  std::optional<u64> bound;
};

Outcome eval_g(const EvalArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const FqField field = FqField::build(a.p, a.r);
  const GParams params{parse_rationals(a.top), parse_rationals(a.bottom), parse_element(a.t, field)};
  const u64 bound = a.bound.value_or(default_trace_bound(field.q()));
  const unsigned precision = std::max(choose_precision(a.p, bound), a.precision.value_or(0));
  const PadicCtx ctx(field, precision);
  const GValue v = evaluate_G(params, field, ctx);

  Json j;
  j["p"] = a.p;
  j["r"] = a.r;
  j["q"] = field.q();
  j["top"] = rationals_json(params.top);
  j["bottom"] = rationals_json(params.bottom);
  j["t"] = params.t.code();
  j["padic_value"] = v.padic.value();
  j["modulus"] = v.padic.modulus();
  j["denominator_exponent"] = v.denominator_exponent;
  j["precision"] = v.precision;
  j["bound"] = bound;
  try {
    j["integer"] = reconstruct_integer(v, a.p, bound);
  } catch (const MathError& e) {
    j["integer"] = nullptr;
    j["integer_error"] = e.name();
  }
  j["elapsed_ms"] = elapsed_ms(start);
  return {std::move(j), kPass};
}

// ----------------------------------------------------------------- trace

struct TraceArgs {
  std::string family;
  u64 p = 0;
  unsigned r = 1;
  std::string lambda, a1, a2, a3, a4, a6, f, g, c, d;
};

CurveSpec make_curve(const TraceArgs& a, const FqField& F) {
  auto need = [&](const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(std::string("family ") + a.family + " needs --" + flag);
    return parse_element(value, F);
  };
  auto opt = [&](const std::string& value) { return value.empty() ? F.zero() : parse_element(value, F); };
  if (a.family == "legendre") return Legendre{need(a.lambda, "lambda")};
  if (a.family == "a1a3") return A1A3{need(a.a1, "a1"), need(a.a3, "a3")};
  if (a.family == "fg") return FG{need(a.f, "f"), need(a.g, "g")};
  if (a.family == "cd") return CD{need(a.c, "c"), need(a.d, "d")};
  if (a.family == "weierstrass") return Weierstrass{opt(a.a1), opt(a.a2), opt(a.a3), opt(a.a4), opt(a.a6)};
  throw UsageError("unknown family '" + a.family + "'");
}

Outcome trace(const TraceArgs& a) {
  const FqField field = FqField::build(a.p, a.r);
  const CurveSpec curve = make_curve(a, field);
  validate(curve, field);
  const u64 count = count_points(curve, field);
  const i64 t = static_cast<i64>(field.q()) + 1 - static_cast<i64>(count);
  Json j;
  j["family"] = a.family;
  j["p"] = a.p;
  j["r"] = a.r;
  j["q"] = field.q();
  j["count"] = count;
  j["trace"] = t;
  j["hasse_ok"] = within_hasse_bound(t, field.q());
  return {std::move(j), kPass};
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::optional<u64> pmax;
  std::optional<unsigned> rmax;
  std::optional<u64> seed;
  unsigned samples = 0;
};

Outcome verify(const VerifyArgs& a) {
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  verify::SuiteOptions opts;
  opts.pmax = a.pmax;
  opts.rmax = a.rmax;
  if (a.seed) opts.seed = *a.seed;
  opts.samples = a.samples;
  const auto start = std::chrono::steady_clock::now();
  const verify::SuiteReport report = verify::run_suite(a.suite, opts);

  Json j;
  j["suite"] = report.suite;
  j["total"] = report.instances.size();
  j["passed"] = report.passed();
  j["failed"] = report.failed();
  j["all_pass"] = report.all_pass();
  j["elapsed_ms"] = elapsed_ms(start);
  Json rows = Json::array();
  for (const auto& inst : report.instances) {
    rows.push_back(Json{{"instance", inst.instance},
                        {"lhs", inst.lhs},
                        {"rhs", inst.rhs},
                        {"pass", inst.pass},
                        {"note", inst.note}});
  }
  j["instances"] = std::move(rows);
  return {std::move(j), report.all_pass() ? kPass : kVerificationFailure};
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string kind;
  u64 p = 0;
  unsigned r = 1;
  i64 k = 1, a = 1, b = 1, psi = 1;
  u64 m = 2;
  std::string top, bottom, x;
};

Json complex_json(charsum::Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Outcome oracle(const OracleArgs& o) {
  const FqField field = FqField::build(o.p, o.r);
  const charsum::CharTable table(field);
  constexpr double kTol = 1e-6;
  Json j;
  j["oracle"] = o.kind;
  j["q"] = field.q();
  bool ok = true;
  if (o.kind == "gauss") {
    j["k"] = o.k;
    j["value"] = complex_json(charsum::gauss_sum(o.k, table));
    ok = charsum::gauss_product_check(o.k, table, kTol * static_cast<double>(field.q()));
    j["product_check"] = ok;
  } else if (o.kind == "jacobi") {
    j["a"] = o.a;
    j["b"] = o.b;
    j["value"] = complex_json(charsum::jacobi_sum_complex(o.a, o.b, table));
    const u64 n = field.q() - 1;
    if (reduce_signed(o.a, n) != 0 && reduce_signed(o.b, n) != 0 && reduce_signed(o.a + o.b, n) != 0) {
      const PadicCtx ctx(field, 3);
      const TeichmullerTable omega(ctx);
      ok = charsum::gross_koblitz_jacobi_check(o.a, o.b, ctx, omega);
      j["gross_koblitz"] = ok;
    } else {
      j["gross_koblitz"] = nullptr;
    }
  } else if (o.kind == "dh") {
    j["m"] = o.m;
    j["psi"] = o.psi;
    ok = charsum::davenport_hasse_check(o.m, o.psi, table, 1e-5);
    j["holds"] = ok;
  } else if (o.kind == "greene") {
    const auto top = parse_ints(o.top), bottom = parse_ints(o.bottom);
    const FqElem x = parse_element(o.x, field);
    j["top"] = top;
    j["bottom"] = bottom;
    j["x"] = x.code();
    j["greene"] = complex_json(charsum::greene_F(top, bottom, x, table));
    j["mccarthy"] = complex_json(charsum::mccarthy_Fstar(top, bottom, x, table));
  } else {
    throw UsageError("unknown oracle '" + o.kind + "'");
  }
  return {std::move(j), ok ? kPass : kVerificationFailure};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic hypergeometric functions and traces of Frobenius", "padic-hg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval-g", "Evaluate nGn[top; bottom | t]_q");
  eval_cmd->add_option("--p", ea.p, "Prime")->required();
  eval_cmd->add_option("--r", ea.r, "Degree of F_q over F_p");
  eval_cmd->add_option("--top", ea.top, "Comma-separated rationals a_1..a_n")->required();
  eval_cmd->add_option("--bottom", ea.bottom, "Comma-separated rationals b_1..b_n")->required();
  eval_cmd->add_option("--t", ea.t, "Argument: base-p code, or a rational reduced into F_p")->required();
  eval_cmd->add_option("--precision", ea.precision, "Minimum p-adic precision N");
  eval_cmd->add_option("--bound", ea.bound, "Bound on |integer| for reconstruction");

  TraceArgs ta;
  auto* trace_cmd = app.add_subcommand("trace", "Point count and trace of Frobenius");
  trace_cmd->add_option("--family", ta.family, "legendre, a1a3, fg, cd or weierstrass")->required();
  trace_cmd->add_option("--p", ta.p, "Prime")->required();
  trace_cmd->add_option("--r", ta.r, "Degree of F_q over F_p");
  for (auto [flag, target] : {std::pair{"--lambda", &ta.lambda}, {"--a1", &ta.a1}, {"--a2", &ta.a2}, {"--a3", &ta.a3},
                              {"--a4", &ta.a4}, {"--a6", &ta.a6}, {"--f", &ta.f}, {"--g", &ta.g}, {"--c", &ta.c},
                              {"--d", &ta.d}}) {
    trace_cmd->add_option(flag, *target, "Curve coefficient");
  }

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", va.suite, "Suite name")->required();
  verify_cmd->add_option("--pmax", va.pmax, "Largest prime");
  verify_cmd->add_option("--rmax", va.rmax, "Largest degree");
  verify_cmd->add_option("--seed", va.seed, "Sampling seed");
  verify_cmd->add_option("--samples", va.samples, "Samples per sampled suite");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Character-sum oracles");
  oracle_cmd->add_option("kind", oa.kind, "gauss, jacobi, dh or greene")->required();
  oracle_cmd->add_option("--p", oa.p, "Prime")->required();
  oracle_cmd->add_option("--r", oa.r, "Degree of F_q over F_p");
  oracle_cmd->add_option("--k", oa.k, "Character exponent (gauss)");
  oracle_cmd->add_option("--a", oa.a, "First character exponent (jacobi)");
  oracle_cmd->add_option("--b", oa.b, "Second character exponent (jacobi)");
  oracle_cmd->add_option("--m", oa.m, "Order m (dh)");
  oracle_cmd->add_option("--psi", oa.psi, "Character exponent (dh)");
  oracle_cmd->add_option("--top", oa.top, "Top character exponents (greene)");
  oracle_cmd->add_option("--bottom", oa.bottom, "Bottom character exponents (greene)");
  oracle_cmd->add_option("--x", oa.x, "Argument (greene)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    render(error_payload("UsageError", e.what()), format == "csv" || format == "plain" ? format : "json", out);
    return kUsageError;
  }

  try {
    Outcome result;
    if (eval_cmd->parsed()) result = eval_g(ea);
    else if (trace_cmd->parsed()) result = trace(ta);
    else if (verify_cmd->parsed()) result = verify(va);
    else result = oracle(oa);
    render(result.payload, format, out);
    return result.code;
  } catch (const UsageError& e) {
    render(error_payload("UsageError", e.what()), format, out);
    return kUsageError;
  } catch (const MathError& e) {
    render(error_payload(e.name(), e.what()), format, out);
    // Bad field parameters are invalid input rather than a failed computation.
    return e.code() == Errc::NotPrime || e.code() == Errc::DegreeTooLarge ? kUsageError : kMathError;
  } catch (const std::invalid_argument& e) {
    render(error_payload("UsageError", e.what()), format, out);
    return kUsageError;
  }
}

}  // namespace padichg::cli
