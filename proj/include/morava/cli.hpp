#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage, 2 parse error,
// 3 arithmetic error, 4 verification failure.

#include <cstdint>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "morava/expr.hpp"
#include "morava/format.hpp"
#include "morava/power_ops.hpp"
#include "morava/verify.hpp"

namespace morava::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kArithmetic = 3, kVerification = 4 };

namespace detail {

struct Options {
  int prec_3 = 24;
  int prec_h = 16;
  std::string format = "text";
  std::string expr;
  bool invert = false;
  int max_power = 8;
  std::string what;
  int trials = 100;
  std::uint64_t seed = 0;
};

inline void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

}  // namespace detail

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Exact power operations on height-2 Morava E-theory at p = 3", "morava"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--prec-3", o.prec_3, "3-adic precision N")->capture_default_str();
  app.add_option("--prec-h", o.prec_h, "h-degree bound M")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto add_expr_command = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("--expr", o.expr, "Element of E0, e.g. \"h^2 + 3*c - 1\"")->required();
    return sc;
  };
  auto* delta_cmd = add_expr_command("delta", "delta(x) = 3x - (x^3 + tr x(B))/3");
  auto* alpha_cmd = add_expr_command("alpha", "alpha(x) = (x^3 + tr x(B))/3");
  auto* psi3_cmd = add_expr_command("psi3", "psi^3(x) in E0[a]/W");
  auto* eta_psi3_cmd = add_expr_command("eta-psi3", "eta(psi^3(x)) in E0[u]/f");
  auto* eval_cmd = add_expr_command("eval", "Evaluate an expression");
  eval_cmd->add_flag("--invert", o.invert, "Print the multiplicative inverse instead");
  auto* trace_cmd = app.add_subcommand("trace-b", "Traces of the powers of B");
  trace_cmd->add_option("--max-power", o.max_power, "Largest power K")->check(CLI::PositiveNumber)->capture_default_str();
  auto* dump_cmd = app.add_subcommand("dump", "Print one of the fixed objects");
  dump_cmd->add_option("--what", o.what, "Object to print")
      ->required()
      ->check(CLI::IsMember({"A", "B", "f", "W", "psi3h", "etapsi3h", "c"}));
  auto* verify_cmd = app.add_subcommand("verify", "Run the seeded verification suite");
  verify_cmd->add_option("--trials", o.trials, "Random trials per property")->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_option("--seed", o.seed, "Seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const bool json = o.format == "json";
  try {
    const PrecisionProfile prof(o.prec_3, o.prec_h);

    if (eval_cmd->parsed()) {
      auto x = expr::eval_string(o.expr, prof);
      if (o.invert) x = invert(x);
      if (json)
        detail::emit(out, format::to_json(x));
      else
        out << format::to_text(x) << "\n";
      return kOk;
    }

    const auto ctx = PowerOpContext::arbitrate(prof);

    if (delta_cmd->parsed() || alpha_cmd->parsed()) {
      const auto x = expr::eval_string(o.expr, prof);
      const auto y = delta_cmd->parsed() ? ctx.delta(x) : ctx.alpha(x);
      if (json)
        detail::emit(out, format::to_json(y));
      else
        out << format::to_text(y) << "\n";
      return kOk;
    }
    if (psi3_cmd->parsed() || eta_psi3_cmd->parsed()) {
      const auto x = expr::eval_string(o.expr, prof);
      const auto y = psi3_cmd->parsed() ? ctx.psi3(x) : ctx.psi_c3(x);
      if (json)
        detail::emit(out, format::to_json(y));
      else
        out << format::to_text(y) << "\n";
      return kOk;
    }
    if (trace_cmd->parsed()) {
      const auto traces = ctx.traces_of_B_powers(o.max_power);
      const int vanish = vanishing_power(ctx.B(), prof);
      bool all_real = true;
      for (const auto& t : traces) all_real = all_real && t.is_real();
      if (json) {
        nlohmann::json ts = nlohmann::json::array();
        for (const auto& t : traces) ts.push_back(format::to_json(t));
        detail::emit(out, {{"traces", std::move(ts)}, {"all_real", all_real}, {"vanishing_power", vanish}});
      } else {
        for (std::size_t n = 0; n < traces.size(); ++n)
          out << "tr(B^" << n + 1 << ") = " << format::to_text(traces[n]) << "\n";
        out << "B^" << vanish << " = 0\n";
      }
      if (!all_real) {
        err << "some trace has a nonzero i-part\n";
        return kVerification;
      }
      return kOk;
    }
    if (dump_cmd->parsed()) {
      const auto& w = o.what;
      if (w == "A" || w == "B") {
        const auto& m = w == "A" ? ctx.A() : ctx.B();
        if (json)
          detail::emit(out, format::to_json(m));
        else
          out << format::to_text(m);
      } else if (w == "f" || w == "W") {
        const auto& alg = w == "f" ? ctx.algebra_f() : ctx.algebra_W();
        if (json)
          detail::emit(out, format::to_json(alg->modulus(), alg->name(), alg->generator()));
        else
          out << format::to_text(alg->modulus(), alg->generator()) << "\n";
      } else if (w == "psi3h" || w == "etapsi3h") {
        const auto& y = w == "psi3h" ? ctx.psi3_h() : ctx.psi_c3_h();
        if (json)
          detail::emit(out, format::to_json(y));
        else
          out << format::to_text(y) << "\n";
      } else {
        if (json)
          detail::emit(out, format::to_json(ctx.c()));
        else
          out << format::to_text(ctx.c()) << "\n";
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto report = verify_report(ctx, o.trials, o.seed);
      if (json)
        detail::emit(out, report.to_json());
      else
        out << report.to_text();
      return report.passed() ? kOk : kVerification;
    }
  } catch (const expr::ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  } catch (const ArithmeticError& e) {
    err << "arithmetic error: " << e.what() << "\n";
    return kArithmetic;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  err << "no subcommand given\n";
  return kUsage;
}

}  // namespace morava::cli
