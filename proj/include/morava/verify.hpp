#pragma once

// Seeded verification of every structural identity and algebraic law the
// operations must satisfy. Failures are reported as data.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "morava/format.hpp"
#include "morava/power_ops.hpp"

namespace morava {

/// Deterministic source of random elements. Draws use the raw engine output
/// so that a seed gives the same elements on every standard library.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed) : rng_(seed) {}

  GaloisInt scalar(int precision, bool real_only = false) {
    const auto m = pow3(precision);
    const auto re = rng_() % m;
    const auto im = real_only ? 0 : rng_() % m;
    return GaloisInt::from_residues(re, im, precision);
  }

  /// Polynomial in h of degree <= max_degree (clamped to M - 1).
  DeformationElement element(PrecisionProfile prof, int max_degree, bool real_only = false) {
    const int top = std::min(max_degree, prof.h_deg - 1);
    std::vector<GaloisInt> coeffs;
    for (int k = 0; k <= top; ++k) coeffs.push_back(scalar(prof.p_exp, real_only));
    return DeformationElement(prof, coeffs);
  }

  /// Element with unit constant term.
  DeformationElement unit(PrecisionProfile prof, int max_degree) {
    for (;;) {
      auto x = element(prof, max_degree);
      if (x.is_unit()) return x;
    }
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;  // counterexample on failure, reason when skipped
};

struct VerificationReport {
  PrecisionProfile profile;
  std::uint64_t seed = 0;
  int trials = 0;
  std::string readings;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::kFail) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j = {{"name", c.name}, {"status", morava::to_string(c.status)}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      cs.push_back(std::move(j));
    }
    return {{"profile", {{"p_exp", profile.p_exp}, {"h_deg", profile.h_deg}}},
            {"seed", std::to_string(seed)},
            {"trials", trials},
            {"readings", readings},
            {"passed", passed()},
            {"checks", std::move(cs)}};
  }

  std::string to_text() const {
    std::string out = "profile N=" + std::to_string(profile.p_exp) + " M=" + std::to_string(profile.h_deg) +
                      " seed=" + std::to_string(seed) + " trials=" + std::to_string(trials) + "\n";
    out += "readings: " + readings + "\n";
    for (const auto& c : checks) {
      out += std::string("[") + morava::to_string(c.status) + "] " + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    out += passed() ? "all checks passed\n" : "verification FAILED\n";
    return out;
  }
};

namespace detail {

inline std::string pair_text(const DeformationElement& x, const DeformationElement& y) {
  return "x = " + format::to_text(x, format::Spacing::kCompact) + ", y = " + format::to_text(y, format::Spacing::kCompact);
}

}  // namespace detail

/// Runs every check on `trials` pseudo-random inputs derived from `seed`.
inline VerificationReport verify_report(const PowerOpContext& ctx, int trials, std::uint64_t seed) {
  const auto prof = ctx.profile();
  const int n = prof.p_exp;
  const int m = prof.h_deg;
  VerificationReport report{prof, seed, trials, describe(ctx.readings()), {}};
  ElementSampler sampler(seed);

  using Outcome = std::optional<std::string>;  // nullopt = pass
  auto run = [&](std::string name, const std::function<Outcome()>& body, std::string skip_reason = {}) {
    CheckResult r{std::move(name), CheckStatus::kPass, {}};
    if (!skip_reason.empty()) {
      r.status = CheckStatus::kSkipped;
      r.detail = std::move(skip_reason);
    } else {
      try {
        if (auto fail = body()) {
          r.status = CheckStatus::kFail;
          r.detail = *fail;
        }
      } catch (const std::exception& e) {
        r.status = CheckStatus::kFail;
        r.detail = e.what();
      }
    }
    report.checks.push_back(std::move(r));
  };
  const std::string needs_division = n < 2 ? "needs 3-adic precision >= 2 for the division by 3" : "";
  const auto one = DeformationElement::integer(1, prof);
  const auto zero = DeformationElement(prof);
  const auto h = DeformationElement::h(prof);
  const auto i = DeformationElement::i(prof);
  const auto f = ctx.algebra_f();
  const int half_degree = (m - 1) / 2;

  run("f(A) = 0", [&]() -> Outcome {
    if (poly_at_matrix(f->modulus().all_coeffs(), ctx.A()).is_zero()) return std::nullopt;
    return "nonzero matrix";
  });
  run("companion(f) = A", [&]() -> Outcome {
    if (companion(f->modulus()) == ctx.A()) return std::nullopt;
    return "companion matrix differs from A";
  });
  run("rep(u) = A", [&]() -> Outcome {
    if (rep_matrix(AlgebraElement::generator(f)) == ctx.A()) return std::nullopt;
    return "representing matrix of u differs from A";
  });
  run("W(eta(a)) = 0", [&]() -> Outcome {
    const auto w = evaluate(ctx.algebra_W()->modulus(), ctx.eta_a());
    if (w.is_zero()) return std::nullopt;
    return "W(eta(a)) = " + format::to_text(w);
  });
  run("eta(psi3(h)) = composite formula", [&]() -> Outcome {
    if (ctx.eta(ctx.psi3_h()) == ctx.composite_formula()) return std::nullopt;
    return "composite differs";
  });
  run("rep(eta(psi3(h))) = B", [&]() -> Outcome {
    if (rep_matrix(ctx.psi_c3_h()) == ctx.B()) return std::nullopt;
    return "representing matrix differs from B";
  });
  run("powers of B vanish within 8(N+M)", [&]() -> Outcome {
    const int k = vanishing_power(ctx.B(), prof);
    (void)k;
    return std::nullopt;
  });
  run("tr(B^n) has zero i-part for n <= 2M", [&]() -> Outcome {
    const auto traces = ctx.traces_of_B_powers(2 * m);
    for (std::size_t k = 0; k < traces.size(); ++k)
      if (!traces[k].is_real()) return "tr(B^" + std::to_string(k + 1) + ") = " + format::to_text(traces[k]);
    return std::nullopt;
  });
  run(
      "delta(h) = -h^3 + 18h^2 - 119h + 102",
      [&]() -> Outcome {
        const auto expected = DeformationElement::from_integers({102, -119, 18, -1}, prof).at_precision(n - 1);
        const auto got = ctx.delta(h);
        if (got == expected) return std::nullopt;
        return "delta(h) = " + format::to_text(got);
      },
      m < 4 ? "needs h-degree bound >= 4" : needs_division);
  run(
      "point values of alpha and delta",
      [&]() -> Outcome {
        const auto lowered = [&](const DeformationElement& x) { return x.at_precision(n - 1); };
        if (!(ctx.delta(zero) == lowered(zero))) return "delta(0) != 0";
        if (!(ctx.delta(one) == lowered(zero))) return "delta(1) != 0";
        if (!(ctx.alpha(zero) == lowered(zero))) return "alpha(0) != 0";
        if (!(ctx.alpha(one) == lowered(one.scaled(3)))) return "alpha(1) != 3";
        if (!(ctx.delta(i) == lowered(i.scaled(6)))) return "delta(i) = " + format::to_text(ctx.delta(i));
        return std::nullopt;
      },
      needs_division);
  run("psi3(i) = -i and c^2 = h - 1", [&]() -> Outcome {
    const auto w = ctx.algebra_W();
    if (!(ctx.psi3(i) == AlgebraElement::scalar(w, -i))) return "psi3(i) = " + format::to_text(ctx.psi3(i));
    if (!(ctx.c() * ctx.c() == h - one)) return "c^2 != h - 1";
    return std::nullopt;
  });
  run(
      "p-derivation law for delta",
      [&]() -> Outcome {
        for (int t = 0; t < trials; ++t) {
          const auto x = sampler.element(prof, m - 1);
          const auto y = sampler.element(prof, m - 1);
          const auto lhs = ctx.delta(x + y) - ctx.delta(x) - ctx.delta(y);
          const auto rhs = (x.pow(3) + y.pow(3) - (x + y).pow(3)).exact_div3();
          if (!(lhs == rhs)) return detail::pair_text(x, y);
        }
        return std::nullopt;
      },
      needs_division);
  run(
      "defect law for alpha",
      [&]() -> Outcome {
        for (int t = 0; t < trials; ++t) {
          const auto x = sampler.element(prof, m - 1);
          const auto y = sampler.element(prof, m - 1);
          const auto lhs = ctx.alpha(x + y) - ctx.alpha(x) - ctx.alpha(y);
          const auto rhs = ((x + y).pow(3) - x.pow(3) - y.pow(3)).exact_div3();
          if (!(lhs == rhs)) return detail::pair_text(x, y);
        }
        return std::nullopt;
      },
      needs_division);
  run("psi^{C3} additive and multiplicative", [&]() -> Outcome {
    for (int t = 0; t < trials; ++t) {
      const auto x = sampler.element(prof, half_degree);
      const auto y = sampler.element(prof, half_degree);
      if (!(ctx.psi_c3(x + y) == ctx.psi_c3(x) + ctx.psi_c3(y))) return "additivity: " + detail::pair_text(x, y);
      if (!(ctx.psi_c3(x * y) == ctx.psi_c3(x) * ctx.psi_c3(y))) return "multiplicativity: " + detail::pair_text(x, y);
    }
    return std::nullopt;
  });
  run(
      "delta = delta_via_B",
      [&]() -> Outcome {
        for (int t = 0; t < trials; ++t) {
          const auto x = sampler.element(prof, m - 1);
          if (!(ctx.delta(x) == ctx.delta_via_B(x)))
            return "x = " + format::to_text(x, format::Spacing::kCompact);
        }
        return std::nullopt;
      },
      needs_division);
  run(
      "integrality of alpha",
      [&]() -> Outcome {
        for (int t = 0; t < trials; ++t) {
          const auto x = sampler.element(prof, m - 1);
          try {
            (void)ctx.alpha(x);
          } catch (const NotDivisibleBy3&) {
            return "x^3 + tr psi^{C3}(x) not divisible by 3 at x = " + format::to_text(x, format::Spacing::kCompact);
          }
        }
        return std::nullopt;
      },
      needs_division);
  run(
      "real inputs give real delta",
      [&]() -> Outcome {
        for (int t = 0; t < trials; ++t) {
          const auto x = sampler.element(prof, m - 1, /*real_only=*/true);
          const auto d = ctx.delta(x);
          if (!d.is_real()) return "x = " + format::to_text(x, format::Spacing::kCompact);
        }
        return std::nullopt;
      },
      needs_division);
  return report;
}

}  // namespace morava
