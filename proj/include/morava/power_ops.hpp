#pragma once

// Power operations on E_0 at height 2 and p = 3:
//   psi^3     : E_0 -> E_0[a]/W       (Frobenius-semilinear, h -> psi^3(h))
//   eta       : E_0[a]/W -> E_0[u]/f  (E_0-linear, a -> eta(a))
//   psi^{C_3} = eta o psi^3
//   alpha(x)  = (x^3 + tr psi^{C_3}(x)) / 3
//   delta(x)  = 3x - alpha(x)
//
// Series are read as the polynomials their stored coefficients define; every
// operation below is exact on such polynomials modulo (3^N, h^M), with one
// 3-adic digit given up by alpha and delta.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "morava/errors.hpp"
#include "morava/formulas.hpp"
#include "morava/matrix.hpp"
#include "morava/quotient_algebra.hpp"
#include "morava/series.hpp"

namespace morava {

/// |B C_3|, the cardinality entering delta(x) = |BC_3| x - alpha(x).
inline constexpr std::int64_t kCardinalityBC3 = 3;

/// Choice of variant for each of the three ambiguous formulas.
struct Readings {
  Psi3Reading psi3 = Psi3Reading::kQuadraticMiddleTerm;
  EtaReading eta = EtaReading::kParityGraded;
  CompositeReading composite = CompositeReading::kTraceIntegral;

  friend bool operator==(const Readings&, const Readings&) = default;
};

inline std::string describe(const Readings& r) {
  std::string s = r.psi3 == Psi3Reading::kQuadraticMiddleTerm ? "psi3(h): h^2 middle term" : "psi3(h): doubled h^3";
  s += r.eta == EtaReading::kParityGraded ? "; eta(a): (3c^3-6c)u^5" : "; eta(a): (3c^3-6)u^5";
  s += r.composite == CompositeReading::kTraceIntegral ? "; composite: trace-integral signs" : "; composite: literal signs";
  return s;
}

/// Everything the operations need at one precision, built once and checked
/// against the explicit composite formula on construction.
class PowerOpContext {
 public:
  /// Builds with the given readings. Throws CrossCheckFailed when W(eta(a))
  /// is nonzero in E_0[u]/f or eta(psi^3(h)) differs from the composite formula.
  explicit PowerOpContext(PrecisionProfile prof, Readings readings = {})
      : prof_(prof), readings_(readings), f_(define_f(prof)), w_(define_W(prof)), c_(make_c(prof)),
        a_(build_A(prof)), b_(build_B(prof, readings.composite)),
        psi3_h_(w_, formulas::psi3_h_coords(prof, readings.psi3)),
        eta_a_(f_, formulas::eta_a_coords(prof, readings.eta)),
        composite_(f_, formulas::composite_coords(prof, readings.composite)), u_h_(f_) {
    eta_a_powers_.push_back(AlgebraElement::one(f_));
    for (int j = 1; j < w_->rank(); ++j) eta_a_powers_.push_back(eta_a_powers_.back() * eta_a_);

    if (!evaluate(w_->modulus(), eta_a_).is_zero())
      throw CrossCheckFailed("W(eta(a)) is nonzero in E0[u]/f; eta is not well defined (" + describe(readings) + ")");
    u_h_ = eta(psi3_h_);
    if (!(u_h_ == composite_))
      throw CrossCheckFailed("eta(psi3(h)) disagrees with the explicit composite formula (" + describe(readings) + ")");
  }

  /// Tries every combination of readings, preferred readings first, and
  /// keeps the first that passes both cross-checks.
  static PowerOpContext arbitrate(PrecisionProfile prof) {
    std::string failures;
    for (auto composite : {CompositeReading::kTraceIntegral, CompositeReading::kLiteral})
      for (auto eta_r : {EtaReading::kParityGraded, EtaReading::kLiteral})
        for (auto psi3 : {Psi3Reading::kQuadraticMiddleTerm, Psi3Reading::kDoubledCubic}) {
          try {
            return PowerOpContext(prof, Readings{psi3, eta_r, composite});
          } catch (const CrossCheckFailed& e) {
            failures += std::string("\n  ") + e.what();
          }
        }
    throw CrossCheckFailed("no reading of the explicit formulas is consistent:" + failures);
  }

  const PrecisionProfile& profile() const { return prof_; }
  const Readings& readings() const { return readings_; }
  const AlgebraPtr& algebra_f() const { return f_; }
  const AlgebraPtr& algebra_W() const { return w_; }
  const DeformationElement& c() const { return c_; }
  const MatrixE0& A() const { return a_; }
  const MatrixE0& B() const { return b_; }
  const AlgebraElement& eta_a() const { return eta_a_; }

  /// psi^3(h) in E_0[a]/W.
  const AlgebraElement& psi3_h() const { return psi3_h_; }

  /// eta(psi^3(h)) in E_0[u]/f, equal to the explicit composite formula.
  const AlgebraElement& psi_c3_h() const { return u_h_; }

  /// The explicit composite formula as entered.
  const AlgebraElement& composite_formula() const { return composite_; }

  /// E_0-algebra map a -> eta(a).
  AlgebraElement eta(const AlgebraElement& y) const {
    if (y.algebra()->name() != "W") throw AlgebraMismatch("eta is defined on E0[a]/W, got E0/" + y.algebra()->name());
    AlgebraElement acc(f_);
    for (int j = 0; j < y.rank(); ++j) acc = acc + y.coord(j) * eta_a_powers_[static_cast<std::size_t>(j)];
    return acc;
  }

  AlgebraElement psi3(const DeformationElement& x) const { return subst_series(x, psi3_h_, Twist::kFrobenius); }

  AlgebraElement psi_c3(const DeformationElement& x) const { return subst_series(x, u_h_, Twist::kFrobenius); }

  /// x(B): the representing matrix of psi^{C_3}(x), computed directly.
  MatrixE0 at_B(const DeformationElement& x) const { return subst_series(x, b_, Twist::kFrobenius); }

  DeformationElement alpha(const DeformationElement& x) const {
    return (x.pow(3) + trace(psi_c3(x))).exact_div3();
  }

  DeformationElement delta(const DeformationElement& x) const { return x.scaled(kCardinalityBC3) - alpha(x); }

  DeformationElement alpha_via_B(const DeformationElement& x) const {
    return (x.pow(3) + trace(at_B(x))).exact_div3();
  }

  DeformationElement delta_via_B(const DeformationElement& x) const {
    return x.scaled(kCardinalityBC3) - alpha_via_B(x);
  }

  /// tr(B^n) for n = 1..max_power.
  std::vector<DeformationElement> traces_of_B_powers(int max_power) const {
    std::vector<DeformationElement> out;
    MatrixE0 power = b_;
    for (int n = 1; n <= max_power; ++n) {
      out.push_back(trace(power));
      if (n < max_power) power = power * b_;
    }
    return out;
  }

 private:
  PrecisionProfile prof_;
  Readings readings_;
  AlgebraPtr f_;
  AlgebraPtr w_;
  DeformationElement c_;
  MatrixE0 a_;
  MatrixE0 b_;
  AlgebraElement psi3_h_;
  AlgebraElement eta_a_;
  AlgebraElement composite_;
  AlgebraElement u_h_;
  std::vector<AlgebraElement> eta_a_powers_;
};

}  // namespace morava
