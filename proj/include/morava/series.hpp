#pragma once

// The coefficient ring E_0 = Z_9[[h]] truncated to (3^N, h^M).

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "morava/errors.hpp"
#include "morava/galois_int.hpp"

namespace morava {

namespace detail {

// Truncated product of two coefficient arrays mod (m, h^len). Products are
// accumulated in 128 bits and reduced only when the next batch could overflow.
inline void convolve(const std::vector<std::uint64_t>& ar, const std::vector<std::uint64_t>& ai,
                     const std::vector<std::uint64_t>& br, const std::vector<std::uint64_t>& bi, std::uint64_t m,
                     std::vector<std::uint64_t>& out_re, std::vector<std::uint64_t>& out_im) {
  using u128 = unsigned __int128;
  const std::size_t len = ar.size();
  const u128 sq = static_cast<u128>(m - 1) * (m - 1);
  const u128 limit = ~static_cast<u128>(0);
  // each accumulator step adds at most 2 * sq
  const std::size_t batch = sq == 0 ? len + 1 : static_cast<std::size_t>(std::min<u128>(limit / (2 * sq), len + 1));
  out_re.assign(len, 0);
  out_im.assign(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    u128 pos = 0, neg = 0, imag = 0;
    std::uint64_t pos_r = 0, neg_r = 0, imag_r = 0;
    std::size_t pending = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      const std::uint64_t xr = ar[j], xi = ai[j], yr = br[k - j], yi = bi[k - j];
      pos += static_cast<u128>(xr) * yr;
      neg += static_cast<u128>(xi) * yi;
      imag += static_cast<u128>(xr) * yi + static_cast<u128>(xi) * yr;
      if (++pending == batch) {
        pos_r = add_mod(pos_r, static_cast<std::uint64_t>(pos % m), m);
        neg_r = add_mod(neg_r, static_cast<std::uint64_t>(neg % m), m);
        imag_r = add_mod(imag_r, static_cast<std::uint64_t>(imag % m), m);
        pos = neg = imag = 0;
        pending = 0;
      }
    }
    pos_r = add_mod(pos_r, static_cast<std::uint64_t>(pos % m), m);
    neg_r = add_mod(neg_r, static_cast<std::uint64_t>(neg % m), m);
    imag_r = add_mod(imag_r, static_cast<std::uint64_t>(imag % m), m);
    out_re[k] = sub_mod(pos_r, neg_r, m);
    out_im[k] = imag_r;
  }
}

}  // namespace detail

/// A truncated power series sum_{k<M} z_k h^k over Z_9, every coefficient
/// canonical mod 3^eff_p. eff_p starts at N and drops by one per exact
/// division by 3 in the value's history.
class DeformationElement {
 public:
  explicit DeformationElement(PrecisionProfile prof = {})
      : prof_(prof), eff_p_(prof.p_exp), re_(static_cast<std::size_t>(prof.h_deg), 0),
        im_(static_cast<std::size_t>(prof.h_deg), 0) {}

  DeformationElement(PrecisionProfile prof, const std::vector<GaloisInt>& coeffs) : DeformationElement(prof) {
    if (coeffs.size() > re_.size()) throw std::invalid_argument("more coefficients than the h-degree bound");
    for (const auto& z : coeffs) eff_p_ = std::min(eff_p_, z.precision());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const auto z = coeffs[k].at_precision(eff_p_);
      re_[k] = z.re();
      im_[k] = z.im();
    }
  }

  static DeformationElement constant(const GaloisInt& z, PrecisionProfile prof) {
    return DeformationElement(prof, std::vector<GaloisInt>{z.at_precision(std::min(z.precision(), prof.p_exp))});
  }

  static DeformationElement integer(std::int64_t v, PrecisionProfile prof) {
    return constant(GaloisInt::integer(v, prof.p_exp), prof);
  }

  static DeformationElement i(PrecisionProfile prof) { return constant(GaloisInt::unit_i(prof.p_exp), prof); }

  /// z * h^k; vanishes when k >= M.
  static DeformationElement monomial(const GaloisInt& z, int k, PrecisionProfile prof) {
    DeformationElement r(prof);
    r.eff_p_ = std::min(prof.p_exp, z.precision());
    if (k < prof.h_deg) {
      const auto zz = z.at_precision(r.eff_p_);
      r.re_[static_cast<std::size_t>(k)] = zz.re();
      r.im_[static_cast<std::size_t>(k)] = zz.im();
    }
    return r;
  }

  static DeformationElement h(PrecisionProfile prof) { return monomial(GaloisInt::integer(1, prof.p_exp), 1, prof); }

  /// Integer polynomial in h, constant term first.
  static DeformationElement from_integers(std::initializer_list<std::int64_t> coeffs, PrecisionProfile prof) {
    DeformationElement r(prof);
    const auto m = r.modulus();
    std::size_t k = 0;
    for (auto v : coeffs) {
      if (k < r.re_.size()) r.re_[k] = detail::reduce_signed(v, m);
      ++k;
    }
    return r;
  }

  const PrecisionProfile& profile() const { return prof_; }
  int eff_p() const { return eff_p_; }
  int length() const { return prof_.h_deg; }
  std::uint64_t modulus() const { return pow3(eff_p_); }

  GaloisInt coeff(int k) const {
    return GaloisInt::from_residues(re_.at(static_cast<std::size_t>(k)), im_.at(static_cast<std::size_t>(k)), eff_p_);
  }
  GaloisInt constant_term() const { return coeff(0); }

  std::vector<GaloisInt> coeffs() const {
    std::vector<GaloisInt> out;
    out.reserve(re_.size());
    for (int k = 0; k < length(); ++k) out.push_back(coeff(k));
    return out;
  }

  bool is_zero() const {
    for (std::size_t k = 0; k < re_.size(); ++k)
      if (re_[k] != 0 || im_[k] != 0) return false;
    return true;
  }

  /// True when every i-component vanishes.
  bool is_real() const {
    for (auto v : im_)
      if (v != 0) return false;
    return true;
  }

  bool is_unit() const { return constant_term().is_unit(); }

  /// Highest k with a nonzero coefficient, or -1 for zero.
  int degree() const {
    for (int k = length() - 1; k >= 0; --k)
      if (re_[static_cast<std::size_t>(k)] != 0 || im_[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
  }

  DeformationElement at_precision(int p) const {
    if (p > eff_p_) throw std::invalid_argument("cannot raise precision of a truncated value");
    DeformationElement r = *this;
    r.eff_p_ = p;
    const auto m = pow3(p);
    for (auto& v : r.re_) v %= m;
    for (auto& v : r.im_) v %= m;
    return r;
  }

  /// Reduction modulo (3^p, h^d) for comparisons at coarser precision.
  DeformationElement truncated(int p, int d) const {
    DeformationElement r = at_precision(std::min(p, eff_p_));
    for (std::size_t k = static_cast<std::size_t>(std::max(d, 0)); k < r.re_.size(); ++k) r.re_[k] = r.im_[k] = 0;
    return r;
  }

  DeformationElement operator-() const {
    DeformationElement r = *this;
    const auto m = modulus();
    for (auto& v : r.re_) v = v == 0 ? 0 : m - v;
    for (auto& v : r.im_) v = v == 0 ? 0 : m - v;
    return r;
  }

  friend DeformationElement operator+(const DeformationElement& a, const DeformationElement& b) {
    auto [x, y] = common(a, b);
    const auto m = x.modulus();
    for (std::size_t k = 0; k < x.re_.size(); ++k) {
      x.re_[k] = detail::add_mod(x.re_[k], y.re_[k], m);
      x.im_[k] = detail::add_mod(x.im_[k], y.im_[k], m);
    }
    return x;
  }

  friend DeformationElement operator-(const DeformationElement& a, const DeformationElement& b) {
    auto [x, y] = common(a, b);
    const auto m = x.modulus();
    for (std::size_t k = 0; k < x.re_.size(); ++k) {
      x.re_[k] = detail::sub_mod(x.re_[k], y.re_[k], m);
      x.im_[k] = detail::sub_mod(x.im_[k], y.im_[k], m);
    }
    return x;
  }

  friend DeformationElement operator*(const DeformationElement& a, const DeformationElement& b) {
    auto [x, y] = common(a, b);
    DeformationElement r(x.prof_);
    r.eff_p_ = x.eff_p_;
    detail::convolve(x.re_, x.im_, y.re_, y.im_, x.modulus(), r.re_, r.im_);
    return r;
  }

  friend DeformationElement operator*(const GaloisInt& z, const DeformationElement& a) {
    DeformationElement r = a;
    if (z.precision() < r.eff_p_) r = r.at_precision(z.precision());
    const auto zz = z.at_precision(r.eff_p_);
    const auto m = r.modulus();
    for (std::size_t k = 0; k < r.re_.size(); ++k) {
      const auto xr = r.re_[k], xi = r.im_[k];
      r.re_[k] = detail::sub_mod(detail::mul_mod(zz.re(), xr, m), detail::mul_mod(zz.im(), xi, m), m);
      r.im_[k] = detail::add_mod(detail::mul_mod(zz.re(), xi, m), detail::mul_mod(zz.im(), xr, m), m);
    }
    return r;
  }

  DeformationElement scaled(std::int64_t k) const { return GaloisInt::integer(k, eff_p_) * *this; }

  DeformationElement& operator+=(const DeformationElement& o) { return *this = *this + o; }
  DeformationElement& operator-=(const DeformationElement& o) { return *this = *this - o; }
  DeformationElement& operator*=(const DeformationElement& o) { return *this = *this * o; }

  DeformationElement pow(std::uint64_t e) const {
    DeformationElement result = integer(1, prof_).at_precision(eff_p_);
    DeformationElement base = *this;
    while (e != 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Coefficientwise Frobenius; h is fixed.
  DeformationElement frobenius() const {
    DeformationElement r = *this;
    const auto m = modulus();
    for (auto& v : r.im_) v = v == 0 ? 0 : m - v;
    return r;
  }

  /// Coefficientwise exact division by 3, giving up one digit.
  DeformationElement exact_div3() const {
    for (std::size_t k = 0; k < re_.size(); ++k)
      if (re_[k] % 3 != 0 || im_[k] % 3 != 0)
        throw NotDivisibleBy3("coefficient of h^" + std::to_string(k) + " is not divisible by 3");
    if (eff_p_ < 2) throw PrecisionExhausted("cannot divide by 3 at 3-adic precision 1");
    DeformationElement r = *this;
    r.eff_p_ = eff_p_ - 1;
    for (auto& v : r.re_) v /= 3;
    for (auto& v : r.im_) v /= 3;
    return r;
  }

  friend bool operator==(const DeformationElement& a, const DeformationElement& b) {
    return a.prof_ == b.prof_ && a.eff_p_ == b.eff_p_ && a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Equality after reducing both sides to their common precision.
  friend bool equal_at_common_precision(const DeformationElement& a, const DeformationElement& b) {
    auto [x, y] = common(a, b);
    return x == y;
  }

 private:
  static std::pair<DeformationElement, DeformationElement> common(const DeformationElement& a,
                                                                  const DeformationElement& b) {
    if (a.prof_.h_deg != b.prof_.h_deg || a.prof_.p_exp != b.prof_.p_exp)
      throw std::invalid_argument("deformation elements from different precision profiles");
    if (a.eff_p_ == b.eff_p_) return {a, b};
    const int p = std::min(a.eff_p_, b.eff_p_);
    return {a.at_precision(p), b.at_precision(p)};
  }

  PrecisionProfile prof_;
  int eff_p_;
  std::vector<std::uint64_t> re_;
  std::vector<std::uint64_t> im_;
};

namespace detail {

// ceil(log2 M) + 1 Newton steps: each step doubles the h-adic accuracy.
inline int newton_steps(int m) {
  int steps = 1;
  for (int reach = 1; reach < m; reach *= 2) ++steps;
  return steps;
}

}  // namespace detail

/// Multiplicative inverse by Newton iteration y <- y (2 - x y).
inline DeformationElement invert(const DeformationElement& x) {
  const auto x0 = x.constant_term();
  if (!x0.is_unit()) throw NotAUnit("series with constant term " + x0.to_string() + " is not invertible");
  const auto prof = x.profile();
  auto y = DeformationElement::constant(x0.inverse(), prof).at_precision(x.eff_p());
  const auto two = DeformationElement::integer(2, prof);
  for (int s = 0, n = detail::newton_steps(prof.h_deg); s < n; ++s) y = y * (two - x * y);
  return y;
}

/// Square root on the branch with constant term c0, by s <- (s + x/s) / 2.
inline DeformationElement sqrt(const DeformationElement& x, const GaloisInt& c0) {
  const auto x0 = x.constant_term();
  if (!x0.is_unit()) throw NotAUnit("square root of a series with non-unit constant term " + x0.to_string());
  const int p = std::min(x.eff_p(), c0.precision());
  if ((c0 * c0).at_precision(p) != x0.at_precision(p))
    throw BadBranch("branch " + c0.to_string() + " does not square to " + x0.to_string());
  const auto prof = x.profile();
  const auto half = GaloisInt::integer(2, p).inverse();
  auto s = DeformationElement::constant(c0.at_precision(p), prof);
  for (int k = 0, n = detail::newton_steps(prof.h_deg); k < n; ++k) s = half * (s + x * invert(s));
  return s;
}

/// The square root c of h - 1 with c = i mod (3, h), built as i * sqrt(1 - h).
inline DeformationElement make_c(PrecisionProfile prof) {
  const auto one_minus_h = DeformationElement::from_integers({1, -1}, prof);
  return GaloisInt::unit_i(prof.p_exp) * sqrt(one_minus_h, GaloisInt::integer(1, prof.p_exp));
}

// ---------------------------------------------------------------------------
// Substitution of a series into a topologically nilpotent element of an
// E_0-algebra. An ambient type T participates by providing, via ADL:
//   T one_like(const T&), bool nilpotent_mod_maximal(const T&),
//   int ambient_rank(const T&), operator+, operator*, GaloisInt * T,
//   and T::is_zero().

enum class Twist { kNone, kFrobenius };

inline DeformationElement one_like(const DeformationElement& x) {
  return DeformationElement::integer(1, x.profile());
}
inline bool nilpotent_mod_maximal(const DeformationElement& x) { return !x.is_unit(); }
inline int ambient_rank(const DeformationElement&) { return 1; }

/// Smallest k with t^k = 0 at working precision. Throws NoConvergence past
/// the cap d * (N + M), d the ambient rank: t^d lies in (3, h) * ambient
/// whenever t is nilpotent modulo the maximal ideal.
template <class T>
int vanishing_power(const T& t, PrecisionProfile prof) {
  const int cap = ambient_rank(t) * (prof.p_exp + prof.h_deg);
  T power = t;
  for (int k = 1; k <= cap; ++k) {
    if (power.is_zero()) return k;
    power = power * t;
  }
  throw NoConvergence("powers did not vanish within " + std::to_string(cap) + " iterations");
}

/// sum_{k<M} sigma(z_k) t^k where sigma is Frobenius when twist is set.
/// x is read as the polynomial its M stored coefficients define.
template <class T>
T subst_series(const DeformationElement& x, const T& t, Twist twist) {
  if (!nilpotent_mod_maximal(t))
    throw NoConvergence("substitution target is not topologically nilpotent; its powers never vanish");
  const T one = one_like(t);
  T acc = GaloisInt::integer(0, x.eff_p()) * one;
  T power = one;
  const int top = x.degree();
  for (int k = 0; k <= top; ++k) {
    auto z = x.coeff(k);
    if (twist == Twist::kFrobenius) z = z.frobenius();
    if (!z.is_zero()) acc = acc + z * power;
    if (k < top) {
      power = power * t;
      if (power.is_zero()) break;
    }
  }
  return acc;
}

}  // namespace morava
