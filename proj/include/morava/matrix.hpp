#pragma once

// Square matrices over E_0 and monic polynomials.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "morava/errors.hpp"
#include "morava/series.hpp"

namespace morava {

/// A monic polynomial g^d + c_{d-1} g^{d-1} + ... + c_0 over E_0. Only the
/// lower coefficients are stored.
class MonicPoly {
 public:
  explicit MonicPoly(std::vector<DeformationElement> lower) : lower_(std::move(lower)) {
    if (lower_.empty()) throw std::invalid_argument("monic polynomial must have degree >= 1");
  }

  int degree() const { return static_cast<int>(lower_.size()); }
  const DeformationElement& coeff(int j) const { return lower_.at(static_cast<std::size_t>(j)); }
  const std::vector<DeformationElement>& lower() const { return lower_; }
  const PrecisionProfile& profile() const { return lower_.front().profile(); }

  /// Full coefficient list c_0 .. c_{d-1}, 1.
  std::vector<DeformationElement> all_coeffs() const {
    auto out = lower_;
    out.push_back(DeformationElement::integer(1, profile()));
    return out;
  }

 private:
  std::vector<DeformationElement> lower_;
};

class MatrixE0 {
 public:
  MatrixE0(int n, PrecisionProfile prof)
      : n_(n), prof_(prof), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), DeformationElement(prof)) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  static MatrixE0 zero(int n, PrecisionProfile prof) { return MatrixE0(n, prof); }

  static MatrixE0 identity(int n, PrecisionProfile prof) {
    MatrixE0 m(n, prof);
    for (int k = 0; k < n; ++k) m.at(k, k) = DeformationElement::integer(1, prof);
    return m;
  }

  int dim() const { return n_; }
  const PrecisionProfile& profile() const { return prof_; }

  DeformationElement& at(int r, int c) { return entries_.at(index(r, c)); }
  const DeformationElement& at(int r, int c) const { return entries_.at(index(r, c)); }

  int eff_p() const {
    int p = prof_.p_exp;
    for (const auto& e : entries_) p = std::min(p, e.eff_p());
    return p;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  MatrixE0 at_precision(int p) const {
    MatrixE0 r = *this;
    for (auto& e : r.entries_) e = e.at_precision(std::min(p, e.eff_p()));
    return r;
  }

  friend MatrixE0 operator+(const MatrixE0& x, const MatrixE0& y) {
    check_same_shape(x, y);
    MatrixE0 r = x;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += y.entries_[k];
    return r;
  }

  friend MatrixE0 operator-(const MatrixE0& x, const MatrixE0& y) {
    check_same_shape(x, y);
    MatrixE0 r = x;
    for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= y.entries_[k];
    return r;
  }

  friend MatrixE0 operator*(const MatrixE0& x, const MatrixE0& y) {
    check_same_shape(x, y);
    const int n = x.n_;
    MatrixE0 r(n, x.prof_);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        DeformationElement acc(x.prof_);
        bool first = true;
        for (int k = 0; k < n; ++k) {
          const auto& a = x.at(i, k);
          const auto& b = y.at(k, j);
          if (a.is_zero() || b.is_zero()) continue;
          acc = first ? a * b : acc + a * b;
          first = false;
        }
        if (!first) r.at(i, j) = acc;
      }
    }
    // skipped terms vanish at their own precision, which the result never exceeds
    return r.at_precision(std::min(x.eff_p(), y.eff_p()));
  }

  friend MatrixE0 operator*(const DeformationElement& s, const MatrixE0& x) {
    MatrixE0 r = x;
    for (auto& e : r.entries_) e = s * e;
    return r;
  }

  friend MatrixE0 operator*(const GaloisInt& s, const MatrixE0& x) {
    MatrixE0 r = x;
    for (auto& e : r.entries_) e = s * e;
    return r;
  }

  friend bool operator==(const MatrixE0& x, const MatrixE0& y) {
    return x.n_ == y.n_ && x.prof_ == y.prof_ && x.entries_ == y.entries_;
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || c < 0 || r >= n_ || c >= n_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }

  static void check_same_shape(const MatrixE0& x, const MatrixE0& y) {
    if (x.n_ != y.n_)
      throw DimensionMismatch("matrix dimensions " + std::to_string(x.n_) + " and " + std::to_string(y.n_));
    if (!(x.prof_ == y.prof_)) throw DimensionMismatch("matrices from different precision profiles");
  }

  int n_;
  PrecisionProfile prof_;
  std::vector<DeformationElement> entries_;
};

inline DeformationElement trace(const MatrixE0& x) {
  DeformationElement t(x.profile());
  for (int k = 0; k < x.dim(); ++k) t += x.at(k, k);
  return t;
}

/// Companion matrix: 1s on the subdiagonal, last column (-c_0, ..., -c_{d-1}).
inline MatrixE0 companion(const MonicPoly& m) {
  const int d = m.degree();
  MatrixE0 a(d, m.profile());
  for (int r = 1; r < d; ++r) a.at(r, r - 1) = DeformationElement::integer(1, m.profile());
  for (int r = 0; r < d; ++r) a.at(r, d - 1) = -m.coeff(r);
  return a;
}

/// Horner evaluation of sum_j coeffs[j] X^j.
inline MatrixE0 poly_at_matrix(std::span<const DeformationElement> coeffs, const MatrixE0& x) {
  const int n = x.dim();
  MatrixE0 acc = MatrixE0::zero(n, x.profile());
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j] * MatrixE0::identity(n, x.profile());
  return acc;
}

namespace detail {

// F_9 = F_3[i] element as (re, im) residues mod 3.
using F9 = std::array<int, 2>;

inline F9 f9_mul(F9 a, F9 b) { return {((a[0] * b[0] - a[1] * b[1]) % 3 + 3) % 3, (a[0] * b[1] + a[1] * b[0]) % 3}; }

}  // namespace detail

/// Whether x becomes nilpotent after reduction modulo the maximal ideal (3, h).
inline bool nilpotent_mod_maximal(const MatrixE0& x) {
  using detail::F9;
  const int n = x.dim();
  std::vector<F9> red(static_cast<std::size_t>(n * n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const auto z = x.at(r, c).constant_term();
      red[static_cast<std::size_t>(r * n + c)] = {static_cast<int>(z.re() % 3), static_cast<int>(z.im() % 3)};
    }
  // nilpotent iff the n-th power vanishes
  std::vector<F9> power = red;
  for (int step = 1; step < n; ++step) {
    std::vector<F9> next(power.size(), F9{0, 0});
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        const F9 a = power[static_cast<std::size_t>(r * n + k)];
        if (a[0] == 0 && a[1] == 0) continue;
        for (int c = 0; c < n; ++c) {
          const F9 p = detail::f9_mul(a, red[static_cast<std::size_t>(k * n + c)]);
          auto& dst = next[static_cast<std::size_t>(r * n + c)];
          dst = {(dst[0] + p[0]) % 3, (dst[1] + p[1]) % 3};
        }
      }
    power = std::move(next);
  }
  for (const auto& z : power)
    if (z[0] != 0 || z[1] != 0) return false;
  return true;
}

inline MatrixE0 one_like(const MatrixE0& x) { return MatrixE0::identity(x.dim(), x.profile()); }
inline int ambient_rank(const MatrixE0& x) { return x.dim(); }

}  // namespace morava
