#pragma once

// Arithmetic in the Galois ring Z[i]/(3^n, i^2 + 1), the truncation of the
// Witt vectors W(F_9) = Z_3[i] to n 3-adic digits.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "morava/errors.hpp"

namespace morava {

/// Largest supported 3-adic precision: 3^40 < 2^64.
inline constexpr int kMaxPrecision = 40;

namespace detail {

inline constexpr std::array<std::uint64_t, kMaxPrecision + 1> kPow3 = [] {
  std::array<std::uint64_t, kMaxPrecision + 1> t{};
  t[0] = 1;
  for (int k = 1; k <= kMaxPrecision; ++k) t[k] = t[k - 1] * 3;
  return t;
}();

constexpr std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= m - b ? a - (m - b) : a + b;
}

constexpr std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  // -(v+1) avoids overflow at INT64_MIN
  std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  std::uint64_t r = mag % m;
  return r == 0 ? 0 : m - r;
}

// Inverse of a unit of Z/3^n by Newton lifting from the inverse mod 3.
constexpr std::uint64_t inv_mod_pow3(std::uint64_t a, int n) {
  const std::uint64_t m = kPow3[n];
  std::uint64_t y = (a % 3 == 1) ? 1 : 2;
  for (int prec = 1; prec < n; prec *= 2) {
    // y <- y (2 - a y)
    std::uint64_t ay = mul_mod(a % m, y, m);
    y = mul_mod(y, sub_mod(2 % m, ay, m), m);
  }
  return y;
}

}  // namespace detail

inline void check_precision(int n) {
  if (n < 1 || n > kMaxPrecision)
    throw std::invalid_argument("3-adic precision must lie in [1, " + std::to_string(kMaxPrecision) +
                                "], got " + std::to_string(n));
}

inline std::uint64_t pow3(int n) { return detail::kPow3.at(static_cast<std::size_t>(n)); }

/// Truncation ideal (3^N, h^M) shared by every value in a computation.
struct PrecisionProfile {
  int p_exp = 24;
  int h_deg = 16;

  PrecisionProfile() = default;
  PrecisionProfile(int n, int m) : p_exp(n), h_deg(m) {
    check_precision(n);
    if (m < 1) throw std::invalid_argument("h-degree bound must be >= 1, got " + std::to_string(m));
  }

  friend bool operator==(const PrecisionProfile&, const PrecisionProfile&) = default;
};

/// An element re + im*i of Z[i]/(3^n, i^2+1) with canonical residues in [0, 3^n).
class GaloisInt {
 public:
  GaloisInt() = default;

  GaloisInt(std::int64_t re, std::int64_t im, int n) : n_(n) {
    check_precision(n);
    const auto m = pow3(n);
    re_ = detail::reduce_signed(re, m);
    im_ = detail::reduce_signed(im, m);
  }

  static GaloisInt from_residues(std::uint64_t re, std::uint64_t im, int n) {
    check_precision(n);
    GaloisInt r;
    r.n_ = n;
    r.re_ = re % pow3(n);
    r.im_ = im % pow3(n);
    return r;
  }

  static GaloisInt integer(std::int64_t v, int n) { return GaloisInt(v, 0, n); }
  static GaloisInt unit_i(int n) { return GaloisInt(0, 1, n); }

  /// Reduces a nonnegative decimal literal of any length modulo 3^n.
  static GaloisInt from_decimal(std::string_view digits, int n) {
    check_precision(n);
    const auto m = pow3(n);
    std::uint64_t acc = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("not a decimal literal");
      acc = detail::add_mod(detail::mul_mod(acc, 10 % m, m), static_cast<std::uint64_t>(ch - '0') % m, m);
    }
    return from_residues(acc, 0, n);
  }

  std::uint64_t re() const { return re_; }
  std::uint64_t im() const { return im_; }
  int precision() const { return n_; }
  std::uint64_t modulus() const { return pow3(n_); }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  /// Unit iff the image in F_9 is nonzero.
  bool is_unit() const { return re_ % 3 != 0 || im_ % 3 != 0; }

  /// Same element read at a coarser precision.
  GaloisInt at_precision(int n) const {
    if (n > n_) throw std::invalid_argument("cannot raise precision of a truncated value");
    return from_residues(re_, im_, n);
  }

  GaloisInt operator-() const {
    const auto m = modulus();
    GaloisInt r = *this;
    r.re_ = re_ == 0 ? 0 : m - re_;
    r.im_ = im_ == 0 ? 0 : m - im_;
    return r;
  }

  friend GaloisInt operator+(const GaloisInt& a, const GaloisInt& b) {
    auto [x, y] = common(a, b);
    const auto m = x.modulus();
    x.re_ = detail::add_mod(x.re_, y.re_, m);
    x.im_ = detail::add_mod(x.im_, y.im_, m);
    return x;
  }

  friend GaloisInt operator-(const GaloisInt& a, const GaloisInt& b) {
    auto [x, y] = common(a, b);
    const auto m = x.modulus();
    x.re_ = detail::sub_mod(x.re_, y.re_, m);
    x.im_ = detail::sub_mod(x.im_, y.im_, m);
    return x;
  }

  friend GaloisInt operator*(const GaloisInt& a, const GaloisInt& b) {
    auto [x, y] = common(a, b);
    const auto m = x.modulus();
    using detail::add_mod, detail::mul_mod, detail::sub_mod;
    const auto rr = mul_mod(x.re_, y.re_, m);
    const auto ii = mul_mod(x.im_, y.im_, m);
    const auto ri = mul_mod(x.re_, y.im_, m);
    const auto ir = mul_mod(x.im_, y.re_, m);
    GaloisInt r;
    r.n_ = x.n_;
    r.re_ = sub_mod(rr, ii, m);
    r.im_ = add_mod(ri, ir, m);
    return r;
  }

  GaloisInt& operator+=(const GaloisInt& o) { return *this = *this + o; }
  GaloisInt& operator-=(const GaloisInt& o) { return *this = *this - o; }
  GaloisInt& operator*=(const GaloisInt& o) { return *this = *this * o; }

  /// Multiply by a machine integer without changing precision.
  GaloisInt scaled(std::int64_t k) const { return *this * integer(k, n_); }

  /// Lift of the q = 9 Frobenius: conjugation, i -> -i.
  GaloisInt frobenius() const {
    GaloisInt r = *this;
    r.im_ = im_ == 0 ? 0 : modulus() - im_;
    return r;
  }

  /// Exact division by 3; the result carries one fewer digit.
  GaloisInt exact_div3() const {
    if (re_ % 3 != 0 || im_ % 3 != 0)
      throw NotDivisibleBy3("Galois integer " + to_string() + " is not divisible by 3");
    if (n_ < 2) throw PrecisionExhausted("cannot divide by 3 at 3-adic precision 1");
    return from_residues(re_ / 3, im_ / 3, n_ - 1);
  }

  /// Conjugate over the norm re^2 + im^2, which is a unit mod 3 exactly when this is.
  GaloisInt inverse() const {
    if (!is_unit()) throw NotAUnit("Galois integer " + to_string() + " is not a unit");
    const auto m = modulus();
    const auto norm = detail::add_mod(detail::mul_mod(re_, re_, m), detail::mul_mod(im_, im_, m), m);
    const auto inv_norm = detail::inv_mod_pow3(norm, n_);
    GaloisInt s = from_residues(inv_norm, 0, n_);
    return frobenius() * s;
  }

  /// Balanced representative in (-3^n/2, 3^n/2].
  static std::int64_t balanced(std::uint64_t r, int n) {
    const auto m = pow3(n);
    if (r > m / 2) return -static_cast<std::int64_t>(m - r);
    return static_cast<std::int64_t>(r);
  }

  std::string to_string() const {
    std::string s = std::to_string(re_);
    if (im_ != 0) s += "+" + std::to_string(im_) + "*i";
    return s + " (mod 3^" + std::to_string(n_) + ")";
  }

  friend bool operator==(const GaloisInt&, const GaloisInt&) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaloisInt& g) { return os << g.to_string(); }

 private:
  static std::pair<GaloisInt, GaloisInt> common(const GaloisInt& a, const GaloisInt& b) {
    if (a.n_ == b.n_) return {a, b};
    const int n = std::min(a.n_, b.n_);
    return {a.at_precision(n), b.at_precision(n)};
  }

  std::uint64_t re_ = 0;
  std::uint64_t im_ = 0;
  int n_ = 1;
};

}  // namespace morava
