#pragma once

// Monogenic finite free algebras E_0[g]/(m(g)) in the power basis.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "morava/errors.hpp"
#include "morava/formulas.hpp"
#include "morava/matrix.hpp"

namespace morava {

class MonogenicAlgebra {
 public:
  MonogenicAlgebra(std::string name, std::string generator, MonicPoly modulus)
      : name_(std::move(name)), generator_(std::move(generator)), modulus_(std::move(modulus)),
        companion_(companion(modulus_)) {}

  const std::string& name() const { return name_; }
  /// Symbol used when printing elements ("u", "a").
  const std::string& generator() const { return generator_; }
  const MonicPoly& modulus() const { return modulus_; }
  const MatrixE0& companion_matrix() const { return companion_; }
  int rank() const { return modulus_.degree(); }
  const PrecisionProfile& profile() const { return modulus_.profile(); }

 private:
  std::string name_;
  std::string generator_;
  MonicPoly modulus_;
  MatrixE0 companion_;
};

using AlgebraPtr = std::shared_ptr<const MonogenicAlgebra>;

/// E_0[u]/f, rank 8.
inline AlgebraPtr define_f(PrecisionProfile prof) {
  return std::make_shared<const MonogenicAlgebra>("f", "u", MonicPoly(formulas::f_coefficients(prof)));
}

/// E_0[a]/W, rank 4.
inline AlgebraPtr define_W(PrecisionProfile prof) {
  return std::make_shared<const MonogenicAlgebra>("W", "a", MonicPoly(formulas::w_coefficients(prof)));
}

class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraPtr alg) : alg_(std::move(alg)) {
    coords_.assign(static_cast<std::size_t>(alg_->rank()), DeformationElement(alg_->profile()));
  }

  AlgebraElement(AlgebraPtr alg, std::vector<DeformationElement> coords)
      : alg_(std::move(alg)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != alg_->rank())
      throw std::invalid_argument("expected " + std::to_string(alg_->rank()) + " coordinates, got " +
                                  std::to_string(coords_.size()));
  }

  static AlgebraElement scalar(AlgebraPtr alg, const DeformationElement& s) {
    AlgebraElement r(std::move(alg));
    r.coords_[0] = s;
    return r;
  }

  static AlgebraElement one(AlgebraPtr alg) {
    const auto prof = alg->profile();
    return scalar(std::move(alg), DeformationElement::integer(1, prof));
  }

  static AlgebraElement generator(AlgebraPtr alg) {
    AlgebraElement r(alg);
    if (alg->rank() == 1)
      r.coords_[0] = -alg->modulus().coeff(0);
    else
      r.coords_[1] = DeformationElement::integer(1, alg->profile());
    return r;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<DeformationElement>& coords() const { return coords_; }
  const DeformationElement& coord(int j) const { return coords_.at(static_cast<std::size_t>(j)); }
  int rank() const { return alg_->rank(); }

  bool is_zero() const {
    for (const auto& e : coords_)
      if (!e.is_zero()) return false;
    return true;
  }

  int eff_p() const {
    int p = alg_->profile().p_exp;
    for (const auto& e : coords_) p = std::min(p, e.eff_p());
    return p;
  }

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    check_same(x, y);
    AlgebraElement r = x;
    for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] += y.coords_[k];
    return r;
  }

  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    check_same(x, y);
    AlgebraElement r = x;
    for (std::size_t k = 0; k < r.coords_.size(); ++k) r.coords_[k] -= y.coords_[k];
    return r;
  }

  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& e : r.coords_) e = -e;
    return r;
  }

  /// Polynomial product reduced by long division by the monic modulus.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    check_same(x, y);
    const int d = x.rank();
    const auto prof = x.alg_->profile();
    std::vector<DeformationElement> prod(static_cast<std::size_t>(2 * d - 1), DeformationElement(prof));
    for (int i = 0; i < d; ++i) {
      if (x.coords_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (y.coords_[static_cast<std::size_t>(j)].is_zero()) continue;
        prod[static_cast<std::size_t>(i + j)] += x.coords_[static_cast<std::size_t>(i)] * y.coords_[static_cast<std::size_t>(j)];
      }
    }
    const auto& m = x.alg_->modulus();
    for (int k = 2 * d - 2; k >= d; --k) {
      const auto top = prod[static_cast<std::size_t>(k)];
      if (top.is_zero()) continue;
      // g^k = g^{k-d} * g^d = -g^{k-d} * sum_j c_j g^j
      for (int j = 0; j < d; ++j) prod[static_cast<std::size_t>(k - d + j)] -= top * m.coeff(j);
    }
    prod.resize(static_cast<std::size_t>(d));
    AlgebraElement r(x.alg_, std::move(prod));
    // terms skipped as zero carry no precision; clamp to the operands'
    const int p = std::min(x.eff_p(), y.eff_p());
    for (auto& e : r.coords_) e = e.at_precision(std::min(p, e.eff_p()));
    return r;
  }

  friend AlgebraElement operator*(const DeformationElement& s, const AlgebraElement& x) {
    AlgebraElement r = x;
    for (auto& e : r.coords_) e = s * e;
    return r;
  }

  friend AlgebraElement operator*(const GaloisInt& s, const AlgebraElement& x) {
    AlgebraElement r = x;
    for (auto& e : r.coords_) e = s * e;
    return r;
  }

  AlgebraElement pow(std::uint64_t e) const {
    AlgebraElement result = one(alg_);
    AlgebraElement base = *this;
    while (e != 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Multiplication by g in coordinates.
  AlgebraElement times_generator() const {
    const int d = rank();
    AlgebraElement r(alg_);
    const auto top = coords_[static_cast<std::size_t>(d - 1)];
    for (int k = d - 1; k >= 1; --k) r.coords_[static_cast<std::size_t>(k)] = coords_[static_cast<std::size_t>(k - 1)];
    r.coords_[0] = DeformationElement(alg_->profile()).at_precision(top.eff_p());
    for (int k = 0; k < d; ++k) r.coords_[static_cast<std::size_t>(k)] -= top * alg_->modulus().coeff(k);
    return r;
  }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return same_algebra(x, y) && x.coords_ == y.coords_;
  }

  friend bool same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
    return x.alg_ == y.alg_ || (x.alg_->name() == y.alg_->name() && x.alg_->profile() == y.alg_->profile());
  }

 private:
  static void check_same(const AlgebraElement& x, const AlgebraElement& y) {
    if (!same_algebra(x, y))
      throw AlgebraMismatch("elements of E0/" + x.alg_->name() + " and E0/" + y.alg_->name());
  }

  AlgebraPtr alg_;
  std::vector<DeformationElement> coords_;
};

/// Matrix of multiplication by x; column j holds the coordinates of x * g^j.
inline MatrixE0 rep_matrix(const AlgebraElement& x) {
  const int d = x.rank();
  MatrixE0 m(d, x.algebra()->profile());
  AlgebraElement col = x;
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d; ++r) m.at(r, j) = col.coord(r);
    if (j + 1 < d) col = col.times_generator();
  }
  return m;
}

inline DeformationElement trace(const AlgebraElement& x) { return trace(rep_matrix(x)); }

/// m(y): a polynomial over E_0 evaluated at an algebra element.
inline AlgebraElement evaluate(const MonicPoly& m, const AlgebraElement& y) {
  const auto coeffs = m.all_coeffs();
  AlgebraElement acc(y.algebra());
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * y + AlgebraElement::scalar(y.algebra(), coeffs[j]);
  return acc;
}

inline AlgebraElement one_like(const AlgebraElement& x) { return AlgebraElement::one(x.algebra()); }
inline bool nilpotent_mod_maximal(const AlgebraElement& x) { return nilpotent_mod_maximal(rep_matrix(x)); }
inline int ambient_rank(const AlgebraElement& x) { return x.rank(); }

}  // namespace morava
