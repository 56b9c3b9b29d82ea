#pragma once

// Explicit height-2, p = 3 data: the moduli f of E_0[u]/f and W of E_0[a]/W,
// the image of h under psi^3, the image of a under eta, and the composite
// eta(psi^3(h)) together with the matrices A and B built from them.
//
// Three of these formulas circulate in two variants. Each variant is exposed
// as a reading; cross-checks select the consistent one.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "morava/matrix.hpp"
#include "morava/series.hpp"

namespace morava {

/// Variants of psi^3(h) differing in the power of h on the middle term.
enum class Psi3Reading {
  kQuadraticMiddleTerm,  // h^3 + (a^3 - 6a - 27) h^2 + ...
  kDoubledCubic,         // h^3 + (a^3 - 6a - 27) h^3 + ...
};

/// Variants of the u^5 coefficient of eta(a). 3c^3 - 6 breaks the grading
/// (u, c) -> (-u, -c) that every other term respects.
enum class EtaReading {
  kParityGraded,  // 3c^3 - 6c
  kLiteral,       // 3c^3 - 6
};

/// Sign variants of the u, u^2, u^3 coefficients of eta(psi^3(h)). Only
/// kTraceIntegral makes tr B a polynomial in h.
enum class CompositeReading {
  kTraceIntegral,
  kLiteral,
};

namespace formulas {

using Poly = std::initializer_list<std::int64_t>;

inline DeformationElement poly(Poly coeffs, PrecisionProfile prof) {
  return DeformationElement::from_integers(coeffs, prof);
}

/// Lower coefficients of f for u^0..u^7, read off the last column of A.
inline std::vector<DeformationElement> f_coefficients(PrecisionProfile prof) {
  const auto c = make_c(prof);
  return {
      poly({-3}, prof),
      c.scaled(-3),
      poly({9, -1}, prof),
      c.scaled(9),
      poly({-12, 6}, prof),
      poly({6, 1}, prof) * c,
      poly({-3, 3}, prof),
      c.scaled(3),
  };
}

/// W(a) = a^4 - 6a^2 + (h - 9)a - 3.
inline std::vector<DeformationElement> w_coefficients(PrecisionProfile prof) {
  return {poly({-3}, prof), poly({-9, 1}, prof), poly({-6}, prof), poly({0}, prof)};
}

/// Coordinates of psi^3(h) in the basis 1, a, a^2, a^3 of E_0[a]/W.
inline std::vector<DeformationElement> psi3_h_coords(PrecisionProfile prof, Psi3Reading reading) {
  if (reading == Psi3Reading::kQuadraticMiddleTerm)
    return {
        poly({-342, 201, -27, 1}, prof),
        poly({-334, 108, -6}, prof),
        poly({-27, 3}, prof),
        poly({57, -18, 1}, prof),
    };
  return {
      poly({-342, 201, 0, -26}, prof),
      poly({-334, 108, 0, -6}, prof),
      poly({-27, 3}, prof),
      poly({57, -18, 0, 1}, prof),
  };
}

/// eta(a) in the basis 1, u, ..., u^7, already divided by 17 - h.
inline std::vector<DeformationElement> eta_a_coords(PrecisionProfile prof, EtaReading reading) {
  const auto c = make_c(prof);
  const auto c2 = c * c, c3 = c2 * c, c4 = c2 * c2;
  const auto k = [&](std::int64_t v) { return DeformationElement::integer(v, prof); };
  std::vector<DeformationElement> num = {
      k(-18),
      c.scaled(-12),
      c2 + k(2),
      c3.scaled(4) - c.scaled(15),
      c4 + c2 + k(2),
      reading == EtaReading::kParityGraded ? c3.scaled(3) - c.scaled(6) : c3.scaled(3) - k(6),
      c2.scaled(3) - k(2),
      c,
  };
  const auto inv = invert(poly({17, -1}, prof));
  for (auto& e : num) e = e * inv;
  return num;
}

/// The eight numerators of eta(psi^3(h)) over the common denominator h - 17,
/// for u^0..u^7.
inline std::vector<DeformationElement> composite_numerators(PrecisionProfile prof, CompositeReading reading) {
  const auto c = make_c(prof);
  const std::int64_t s = reading == CompositeReading::kTraceIntegral ? -1 : 1;
  return {
      poly({1557, -2301, 579, -44, 1}, prof),
      poly({-128, 48, -17, 1}, prof).scaled(3 * s) * c,
      poly({3032, -4564, 1323, -114, 3}, prof).scaled(s),
      poly({5509, -4069, 855, -56, 1}, prof).scaled(s) * c,
      poly({-2617, 3134, -566, -18, 3}, prof),
      poly({-354, 416, -99, 5}, prof).scaled(3) * c,
      poly({-1124, 1377, -334, 17}, prof),
      poly({361, -111, 6}, prof) * c,
  };
}

/// composite_numerators divided by h - 17.
inline std::vector<DeformationElement> composite_coords(PrecisionProfile prof, CompositeReading reading) {
  auto num = composite_numerators(prof, reading);
  const auto inv = invert(poly({-17, 1}, prof));
  for (auto& e : num) e = e * inv;
  return num;
}

}  // namespace formulas

/// The 8x8 matrix A (companion matrix of f), entered entry by entry.
inline MatrixE0 build_A(PrecisionProfile prof) {
  using formulas::poly;
  const auto c = make_c(prof);
  MatrixE0 a(8, prof);
  for (int r = 1; r < 8; ++r) a.at(r, r - 1) = DeformationElement::integer(1, prof);
  a.at(0, 7) = poly({3}, prof);
  a.at(1, 7) = c.scaled(3);
  a.at(2, 7) = poly({-9, 1}, prof);
  a.at(3, 7) = c.scaled(-9);
  a.at(4, 7) = poly({12, -6}, prof);
  a.at(5, 7) = -(poly({-1, 1}, prof) * c) - c.scaled(7);
  a.at(6, 7) = poly({3, -3}, prof);
  a.at(7, 7) = c.scaled(-3);
  return a;
}

/// B = eta(psi^3(h)) evaluated at u = A.
inline MatrixE0 build_B(PrecisionProfile prof, CompositeReading reading = CompositeReading::kTraceIntegral) {
  const auto coords = formulas::composite_coords(prof, reading);
  return poly_at_matrix(coords, build_A(prof));
}

}  // namespace morava
