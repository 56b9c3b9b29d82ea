#pragma once

// Text and JSON rendering of ring elements, matrices and algebra elements.
//
// Text: terms in decreasing degree, zero coefficients suppressed. A residue is
// shown as a negative integer when its balanced representative has absolute
// value below 3^(p/2), otherwise as the canonical residue.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#include "morava/matrix.hpp"
#include "morava/quotient_algebra.hpp"
#include "morava/series.hpp"

namespace morava::format {

enum class Spacing { kSpaced, kCompact };

namespace detail {

struct SignedText {
  bool negative = false;
  std::string magnitude;
};

inline SignedText render_residue(std::uint64_t r, int p) {
  const std::int64_t b = GaloisInt::balanced(r, p);
  const auto mag = static_cast<std::uint64_t>(b < 0 ? -b : b);
  if (mag < pow3(p / 2)) return {b < 0, std::to_string(mag)};
  return {false, std::to_string(r)};
}

// A scalar coefficient with its sign pulled out where that is unambiguous.
inline SignedText render_scalar(const GaloisInt& z) {
  const int p = z.precision();
  if (z.im() == 0) return render_residue(z.re(), p);
  auto im = render_residue(z.im(), p);
  const std::string im_body = im.magnitude == "1" ? "i" : im.magnitude + "*i";
  if (z.re() == 0) return {im.negative, im_body};
  auto re = render_residue(z.re(), p);
  return {false, "(" + std::string(re.negative ? "-" : "") + re.magnitude + (im.negative ? "-" : "+") + im_body + ")"};
}

inline std::string monomial(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

inline std::string attach(const std::string& coeff, const std::string& mono) {
  if (mono.empty()) return coeff;
  if (coeff == "1") return mono;
  return coeff + "*" + mono;
}

inline void append_term(std::string& out, bool negative, const std::string& body, Spacing sp) {
  if (out.empty()) {
    out = (negative ? "-" : "") + body;
  } else if (sp == Spacing::kSpaced) {
    out += negative ? " - " : " + ";
    out += body;
  } else {
    out += negative ? "-" : "+";
    out += body;
  }
}

}  // namespace detail

inline std::string to_text(const DeformationElement& x, Spacing sp = Spacing::kSpaced) {
  std::string out;
  for (int k = x.length() - 1; k >= 0; --k) {
    const auto z = x.coeff(k);
    if (z.is_zero()) continue;
    const auto s = detail::render_scalar(z);
    detail::append_term(out, s.negative, detail::attach(s.magnitude, detail::monomial("h", k)), sp);
  }
  return out.empty() ? "0" : out;
}

// Polynomial in `var` with series coefficients, lowest degree first.
inline std::string poly_to_text(const std::vector<DeformationElement>& coeffs, const std::string& var,
                                Spacing sp = Spacing::kSpaced) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const auto& e = coeffs[static_cast<std::size_t>(k)];
    if (e.is_zero()) continue;
    const auto mono = detail::monomial(var, k);
    if (e.degree() == 0) {
      const auto s = detail::render_scalar(e.constant_term());
      detail::append_term(out, s.negative, detail::attach(s.magnitude, mono), sp);
    } else {
      detail::append_term(out, false, detail::attach("(" + to_text(e, Spacing::kCompact) + ")", mono), sp);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string to_text(const AlgebraElement& x, Spacing sp = Spacing::kSpaced) {
  return poly_to_text(x.coords(), x.algebra()->generator(), sp);
}

inline std::string to_text(const MonicPoly& m, const std::string& var) { return poly_to_text(m.all_coeffs(), var); }

/// One row per line, entries separated by " | ".
inline std::string to_text(const MatrixE0& m) {
  std::string out;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (c) out += " | ";
      out += to_text(m.at(r, c), Spacing::kCompact);
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json to_json(const DeformationElement& x) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k < x.length(); ++k) {
    const auto z = x.coeff(k);
    coeffs.push_back({std::to_string(z.re()), std::to_string(z.im())});
  }
  return {{"precision", {{"p_exp", x.profile().p_exp}, {"h_deg", x.profile().h_deg}, {"eff_p", x.eff_p()}}},
          {"coeffs", std::move(coeffs)}};
}

inline nlohmann::json to_json(const MatrixE0& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json to_json(const AlgebraElement& x) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& e : x.coords()) coords.push_back(to_json(e));
  return {{"algebra", x.algebra()->name()}, {"coords", std::move(coords)}};
}

/// Monic modulus as its full coefficient list, constant term first.
inline nlohmann::json to_json(const MonicPoly& m, const std::string& name, const std::string& var) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& e : m.all_coeffs()) coeffs.push_back(to_json(e));
  return {{"polynomial", name}, {"variable", var}, {"coeffs", std::move(coeffs)}};
}

/// Inverse of to_json for elements; validates the schema.
inline DeformationElement element_from_json(const nlohmann::json& j) {
  const auto& p = j.at("precision");
  const PrecisionProfile prof(p.at("p_exp").get<int>(), p.at("h_deg").get<int>());
  const int eff = p.at("eff_p").get<int>();
  const auto& cs = j.at("coeffs");
  if (!cs.is_array() || static_cast<int>(cs.size()) != prof.h_deg)
    throw std::invalid_argument("coeffs must hold exactly h_deg entries");
  std::vector<GaloisInt> coeffs;
  for (const auto& pair : cs) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("each coefficient is a [re, im] pair");
    const auto re = std::stoull(pair.at(0).get<std::string>());
    const auto im = std::stoull(pair.at(1).get<std::string>());
    if (re >= pow3(eff) || im >= pow3(eff)) throw std::invalid_argument("residue is not canonical");
    coeffs.push_back(GaloisInt::from_residues(re, im, eff));
  }
  return DeformationElement(prof, coeffs);
}

}  // namespace morava::format
