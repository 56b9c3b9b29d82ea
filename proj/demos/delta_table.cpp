// Prints delta(h^k) for small k, showing that delta of an integer polynomial
// stays an integer polynomial.

#include <iostream>

#include "morava/format.hpp"
#include "morava/power_ops.hpp"

int main() {
  using namespace morava;
  const PrecisionProfile prof(24, 16);
  const PowerOpContext ctx(prof);
  const auto h = DeformationElement::h(prof);
  for (int k = 1; k <= 3; ++k) {
    std::cout << "delta(h^" << k << ") = " << format::to_text(ctx.delta(h.pow(static_cast<std::uint64_t>(k)))) << "\n";
  }
  std::cout << "tr(B) = " << format::to_text(trace(ctx.B())) << "\n";
}
