// Small walkthrough for n=2: draws a generic pair of 2x2 rational matrices,
// prints the Vandermonde quasideterminant, the conjugated roots and the
// coefficients from all three routes, and confirms the closed forms
//   a_1 = -(x2^2 - x1^2)(x2 - x1)^{-1}
//   a_2 = -(x2 - x1)(x2^{-1} - x1^{-1})^{-1}
// agree with them.

#include <iostream>

#include "qvieta/qvieta.hpp"

using namespace qvieta;

int main() {
  const GenericTuple t = random_tuple(2, 2, 7, 5);
  const Matrix& x1 = t.elements[0];
  const Matrix& x2 = t.elements[1];
  std::cout << "x1 = " << x1 << "\nx2 = " << x2 << "\n";

  const Matrix v2 = vandermonde_quasidet(t.elements, 2);
  std::cout << "v2 = x2 - x1 = " << v2 << "\n";

  const auto ys = conjugated_roots(t.elements);
  std::cout << "y1 = " << ys[0] << "\ny2 = " << ys[1] << "\n";

  const auto a2m = coeffs_theorem2(ys).as;
  const auto a3m = coeffs_theorem3(t.elements).as;
  const auto aom = coeffs_linear_oracle(t.elements).as;
  std::cout << "a1 = " << a2m[0] << "\na2 = " << a2m[1] << "\n";
  std::cout << "theorem3 agrees: " << (a3m == a2m) << ", oracle agrees: " << (aom == a2m)
            << "\n";

  const Matrix a1_closed = -((x2.pow(2) - x1.pow(2)) * (x2 - x1).inverse());
  std::cout << "closed form a1 agrees: " << (a1_closed == a2m[0]) << "\n";
  if (x1.try_inverse() && x2.try_inverse()) {
    const Matrix diff_inv = x2.inverse() - x1.inverse();
    if (diff_inv.try_inverse()) {
      const Matrix a2_closed = -((x2 - x1) * diff_inv.inverse());
      std::cout << "closed form a2 agrees: " << (a2_closed == a2m[1]) << "\n";
    }
  }

  const auto res = residual_left(t.elements, a2m);
  std::cout << "residuals zero: " << (res[0].is_zero() && res[1].is_zero()) << "\n";
  return 0;
}
