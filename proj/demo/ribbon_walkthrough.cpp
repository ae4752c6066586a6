// Prints the ribbon functions for every composition of a small degree,
// shows that they partition the words and sum to the full power of
// y_1 + ... + y_n, then runs a couple of membership queries.

#include <iostream>

#include "qvieta/qvieta.hpp"

using namespace qvieta;

int main() {
  const int d = 3, n = 3;
  std::cout << "ribbon functions of degree " << d << " over y1..y" << n << ":\n";
  FreePolynomial sum(n);
  for (const auto& J : compositions(d, d)) {
    const FreePolynomial r = ribbon(J, n);
    std::cout << "  R_(";
    for (std::size_t t = 0; t < J.size(); ++t) std::cout << (t ? "," : "") << J[t];
    std::cout << ") = " << r << "\n";
    sum = sum + r;
  }
  FreePolynomial linear(n);
  for (int letter = 1; letter <= n; ++letter) linear.add_term({letter}, Rational(1));
  std::cout << "sum of all ribbons equals (y1+...+y" << n << ")^" << d << ": "
            << (sum == linear * linear * linear) << "\n";
  std::cout << "base check (independence + span): " << ribbon_base_check(d, n) << "\n\n";

  for (const char* text : {"y1.y1 + y1.y2 + y2.y2", "y1.y2", "y2.y1"}) {
    const auto p = FreePolynomial::parse(text, 2);
    const auto r = symm_membership(p);
    std::cout << "membership of \"" << text << "\": "
              << (r.member ? "member, certificate " + r.certificate_text() : "non-member");
    std::cout << " | numerically symmetric: " << is_symmetric_numeric(p, 10, 2024) << "\n";
  }
  return 0;
}
