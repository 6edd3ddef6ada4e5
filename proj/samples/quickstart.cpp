// Build a pair, compute its counting quasi-polynomial three ways, and
// cross-check against brute force. Mirrors the typical library session.

#include <iostream>

#include "gtutte/gtutte.hpp"

using namespace gtutte;

int main() {
  // Z^2 + Z/4 with two free-ish elements and one torsion element.
  const FgAbelianGroup gamma = FgAbelianGroup::parse("Z^2 + Z/4");
  const ElementList a(gamma, {{2, 2, 1}, {0, 2, 3}, {0, 0, 3}});

  const QuasiPolynomial f = chromatic_quasi(gamma, a);
  std::cout << "period: " << f.period().get_str() << "\n";
  for (const auto& [d, p] : f.divisor_constituents())
    std::cout << "  gcd(q, " << f.period().get_str() << ") = " << d.get_str()
              << ":  " << p.str("q") << "\n";

  std::cout << "counts q=1..8:";
  for (long q = 1; q <= 8; ++q) std::cout << " " << f.evaluate(q).get_str();
  std::cout << "\n";

  // The deletion-contraction recursion computes the same function.
  std::cout << "recursion agrees: "
            << (same_function(f, chromatic_quasi_dc(gamma, a)) ? "yes" : "no")
            << "\n";

  // And so does counting homomorphisms one by one.
  std::cout << verify(gamma, a, 10).str();

  // Bivariate polynomials for three coefficient groups.
  std::cout << "tutte over Z:   " << g_tutte(gamma, a, GSpec::integers()).str() << "\n";
  std::cout << "tutte over Q/Z: " << g_tutte(gamma, a, GSpec::circle()).str() << "\n";
  std::cout << "tutte over Z/8: " << g_tutte(gamma, a, GSpec::cyclic(8)).str() << "\n";

  // The real arrangement attached to the free part.
  std::cout << "real charpoly:  " << real_char_poly(gamma, a).str() << "\n";
  return 0;
}
