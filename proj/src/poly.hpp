#pragma once

#include <optional>
#include <random>
#include <vector>

#include "delooping/scalar.hpp"

namespace dl::poly {

// Dense univariate polynomial, coefficient i for t^i, no trailing zeros.
using Poly = std::vector<Scalar>;

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Scalar& s);
// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b);
// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);

// A factorization a = f * g with gcd(f, g) = 1 and both nonconstant, if one
// can be found from the squarefree decomposition and linear factors.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& a, Field f, std::mt19937_64& rng);

}  // namespace dl::poly
