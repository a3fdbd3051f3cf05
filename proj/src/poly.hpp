#pragma once

// Univariate polynomials over a Field, coefficients stored low degree first.

#include <cstdint>
#include <random>
#include <vector>

#include "qcover/field.hpp"
#include "qcover/matrix.hpp"

namespace qcover::poly {

using Poly = std::vector<Scalar>;

void trim(Poly& a);
int degree(const Poly& a);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, Poly a);
Poly gcd(const Field& f, Poly a, Poly b);
Poly derivative(const Field& f, const Poly& a);
Poly powmod(const Field& f, Poly base, std::uint64_t e, const Poly& mod);

/// Distinct monic irreducible factors over F_p.  Requires p > deg a.
std::vector<Poly> irreducible_factors(const Field& f, const Poly& a, std::mt19937_64& rng);

/// Distinct roots over Q among small fractions; used as a best-effort split.
std::vector<Scalar> small_rational_roots(const Field& f, const Poly& a);

Scalar evaluate(const Field& f, const Poly& a, const Scalar& x);
/// p(m) for a square matrix m.
Mat evaluate(const Poly& a, const Mat& m);

}  // namespace qcover::poly
