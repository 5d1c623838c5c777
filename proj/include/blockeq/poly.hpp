#pragma once

#include <vector>

#include "blockeq/gf.hpp"

namespace blockeq {

/// Dense univariate polynomials over GF(q), coefficients c_0..c_deg.
/// Normalized: no trailing zeros except the zero polynomial {0}.
namespace poly {

using P = std::vector<gfe>;

P trim(P a);
bool is_zero(const P& a);
int deg(const P& a);  // deg({0}) = -1
P add(const Field& F, const P& a, const P& b);
P sub(const Field& F, const P& a, const P& b);
P mul(const Field& F, const P& a, const P& b);
P monic(const Field& F, const P& a);
/// quotient and remainder by monic-normalizable divisor
std::pair<P, P> divmod(const Field& F, const P& a, const P& b);
P gcd(const Field& F, P a, P b);
P powmod(const Field& F, P base, long long e, const P& mod);
P derivative(const Field& F, const P& a);
gfe eval(const Field& F, const P& a, gfe x);

/// irreducible factors with multiplicities, deterministic given rng seed
std::vector<std::pair<P, int>> factor(const Field& F, const P& a, Rng& rng);
bool irreducible(const Field& F, const P& a);
/// roots in the base field (with multiplicity 1 listing)
std::vector<gfe> roots(const Field& F, const P& a);

}  // namespace poly
}  // namespace blockeq
