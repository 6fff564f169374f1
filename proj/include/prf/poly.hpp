#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "prf/field.hpp"

namespace prf {

// Dense univariate polynomial, constant term first, no trailing zeros.
// The zero polynomial is the empty vector.
using Poly = std::vector<Elt>;

namespace poly {

void trim(Poly& a);
inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline Elt lead(const Poly& a) { return a.empty() ? 0 : a.back(); }
inline bool is_zero(const Poly& a) { return a.empty(); }
Poly constant(Elt c);
Poly monomial(Elt c, unsigned e);
Poly x();

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, const Poly& a, Elt c);
Poly mul(const Field& F, const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly quo(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, const Poly& a, const Poly& b);
Poly derivative(const Field& F, const Poly& a);
Elt eval(const Field& F, const Poly& a, Elt x);
Poly compose(const Field& F, const Poly& a, const Poly& b);
Poly powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& m);
Poly pow(const Field& F, const Poly& base, unsigned e);

// b with b^p = a; requires a' = 0.
Poly pth_root(const Field& F, const Poly& a);
// Product of the distinct monic irreducible factors.
Poly radical(const Field& F, const Poly& a);
bool is_squarefree(const Field& F, const Poly& a);
bool is_irreducible(const Field& F, const Poly& f);
// For squarefree f: pairs (d, product of the irreducible factors of degree d).
std::vector<std::pair<unsigned, Poly>> distinct_degree(const Field& F, const Poly& f);
// Distinct roots in E of f (coefficients must already lie in E), sorted by rank.
std::vector<Elt> roots(const Field& E, const Poly& f);

std::size_t term_count(const Poly& a);

}  // namespace poly
}  // namespace prf
