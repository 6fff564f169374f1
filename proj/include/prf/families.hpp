#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "prf/ratfunc.hpp"

namespace prf {

struct Linear {};
struct PowerMap {
  unsigned n;
};
struct Redei {
  unsigned n;
  Elt delta;  // in F_{q^2} \ F_q
};
struct Additive {
  std::vector<Elt> coeffs;  // alpha_i multiplies X^(p^i)
};
struct QuarticExceptional {
  Elt alpha, beta;
};
struct TableOne {
  unsigned q, row;
  std::optional<Elt> parameter;  // alpha for q = 8, omega for q = 4
};
using FamilyTag = std::variant<Linear, PowerMap, Redei, Additive, QuarticExceptional, TableOne>;

std::string family_name(const FamilyTag& tag);

RatFunc power_map(const FieldPtr& F, unsigned n);
// nu^-1 o X^n o nu with nu = (X - delta^q)/(X - delta), descended to F_q.
RatFunc redei(const FieldPtr& F, unsigned n, Elt delta);
// (X^4 - 2aX^2 - 8bX + a^2)/(X^3 + aX + b); q odd, X^3 + aX + b irreducible.
RatFunc quartic_exceptional(const FieldPtr& F, Elt alpha, Elt beta);

Poly additive(const Field& F, std::span<const Elt> coeffs);
bool is_additive(const Field& F, const Poly& L);
bool roots_form_group(const FieldPtr& F, const Poly& L, unsigned m);
// Same predicate without splitting: L(0) = 0 and L(X + Y) = L(X) mod L(Y).
bool roots_form_group_symbolic(const Field& F, const Poly& L);

bool is_irreducible_cubic(const Field& F, Elt alpha, Elt beta);
// All (alpha, beta) with X^3 + alpha X + beta irreducible, in element order.
std::vector<std::pair<Elt, Elt>> irreducible_depressed_cubics(const Field& F);
// Roots gamma_1, gamma_1^q, gamma_1^(q^2) in F_{q^3}; gamma_1 is the least root.
std::vector<Elt> cubic_roots(const FieldPtr& F, Elt alpha, Elt beta);

struct TableOneEntry {
  unsigned row;
  RatFunc f;
  unsigned stabilizer;
  std::optional<Elt> parameter;
};
bool has_table1(std::uint64_t q);
std::vector<TableOneEntry> table1(const FieldPtr& F);

std::pair<Moebius, Moebius> quartic_symmetries(const FieldPtr& F, Elt alpha, Elt beta);
bool difference_factorization_check(const FieldPtr& F, Elt alpha, Elt beta);

}  // namespace prf
