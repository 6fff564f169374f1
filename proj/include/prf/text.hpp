#pragma once

#include <string>

#include "prf/field.hpp"
#include "prf/poly.hpp"
#include "prf/ratfunc.hpp"

namespace prf {

// "GF(p)", "GF(p^k) mod <m(w)>", or for deeper towers one "mod" clause per
// level in w1, w2, ...
std::string to_string(const Field& F);
FieldPtr parse_field(const std::string& text);

// Element as a polynomial in the generator symbol(s) of F.
std::string to_string(const Field& F, Elt e);
Elt parse_element(const Field& F, const std::string& text);

std::string to_string(const Field& F, const Poly& p, const std::string& var = "x");
Poly parse_poly(const FieldPtr& F, const std::string& text);

// "<poly>" or "(<poly>)/(<poly>)" in the variable x.
std::string to_string(const RatFunc& f);
RatFunc parse_ratfunc(const FieldPtr& F, const std::string& text);

std::string to_string(const Moebius& mu);
std::string to_string(const Field& F, const ProjPoint& x);

}  // namespace prf
