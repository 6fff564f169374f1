#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "prf/ratfunc.hpp"

namespace prf {

// True iff f permutes P^1(F_{q^ext_degree}).
bool is_permutation(const RatFunc& f, unsigned ext_degree = 1, std::uint64_t budget = kDefaultBudget);

// (2(n-2)^2 + 1)^2 + 1: a degree-n permutation of P^1(F_Q) with Q at least
// this large is exceptional.
std::uint64_t exceptionality_bound(unsigned n);

// f = g(X^(p^r)) with g separable.
struct SeparableReduction {
  RatFunc g;
  unsigned r;
};
SeparableReduction separable_part(const RatFunc& f);

struct Exceptional {
  unsigned ell;                     // certificate: g permutes P^1(F_{q^ell}), q^ell >= bound
  bool by_classification = false;   // degree <= 4 and the window exceeded the budget
  std::string family;
};
struct NotExceptional {
  unsigned failing_ell;  // 1 if f does not permute P^1(F_q); 0 when decided by classification
  std::string family;
};
struct Undetermined {
  std::vector<unsigned> tested;
};
using ExceptionalityVerdict = std::variant<Exceptional, NotExceptional, Undetermined>;

ExceptionalityVerdict decide_exceptional(const RatFunc& f, unsigned window = 12,
                                         std::uint64_t budget = kDefaultBudget);

// Additive L with no nonzero root in F_q.
bool is_exceptional_additive(const FieldPtr& F, const Poly& L);

}  // namespace prf
