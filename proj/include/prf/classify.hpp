#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prf/families.hpp"
#include "prf/ratfunc.hpp"

namespace prf {

// (mu, nu) acting by f -> mu o f o nu.
using MoebiusPair = std::pair<Moebius, Moebius>;

struct FamilyRepresentative {
  FamilyTag family;
  RatFunc f;
  bool exceptional;
};

// One representative per equivalence class of degree-n permutations named by
// the classification: exceptional families first, then sporadic table rows.
std::vector<FamilyRepresentative> family_representatives(const FieldPtr& F, unsigned n);

struct ClassificationResult {
  FamilyTag family;
  RatFunc representative;
  Moebius mu, nu;  // mu o representative o nu = f
  bool exceptional;
};

// nullopt when f does not permute P^1(F_q). Throws VerificationFailure if a
// permutation matches no family. Requires 1 <= deg f <= 4.
std::optional<ClassificationResult> classify(const RatFunc& f);

// Some (mu, nu) over F_q with mu o f o nu = g.
std::optional<MoebiusPair> equivalence_witness(const RatFunc& f, const RatFunc& g,
                                               std::uint64_t budget = kDefaultBudget);
// Odd q, f and g degree-4 with three branch points forming one Frobenius orbit
// of degree 3: the mu aligning the orbits, each with its unique nu. Empty when
// the branch point shape does not fit.
std::vector<MoebiusPair> odd_quartic_witnesses(const RatFunc& f, const RatFunc& g);

// Multiset of fiber shapes over P^1(F_q); equal for equivalent functions.
std::vector<std::vector<int>> fiber_signature(const RatFunc& f);

struct StabilizerReport {
  RatFunc f;
  std::vector<MoebiusPair> pairs;  // sorted; (X, X) first
  std::size_t size() const { return pairs.size(); }
};
StabilizerReport stabilizer(const RatFunc& f, std::uint64_t budget = kDefaultBudget);

// |{mu o f o nu}| by enumeration of PGL_2(F_q)^2.
std::uint64_t orbit_size_explicit(const RatFunc& f, std::uint64_t budget = 50'000'000);

// Search slice: f(inf) = inf, f(0) = 0, numerator monic with X^(n-1)
// coefficient in {0, 1}, denominator monic without F_q-roots of degree 0 or
// 2..n-1 and with no X^(d-1) term when p does not divide its degree d.
bool in_search_slice(const RatFunc& f);
// An equivalent function in the slice; each reduction step is checked.
std::pair<RatFunc, MoebiusPair> search_normal_form(const RatFunc& f);
// All permutations of P^1(F_q) in the slice, sorted by canonical_less.
std::vector<RatFunc> search_candidates(const FieldPtr& F, unsigned n, bool extended = false);

struct SearchClass {
  RatFunc representative;
  ClassificationResult classification;
  std::uint64_t stabilizer;
  std::uint64_t orbit;
  std::size_t slice_members;
};
// Mandatory range at n = 4 is q <= 27; extended allows q <= 81.
std::vector<SearchClass> search(const FieldPtr& F, unsigned n, bool extended = false);

struct ExceptionalClassCount {
  std::uint64_t count;
  std::vector<FamilyRepresentative> representatives;
  std::vector<Elt> delta;  // even q: F_q minus {b^3 + b}
};
ExceptionalClassCount count_classes_exceptional(const FieldPtr& F);

// Closed forms for the number of degree-4 permutation rational functions.
std::uint64_t count_total_formula(std::uint64_t q);
// Sum of |PGL_2|^2 / |stabilizer| over the classes found by search.
std::uint64_t count_total(const FieldPtr& F, bool extended = false);
// Coprime pairs (X^4 + ..., monic rootless denominator of degree < 4) with
// numerator vanishing only at 0 and injective on F_q, times q^3 - q.
std::uint64_t count_total_bruteforce(const FieldPtr& F);

}  // namespace prf
