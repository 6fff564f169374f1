#include "prf/permtest.hpp"

#include <stdexcept>

#include "prf/classify.hpp"
#include "prf/errors.hpp"
#include "prf/families.hpp"

namespace prf {

bool is_permutation(const RatFunc& f, unsigned ext_degree, std::uint64_t budget) {
  if (ext_degree == 0) throw std::invalid_argument("is_permutation: extension degree must be positive");
  std::uint64_t q = f.field()->size();
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < ext_degree; ++i) {
    Q *= q;
    if (Q + 1 > budget) throw BudgetExceeded("is_permutation: field larger than point budget");
  }
  FieldPtr Eptr = f.field()->extension(ext_degree);
  const Field& E = *Eptr;
  if (f.is_constant()) return false;

  std::vector<std::uint64_t> seen((Q + 1 + 63) / 64, 0);
  auto mark = [&](std::uint64_t idx) {
    std::uint64_t bit = 1ull << (idx & 63);
    auto& word = seen[idx >> 6];
    if (word & bit) return false;
    word |= bit;
    return true;
  };
  const Poly& a = f.num();
  const Poly& b = f.den();
  ProjPoint at_inf = f.eval_in(E, ProjPoint::inf());
  mark(at_inf.infinite ? Q : at_inf.value);
  if (f.is_polynomial()) {
    for (std::uint64_t x = 0; x < Q; ++x) {
      Elt v = 0;
      for (std::size_t i = a.size(); i-- > 0;) v = E.add(E.mul(v, static_cast<Elt>(x)), a[i]);
      if (!mark(v)) return false;
    }
    return true;
  }
  for (std::uint64_t x = 0; x < Q; ++x) {
    Elt xv = static_cast<Elt>(x);
    Elt u = 0, w = 0;
    for (std::size_t i = a.size(); i-- > 0;) u = E.add(E.mul(u, xv), a[i]);
    for (std::size_t i = b.size(); i-- > 0;) w = E.add(E.mul(w, xv), b[i]);
    std::uint64_t idx = w ? E.div(u, w) : Q;
    if (!mark(idx)) return false;
  }
  return true;
}

std::uint64_t exceptionality_bound(unsigned n) {
  if (n < 2) throw std::invalid_argument("exceptionality_bound: n must be at least 2");
  std::uint64_t s = 2ull * (n - 2) * (n - 2) + 1;
  return s * s + 1;
}

SeparableReduction separable_part(const RatFunc& f) {
  unsigned p = f.field()->characteristic();
  RatFunc g = f;
  unsigned r = 0;
  while (!g.is_constant() && !is_separable(g)) {
    auto compress = [p](const Poly& a) {
      Poly c(a.size() / p + 1, 0);
      for (std::size_t i = 0; i < a.size(); i += p) c[i / p] = a[i];
      poly::trim(c);
      return c;
    };
    g = RatFunc(g.field(), compress(g.num()), compress(g.den()));
    ++r;
  }
  return {g, r};
}

ExceptionalityVerdict decide_exceptional(const RatFunc& f, unsigned window, std::uint64_t budget) {
  if (f.is_constant()) throw std::invalid_argument("decide_exceptional: f is constant");
  if (window == 0) throw std::invalid_argument("decide_exceptional: window must be positive");
  auto [g, r] = separable_part(f);
  (void)r;
  int n = g.degree();
  if (n == 1) return Exceptional{1, false, "Linear"};
  if (!is_permutation(g, 1, budget)) return NotExceptional{1, ""};

  std::string family;
  bool classified = false;
  if (n <= 4) {
    auto cls = classify(g);
    if (!cls) throw VerificationFailure("classification disagrees with the permutation test");
    family = family_name(cls->family);
    if (!cls->exceptional) return NotExceptional{0, family};
    classified = true;
  }

  std::uint64_t bound = exceptionality_bound(static_cast<unsigned>(n));
  std::uint64_t q = g.field()->size();
  unsigned ell_star = 1;
  for (std::uint64_t Q = q; Q < bound; Q *= q) ++ell_star;

  Undetermined undetermined;
  std::uint64_t Q = 1;
  for (unsigned i = 0; i < ell_star; ++i) Q *= q;
  for (unsigned ell = ell_star; ell < ell_star + window; ++ell, Q *= q) {
    if (Q + 1 > budget) {
      if (ell == ell_star && !classified) throw BudgetExceeded("decide_exceptional: no testable extension within budget");
      break;
    }
    if (is_permutation(g, ell, budget)) return Exceptional{ell, false, family};
    undetermined.tested.push_back(ell);
  }
  if (classified) return Exceptional{0, true, family};
  return undetermined;
}

bool is_exceptional_additive(const FieldPtr& F, const Poly& L) {
  if (!is_additive(*F, L)) throw std::invalid_argument("is_exceptional_additive: polynomial is not additive");
  if (poly::deg(L) < 1) return false;
  for (Elt x = 1; x < F->size(); ++x)
    if (poly::eval(*F, L, x) == 0) return false;
  return true;
}

}  // namespace prf
