#include "prf/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "prf/errors.hpp"

namespace prf {

std::string family_name(const FamilyTag& tag) {
  struct Visitor {
    std::string operator()(const Linear&) const { return "Linear"; }
    std::string operator()(const PowerMap&) const { return "PowerMap"; }
    std::string operator()(const Redei&) const { return "Redei"; }
    std::string operator()(const Additive&) const { return "Additive"; }
    std::string operator()(const QuarticExceptional&) const { return "QuarticExceptional"; }
    std::string operator()(const TableOne&) const { return "TableOne"; }
  };
  return std::visit(Visitor{}, tag);
}

RatFunc power_map(const FieldPtr& F, unsigned n) { return RatFunc::polynomial(F, poly::monomial(1, n)); }

RatFunc redei(const FieldPtr& F, unsigned n, Elt delta) {
  if (n == 0) throw std::invalid_argument("redei: degree must be positive");
  FieldPtr E = F->extension(2);
  if (delta >= E->size()) throw std::invalid_argument("redei: delta is not in F_{q^2}");
  if (delta < F->size()) throw std::invalid_argument("redei: delta lies in F_q");
  Elt dq = E->frobenius(delta, 1, *F);
  auto nu = Moebius::from_matrix(E, 1, E->neg(dq), 1, E->neg(delta));
  RatFunc f = compose(nu.inverse(), compose(power_map(E, n), nu));
  auto down = f.descend(F);
  if (!down) throw VerificationFailure("redei: coefficients do not descend to F_q");
  return *down;
}

bool is_irreducible_cubic(const Field& F, Elt alpha, Elt beta) {
  Poly c{beta, alpha, 0, 1};
  for (Elt x = 0; x < F.size(); ++x)
    if (poly::eval(F, c, x) == 0) return false;
  return true;
}

std::vector<std::pair<Elt, Elt>> irreducible_depressed_cubics(const Field& F) {
  std::vector<std::pair<Elt, Elt>> out;
  for (std::uint32_t ra = 0; ra < F.size(); ++ra)
    for (std::uint32_t rb = 0; rb < F.size(); ++rb) {
      Elt a = F.unrank(ra), b = F.unrank(rb);
      if (is_irreducible_cubic(F, a, b)) out.emplace_back(a, b);
    }
  return out;
}

RatFunc quartic_exceptional(const FieldPtr& F, Elt alpha, Elt beta) {
  const Field& K = *F;
  if (K.characteristic() == 2) throw std::invalid_argument("quartic_exceptional: q must be odd");
  if (!is_irreducible_cubic(K, alpha, beta)) throw std::invalid_argument("quartic_exceptional: X^3+aX+b is reducible");
  Poly num{K.mul(alpha, alpha), K.neg(K.mul(K.from_int(8), beta)), K.neg(K.mul(K.from_int(2), alpha)), 0, 1};
  Poly den{beta, alpha, 0, 1};
  return RatFunc(F, num, den);
}

std::vector<Elt> cubic_roots(const FieldPtr& F, Elt alpha, Elt beta) {
  if (!is_irreducible_cubic(*F, alpha, beta)) throw std::invalid_argument("cubic_roots: cubic is reducible");
  FieldPtr E = F->extension(3);
  auto rts = poly::roots(*E, Poly{beta, alpha, 0, 1});
  if (rts.size() != 3) throw VerificationFailure("irreducible cubic does not split in F_{q^3}");
  Elt g1 = rts.front();
  return {g1, E->frobenius(g1, 1, *F), E->frobenius(g1, 2, *F)};
}

Poly additive(const Field& F, std::span<const Elt> coeffs) {
  Poly L;
  std::uint64_t e = 1;
  for (Elt c : coeffs) {
    L = poly::add(F, L, poly::monomial(c, static_cast<unsigned>(e)));
    e *= F.characteristic();
  }
  return L;
}

bool is_additive(const Field& F, const Poly& L) {
  unsigned p = F.characteristic();
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!L[i]) continue;
    if (i == 0) return false;
    std::size_t e = i;
    while (e % p == 0) e /= p;
    if (e != 1) return false;
  }
  return true;
}

bool roots_form_group(const FieldPtr& F, const Poly& L, unsigned m) {
  if (poly::deg(L) < 1) throw std::invalid_argument("roots_form_group: L must be nonconstant");
  if (!poly::is_squarefree(*F, L)) throw std::invalid_argument("roots_form_group: L is not squarefree");
  FieldPtr E = F->extension(m);
  auto rts = poly::roots(*E, L);
  if (static_cast<int>(rts.size()) != poly::deg(L)) throw std::invalid_argument("roots_form_group: L does not split");
  std::set<Elt> set(rts.begin(), rts.end());
  if (!set.count(0)) return false;
  for (Elt a : rts)
    for (Elt b : rts)
      if (!set.count(E->sub(a, b))) return false;
  return true;
}

bool roots_form_group_symbolic(const Field& F, const Poly& L) {
  if (poly::deg(L) < 1) throw std::invalid_argument("roots_form_group_symbolic: L must be nonconstant");
  if (!poly::is_squarefree(F, L)) throw std::invalid_argument("roots_form_group_symbolic: L is not squarefree");
  if (L[0] != 0) return false;
  const int n = poly::deg(L);
  // Coefficient of X^j in L(X + Y) is sum_i L_i C(i, j) Y^(i-j).
  std::vector<std::vector<unsigned>> binom(n + 1, std::vector<unsigned>(n + 1, 0));
  const unsigned p = F.characteristic();
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1 % p;
    for (int j = 1; j <= i; ++j) binom[i][j] = (binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0)) % p;
  }
  for (int j = 0; j <= n; ++j) {
    Poly cy;
    for (int i = j; i <= n; ++i)
      if (L[i] && binom[i][j]) cy = poly::add(F, cy, poly::monomial(F.mul(L[i], F.from_int(binom[i][j])), i - j));
    cy = poly::sub(F, cy, poly::constant(L[j]));
    if (!poly::rem(F, cy, L).empty()) return false;
  }
  return true;
}

bool has_table1(std::uint64_t q) { return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8; }

std::vector<TableOneEntry> table1(const FieldPtr& F) {
  const Field& K = *F;
  std::uint64_t q = K.size();
  if (!has_table1(q)) throw std::invalid_argument("table1: q must be one of 2, 3, 4, 5, 7, 8");
  auto c = [&](long long v) { return K.from_int(v); };
  std::vector<TableOneEntry> out;
  auto add = [&](unsigned row, Poly num, Poly den, unsigned stab, std::optional<Elt> param = std::nullopt) {
    out.push_back({row, RatFunc(F, std::move(num), std::move(den)), stab, param});
  };
  switch (q) {
    case 8:
      for (Elt a : poly::roots(K, Poly{1, 1, 0, 1})) add(1, {0, 1, 0, a, 1}, {1, 1, 1}, 6, a);
      break;
    case 7:
      add(1, {0, 3, 0, 0, 1}, {1}, 3);
      break;
    case 5:
      add(1, {1, 1, 0, 0, 1}, {2, 0, 1}, 1);
      add(2, {1, 0, 0, 1, 1}, {2, 0, 1}, 3);
      break;
    case 4: {
      auto omegas = poly::roots(K, Poly{1, 1, 1});
      for (Elt w : omegas) add(1, {0, w, 0, 0, 1}, {K.mul(w, w), 0, 0, 1}, 6, w);
      for (Elt w : omegas) add(2, {0, 1, 1, 0, 1}, {w, 0, 0, 1}, 2, w);
      for (Elt w : omegas) add(3, {0, 1, w, 0, 1}, {1, 1, 0, 1}, 2, w);
      break;
    }
    case 3:
      add(1, {0, 1, c(-1), 0, 1}, {1}, 1);
      add(2, {1, 1, 0, 0, 1}, {1, 0, 1}, 1);
      add(3, {1, 0, 0, 1, 1}, {1, 0, 1}, 3);
      break;
    case 2:
      add(1, {0, 1, 0, 1, 1}, {1}, 1);
      add(2, {0, 1, 0, 1, 1}, {1, 1, 1}, 2);
      break;
  }
  return out;
}

std::pair<Moebius, Moebius> quartic_symmetries(const FieldPtr& F, Elt alpha, Elt beta) {
  RatFunc f = quartic_exceptional(F, alpha, beta);
  FieldPtr Eptr = F->extension(3);
  const Field& E = *Eptr;
  const Field& K = *F;
  std::uint64_t q = K.size();
  auto g = cubic_roots(F, alpha, beta);
  auto c = [&](long long v) { return E.from_int(v); };
  auto sq = [&](Elt x) { return E.mul(x, x); };
  Elt delta = E.add(E.add(E.mul(sq(g[0]), g[1]), E.mul(sq(g[1]), g[2])), E.mul(sq(g[2]), g[0]));
  Elt eps = E.add(E.add(E.mul(g[0], sq(g[1])), E.mul(g[1], sq(g[2]))), E.mul(g[2], sq(g[0])));
  Elt t = E.sub(g[0], g[1]);
  auto tr_pow = [&](std::uint64_t e) { return E.trace(E.pow(t, e), K); };
  Elt tr1 = tr_pow((3 * q * q + 2 * q + 1) / 2);
  Elt tr2 = tr_pow((q * q + 2 * q + 1) / 2);
  Elt tr3 = tr_pow((q * q + 2 * q + 3) / 2);
  Elt a = alpha, b = beta;

  // mu = 4(-(3b + delta)X + 4a^2) / (3aX + 24b - 4delta)
  Elt mu_a = E.mul(c(4), E.neg(E.add(E.mul(c(3), b), delta)));
  Elt mu_b = E.mul(c(16), sq(a));
  Elt mu_c = E.mul(c(3), a);
  Elt mu_d = E.sub(E.mul(c(24), b), E.mul(c(4), delta));
  // nu = ((-(eps + 3b) + tr1)X + a^2 - a tr2) / (3aX + delta + 3b + tr3)
  Elt nu_a = E.add(E.neg(E.add(eps, E.mul(c(3), b))), tr1);
  Elt nu_b = E.sub(sq(a), E.mul(a, tr2));
  Elt nu_c = E.mul(c(3), a);
  Elt nu_d = E.add(E.add(delta, E.mul(c(3), b)), tr3);

  auto mu_e = Moebius::from_matrix(Eptr, mu_a, mu_b, mu_c, mu_d);
  auto nu_e = Moebius::from_matrix(Eptr, nu_a, nu_b, nu_c, nu_d);
  auto mu = mu_e.descend(F);
  auto nu = nu_e.descend(F);
  if (!mu || !nu) throw VerificationFailure("quartic_symmetries: maps not defined over F_q");
  if (!(mu_e(ProjPoint::at(E.mul(c(4), g[0]))) == ProjPoint::at(E.mul(c(4), g[1]))))
    throw VerificationFailure("quartic_symmetries: mu(4 gamma_1) != 4 gamma_2");
  if (!(compose(*mu, compose(f, *nu)) == f)) throw VerificationFailure("quartic_symmetries: mu o f o nu != f");
  return {*mu, *nu};
}

bool difference_factorization_check(const FieldPtr& F, Elt alpha, Elt beta) {
  RatFunc f = quartic_exceptional(F, alpha, beta);
  FieldPtr E = F->extension(3);
  const Field& K = *E;
  auto g = cubic_roots(F, alpha, beta);
  // X - Y
  BivarPoly product(E, {{0, K.neg(1)}, {1}});
  for (Elt gi : g) {
    // XY - g(X + Y) - a - 2g^2
    Elt c0 = K.neg(K.add(alpha, K.mul(K.from_int(2), K.mul(gi, gi))));
    BivarPoly factor(E, {{c0, K.neg(gi)}, {K.neg(gi), 1}});
    product = product * factor;
  }
  return equal_up_to_scalar(difference_numerator(f).over(E), product);
}

}  // namespace prf
