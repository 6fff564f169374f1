#include "prf/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "point_tables.hpp"
#include "prf/errors.hpp"
#include "prf/permtest.hpp"

namespace prf {

using detail::apply_index;
using detail::triple_matrix;
using detail::value_table;

namespace {

using Fibers = std::vector<std::vector<std::uint32_t>>;

Fibers fibers_of(const std::vector<std::uint32_t>& values) {
  Fibers fib(values.size());
  for (std::uint32_t x = 0; x < values.size(); ++x) fib[values[x]].push_back(x);
  return fib;
}

void require_budget(const Field& F, std::uint64_t budget) {
  if (Moebius::group_order(F) > budget) throw BudgetExceeded("PGL_2(F_q) larger than budget");
}

// Calls fn(mu, nu) for each pair with mu o f o nu = g, in matrix order of
// mu^-1. Every nu is pinned down by where it sends 0, 1 and infinity, which
// must lie in the f-fibers of mu^-1(g(0)), mu^-1(g(1)), mu^-1(g(inf)).
// Stops early when fn returns false.
template <class Fn>
void for_each_witness(const RatFunc& f, const RatFunc& g, Fn&& fn) {
  const FieldPtr& Fp = f.field();
  const Field& F = *Fp;
  const std::uint32_t q = F.size();
  auto fv = value_table(f);
  auto gv = value_table(g);
  Fibers fib = fibers_of(fv);
  bool stop = false;
  Moebius::for_each_matrix(F, [&](Elt a, Elt b, Elt c, Elt d) {
    if (stop) return;
    const std::array<Elt, 4> k{a, b, c, d};
    const auto& f0 = fib[apply_index(F, k, gv[0])];
    if (f0.empty()) return;
    const auto& f1 = fib[apply_index(F, k, gv[1])];
    if (f1.empty()) return;
    const auto& fi = fib[apply_index(F, k, gv[q])];
    if (fi.empty()) return;
    for (auto x0 : f0)
      for (auto x1 : f1)
        for (auto xi : fi) {
          if (stop || x0 == x1 || x0 == xi || x1 == xi) continue;
          auto nu = triple_matrix(F, x0, x1, xi);
          bool ok = true;
          for (std::uint32_t x = 2; x < q && ok; ++x) ok = fv[apply_index(F, nu, x)] == apply_index(F, k, gv[x]);
          if (!ok) continue;
          Moebius kappa = Moebius::from_matrix(Fp, a, b, c, d);
          Moebius nu_m = Moebius::from_matrix(Fp, nu[0], nu[1], nu[2], nu[3]);
          Moebius mu = kappa.inverse();
          if (!(compose(mu, compose(f, nu_m)) == g)) continue;
          if (!fn(mu, nu_m)) stop = true;
        }
  });
}

bool pair_less(const MoebiusPair& a, const MoebiusPair& b) {
  if (moebius_less(a.first, b.first)) return true;
  if (moebius_less(b.first, a.first)) return false;
  return moebius_less(a.second, b.second);
}

std::array<Elt, 8> pair_key(const MoebiusPair& p) {
  const auto& m = p.first.entries();
  const auto& n = p.second.entries();
  return {m[0], m[1], m[2], m[3], n[0], n[1], n[2], n[3]};
}

void verify_group(const std::vector<MoebiusPair>& pairs) {
  std::set<std::array<Elt, 8>> keys;
  for (const auto& p : pairs) keys.insert(pair_key(p));
  auto mul = [](const MoebiusPair& x, const MoebiusPair& y) {
    return MoebiusPair{x.first * y.first, y.second * x.second};
  };
  // Full closure for small groups; against a generating prefix otherwise.
  std::size_t right = pairs.size() * pairs.size() <= 4'000'000 ? pairs.size() : std::min<std::size_t>(pairs.size(), 17);
  for (const auto& x : pairs) {
    if (!keys.count(pair_key({x.first.inverse(), x.second.inverse()})))
      throw VerificationFailure("stabilizer not closed under inverse");
    for (std::size_t j = 0; j < right; ++j)
      if (!keys.count(pair_key(mul(x, pairs[j])))) throw VerificationFailure("stabilizer not closed under composition");
  }
}

std::uint32_t least_nonsquare(const Field& F) {
  for (std::uint32_t r = 0; r < F.size(); ++r)
    if (!F.is_square(F.unrank(r))) return F.unrank(r);
  throw std::logic_error("field has no nonsquare");
}

}  // namespace

std::vector<std::vector<int>> fiber_signature(const RatFunc& f) {
  const Field& F = *f.field();
  const std::uint32_t q = F.size();
  const int n = f.degree();
  std::vector<std::vector<int>> sig;
  sig.reserve(q + 1);
  ProjPoint at_inf = f(ProjPoint::inf());
  for (std::uint32_t i = 0; i <= q; ++i) {
    Poly h = i == q ? f.den() : poly::sub(F, f.num(), poly::scale(F, f.den(), i));
    std::vector<int> shape;
    int points = 0;
    if (poly::deg(h) > 0) {
      for (const auto& [d, part] : poly::distinct_degree(F, poly::monic(F, poly::radical(F, h))))
        for (int k = 0; k < poly::deg(part) / static_cast<int>(d); ++k) {
          shape.push_back(static_cast<int>(d));
          points += static_cast<int>(d);
        }
    }
    if (detail::point_index(at_inf, q) == i) {
      shape.push_back(1);
      ++points;
    }
    std::sort(shape.begin(), shape.end());
    shape.push_back(-1);
    shape.push_back(n - points);
    sig.push_back(std::move(shape));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

std::optional<MoebiusPair> equivalence_witness(const RatFunc& f, const RatFunc& g, std::uint64_t budget) {
  if (f.field() != g.field()) throw std::invalid_argument("equivalence_witness: different fields");
  require_budget(*f.field(), budget);
  if (f.degree() != g.degree()) return std::nullopt;
  std::optional<MoebiusPair> out;
  for_each_witness(f, g, [&](const Moebius& mu, const Moebius& nu) {
    out.emplace(mu, nu);
    return false;
  });
  return out;
}

std::vector<MoebiusPair> odd_quartic_witnesses(const RatFunc& f, const RatFunc& g) {
  if (f.field() != g.field()) throw std::invalid_argument("odd_quartic_witnesses: different fields");
  const FieldPtr& Fp = f.field();
  const Field& F = *Fp;
  if (F.characteristic() == 2 || f.degree() != 4 || g.degree() != 4) return {};
  auto orbit_start = [&](const RatFunc& h) -> std::optional<BranchPoint> {
    auto bp = branch_points(h);
    if (bp.size() != 3) return std::nullopt;
    for (const auto& b : bp)
      if (b.ext_degree != 3 || b.point.infinite) return std::nullopt;
    return bp.front();
  };
  auto bf = orbit_start(f), bg = orbit_start(g);
  if (!bf || !bg) return {};
  FieldPtr E = bf->field;
  auto conj = [&](Elt e, unsigned i) { return ProjPoint::at(E->frobenius(e, i, F)); };
  const Elt a = bf->point.value, b = bg->point.value;
  std::array<ProjPoint, 3> src{conj(a, 0), conj(a, 1), conj(a, 2)};

  const std::uint32_t q = F.size();
  auto fv = value_table(f);
  auto gv = value_table(g);
  Fibers fib = fibers_of(fv);
  std::vector<MoebiusPair> out;
  for (unsigned j = 0; j < 3; ++j) {
    std::array<ProjPoint, 3> dst{conj(b, j), conj(b, j + 1), conj(b, j + 2)};
    auto mu = Moebius::from_triple(E, src, dst).descend(Fp);
    if (!mu) throw VerificationFailure("Frobenius-equivariant branch point alignment not defined over F_q");
    const auto k = mu->inverse().entries();
    for (auto x0 : fib[apply_index(F, k, gv[0])])
      for (auto x1 : fib[apply_index(F, k, gv[1])])
        for (auto xi : fib[apply_index(F, k, gv[q])]) {
          if (x0 == x1 || x0 == xi || x1 == xi) continue;
          auto m = triple_matrix(F, x0, x1, xi);
          Moebius nu = Moebius::from_matrix(Fp, m[0], m[1], m[2], m[3]);
          if (compose(*mu, compose(f, nu)) == g) out.emplace_back(*mu, nu);
        }
  }
  return out;
}

std::vector<FamilyRepresentative> family_representatives(const FieldPtr& F, unsigned n) {
  const Field& K = *F;
  const std::uint64_t q = K.size();
  std::vector<FamilyRepresentative> out;
  switch (n) {
    case 1:
      out.push_back({Linear{}, RatFunc::identity(F), true});
      break;
    case 2:
      if (q % 2 == 0) out.push_back({PowerMap{2}, power_map(F, 2), true});
      break;
    case 3:
      if (q % 3 == 2) {
        out.push_back({PowerMap{3}, power_map(F, 3), true});
      } else if (q % 3 == 1) {
        Elt delta = F->extension(2)->generator();
        out.push_back({Redei{3, delta}, redei(F, 3, delta), true});
      } else {
        std::vector<Elt> zero{0, 1};
        out.push_back({Additive{zero}, RatFunc::polynomial(F, additive(K, zero)), true});
        std::vector<Elt> ns{K.neg(least_nonsquare(K)), 1};
        out.push_back({Additive{ns}, RatFunc::polynomial(F, additive(K, ns)), true});
      }
      break;
    case 4: {
      auto exc = count_classes_exceptional(F);
      out = exc.representatives;
      if (has_table1(q)) {
        std::vector<FamilyRepresentative> rows;
        for (const auto& e : table1(F)) {
          bool dup = std::any_of(rows.begin(), rows.end(), [&](const FamilyRepresentative& r) {
            return equivalence_witness(r.f, e.f).has_value();
          });
          if (!dup) rows.push_back({TableOne{static_cast<unsigned>(q), e.row, e.parameter}, e.f, false});
        }
        out.insert(out.end(), rows.begin(), rows.end());
      }
      break;
    }
    default:
      throw std::invalid_argument("family_representatives: degree must be 1..4");
  }
  return out;
}

std::optional<ClassificationResult> classify(const RatFunc& f) {
  const int n = f.degree();
  if (n < 1 || n > 4) throw std::invalid_argument("classify: degree must be 1..4");
  if (!is_permutation(f)) return std::nullopt;
  const FieldPtr& F = f.field();
  if (n == 1)
    return ClassificationResult{Linear{}, RatFunc::identity(F), *Moebius::from_ratfunc(f), Moebius::identity(F), true};

  auto reps = family_representatives(F, static_cast<unsigned>(n));
  std::size_t start = 0;
  if (n == 4 && F->characteristic() != 2) {
    const auto& rep = reps.front();
    auto w = odd_quartic_witnesses(rep.f, f);
    if (!w.empty()) {
      if (w.size() != 3) throw VerificationFailure("odd quartic alignment did not give exactly three witnesses");
      return ClassificationResult{rep.family, rep.f, w.front().first, w.front().second, true};
    }
    start = 1;
  }
  auto sig = fiber_signature(f);
  for (std::size_t i = start; i < reps.size(); ++i) {
    const auto& rep = reps[i];
    if (fiber_signature(rep.f) != sig) continue;
    if (auto w = equivalence_witness(rep.f, f))
      return ClassificationResult{rep.family, rep.f, w->first, w->second, rep.exceptional};
  }
  throw VerificationFailure("permutation matches no family of its degree");
}

StabilizerReport stabilizer(const RatFunc& f, std::uint64_t budget) {
  require_budget(*f.field(), budget);
  StabilizerReport rep{f, {}};
  for_each_witness(f, f, [&](const Moebius& mu, const Moebius& nu) {
    rep.pairs.emplace_back(mu, nu);
    return true;
  });
  std::sort(rep.pairs.begin(), rep.pairs.end(), pair_less);
  auto id = std::find_if(rep.pairs.begin(), rep.pairs.end(),
                         [](const MoebiusPair& p) { return p.first.is_identity() && p.second.is_identity(); });
  if (id == rep.pairs.end()) throw VerificationFailure("stabilizer misses the identity");
  std::rotate(rep.pairs.begin(), id, id + 1);
  verify_group(rep.pairs);
  return rep;
}

std::uint64_t orbit_size_explicit(const RatFunc& f, std::uint64_t budget) {
  const FieldPtr& Fp = f.field();
  const Field& F = *Fp;
  std::uint64_t order = Moebius::group_order(F);
  if (order * order > budget) throw BudgetExceeded("orbit enumeration larger than budget");
  std::set<std::vector<Elt>> seen;
  for (const auto& nu : Moebius::all(Fp)) {
    RatFunc h = compose(f, nu);
    Moebius::for_each_matrix(F, [&](Elt a, Elt b, Elt c, Elt d) {
      Poly num = poly::add(F, poly::scale(F, h.num(), a), poly::scale(F, h.den(), b));
      Poly den = poly::add(F, poly::scale(F, h.num(), c), poly::scale(F, h.den(), d));
      Elt s = F.inv(den.back());
      std::vector<Elt> key = poly::scale(F, num, s);
      key.push_back(F.size());
      for (Elt e : den) key.push_back(F.mul(e, s));
      seen.insert(std::move(key));
    });
  }
  return seen.size();
}

}  // namespace prf
