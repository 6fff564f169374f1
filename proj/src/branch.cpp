#include <algorithm>
#include <stdexcept>

#include "prf/ratfunc.hpp"

namespace prf {

namespace {

struct Candidate {
  FieldPtr field;  // field in which value was computed
  ProjPoint value;
};

// Number of distinct preimages of beta over the algebraic closure.
unsigned preimage_count(const RatFunc& f, const Field& E, ProjPoint beta) {
  int n = f.degree();
  Poly c;
  if (beta.infinite) {
    c = f.den();
  } else {
    c = poly::sub(E, f.num(), poly::scale(E, f.den(), beta.value));
  }
  unsigned count = static_cast<unsigned>(std::max(0, poly::deg(poly::radical(E, c))));
  if (poly::deg(c) < n) ++count;
  return count;
}

// Resultant over a field by the Euclidean recursion.
Elt resultant(const Field& F, Poly a, Poly b) {
  Elt sign = 1, scale = 1;
  for (;;) {
    if (a.empty() || b.empty()) return 0;
    int da = poly::deg(a), db = poly::deg(b);
    if (db == 0) return F.mul(F.mul(sign, scale), F.pow(b[0], static_cast<std::uint64_t>(da)));
    if (da < db) {
      if ((da * db) % 2) sign = F.neg(sign);
      std::swap(a, b);
      continue;
    }
    // Res(a, b) = (-1)^(da db) Res(b, a) = (-1)^(da db) lc(b)^(da - dr) Res(b, a mod b).
    Poly r = poly::rem(F, a, b);
    if (r.empty()) return 0;
    if ((da * db) % 2) sign = F.neg(sign);
    scale = F.mul(scale, F.pow(poly::lead(b), static_cast<std::uint64_t>(da - poly::deg(r))));
    a = std::move(b);
    b = std::move(r);
  }
}

Poly interpolate(const Field& F, const std::vector<Elt>& xs, const std::vector<Elt>& ys) {
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = poly::constant(1);
    Elt denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = poly::mul(F, basis, Poly{F.neg(xs[j]), 1});
      denom = F.mul(denom, F.sub(xs[i], xs[j]));
    }
    out = poly::add(F, out, poly::scale(F, basis, F.div(ys[i], denom)));
  }
  return out;
}

// Critical values f(g) for the roots g of P, found without splitting P:
// they are the roots in T of Res_X(P(X), num(X) - T den(X)), a polynomial
// of degree at most deg P. Poles among the roots of P are covered by the
// separate infinity candidate.
std::vector<Candidate> critical_values_by_resultant(const RatFunc& f, const Poly& P) {
  const FieldPtr& F = f.field();
  const Field& K = *F;
  const std::size_t points = static_cast<std::size_t>(poly::deg(P)) + 1;
  if (K.size() < points) throw std::invalid_argument("branch_points: field too small for interpolation");
  std::vector<Elt> xs, ys;
  for (std::uint32_t r = 0; r < points; ++r) {
    Elt t = K.unrank(r);
    xs.push_back(t);
    ys.push_back(resultant(K, P, poly::sub(K, f.num(), poly::scale(K, f.den(), t))));
  }
  Poly R = interpolate(K, xs, ys);
  std::vector<Candidate> out;
  if (R.empty()) throw std::logic_error("branch_points: critical value resultant vanished");
  if (poly::deg(R) < 1) return out;
  for (const auto& [e, part] : poly::distinct_degree(K, poly::radical(K, R))) {
    FieldPtr E = F->extension(e);
    for (Elt b : poly::roots(*E, part)) out.push_back({E, ProjPoint::at(b)});
  }
  return out;
}

// Above this size the critical points are not split explicitly.
constexpr std::uint64_t kSplitLimit = 1u << 22;

}  // namespace

std::vector<BranchPoint> branch_points(const RatFunc& f) {
  if (f.degree() < 2) throw std::invalid_argument("branch_points: degree must be at least 2");
  if (!is_separable(f)) throw std::invalid_argument("branch_points: f is inseparable");
  const FieldPtr& F = f.field();
  const Field& K = *F;

  std::vector<Candidate> candidates;
  candidates.push_back({F, f(ProjPoint::inf())});
  candidates.push_back({F, ProjPoint::inf()});
  Poly w = poly::sub(K, poly::mul(K, f.den(), poly::derivative(K, f.num())),
                     poly::mul(K, f.num(), poly::derivative(K, f.den())));
  for (const auto& [d, factor] : poly::distinct_degree(K, poly::radical(K, w))) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < d && size <= kSplitLimit; ++i) size *= K.size();
    if (size > kSplitLimit) {
      for (auto& c : critical_values_by_resultant(f, factor)) candidates.push_back(std::move(c));
      continue;
    }
    FieldPtr E = F->extension(d);
    for (Elt g : poly::roots(*E, factor)) candidates.push_back({E, f.eval_in(*E, ProjPoint::at(g))});
  }

  std::vector<BranchPoint> out;
  for (const auto& cand : candidates) {
    BranchPoint bp{1, F, cand.value};
    if (!cand.value.infinite) {
      const Field& E = *cand.field;
      unsigned d = E.degree_over(K);
      unsigned m = d;
      for (unsigned t = 1; t <= d; ++t) {
        if (d % t == 0 && E.frobenius(cand.value.value, t, K) == cand.value.value) {
          m = t;
          break;
        }
      }
      bp.ext_degree = m;
      bp.field = F->extension(m);
      if (m != d && m != 1) bp.point.value = E.subfield_embedding(*bp.field).preimage.at(cand.value.value);
    }
    bool seen = std::any_of(out.begin(), out.end(), [&](const BranchPoint& o) {
      return o.ext_degree == bp.ext_degree && o.point == bp.point;
    });
    if (seen) continue;
    if (preimage_count(f.over(bp.field), *bp.field, bp.point) < static_cast<unsigned>(f.degree())) out.push_back(bp);
  }
  std::sort(out.begin(), out.end(), [](const BranchPoint& a, const BranchPoint& b) {
    if (a.ext_degree != b.ext_degree) return a.ext_degree < b.ext_degree;
    return point_less(*a.field, a.point, b.point);
  });
  return out;
}

}  // namespace prf
