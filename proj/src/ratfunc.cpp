#include "prf/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace prf {

bool point_less(const Field& F, const ProjPoint& a, const ProjPoint& b) {
  if (a.infinite || b.infinite) return !a.infinite && b.infinite;
  return F.less(a.value, b.value);
}

RatFunc::RatFunc(FieldPtr field, Poly num, Poly den, bool)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {}

RatFunc::RatFunc(FieldPtr field, Poly num, Poly den) : field_(std::move(field)) {
  const Field& F = *field_;
  poly::trim(num);
  poly::trim(den);
  if (den.empty()) throw std::domain_error("rational function with zero denominator");
  if (num.empty()) {
    den_ = {1};
    return;
  }
  Poly g = poly::gcd(F, num, den);
  if (poly::deg(g) > 0) {
    num = poly::quo(F, num, g);
    den = poly::quo(F, den, g);
  }
  Elt c = F.inv(den.back());
  num_ = poly::scale(F, num, c);
  den_ = poly::scale(F, den, c);
}

RatFunc RatFunc::identity(FieldPtr field) { return RatFunc(std::move(field), poly::x(), {1}, true); }

RatFunc RatFunc::constant(FieldPtr field, Elt c) { return RatFunc(std::move(field), poly::constant(c), {1}, true); }

RatFunc RatFunc::polynomial(FieldPtr field, Poly p) {
  poly::trim(p);
  return RatFunc(std::move(field), std::move(p), {1}, true);
}

int RatFunc::degree() const noexcept { return std::max(poly::deg(num_), poly::deg(den_)); }

ProjPoint RatFunc::eval_in(const Field& E, ProjPoint x) const {
  if (x.infinite) {
    int dn = poly::deg(num_), dd = poly::deg(den_);
    if (dn > dd) return ProjPoint::inf();
    if (dn < dd) return ProjPoint::at(0);
    return ProjPoint::at(E.div(num_.back(), den_.back()));
  }
  Elt b = poly::eval(E, den_, x.value);
  Elt a = poly::eval(E, num_, x.value);
  if (!b) return ProjPoint::inf();
  return ProjPoint::at(E.div(a, b));
}

RatFunc RatFunc::over(const FieldPtr& ext) const {
  if (!ext->lies_over(*field_)) throw std::invalid_argument("RatFunc::over: not an extension in the tower");
  return RatFunc(ext, num_, den_, true);
}

std::optional<RatFunc> RatFunc::descend(const FieldPtr& sub) const {
  if (!field_->lies_over(*sub)) throw std::invalid_argument("RatFunc::descend: not a tower subfield");
  for (Elt c : num_)
    if (c >= sub->size()) return std::nullopt;
  for (Elt c : den_)
    if (c >= sub->size()) return std::nullopt;
  return RatFunc(sub, num_, den_, true);
}

RatFunc RatFunc::reciprocal() const {
  if (num_.empty()) throw std::domain_error("reciprocal of zero");
  return RatFunc(field_, den_, num_);
}

RatFunc normalize(FieldPtr field, Poly a, Poly b) { return RatFunc(std::move(field), std::move(a), std::move(b)); }

namespace {

const Field& common_field(const RatFunc& f, const RatFunc& g) {
  if (f.field() != g.field()) throw std::invalid_argument("rational functions over different fields");
  return *f.field();
}

}  // namespace

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  const Field& F = common_field(f, g);
  using namespace poly;
  return RatFunc(f.field(), add(F, mul(F, f.num(), g.den()), mul(F, g.num(), f.den())), mul(F, f.den(), g.den()));
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) {
  const Field& F = common_field(f, g);
  using namespace poly;
  return RatFunc(f.field(), sub(F, mul(F, f.num(), g.den()), mul(F, g.num(), f.den())), mul(F, f.den(), g.den()));
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  const Field& F = common_field(f, g);
  return RatFunc(f.field(), poly::mul(F, f.num(), g.num()), poly::mul(F, f.den(), g.den()));
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  const Field& F = common_field(f, g);
  if (g.num().empty()) throw std::domain_error("division by the zero function");
  return RatFunc(f.field(), poly::mul(F, f.num(), g.den()), poly::mul(F, f.den(), g.num()));
}

RatFunc operator-(const RatFunc& f) { return RatFunc(f.field(), poly::neg(*f.field(), f.num()), f.den()); }

RatFunc power(const RatFunc& f, long long e) {
  RatFunc base = e < 0 ? f.reciprocal() : f;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  RatFunc result = RatFunc::constant(f.field(), 1);
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

RatFunc derivative(const RatFunc& f) {
  const Field& F = *f.field();
  using namespace poly;
  Poly top = sub(F, mul(F, derivative(F, f.num()), f.den()), mul(F, f.num(), derivative(F, f.den())));
  return RatFunc(f.field(), top, mul(F, f.den(), f.den()));
}

bool is_separable(const RatFunc& f) { return !derivative(f).num().empty(); }

RatFunc compose(const RatFunc& g, const RatFunc& h) {
  const Field& F = common_field(g, h);
  int m = g.degree();
  if (m <= 0) return g;
  std::vector<Poly> cp(m + 1), dp(m + 1);
  cp[0] = dp[0] = {1};
  for (int i = 1; i <= m; ++i) {
    cp[i] = poly::mul(F, cp[i - 1], h.num());
    dp[i] = poly::mul(F, dp[i - 1], h.den());
  }
  auto homogenize = [&](const Poly& a) {
    Poly r;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
      if (a[i]) r = poly::add(F, r, poly::scale(F, poly::mul(F, cp[i], dp[m - i]), a[i]));
    return r;
  };
  return RatFunc(g.field(), homogenize(g.num()), homogenize(g.den()));
}

RatFunc coeff_frobenius(const RatFunc& f, const Field& base) {
  const Field& F = *f.field();
  auto apply = [&](const Poly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.frobenius(a[i], 1, base);
    return r;
  };
  return RatFunc(f.field(), apply(f.num()), apply(f.den()));
}

bool canonical_less(const RatFunc& a, const RatFunc& b) {
  std::size_t ta = a.term_count(), tb = b.term_count();
  if (ta != tb) return ta < tb;
  const Field& F = *a.field();
  std::size_t len = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
  auto key = [&](const RatFunc& f) {
    std::vector<std::uint32_t> k;
    k.reserve(2 * len);
    for (std::size_t i = 0; i < len; ++i) k.push_back(i < f.num().size() ? F.rank(f.num()[i]) : 0);
    for (std::size_t i = 0; i < len; ++i) k.push_back(i < f.den().size() ? F.rank(f.den()[i]) : 0);
    return k;
  };
  return key(a) < key(b);
}

}  // namespace prf
