#include "prf/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace prf {

namespace {

std::array<Elt, 4> normalize_matrix(const Field& F, std::array<Elt, 4> m) {
  Elt det = F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
  if (!det) throw std::invalid_argument("singular Moebius matrix");
  for (Elt e : m) {
    if (e) {
      Elt s = F.inv(e);
      for (auto& x : m) x = F.mul(x, s);
      break;
    }
  }
  return m;
}

// Matrix of a map sending z1 -> 0, z2 -> 1, z3 -> infinity.
std::array<Elt, 4> to_standard(const Field& F, const std::array<ProjPoint, 3>& z) {
  if (z[0] == z[1] || z[0] == z[2] || z[1] == z[2]) throw std::invalid_argument("repeated point in triple");
  const auto& [z1, z2, z3] = z;
  if (z1.infinite) return {0, F.sub(z2.value, z3.value), 1, F.neg(z3.value)};
  if (z2.infinite) return {1, F.neg(z1.value), 1, F.neg(z3.value)};
  if (z3.infinite) return {1, F.neg(z1.value), 0, F.sub(z2.value, z1.value)};
  Elt u = F.sub(z2.value, z3.value);
  Elt v = F.sub(z2.value, z1.value);
  return {u, F.neg(F.mul(z1.value, u)), v, F.neg(F.mul(z3.value, v))};
}

std::array<Elt, 4> matmul(const Field& F, const std::array<Elt, 4>& x, const std::array<Elt, 4>& y) {
  return {F.add(F.mul(x[0], y[0]), F.mul(x[1], y[2])), F.add(F.mul(x[0], y[1]), F.mul(x[1], y[3])),
          F.add(F.mul(x[2], y[0]), F.mul(x[3], y[2])), F.add(F.mul(x[2], y[1]), F.mul(x[3], y[3]))};
}

std::array<Elt, 4> adjugate(const Field& F, const std::array<Elt, 4>& m) {
  return {m[3], F.neg(m[1]), F.neg(m[2]), m[0]};
}

}  // namespace

ProjPoint apply_matrix(const Field& F, Elt a, Elt b, Elt c, Elt d, ProjPoint x) {
  if (x.infinite) return c ? ProjPoint::at(F.div(a, c)) : ProjPoint::inf();
  Elt den = F.add(F.mul(c, x.value), d);
  if (!den) return ProjPoint::inf();
  return ProjPoint::at(F.div(F.add(F.mul(a, x.value), b), den));
}

Moebius Moebius::identity(FieldPtr field) { return Moebius(std::move(field), {1, 0, 0, 1}); }

Moebius Moebius::from_matrix(FieldPtr field, Elt a, Elt b, Elt c, Elt d) {
  auto m = normalize_matrix(*field, {a, b, c, d});
  return Moebius(std::move(field), m);
}

std::optional<Moebius> Moebius::from_ratfunc(const RatFunc& f) {
  if (f.degree() != 1) return std::nullopt;
  auto at = [](const Poly& p, std::size_t i) { return i < p.size() ? p[i] : Elt{0}; };
  return from_matrix(f.field(), at(f.num(), 1), at(f.num(), 0), at(f.den(), 1), at(f.den(), 0));
}

Moebius Moebius::from_triple(FieldPtr field, const std::array<ProjPoint, 3>& src,
                             const std::array<ProjPoint, 3>& dst) {
  const Field& F = *field;
  auto s = to_standard(F, src);
  auto t = to_standard(F, dst);
  return Moebius(field, normalize_matrix(F, matmul(F, adjugate(F, t), s)));
}

std::uint64_t Moebius::group_order(const Field& F) {
  std::uint64_t q = F.size();
  return q * q * q - q;
}

std::vector<Moebius> Moebius::all(FieldPtr field) {
  std::vector<Moebius> out;
  out.reserve(group_order(*field));
  for_each_matrix(*field, [&](Elt a, Elt b, Elt c, Elt d) { out.push_back(Moebius(field, {a, b, c, d})); });
  return out;
}

ProjPoint Moebius::operator()(ProjPoint x) const { return apply_matrix(*field_, m_[0], m_[1], m_[2], m_[3], x); }

Moebius Moebius::operator*(const Moebius& other) const {
  if (field_ != other.field_) throw std::invalid_argument("Moebius maps over different fields");
  return Moebius(field_, normalize_matrix(*field_, matmul(*field_, m_, other.m_)));
}

Moebius Moebius::inverse() const { return Moebius(field_, normalize_matrix(*field_, adjugate(*field_, m_))); }

RatFunc Moebius::to_ratfunc() const { return RatFunc(field_, {m_[1], m_[0]}, {m_[3], m_[2]}); }

Moebius Moebius::over(const FieldPtr& ext) const {
  if (!ext->lies_over(*field_)) throw std::invalid_argument("Moebius::over: not an extension in the tower");
  return Moebius(ext, m_);
}

std::optional<Moebius> Moebius::descend(const FieldPtr& sub) const {
  if (!field_->lies_over(*sub)) throw std::invalid_argument("Moebius::descend: not a tower subfield");
  for (Elt e : m_)
    if (e >= sub->size()) return std::nullopt;
  return Moebius(sub, m_);
}

bool Moebius::is_identity() const { return m_ == std::array<Elt, 4>{1, 0, 0, 1}; }

bool moebius_less(const Moebius& a, const Moebius& b) {
  const Field& F = *a.field();
  for (int i = 0; i < 4; ++i) {
    auto ra = F.rank(a.entries()[i]), rb = F.rank(b.entries()[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

RatFunc compose(const Moebius& mu, const RatFunc& f) {
  if (mu.field() != f.field()) throw std::invalid_argument("compose: different fields");
  const Field& F = *f.field();
  const auto& m = mu.entries();
  // (a num + b den)/(c num + d den) is already coprime since ad - bc != 0.
  Poly num = poly::add(F, poly::scale(F, f.num(), m[0]), poly::scale(F, f.den(), m[1]));
  Poly den = poly::add(F, poly::scale(F, f.num(), m[2]), poly::scale(F, f.den(), m[3]));
  return RatFunc(f.field(), std::move(num), std::move(den));
}
RatFunc compose(const RatFunc& f, const Moebius& nu) { return compose(f, nu.to_ratfunc()); }

}  // namespace prf
