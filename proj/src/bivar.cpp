#include <stdexcept>

#include "prf/ratfunc.hpp"

namespace prf {

BivarPoly::BivarPoly(FieldPtr field, std::vector<std::vector<Elt>> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void BivarPoly::trim() {
  for (auto& row : c_) poly::trim(row);
  while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BivarPoly BivarPoly::in_x(FieldPtr field, const Poly& p) {
  std::vector<std::vector<Elt>> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c[i] = poly::constant(p[i]);
  return BivarPoly(std::move(field), std::move(c));
}

BivarPoly BivarPoly::in_y(FieldPtr field, const Poly& p) { return BivarPoly(std::move(field), {p}); }

Elt BivarPoly::coeff(std::size_t i, std::size_t j) const {
  if (i >= c_.size() || j >= c_[i].size()) return 0;
  return c_[i][j];
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("bivariate polynomials over different fields");
  std::vector<std::vector<Elt>> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = poly::add(*field_, i < c_.size() ? c_[i] : Poly{}, i < o.c_.size() ? o.c_[i] : Poly{});
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + o.scaled(field_->neg(1)); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("bivariate polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return BivarPoly(field_, {});
  std::vector<std::vector<Elt>> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      r[i + k] = poly::add(*field_, r[i + k], poly::mul(*field_, c_[i], o.c_[k]));
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::scaled(Elt c) const {
  std::vector<std::vector<Elt>> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = poly::scale(*field_, c_[i], c);
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::swapped() const {
  std::size_t ny = 0;
  for (auto& row : c_) ny = std::max(ny, row.size());
  std::vector<std::vector<Elt>> r(ny, std::vector<Elt>(c_.size(), 0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j) r[j][i] = c_[i][j];
  return BivarPoly(field_, std::move(r));
}

BivarPoly BivarPoly::over(const FieldPtr& ext) const {
  if (!ext->lies_over(*field_)) throw std::invalid_argument("BivarPoly::over: not an extension in the tower");
  return BivarPoly(ext, c_);
}

BivarPoly BivarPoly::normalized() const {
  if (c_.empty()) return *this;
  return scaled(field_->inv(c_.back().back()));
}

bool equal_up_to_scalar(const BivarPoly& a, const BivarPoly& b) { return a.normalized() == b.normalized(); }

bool divides(const BivarPoly& h, const BivarPoly& g) {
  if (h.field() != g.field()) throw std::invalid_argument("bivariate polynomials over different fields");
  if (h.is_zero()) return g.is_zero();
  const Field& F = *h.field();
  auto r = g.coeffs();
  const auto& hc = h.coeffs();
  std::size_t hd = hc.size() - 1;
  const Poly& lc = hc.back();
  while (!r.empty() && r.size() > hd) {
    auto [qy, rem] = poly::divmod(F, r.back(), lc);
    if (!rem.empty()) return false;
    std::size_t shift = r.size() - 1 - hd;
    for (std::size_t i = 0; i < hc.size(); ++i) r[shift + i] = poly::sub(F, r[shift + i], poly::mul(F, qy, hc[i]));
    while (!r.empty() && r.back().empty()) r.pop_back();
  }
  return r.empty();
}

BivarPoly difference_numerator(const RatFunc& f) {
  const auto& F = f.field();
  auto ax = BivarPoly::in_x(F, f.num()), ay = BivarPoly::in_y(F, f.num());
  auto bx = BivarPoly::in_x(F, f.den()), by = BivarPoly::in_y(F, f.den());
  return (ax * by - ay * bx).normalized();
}

}  // namespace prf
