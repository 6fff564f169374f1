#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "prf/field.hpp"
#include "prf/poly.hpp"

namespace prf {

constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Point of P^1 over some field: a finite element or infinity.
struct ProjPoint {
  Elt value = 0;
  bool infinite = false;

  static ProjPoint inf() { return {0, true}; }
  static ProjPoint at(Elt v) { return {v, false}; }
  bool operator==(const ProjPoint&) const = default;
};

// Finite points by canonical element order, infinity last.
bool point_less(const Field& F, const ProjPoint& a, const ProjPoint& b);

// a/b with gcd(a, b) = 1 and b monic. The zero function is 0/1.
class RatFunc {
 public:
  RatFunc(FieldPtr field, Poly num, Poly den);

  static RatFunc identity(FieldPtr field);
  static RatFunc constant(FieldPtr field, Elt c);
  static RatFunc polynomial(FieldPtr field, Poly p);

  const FieldPtr& field() const noexcept { return field_; }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  int degree() const noexcept;
  bool is_constant() const noexcept { return degree() <= 0; }
  bool is_polynomial() const noexcept { return den_.size() == 1; }
  std::size_t term_count() const { return poly::term_count(num_) + poly::term_count(den_); }

  ProjPoint operator()(ProjPoint x) const { return eval_in(*field_, x); }
  // x lies in E, an extension of field().
  ProjPoint eval_in(const Field& E, ProjPoint x) const;

  // Same function viewed over an extension in the tower.
  RatFunc over(const FieldPtr& ext) const;
  // Same function over a tower subfield, if all coefficients lie there.
  std::optional<RatFunc> descend(const FieldPtr& sub) const;

  RatFunc reciprocal() const;

  bool operator==(const RatFunc& o) const {
    return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
  }

 private:
  RatFunc(FieldPtr field, Poly num, Poly den, bool normalized);
  FieldPtr field_;
  Poly num_;
  Poly den_;
};

RatFunc normalize(FieldPtr field, Poly a, Poly b);
RatFunc operator+(const RatFunc& f, const RatFunc& g);
RatFunc operator-(const RatFunc& f, const RatFunc& g);
RatFunc operator*(const RatFunc& f, const RatFunc& g);
RatFunc operator/(const RatFunc& f, const RatFunc& g);
RatFunc operator-(const RatFunc& f);
RatFunc power(const RatFunc& f, long long e);

RatFunc derivative(const RatFunc& f);
bool is_separable(const RatFunc& f);
// g o h
RatFunc compose(const RatFunc& g, const RatFunc& h);
// Applies x -> x^|base| to every coefficient.
RatFunc coeff_frobenius(const RatFunc& f, const Field& base);

// Total order used for canonical representatives: fewest terms, then the
// coefficient tuple (numerator then denominator, constant term first).
bool canonical_less(const RatFunc& a, const RatFunc& b);

// (aX + b)/(cX + d) with ad - bc != 0, scaled so the first nonzero entry of
// (a, b, c, d) is 1.
class Moebius {
 public:
  static Moebius identity(FieldPtr field);
  static Moebius from_matrix(FieldPtr field, Elt a, Elt b, Elt c, Elt d);
  static std::optional<Moebius> from_ratfunc(const RatFunc& f);
  // Unique map with src[i] -> dst[i]; points must be distinct on each side.
  static Moebius from_triple(FieldPtr field, const std::array<ProjPoint, 3>& src,
                             const std::array<ProjPoint, 3>& dst);
  static std::uint64_t group_order(const Field& F);
  static std::vector<Moebius> all(FieldPtr field);

  // Calls fn(a, b, c, d) for every normalized matrix; entries in index order.
  template <class Fn>
  static void for_each_matrix(const Field& F, Fn&& fn);

  const FieldPtr& field() const noexcept { return field_; }
  const std::array<Elt, 4>& entries() const noexcept { return m_; }

  ProjPoint operator()(ProjPoint x) const;
  // this o other
  Moebius operator*(const Moebius& other) const;
  Moebius inverse() const;
  RatFunc to_ratfunc() const;
  Moebius over(const FieldPtr& ext) const;
  std::optional<Moebius> descend(const FieldPtr& sub) const;
  bool is_identity() const;

  bool operator==(const Moebius& o) const { return field_ == o.field_ && m_ == o.m_; }

 private:
  Moebius(FieldPtr field, std::array<Elt, 4> m) : field_(std::move(field)), m_(m) {}
  FieldPtr field_;
  std::array<Elt, 4> m_;
};

bool moebius_less(const Moebius& a, const Moebius& b);
ProjPoint apply_matrix(const Field& F, Elt a, Elt b, Elt c, Elt d, ProjPoint x);

template <class Fn>
void Moebius::for_each_matrix(const Field& F, Fn&& fn) {
  const Elt q = F.size();
  for (Elt b = 0; b < q; ++b)
    for (Elt c = 0; c < q; ++c) {
      Elt bc = F.mul(b, c);
      for (Elt d = 0; d < q; ++d)
        if (d != bc) fn(Elt{1}, b, c, d);
    }
  for (Elt c = 1; c < q; ++c)
    for (Elt d = 0; d < q; ++d) fn(Elt{0}, Elt{1}, c, d);
}

RatFunc compose(const Moebius& mu, const RatFunc& f);
RatFunc compose(const RatFunc& f, const Moebius& nu);

// Polynomial in X and Y; coeffs[i][j] multiplies X^i Y^j.
class BivarPoly {
 public:
  BivarPoly(FieldPtr field, std::vector<std::vector<Elt>> coeffs);
  static BivarPoly in_x(FieldPtr field, const Poly& p);
  static BivarPoly in_y(FieldPtr field, const Poly& p);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<std::vector<Elt>>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Elt coeff(std::size_t i, std::size_t j) const;
  int degree_x() const noexcept { return static_cast<int>(c_.size()) - 1; }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly scaled(Elt c) const;
  BivarPoly swapped() const;
  BivarPoly over(const FieldPtr& ext) const;
  // Scaled so the coefficient of the largest (i, j) is 1.
  BivarPoly normalized() const;
  bool operator==(const BivarPoly& o) const { return field_ == o.field_ && c_ == o.c_; }

 private:
  void trim();
  FieldPtr field_;
  std::vector<std::vector<Elt>> c_;
};

bool equal_up_to_scalar(const BivarPoly& a, const BivarPoly& b);
// Exact divisibility of g by h in F[X, Y].
bool divides(const BivarPoly& h, const BivarPoly& g);

// Numerator of f(X) - f(Y): a(X)b(Y) - a(Y)b(X), normalized.
BivarPoly difference_numerator(const RatFunc& f);

struct BranchPoint {
  unsigned ext_degree;  // minimal m with the point in P^1(F_{q^m})
  FieldPtr field;       // the canonical degree-m extension of F_q
  ProjPoint point;
};

std::vector<BranchPoint> branch_points(const RatFunc& f);

// Some g with f = g o h, if one exists. Requires deg h >= 2 dividing deg f.
std::optional<RatFunc> left_component_witness(const RatFunc& h, const RatFunc& f);
bool is_left_component(const RatFunc& h, const RatFunc& f);

// Moebius mu over F_{q^m} with f o mu = f.
std::vector<Moebius> symmetries(const RatFunc& f, unsigned m, std::uint64_t budget = kDefaultBudget);

}  // namespace prf
