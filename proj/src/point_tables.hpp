#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "prf/ratfunc.hpp"

namespace prf::detail {

// Points of P^1(F_q) are indexed 0..q with q standing for infinity.
inline std::uint32_t point_index(const ProjPoint& p, std::uint32_t q) { return p.infinite ? q : p.value; }
inline ProjPoint index_point(std::uint32_t i, std::uint32_t q) {
  return i == q ? ProjPoint::inf() : ProjPoint::at(i);
}

inline std::vector<std::uint32_t> value_table(const RatFunc& f) {
  std::uint32_t q = f.field()->size();
  std::vector<std::uint32_t> v(q + 1);
  for (std::uint32_t i = 0; i <= q; ++i) v[i] = point_index(f(index_point(i, q)), q);
  return v;
}

inline std::uint32_t apply_index(const Field& F, const std::array<Elt, 4>& m, std::uint32_t i) {
  std::uint32_t q = F.size();
  return point_index(apply_matrix(F, m[0], m[1], m[2], m[3], index_point(i, q)), q);
}

// Matrix sending 0, 1, inf to the given distinct point indices.
inline std::array<Elt, 4> triple_matrix(const Field& F, std::uint32_t x0, std::uint32_t x1, std::uint32_t xi) {
  std::uint32_t q = F.size();
  if (xi == q) return {F.sub(x1, x0), x0, 0, 1};
  if (x0 == q) return {xi, F.sub(x1, xi), 1, 0};
  if (x1 == q) return {xi, F.neg(x0), 1, F.neg(1)};
  Elt d10 = F.sub(x1, x0), di1 = F.sub(xi, x1);
  return {F.mul(xi, d10), F.mul(x0, di1), d10, di1};
}

}  // namespace prf::detail
