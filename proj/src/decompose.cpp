#include <stdexcept>

#include "prf/ratfunc.hpp"

namespace prf {

namespace {

// Basis of {v : M v = 0} for M given by its columns.
std::vector<std::vector<Elt>> nullspace(const Field& F, const std::vector<Poly>& columns) {
  std::size_t ncols = columns.size();
  std::size_t nrows = 0;
  for (const auto& c : columns) nrows = std::max(nrows, c.size());
  std::vector<std::vector<Elt>> m(nrows, std::vector<Elt>(ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) m[i][j] = columns[j][i];

  std::vector<int> pivot_of_col(ncols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t piv = row;
    while (piv < nrows && !m[piv][col]) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[row]);
    Elt s = F.inv(m[row][col]);
    for (auto& e : m[row]) e = F.mul(e, s);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row || !m[r][col]) continue;
      Elt t = m[r][col];
      for (std::size_t k = 0; k < ncols; ++k) m[r][k] = F.sub(m[r][k], F.mul(t, m[row][k]));
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  std::vector<std::vector<Elt>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Elt> v(ncols, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < ncols; ++col)
      if (pivot_of_col[col] >= 0) v[col] = F.neg(m[pivot_of_col[col]][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<RatFunc> left_component_witness(const RatFunc& h, const RatFunc& f) {
  if (h.field() != f.field()) throw std::invalid_argument("left_component: different fields");
  int dh = h.degree(), df = f.degree();
  if (dh < 2) throw std::invalid_argument("left_component: deg h must be at least 2");
  if (df % dh != 0) throw std::invalid_argument("left_component: deg h does not divide deg f");
  const Field& F = *f.field();
  int m = df / dh;

  std::vector<Poly> cp(m + 1), dp(m + 1);
  cp[0] = dp[0] = {1};
  for (int i = 1; i <= m; ++i) {
    cp[i] = poly::mul(F, cp[i - 1], h.num());
    dp[i] = poly::mul(F, dp[i - 1], h.den());
  }
  // Unknowns a_0..a_m, b_0..b_m of g = A/B:  A(h)·den f - B(h)·num f = 0.
  std::vector<Poly> columns;
  for (int i = 0; i <= m; ++i) columns.push_back(poly::mul(F, poly::mul(F, cp[i], dp[m - i]), f.den()));
  for (int i = 0; i <= m; ++i)
    columns.push_back(poly::neg(F, poly::mul(F, poly::mul(F, cp[i], dp[m - i]), f.num())));

  for (const auto& v : nullspace(F, columns)) {
    Poly a(v.begin(), v.begin() + m + 1), b(v.begin() + m + 1, v.end());
    poly::trim(a);
    poly::trim(b);
    if (b.empty()) continue;
    RatFunc g(f.field(), a, b);
    if (g.degree() == m && compose(g, h) == f) return g;
  }
  return std::nullopt;
}

bool is_left_component(const RatFunc& h, const RatFunc& f) { return left_component_witness(h, f).has_value(); }

}  // namespace prf
