#include "prf/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace prf::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly constant(Elt c) { return c ? Poly{c} : Poly{}; }

Poly monomial(Elt c, unsigned e) {
  if (!c) return {};
  Poly r(e + 1, 0);
  r[e] = c;
  return r;
}

Poly x() { return {0, 1}; }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elt u = i < a.size() ? a[i] : 0;
    Elt v = i < b.size() ? b[i] : 0;
    r[i] = F.add(u, v);
  }
  trim(r);
  return r;
}

Poly neg(const Field& F, const Poly& a) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.neg(a[i]);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elt u = i < a.size() ? a[i] : 0;
    Elt v = i < b.size() ? b[i] : 0;
    r[i] = F.sub(u, v);
  }
  trim(r);
  return r;
}

Poly scale(const Field& F, const Poly& a, Elt c) {
  if (!c) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  Elt inv_lead = F.inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    Elt c = r[i];
    if (!c) continue;
    c = F.mul(c, inv_lead);
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }
Poly quo(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).first; }

Poly monic(const Field& F, const Poly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  trim(u);
  trim(v);
  while (!v.empty()) {
    Poly r = rem(F, u, v);
    u = std::move(v);
    v = std::move(r);
  }
  return monic(F, u);
}

Poly derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), a[i]);
  trim(r);
  return r;
}

Elt eval(const Field& F, const Poly& a, Elt x) {
  Elt r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

Poly compose(const Field& F, const Poly& a, const Poly& b) {
  Poly r;
  for (std::size_t i = a.size(); i-- > 0;) r = add(F, mul(F, r, b), constant(a[i]));
  return r;
}

Poly powmod(const Field& F, const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = rem(F, constant(1), m);
  Poly b = rem(F, base, m);
  while (e) {
    if (e & 1) result = rem(F, mul(F, result, b), m);
    e >>= 1;
    if (e) b = rem(F, mul(F, b, b), m);
  }
  return result;
}

Poly pow(const Field& F, const Poly& base, unsigned e) {
  Poly result = constant(1);
  Poly b = base;
  while (e) {
    if (e & 1) result = mul(F, result, b);
    e >>= 1;
    if (e) b = mul(F, b, b);
  }
  return result;
}

Poly pth_root(const Field& F, const Poly& a) {
  unsigned p = F.characteristic();
  if (a.empty()) return {};
  Poly r(deg(a) / p + 1, 0);
  std::uint64_t root_exp = F.size() / p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (i % p) throw std::invalid_argument("pth_root: polynomial is not a p-th power");
    r[i / p] = F.pow(a[i], root_exp);
  }
  trim(r);
  return r;
}

Poly radical(const Field& F, const Poly& a) {
  Poly f = monic(F, a);
  if (deg(f) <= 0) return {1};
  Poly d = derivative(F, f);
  if (d.empty()) return radical(F, pth_root(F, f));
  Poly g = gcd(F, f, d);
  Poly w = quo(F, f, g);
  if (deg(g) == 0) return w;
  Poly r = radical(F, g);
  Poly common = gcd(F, w, r);
  return monic(F, quo(F, mul(F, w, r), common));
}

bool is_squarefree(const Field& F, const Poly& a) {
  if (deg(a) <= 0) return true;
  Poly d = derivative(F, a);
  if (d.empty()) return false;
  return deg(gcd(F, a, d)) == 0;
}

bool is_irreducible(const Field& F, const Poly& f_in) {
  Poly f = monic(F, f_in);
  int n = deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  std::vector<Poly> frob(n + 1);
  frob[0] = x();
  for (int i = 1; i <= n; ++i) frob[i] = powmod(F, frob[i - 1], F.size(), f);
  if (frob[n] != rem(F, x(), f)) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly h = sub(F, frob[n / r], x());
    if (deg(gcd(F, h, f)) != 0) return false;
  }
  return true;
}

std::vector<std::pair<unsigned, Poly>> distinct_degree(const Field& F, const Poly& f_in) {
  std::vector<std::pair<unsigned, Poly>> out;
  Poly f = monic(F, f_in);
  Poly h = x();
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(std::max(0, deg(f))); ++d) {
    h = powmod(F, h, F.size(), f);
    Poly g = gcd(F, sub(F, h, x()), f);
    if (deg(g) > 0) {
      out.emplace_back(d, g);
      f = quo(F, f, g);
      h = rem(F, h, f);
    }
  }
  if (deg(f) > 0) out.emplace_back(static_cast<unsigned>(deg(f)), f);
  return out;
}

namespace {

void split_linear(const Field& E, const Poly& g, std::mt19937_64& rng, std::vector<Elt>& out) {
  int n = deg(g);
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(E.neg(E.div(g[0], g[1])));
    return;
  }
  std::uniform_int_distribution<std::uint32_t> pick(0, E.size() - 1);
  for (;;) {
    Elt a = pick(rng);
    Poly t;
    if (E.characteristic() == 2) {
      Poly u = rem(E, Poly{0, a ? a : 1}, g);
      t = u;
      for (unsigned i = 1; i < E.degree(); ++i) {
        u = rem(E, mul(E, u, u), g);
        t = add(E, t, u);
      }
    } else {
      t = sub(E, powmod(E, Poly{a, 1}, (E.size() - 1) / 2, g), constant(1));
    }
    Poly h = gcd(E, g, t);
    if (deg(h) > 0 && deg(h) < n) {
      split_linear(E, h, rng, out);
      split_linear(E, quo(E, g, h), rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Elt> roots(const Field& E, const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Elt> out;
  if (deg(f) == 0) return out;
  if (E.size() <= 256) {
    for (Elt v = 0; v < E.size(); ++v)
      if (eval(E, f, v) == 0) out.push_back(v);
  } else {
    f = monic(E, f);
    Poly h = powmod(E, x(), E.size(), f);
    Poly g = gcd(E, sub(E, h, x()), f);
    std::mt19937_64 rng(0x5eed);
    split_linear(E, g, rng, out);
  }
  std::sort(out.begin(), out.end(), [&](Elt a, Elt b) { return E.less(a, b); });
  return out;
}

std::size_t term_count(const Poly& a) {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](Elt c) { return c != 0; }));
}

}  // namespace prf::poly
