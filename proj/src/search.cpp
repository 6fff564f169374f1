#include <algorithm>
#include <stdexcept>

#include "prf/classify.hpp"
#include "prf/errors.hpp"
#include "prf/parallel.hpp"
#include "prf/permtest.hpp"

namespace prf {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw VerificationFailure(std::string("search normal form: ") + what);
}

bool has_root(const Field& F, const Poly& a) {
  for (Elt x = 0; x < F.size(); ++x)
    if (poly::eval(F, a, x) == 0) return true;
  return false;
}

void require_search_budget(std::uint64_t q, unsigned n, bool extended) {
  if (n < 1 || n > 4) throw std::invalid_argument("search: degree must be 1..4");
  std::uint64_t cap = (n == 4 && !extended) ? 27 : 81;
  if (q > cap) throw BudgetExceeded("search: q beyond the configured search range");
}

// Monic polynomials X^d + ... with the X^(d-1) term removed when p does not
// divide d, and no root in F_q.
std::vector<Poly> slice_denominators(const Field& F, unsigned n) {
  std::vector<Poly> out{{1}};
  const Elt q = F.size();
  for (unsigned d = 2; d + 1 <= n; ++d) {
    bool traceless = d % F.characteristic() != 0;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      Poly b(d + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i, c /= q) b[i] = static_cast<Elt>(c % q);
      b[d] = 1;
      if (traceless && b[d - 1] != 0) continue;
      if (!has_root(F, b)) out.push_back(std::move(b));
    }
  }
  return out;
}

// X^n + c X^(n-1) + ... + c_1 X with c in {0, 1}.
std::vector<Poly> slice_numerators(const Field& F, unsigned n) {
  if (n == 1) return {{0, 1}};
  const Elt q = F.size();
  std::vector<Poly> out;
  std::uint64_t middle = 1;
  for (unsigned i = 1; i + 1 < n; ++i) middle *= q;
  for (Elt top = 0; top < 2; ++top)
    for (std::uint64_t code = 0; code < middle; ++code) {
      Poly a(n + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 1; i + 1 < n; ++i, c /= q) a[i] = static_cast<Elt>(c % q);
      a[n - 1] = top;
      a[n] = 1;
      out.push_back(std::move(a));
    }
  return out;
}

// Discrete log tables over F_q^*.
struct LogTables {
  std::vector<std::uint32_t> exp, log;
  explicit LogTables(const Field& F) {
    const Elt q = F.size();
    log.assign(q, 0);
    for (Elt g = 1; g < q; ++g) {
      exp.assign(2 * (q - 1), 0);
      Elt x = 1;
      bool primitive = true;
      for (Elt i = 0; i < q - 1; ++i) {
        if (i > 0 && x == 1) {
          primitive = false;
          break;
        }
        exp[i] = exp[i + q - 1] = x;
        x = F.mul(x, g);
      }
      if (primitive && x == 1) break;
    }
    for (Elt i = 0; i < q - 1; ++i) log[exp[i]] = i;
  }
};

}  // namespace

bool in_search_slice(const RatFunc& f) {
  const Field& F = *f.field();
  const int n = f.degree();
  const Poly& a = f.num();
  const Poly& b = f.den();
  const int d = poly::deg(b);
  if (n < 1 || poly::deg(a) != n || d >= n) return false;
  if (a.back() != 1 || a[0] != 0) return false;
  if (n >= 2 && a[n - 1] > 1) return false;
  for (Elt x = 1; x < F.size(); ++x)
    if (poly::eval(F, a, x) == 0) return false;
  if (d == 1) return false;
  if (d >= 2) {
    if (has_root(F, b)) return false;
    if (d % static_cast<int>(F.characteristic()) != 0 && b[d - 1] != 0) return false;
  }
  return true;
}

std::pair<RatFunc, MoebiusPair> search_normal_form(const RatFunc& f) {
  if (f.degree() < 1 || !is_permutation(f)) throw std::invalid_argument("search_normal_form: f must be a permutation");
  const FieldPtr& Fp = f.field();
  const Field& F = *Fp;
  const int n = f.degree();
  const ProjPoint inf = ProjPoint::inf(), zero = ProjPoint::at(0);
  Moebius mu = Moebius::identity(Fp), nu = Moebius::identity(Fp);
  RatFunc g = f;
  auto post = [&](const Moebius& m) {
    g = compose(m, g);
    mu = m * mu;
  };
  auto pre = [&](const Moebius& m) {
    g = compose(g, m);
    nu = nu * m;
  };

  ProjPoint y = g(inf);
  if (!y.infinite) post(Moebius::from_matrix(Fp, 0, 1, 1, F.neg(y.value)));
  check(g(inf).infinite, "infinity not fixed");
  post(Moebius::from_matrix(Fp, 1, F.neg(g(zero).value), 0, 1));
  check(g(zero) == zero && g(inf).infinite, "zero not fixed");

  int d = poly::deg(g.den());
  check(d != 1, "denominator of degree one");
  if (d >= 2 && d % static_cast<int>(F.characteristic()) != 0) {
    Elt c = F.neg(F.div(g.den()[d - 1], F.from_int(d)));
    pre(Moebius::from_matrix(Fp, 1, c, 0, 1));
    post(Moebius::from_matrix(Fp, 1, F.neg(g(zero).value), 0, 1));
    check(g.den()[d - 1] == 0 && g(zero) == zero && g(inf).infinite, "trace removal");
  }
  post(Moebius::from_matrix(Fp, F.inv(g.num().back()), 0, 0, 1));
  check(g.num().back() == 1, "numerator not monic");
  if (n >= 2 && g.num()[n - 1] != 0) {
    Elt lambda = g.num()[n - 1];
    pre(Moebius::from_matrix(Fp, lambda, 0, 0, 1));
    post(Moebius::from_matrix(Fp, F.inv(g.num().back()), 0, 0, 1));
    check(g.num()[n - 1] == 1 && g.num().back() == 1, "X^(n-1) coefficient");
  }
  check(in_search_slice(g), "result outside the slice");
  check(compose(mu, compose(f, nu)) == g, "witness");
  return {g, {mu, nu}};
}

std::vector<RatFunc> search_candidates(const FieldPtr& Fp, unsigned n, bool extended) {
  const Field& F = *Fp;
  const Elt q = F.size();
  require_search_budget(q, n, extended);
  auto nums = slice_numerators(F, n);
  auto dens = slice_denominators(F, n);
  LogTables lt(F);
  const std::uint32_t zero_log = 0xffffffffu;

  // Log of a(x) for x in F_q^*, zero_log marking a root.
  std::vector<std::uint32_t> num_logs(nums.size() * q);
  for (std::size_t i = 0; i < nums.size(); ++i)
    for (Elt x = 1; x < q; ++x) {
      Elt v = poly::eval(F, nums[i], x);
      num_logs[i * q + x] = v ? lt.log[v] : zero_log;
    }

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(std::max(1u, worker_count()));
  parallel_for(dens.size(), [&](std::size_t begin, std::size_t end, unsigned w) {
    std::vector<std::uint32_t> den_neg_log(q), stamp(q, 0);
    std::uint32_t cur = 0;
    for (std::size_t j = begin; j < end; ++j) {
      for (Elt x = 1; x < q; ++x) den_neg_log[x] = (q - 1 - lt.log[poly::eval(F, dens[j], x)]) % (q - 1);
      for (std::size_t i = 0; i < nums.size(); ++i) {
        if (++cur == 0) {
          std::fill(stamp.begin(), stamp.end(), 0);
          cur = 1;
        }
        stamp[0] = cur;
        const std::uint32_t* nl = &num_logs[i * q];
        bool ok = true;
        for (Elt x = 1; x < q; ++x) {
          if (nl[x] == zero_log) {
            ok = false;
            break;
          }
          Elt v = lt.exp[nl[x] + den_neg_log[x]];
          if (stamp[v] == cur) {
            ok = false;
            break;
          }
          stamp[v] = cur;
        }
        if (ok) found[w].emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  });

  std::vector<RatFunc> out;
  for (const auto& part : found)
    for (auto [i, j] : part) {
      if (poly::deg(poly::gcd(F, nums[i], dens[j])) > 0) continue;
      out.emplace_back(Fp, nums[i], dens[j]);
    }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SearchClass> search(const FieldPtr& Fp, unsigned n, bool extended) {
  auto cands = search_candidates(Fp, n, extended);
  struct Bucket {
    RatFunc rep;
    std::vector<std::vector<int>> sig;
    std::size_t members;
  };
  std::vector<Bucket> buckets;
  for (const auto& f : cands) {
    auto sig = fiber_signature(f);
    bool merged = false;
    for (auto& b : buckets) {
      if (b.sig != sig) continue;
      if (equivalence_witness(b.rep, f)) {
        ++b.members;
        merged = true;
        break;
      }
    }
    if (!merged) buckets.push_back({f, std::move(sig), 1});
  }

  const std::uint64_t order = Moebius::group_order(*Fp);
  std::vector<SearchClass> out;
  for (const auto& b : buckets) {
    auto cls = classify(b.rep);
    if (!cls) throw VerificationFailure("search produced a non-permutation");
    std::uint64_t stab = stabilizer(b.rep).size();
    if ((order * order) % stab != 0) throw VerificationFailure("stabilizer size does not divide |PGL_2|^2");
    out.push_back({b.rep, *cls, stab, order * order / stab, b.members});
  }
  return out;
}

}  // namespace prf
