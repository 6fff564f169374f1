#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "prf/field.hpp"
#include "prf/poly.hpp"

using namespace prf;

namespace {

Poly random_poly(std::mt19937_64& rng, const Field& F, int max_deg) {
  std::uniform_int_distribution<Elt> c(0, F.size() - 1);
  std::uniform_int_distribution<int> d(-1, max_deg);
  Poly p(d(rng) + 1);
  for (auto& x : p) x = c(rng);
  poly::trim(p);
  return p;
}

// Number of monic irreducibles of degree d over F_q by Moebius inversion.
std::uint64_t necklace(std::uint64_t q, unsigned d) {
  auto mobius = [](unsigned n) {
    int m = 1;
    for (unsigned p = 2; p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    return m;
  };
  long long s = 0;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) {
      long long t = 1;
      for (unsigned i = 0; i < e; ++i) t *= static_cast<long long>(q);
      s += mobius(d / e) * t;
    }
  return static_cast<std::uint64_t>(s / d);
}

}  // namespace

TEST_CASE("trim, degree and constructors") {
  Poly p{1, 2, 0, 0};
  poly::trim(p);
  CHECK(p == Poly{1, 2});
  CHECK(poly::deg(Poly{}) == -1);
  CHECK(poly::monomial(3, 2) == Poly{0, 0, 3});
  CHECK(poly::monomial(0, 5).empty());
  CHECK(poly::constant(0).empty());
  CHECK(poly::x() == Poly{0, 1});
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2, 3, 4, 9, 25}) {
    auto F = Field::of_order(q);
    const Field& K = *F;
    for (int it = 0; it < 60; ++it) {
      Poly a = random_poly(rng, K, 6), b = random_poly(rng, K, 5), c = random_poly(rng, K, 4);
      CHECK(poly::add(K, a, b) == poly::add(K, b, a));
      CHECK(poly::mul(K, a, b) == poly::mul(K, b, a));
      CHECK(poly::mul(K, a, poly::add(K, b, c)) == poly::add(K, poly::mul(K, a, b), poly::mul(K, a, c)));
      CHECK(poly::sub(K, a, a).empty());
      if (!b.empty()) {
        auto [qq, r] = poly::divmod(K, a, b);
        CHECK(poly::deg(r) < poly::deg(b));
        CHECK(poly::add(K, poly::mul(K, qq, b), r) == a);
      }
      Poly g = poly::gcd(K, a, b);
      if (!g.empty()) {
        CHECK(poly::lead(g) == 1);
        CHECK(poly::rem(K, a, g).empty());
        CHECK(poly::rem(K, b, g).empty());
      }
      Elt x = static_cast<Elt>(rng() % q);
      CHECK(poly::eval(K, poly::mul(K, a, b), x) == K.mul(poly::eval(K, a, x), poly::eval(K, b, x)));
      CHECK(poly::eval(K, poly::compose(K, a, b), x) == poly::eval(K, a, poly::eval(K, b, x)));
    }
  }
}

TEST_CASE("derivative, pth root, powmod") {
  auto F = Field::of_order(9);
  const Field& K = *F;
  CHECK(poly::derivative(K, Poly{1, 1, 1, 1}) == Poly{1, 2});  // X^3 term vanishes
  Poly b{2, 1, 5};
  Poly b3 = poly::pow(K, b, 3);
  CHECK(poly::derivative(K, b3).empty());
  CHECK(poly::pth_root(K, b3) == b);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    Poly m = random_poly(rng, K, 5), base = random_poly(rng, K, 6);
    if (poly::deg(m) < 1) continue;
    Poly slow = poly::constant(1);
    for (int e = 0; e < 13; ++e) slow = poly::rem(K, poly::mul(K, slow, base), m);
    CHECK(poly::powmod(K, base, 13, m) == slow);
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    auto F = Field::of_order(q);
    const Field& K = *F;
    for (unsigned d = 1; d <= 4; ++d) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < d; ++i) total *= q;
      std::uint64_t count = 0;
      for (std::uint64_t code = 0; code < total; ++code) {
        Poly f(d + 1);
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i, c /= q) f[i] = static_cast<Elt>(c % q);
        f[d] = 1;
        count += poly::is_irreducible(K, f);
      }
      CHECK_MESSAGE(count == necklace(q, d), "q=" << q << " d=" << d);
    }
  }
}

TEST_CASE("distinct degree factorization and roots") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {3, 4, 7}) {
    auto F = Field::of_order(q);
    const Field& K = *F;
    for (int it = 0; it < 40; ++it) {
      Poly f = poly::monic(K, random_poly(rng, K, 7));
      if (poly::deg(f) < 1 || !poly::is_squarefree(K, f)) continue;
      Poly prod = poly::constant(1);
      for (const auto& [d, part] : poly::distinct_degree(K, f)) {
        CHECK(poly::deg(part) % static_cast<int>(d) == 0);
        prod = poly::mul(K, prod, part);
      }
      CHECK(prod == f);
      std::vector<Elt> brute;
      for (Elt x = 0; x < q; ++x)
        if (poly::eval(K, f, x) == 0) brute.push_back(x);
      auto rts = poly::roots(K, f);
      std::sort(brute.begin(), brute.end(), [&](Elt a, Elt b) { return K.less(a, b); });
      CHECK(rts == brute);
    }
  }
}

TEST_CASE("radical and squarefree") {
  auto F = Field::of_order(5);
  const Field& K = *F;
  Poly a{1, 1};        // X + 1
  Poly b{2, 0, 1};     // X^2 + 2
  Poly f = poly::mul(K, poly::pow(K, a, 3), b);
  CHECK(!poly::is_squarefree(K, f));
  CHECK(poly::radical(K, f) == poly::mul(K, a, b));
  CHECK(poly::is_squarefree(K, poly::mul(K, a, b)));
  CHECK(poly::term_count(Poly{0, 1, 0, 3}) == 2);
}
