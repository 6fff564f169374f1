#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "prf/families.hpp"
#include "prf/field.hpp"
#include "prf/ratfunc.hpp"
#include "prf/text.hpp"

using namespace prf;

namespace {

RatFunc random_ratfunc(std::mt19937_64& rng, const FieldPtr& F, int max_deg) {
  std::uniform_int_distribution<Elt> c(0, F->size() - 1);
  for (;;) {
    Poly a(max_deg + 1), b(max_deg + 1);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    poly::trim(a);
    poly::trim(b);
    if (b.empty()) continue;
    RatFunc f = normalize(F, a, b);
    if (!f.is_constant()) return f;
  }
}

Moebius random_moebius(std::mt19937_64& rng, const FieldPtr& F) {
  std::uniform_int_distribution<Elt> c(0, F->size() - 1);
  for (;;) {
    Elt a = c(rng), b = c(rng), cc = c(rng), d = c(rng);
    if (F->mul(a, d) != F->mul(b, cc)) return Moebius::from_matrix(F, a, b, cc, d);
  }
}

std::vector<ProjPoint> line(const Field& F) {
  std::vector<ProjPoint> pts;
  for (Elt x = 0; x < F.size(); ++x) pts.push_back(ProjPoint::at(x));
  pts.push_back(ProjPoint::inf());
  return pts;
}

}  // namespace

TEST_CASE("normalize examples") {
  auto F2 = Field::of_order(2), F5 = Field::of_order(5), F7 = Field::of_order(7);
  RatFunc a = normalize(F2, {0, 1, 1}, {0, 1});
  CHECK(a.num() == Poly{1, 1});
  CHECK(a.den() == Poly{1});
  RatFunc b = normalize(F5, {0, 2}, {2});
  CHECK(b.num() == Poly{0, 1});
  CHECK(b.den() == Poly{1});
  RatFunc c = normalize(F7, {0, 3, 0, 0, 1}, {1});
  CHECK(c.num() == Poly{0, 3, 0, 0, 1});
  CHECK(normalize(F7, c.num(), c.den()) == c);
  CHECK_THROWS(normalize(F5, {1}, {}));
  CHECK(RatFunc(F5, {0, 2}, {0, 0, 4}).degree() == 1);
}

TEST_CASE("evaluation on the projective line") {
  auto F3 = Field::of_order(3), F5 = Field::of_order(5), F7 = Field::of_order(7);
  RatFunc inv(F3, {1}, {0, 1});
  CHECK(inv(ProjPoint::at(0)) == ProjPoint::inf());
  CHECK(inv(ProjPoint::inf()) == ProjPoint::at(0));
  RatFunc g(F5, {1, 0, 0, 0, 1}, {0, 0, 1});
  CHECK(g(ProjPoint::inf()) == ProjPoint::inf());
  RatFunc h(F5, {1, 0, 2}, {3, 0, 1});  // equal degrees: leading ratio 2
  CHECK(h(ProjPoint::inf()) == ProjPoint::at(2));
  RatFunc f(F7, {0, 3, 0, 0, 1}, {1});
  std::set<std::pair<bool, Elt>> image;
  for (auto x : line(*F7)) image.insert({f(x).infinite, f(x).value});
  CHECK(image.size() == 8);
}

TEST_CASE("derivative and separability") {
  auto F3 = Field::of_order(3), F5 = Field::of_order(5);
  CHECK(derivative(RatFunc::polynomial(F3, {0, 0, 0, 1})).is_constant());
  CHECK(derivative(RatFunc::polynomial(F3, {0, 0, 0, 1})).num().empty());
  RatFunc f(F5, {1, 0, 1}, {0, 1});  // X + 1/X
  RatFunc d = derivative(f);
  CHECK(d.num() == Poly{4, 0, 1});
  CHECK(d.den() == Poly{0, 0, 1});
  // Separable iff f is not in F_q(X^p).
  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    RatFunc r = random_ratfunc(rng, F3, 4);
    bool in_xp = true;
    for (std::size_t i = 0; i < r.num().size(); ++i) in_xp = in_xp && (r.num()[i] == 0 || i % 3 == 0);
    for (std::size_t i = 0; i < r.den().size(); ++i) in_xp = in_xp && (r.den()[i] == 0 || i % 3 == 0);
    CHECK(is_separable(r) == !in_xp);
  }
}

TEST_CASE("composition") {
  auto F2 = Field::of_order(2), F9 = Field::of_order(9);
  CHECK(compose(power_map(F2, 2), power_map(F2, 2)) == power_map(F2, 4));
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    RatFunc g = random_ratfunc(rng, F9, 4), h = random_ratfunc(rng, F9, 4);
    RatFunc gh = compose(g, h);
    CHECK(gh.degree() == g.degree() * h.degree());
    for (auto x : line(*F9)) CHECK(gh(x) == g(h(x)));
  }
  for (int it = 0; it < 30; ++it) {
    Moebius mu = random_moebius(rng, F9);
    CHECK(compose(mu.to_ratfunc(), mu.inverse().to_ratfunc()) == RatFunc::identity(F9));
    RatFunc f = random_ratfunc(rng, F9, 3);
    CHECK(compose(mu, f) == compose(mu.to_ratfunc(), f));
    CHECK(compose(f, mu) == compose(f, mu.to_ratfunc()));
  }
}

TEST_CASE("Moebius inverse, normalization and group order") {
  auto F3 = Field::of_order(3), F5 = Field::of_order(5);
  auto t = Moebius::from_matrix(F3, 1, 1, 0, 1);
  CHECK(t.inverse() == Moebius::from_matrix(F3, 1, 2, 0, 1));
  auto s = Moebius::from_matrix(F3, 0, 1, 1, 0);
  CHECK(s.inverse() == s);
  CHECK(Moebius::from_matrix(F5, 2, 4, 0, 2) == Moebius::from_matrix(F5, 1, 2, 0, 1));
  for (const auto& m : Moebius::all(F5)) {
    auto [a, b, c, d] = m.entries();
    CHECK(m.inverse() == Moebius::from_matrix(F5, d, F5->neg(b), F5->neg(c), a));
    CHECK((m * m.inverse()).is_identity());
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto F = Field::of_order(q);
    CHECK(Moebius::all(F).size() == q * q * q - q);
    CHECK(Moebius::group_order(*F) == q * q * q - q);
  }
}

TEST_CASE("Moebius from three points") {
  auto F3 = Field::of_order(3);
  std::array<ProjPoint, 3> std3{ProjPoint::at(0), ProjPoint::at(1), ProjPoint::inf()};
  CHECK(Moebius::from_triple(F3, std3, std3).is_identity());
  auto r = Moebius::from_triple(F3, std3, {ProjPoint::inf(), ProjPoint::at(1), ProjPoint::at(0)});
  CHECK(r.to_ratfunc() == RatFunc(F3, {1}, {0, 1}));
  CHECK_THROWS(Moebius::from_triple(F3, {ProjPoint::at(0), ProjPoint::at(0), ProjPoint::inf()}, std3));

  auto F4 = Field::of_order(4);
  auto all = Moebius::all(F4);
  CHECK(all.size() == 60);
  auto pts = line(*F4);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        std::array<ProjPoint, 3> dst{pts[i], pts[j], pts[k]};
        auto mu = Moebius::from_triple(F4, std3, dst);
        std::size_t matches = 0;
        for (const auto& m : all) matches += m(std3[0]) == dst[0] && m(std3[1]) == dst[1] && m(std3[2]) == dst[2];
        CHECK(matches == 1);
        CHECK(mu(std3[0]) == dst[0]);
        CHECK(mu(std3[1]) == dst[1]);
        CHECK(mu(std3[2]) == dst[2]);
      }
}

TEST_CASE("coefficient Frobenius") {
  auto F5 = Field::of_order(5);
  auto E = F5->extension(2);
  RatFunc f(F5, {1, 2, 3}, {4, 1});
  CHECK(coeff_frobenius(f, *F5) == f);
  Elt delta = E->generator();
  Elt dq = E->frobenius(delta, 1, *F5);
  RatFunc nu(E, {E->neg(dq), 1}, {E->neg(delta), 1});
  RatFunc nuq = coeff_frobenius(nu, *F5);
  CHECK(nuq == RatFunc(E, {E->neg(delta), 1}, {E->neg(dq), 1}));
  CHECK(coeff_frobenius(nuq, *F5) == nu);
}

TEST_CASE("branch points") {
  auto F5 = Field::of_order(5), F7 = Field::of_order(7);
  auto points = [](const RatFunc& f) {
    std::set<std::tuple<unsigned, bool, Elt>> s;
    for (const auto& b : branch_points(f)) s.insert({b.ext_degree, b.point.infinite, b.point.infinite ? 0 : b.point.value});
    return s;
  };
  RatFunc g(F5, {1, 0, 0, 0, 1}, {0, 0, 1});
  CHECK(points(g) == std::set<std::tuple<unsigned, bool, Elt>>{{1, true, 0}, {1, false, 2}, {1, false, 3}});
  CHECK(points(power_map(F7, 3)) == std::set<std::tuple<unsigned, bool, Elt>>{{1, true, 0}, {1, false, 0}});
  CHECK_THROWS(branch_points(power_map(F5, 5)));

  auto E = F5->extension(3);
  auto gam = cubic_roots(F5, 1, 1);
  std::set<std::tuple<unsigned, bool, Elt>> want;
  for (Elt gi : gam) want.insert({3, false, E->mul(E->from_int(4), gi)});
  CHECK(points(quartic_exceptional(F5, 1, 1)) == want);

  // Critical points live in F_{43^6}, too large to split; values come from the resultant.
  auto F43 = Field::of_order(43);
  auto E43 = F43->extension(3);
  for (Elt beta = 1; beta < 43; ++beta) {
    std::vector<Elt> roots;
    try {
      roots = cubic_roots(F43, 1, beta);
    } catch (const std::invalid_argument&) {
      continue;
    }
    std::set<std::tuple<unsigned, bool, Elt>> w43;
    for (Elt gi : roots) w43.insert({3, false, E43->mul(E43->from_int(4), gi)});
    CHECK(points(quartic_exceptional(F43, 1, beta)) == w43);
    break;
  }
}

TEST_CASE("difference numerator") {
  auto F3 = Field::of_order(3);
  BivarPoly xy(F3, {{0, 1}, {1}});      // X + Y
  BivarPoly xmy(F3, {{0, 2}, {1}});     // X - Y
  CHECK(equal_up_to_scalar(difference_numerator(power_map(F3, 2)), xmy * xy));
  std::mt19937_64 rng(2);
  auto F7 = Field::of_order(7);
  for (int it = 0; it < 20; ++it) {
    RatFunc f = random_ratfunc(rng, F7, 4);
    BivarPoly d = difference_numerator(f);
    CHECK(divides(BivarPoly(F7, {{0, 6}, {1}}), d));
    CHECK(equal_up_to_scalar(d.swapped(), d));
  }
  CHECK(difference_factorization_check(F3, 2, 1));
  CHECK(difference_factorization_check(Field::of_order(5), 1, 1));
}

TEST_CASE("left components") {
  auto F2 = Field::of_order(2);
  RatFunc x2 = power_map(F2, 2);
  auto g = left_component_witness(x2, power_map(F2, 4));
  REQUIRE(g.has_value());
  CHECK(*g == x2);
  CHECK(!is_left_component(x2, RatFunc::polynomial(F2, {0, 1, 0, 1, 1})));
  RatFunc L = RatFunc::polynomial(F2, {0, 1, 1, 0, 1});
  auto w = left_component_witness(x2, compose(L, x2));
  REQUIRE(w.has_value());
  CHECK(*w == L);
  CHECK_THROWS(is_left_component(power_map(F2, 3), power_map(F2, 4)));
}

TEST_CASE("symmetries") {
  auto F3 = Field::of_order(3), F5 = Field::of_order(5);
  auto s = symmetries(power_map(F3, 2), 1);
  CHECK(s.size() == 2);
  auto c = symmetries(power_map(F5, 3), 2);
  REQUIRE(c.size() == 3);
  std::size_t outside = 0;
  for (const auto& m : c)
    if (!m.is_identity()) outside += !m.descend(F5).has_value();
  CHECK(outside == 2);
  auto q = symmetries(quartic_exceptional(F5, 1, 1), 3);
  REQUIRE(q.size() == 4);
  std::size_t rational = 0;
  for (const auto& m : q) {
    CHECK((m * m).is_identity());
    rational += m.descend(F5).has_value();
  }
  CHECK(rational == 1);
}
