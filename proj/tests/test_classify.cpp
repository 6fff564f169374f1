#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "prf/classify.hpp"
#include "prf/errors.hpp"
#include "prf/families.hpp"
#include "prf/permtest.hpp"
#include "prf/text.hpp"

using namespace prf;

namespace {

Moebius random_moebius(std::mt19937_64& rng, const FieldPtr& F) {
  auto all = Moebius::all(F);
  return all[rng() % all.size()];
}

bool verifies(const ClassificationResult& c, const RatFunc& f) {
  return compose(c.mu, compose(c.representative, c.nu)) == f;
}

}  // namespace

TEST_CASE("classify examples") {
  auto F4 = Field::of_order(4), F9 = Field::of_order(9), F7 = Field::of_order(7);
  CHECK(!classify(power_map(F4, 3)).has_value());
  Elt alpha = 0;
  for (Elt a = 1; a < 9 && !alpha; ++a)
    if (!F9->is_square(a)) alpha = a;
  RatFunc f = RatFunc::polynomial(F9, {0, F9->neg(alpha), 0, 1});
  auto c = classify(f);
  REQUIRE(c.has_value());
  CHECK(std::holds_alternative<Additive>(c->family));
  CHECK(verifies(*c, f));
  CHECK(c->exceptional);
  auto t = classify(RatFunc::polynomial(F7, {0, 3, 0, 0, 1}));
  REQUIRE(t.has_value());
  CHECK(std::holds_alternative<TableOne>(t->family));
  CHECK(!t->exceptional);
  auto lin = classify(RatFunc(F7, {1, 2}, {3, 1}));
  REQUIRE(lin.has_value());
  CHECK(std::holds_alternative<Linear>(lin->family));
  CHECK_THROWS(classify(power_map(F7, 5)));
}

TEST_CASE("every permutation quartic over F_5 classifies") {
  auto F5 = Field::of_order(5);
  std::set<std::string> families;
  for (const auto& f : search_candidates(F5, 4)) {
    auto c = classify(f);
    REQUIRE(c.has_value());
    CHECK(verifies(*c, f));
    families.insert(family_name(c->family));
    CHECK((std::holds_alternative<TableOne>(c->family) || std::holds_alternative<QuarticExceptional>(c->family)));
  }
  CHECK(families.size() == 2);
}

TEST_CASE("classification agrees with decide_exceptional on random inputs") {
  std::mt19937_64 rng(31);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    auto F = Field::of_order(q);
    for (unsigned n = 2; n <= 4; ++n) {
      auto cands = search_candidates(F, n);
      for (int it = 0; it < 12 && !cands.empty(); ++it) {
        RatFunc f = compose(random_moebius(rng, F), compose(cands[rng() % cands.size()], random_moebius(rng, F)));
        auto c = classify(f);
        REQUIRE(c.has_value());
        CHECK(verifies(*c, f));
        CHECK(c->exceptional == std::holds_alternative<Exceptional>(decide_exceptional(f)));
      }
    }
  }
}

TEST_CASE("equivalence witnesses") {
  auto F5 = Field::of_order(5), F7 = Field::of_order(7);
  RatFunc t = RatFunc::polynomial(F7, {0, 3, 0, 0, 1});
  auto self = equivalence_witness(t, t);
  REQUIRE(self.has_value());
  CHECK(self->first.is_identity());
  CHECK(self->second.is_identity());
  CHECK(!equivalence_witness(t, quartic_exceptional(F7, irreducible_depressed_cubics(*F7)[0].first,
                                                      irreducible_depressed_cubics(*F7)[0].second)));
  auto cubics = irreducible_depressed_cubics(*F5);
  RatFunc f1 = quartic_exceptional(F5, cubics[0].first, cubics[0].second);
  RatFunc f2 = quartic_exceptional(F5, cubics.back().first, cubics.back().second);
  auto w = equivalence_witness(f1, f2);
  REQUIRE(w.has_value());
  CHECK(compose(w->first, compose(f1, w->second)) == f2);
  CHECK_THROWS_AS(equivalence_witness(t, t, 10), BudgetExceeded);
}

TEST_CASE("odd exceptional quartics form one class with three witnesses") {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    auto F = Field::of_order(q);
    auto cubics = irreducible_depressed_cubics(*F);
    RatFunc f1 = quartic_exceptional(F, cubics[0].first, cubics[0].second);
    for (auto [a, b] : cubics) {
      RatFunc f2 = quartic_exceptional(F, a, b);
      auto ws = odd_quartic_witnesses(f1, f2);
      REQUIRE(ws.size() == 3);
      std::set<std::array<Elt, 4>> mus;
      for (const auto& [mu, nu] : ws) {
        CHECK(compose(mu, compose(f1, nu)) == f2);
        mus.insert(mu.entries());
      }
      CHECK(mus.size() == 3);
    }
  }
  auto F7 = Field::of_order(7);
  CHECK(odd_quartic_witnesses(RatFunc::polynomial(F7, {0, 3, 0, 0, 1}), RatFunc::polynomial(F7, {0, 3, 0, 0, 1})).empty());
}

TEST_CASE("equivalence preserves permutations and fiber signatures") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 200; ++it) {
    std::uint64_t q = std::vector<std::uint64_t>{3, 4, 5, 7, 8}[rng() % 5];
    auto F = Field::of_order(q);
    auto cands = search_candidates(F, 2 + rng() % 3);
    if (cands.empty()) continue;
    RatFunc f = cands[rng() % cands.size()];
    RatFunc g = compose(random_moebius(rng, F), compose(f, random_moebius(rng, F)));
    CHECK(is_permutation(g));
    CHECK(fiber_signature(g) == fiber_signature(f));
  }
}

TEST_CASE("stabilizers") {
  auto F7 = Field::of_order(7), F4 = Field::of_order(4), F2 = Field::of_order(2);
  CHECK(stabilizer(RatFunc::polynomial(F7, {0, 3, 0, 0, 1})).size() == 3);
  CHECK(stabilizer(power_map(F4, 4)).size() == 60);
  CHECK(stabilizer(RatFunc::polynomial(F2, {0, 1, 1, 0, 1})).size() == 2);
  // Group law (mu, nu)(mu', nu') = (mu mu', nu' nu).
  auto F5 = Field::of_order(5);
  auto rep = stabilizer(RatFunc(F5, {1, 0, 0, 1, 1}, {2, 0, 1}));
  CHECK(rep.size() == 3);
  REQUIRE(!rep.pairs.empty());
  CHECK(rep.pairs[0].first.is_identity());
  CHECK(rep.pairs[0].second.is_identity());
  for (const auto& [m1, n1] : rep.pairs)
    for (const auto& [m2, n2] : rep.pairs) {
      MoebiusPair prod{m1 * m2, n2 * n1};
      CHECK(std::find(rep.pairs.begin(), rep.pairs.end(), prod) != rep.pairs.end());
    }
}

TEST_CASE("orbit and stabilizer at small q") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto F = Field::of_order(q);
    std::uint64_t g = q * q * q - q;
    for (const auto& c : search(F, 4)) {
      CHECK(c.stabilizer * c.orbit == g * g);
      CHECK(orbit_size_explicit(c.representative) == c.orbit);
    }
  }
}

TEST_CASE("search normal form lands in the slice") {
  std::mt19937_64 rng(51);
  for (std::uint64_t q : {3, 4, 5, 8, 9}) {
    auto F = Field::of_order(q);
    auto cands = search_candidates(F, 4);
    for (const auto& f : cands) CHECK(in_search_slice(f));
    for (int it = 0; it < 20 && !cands.empty(); ++it) {
      RatFunc f = compose(random_moebius(rng, F), compose(cands[rng() % cands.size()], random_moebius(rng, F)));
      auto [g, w] = search_normal_form(f);
      CHECK(in_search_slice(g));
      CHECK(compose(w.first, compose(f, w.second)) == g);
      CHECK(std::binary_search(cands.begin(), cands.end(), g, canonical_less));
    }
  }
}

TEST_CASE("search examples") {
  auto F7 = Field::of_order(7);
  auto c7 = search(F7, 4);
  REQUIRE(c7.size() == 2);
  std::size_t table = 0;
  for (const auto& c : c7)
    if (!c.classification.exceptional)
      table += equivalence_witness(c.representative, RatFunc::polynomial(F7, {0, 3, 0, 0, 1})).has_value();
  CHECK(table == 1);
  auto c11 = search(Field::of_order(11), 4);
  REQUIRE(c11.size() == 1);
  CHECK(c11[0].classification.exceptional);
  auto c8 = search(Field::of_order(8), 3);
  REQUIRE(c8.size() == 1);
  CHECK(std::holds_alternative<PowerMap>(c8[0].classification.family));
  std::size_t slice = 0;
  for (const auto& c : search(Field::of_order(5), 4)) slice += c.slice_members;
  CHECK(slice == search_candidates(Field::of_order(5), 4).size());
}

TEST_CASE("exceptional class counts") {
  CHECK(count_classes_exceptional(Field::of_order(2)).count == 2);
  CHECK(count_classes_exceptional(Field::of_order(4)).count == 4);
  CHECK(count_classes_exceptional(Field::of_order(9)).count == 1);
  auto r2 = count_classes_exceptional(Field::of_order(2));
  CHECK(r2.representatives[1].f == RatFunc::polynomial(Field::of_order(2), {0, 1, 1, 0, 1}));
}

TEST_CASE("total counts") {
  CHECK(count_total_formula(2) == 78);
  CHECK(count_total_formula(5) == 24000);
  CHECK(count_total_formula(9) == 172800);
  CHECK(count_total(Field::of_order(2)) == 78);
  CHECK(count_total(Field::of_order(5)) == 24000);
  CHECK(count_total(Field::of_order(9)) == 172800);
  CHECK(count_total_bruteforce(Field::of_order(3)) == 1536);
  CHECK(count_total_bruteforce(Field::of_order(9)) == 172800);
  // Even q > 8: q(q - 1)(q + 2)(q^3 + 1)/3.
  CHECK(count_total(Field::of_order(16)) == count_total_formula(16));
}
