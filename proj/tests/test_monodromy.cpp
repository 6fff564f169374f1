#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "prf/monodromy.hpp"

using namespace prf::mono;

namespace {

std::size_t idx(unsigned n, std::vector<std::uint8_t> images) { return SymmetricGroup::get(n).index(images); }

// Definitional checks over explicit element lists.
bool naive_normal(const Subgroup& G, const Subgroup& A) {
  const auto& S = SymmetricGroup::get(A.n);
  for (auto a : A.elements())
    for (auto g : G.elements())
      if (!G.contains(S.mul(S.mul(a, g), S.inv(a)))) return false;
  return is_subgroup_of(G, A);
}

bool naive_transitive(const Subgroup& H) {
  const auto& S = SymmetricGroup::get(H.n);
  std::set<unsigned> image;
  for (auto g : H.elements()) image.insert(S.apply(g, 0));
  return image.size() == H.n;
}

// A/G cyclic: some a whose powers meet every coset.
bool naive_cyclic_quotient(const Subgroup& A, const Subgroup& G) {
  const auto& S = SymmetricGroup::get(A.n);
  std::size_t index = A.order() / G.order();
  for (auto a : A.elements()) {
    std::set<std::vector<std::size_t>> cosets;
    std::size_t x = 0;
    for (std::size_t k = 0; k < index; ++k) {
      std::vector<std::size_t> coset;
      for (auto g : G.elements()) coset.push_back(S.mul(x, g));
      std::sort(coset.begin(), coset.end());
      cosets.insert(coset);
      x = S.mul(x, a);
    }
    if (cosets.size() == index) return true;
  }
  return false;
}

std::size_t naive_common_orbits(const Subgroup& A, const Subgroup& G) {
  const auto& S = SymmetricGroup::get(A.n);
  auto orbit_sets = [&](const Subgroup& H) {
    std::set<std::set<unsigned>> out;
    for (unsigned x = 0; x < H.n; ++x) {
      std::set<unsigned> o;
      for (auto h : H.elements())
        if (S.apply(h, 0) == 0) o.insert(S.apply(h, x));
      out.insert(o);
    }
    return out;
  };
  auto oa = orbit_sets(A), og = orbit_sets(G);
  std::size_t n = 0;
  for (const auto& o : og) n += oa.count(o);
  return n;
}

}  // namespace

TEST_CASE("symmetric group tables") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto& S = SymmetricGroup::get(n);
    std::size_t fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    CHECK(S.order() == fact);
    for (unsigned x = 0; x < n; ++x) CHECK(S.apply(0, x) == x);
    for (std::size_t a = 0; a < S.order(); a += 7) {
      CHECK(S.mul(a, S.inv(a)) == 0);
      for (unsigned x = 0; x < n; ++x) CHECK(S.apply(S.mul(a, S.inv(a)), x) == x);
    }
  }
  CHECK_THROWS(SymmetricGroup::get(7));
  CHECK(cycle_string(SymmetricGroup::get(4).perm(0)) == "()");
  CHECK(cycle_string({1, 2, 3, 0}) == "(1,2,3,4)");
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(3).size() == 6);
  auto s4 = all_subgroups(4);
  CHECK(s4.size() == 30);
  const auto& S = SymmetricGroup::get(4);
  for (const auto& H : s4) {
    for (auto a : H.elements()) {
      CHECK(H.contains(S.inv(a)));
      for (auto b : H.elements()) CHECK(H.contains(S.mul(a, b)));
    }
    CHECK(closure(4, H.gens) == H);
  }
  CHECK(all_subgroups(5).size() == 156);
}

TEST_CASE("primitivity") {
  Subgroup c4 = closure(4, {idx(4, {1, 2, 3, 0})});
  CHECK(c4.order() == 4);
  CHECK(is_transitive(c4));
  CHECK(!is_primitive(c4));
  Subgroup a4 = closure(4, {idx(4, {1, 2, 0, 3}), idx(4, {0, 2, 3, 1})});
  CHECK(a4.order() == 12);
  CHECK(is_primitive(a4));
  for (unsigned n = 1; n <= 6; ++n) {
    const auto& S = SymmetricGroup::get(n);
    ElemSet all;
    for (std::size_t i = 0; i < S.order(); ++i) all.set(i);
    CHECK(is_primitive(subgroup_from_elements(n, all)));
  }
  CHECK_THROWS(is_primitive(closure(4, {idx(4, {1, 0, 2, 3})})));
  for (unsigned n = 2; n <= 5; ++n) {
    auto subs = all_subgroups(n);
    for (const auto& H : subs)
      if (is_transitive(H)) CHECK(is_primitive(H) == is_primitive_by_definition(H, subs));
  }
}

TEST_CASE("predicates agree with definitions at n <= 4") {
  for (unsigned n = 2; n <= 4; ++n) {
    auto subs = all_subgroups(n);
    for (const auto& H : subs) CHECK(is_transitive(H) == naive_transitive(H));
    for (const auto& A : subs)
      for (const auto& G : subs) {
        if (!is_subgroup_of(G, A)) continue;
        bool normal = is_normal(G, A);
        REQUIRE(normal == naive_normal(G, A));
        if (normal) CHECK(is_cyclic_quotient(A, G) == naive_cyclic_quotient(A, G));
        CHECK(common_stabilizer_orbits(A, G) == naive_common_orbits(A, G));
      }
  }
}

TEST_CASE("filter") {
  auto f3 = filter(3, false);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].A.order() == 6);
  CHECK(f3[0].G.order() == 3);
  auto f4 = up_to_conjugacy(filter(4, false));
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].A.order() == 12);
  CHECK(f4[0].G.order() == 4);
  CHECK(filter(6, true).empty());
  for (const auto& p : filter(5, false)) {
    CHECK(!p.A_alt_or_sym);
    CHECK(is_normal(p.G, p.A));
    CHECK(is_transitive(p.G));
  }
}

TEST_CASE("filter output is conjugation invariant") {
  std::mt19937_64 rng(61);
  auto pairs = filter(4, false);
  const auto& S = SymmetricGroup::get(4);
  for (int it = 0; it < 10; ++it) {
    std::size_t s = rng() % S.order();
    for (const auto& p : pairs) {
      Subgroup A = conjugate(p.A, s), G = conjugate(p.G, s);
      bool found = std::any_of(pairs.begin(), pairs.end(), [&](const GroupPair& o) { return o.A == A && o.G == G; });
      CHECK(found);
    }
  }
}
