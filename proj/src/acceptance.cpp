#include "prf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "prf/classify.hpp"
#include "prf/errors.hpp"
#include "prf/families.hpp"
#include "prf/monodromy.hpp"
#include "prf/permtest.hpp"
#include "prf/text.hpp"

namespace prf {

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool passed() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!notes_.empty()) os << "; " << notes_;
    if (failed_) {
      os << "; " << failed_ << " failed:";
      for (const auto& f : failures_) os << " [" << f << "]";
    }
    return os.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::vector<std::uint64_t> prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (prime_power(q).first) out.push_back(q);
  return out;
}

std::string qs(std::uint64_t q) { return "q=" + std::to_string(q); }

bool witness_holds(const ClassificationResult& c, const RatFunc& f) {
  return compose(c.mu, compose(c.representative, c.nu)) == f;
}

bool is_tag(const ClassificationResult& c, auto tag) { return std::holds_alternative<decltype(tag)>(c.family); }

const std::map<std::uint64_t, std::size_t> kTableOneClasses{{2, 2}, {3, 3}, {4, 5}, {5, 2}, {7, 1}, {8, 3}};

void criterion1(Checker& ck, const AcceptanceOptions& opt) {
  for (auto [q, expected] : kTableOneClasses) {
    auto F = Field::of_order(q);
    auto classes = search(F, 4);
    std::size_t nonexc = 0;
    for (const auto& c : classes) {
      ck.expect(witness_holds(c.classification, c.representative), qs(q) + " witness for " + to_string(c.representative));
      if (c.classification.exceptional) continue;
      ++nonexc;
      ck.expect(is_tag(c.classification, TableOne{}), qs(q) + " non-exceptional class outside sporadic table");
    }
    ck.expect(nonexc == expected, qs(q) + " non-exceptional classes " + std::to_string(nonexc));
    for (const auto& e : table1(F)) {
      bool hit = std::any_of(classes.begin(), classes.end(),
                             [&](const SearchClass& c) { return equivalence_witness(c.representative, e.f).has_value(); });
      ck.expect(hit, qs(q) + " sporadic table entry not found: " + to_string(e.f));
    }
  }
  std::uint64_t top = opt.extended ? 81 : 27;
  std::size_t swept = 0;
  for (auto q : prime_powers(9, top)) {
    auto F = Field::of_order(q);
    auto classes = search(F, 4, opt.extended);
    std::size_t nonexc = 0;
    for (const auto& c : classes) {
      nonexc += !c.classification.exceptional;
      ck.expect(witness_holds(c.classification, c.representative), qs(q) + " witness");
    }
    ck.expect(nonexc == 0, qs(q) + " has non-exceptional classes");
    ck.expect(classes.size() == count_classes_exceptional(F).count, qs(q) + " exceptional class count from search");
    ++swept;
    if (opt.progress) *opt.progress << "  [1] q=" << q << " classes=" << classes.size() << std::endl;
  }
  ck.note("q > 8 fields swept: " + std::to_string(swept) + (opt.extended ? " (extended)" : ""));
}

void criterion2(Checker& ck, const AcceptanceOptions&) {
  const std::map<std::uint64_t, std::uint64_t> known{{2, 78}, {3, 1536}, {4, 8160}, {5, 24000}, {7, 75264}, {8, 222768}};
  for (auto q : std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11}) {
    auto F = Field::of_order(q);
    std::uint64_t assembled = count_total(F);
    std::uint64_t brute = count_total_bruteforce(F);
    std::uint64_t expected = known.count(q) ? known.at(q) : (q * q * q - q) * (q * q * q - q) / 3;
    ck.expect(count_total_formula(q) == expected, qs(q) + " closed form");
    ck.expect(assembled == expected, qs(q) + " assembled " + std::to_string(assembled));
    ck.expect(brute == expected, qs(q) + " brute force " + std::to_string(brute));
  }
}

void criterion3(Checker& ck, const AcceptanceOptions&) {
  for (auto q : std::vector<std::uint64_t>{3, 5, 7, 9}) {
    auto r = count_classes_exceptional(Field::of_order(q));
    ck.expect(r.count == 1 && r.representatives.size() == 1, qs(q) + " odd count");
    ck.expect(std::holds_alternative<QuarticExceptional>(r.representatives[0].family),
              qs(q) + " odd representative family");
  }
  for (auto q : std::vector<std::uint64_t>{2, 8, 4, 16}) {
    auto F = Field::of_order(q);
    const Field& K = *F;
    auto r = count_classes_exceptional(F);
    std::uint64_t expected = q % 6 == 2 ? (q + 4) / 3 : (q + 8) / 3;
    ck.expect(r.count == expected, qs(q) + " even count " + std::to_string(r.count));
    std::vector<RatFunc> want{RatFunc::polynomial(F, {0, 0, 0, 0, 1})};
    for (Elt a : r.delta) want.push_back(RatFunc::polynomial(F, {0, a, 1, 0, 1}));
    if (q % 6 == 4) {
      Elt gamma = 0;
      for (std::uint32_t i = 0; i < q && !gamma; ++i) {
        Elt e = K.unrank(i);
        bool cube = e == 0;
        for (Elt b = 1; b < q && !cube; ++b) cube = K.pow(b, 3) == e;
        if (!cube) gamma = e;
      }
      want.push_back(RatFunc::polynomial(F, {0, gamma, 0, 0, 1}));
      want.push_back(RatFunc::polynomial(F, {0, K.mul(gamma, gamma), 0, 0, 1}));
    }
    std::vector<RatFunc> got;
    for (const auto& rep : r.representatives) got.push_back(rep.f);
    ck.expect(got == want, qs(q) + " representative list");
    for (std::size_t i = 0; i < got.size(); ++i) {
      ck.expect(is_permutation(got[i]), qs(q) + " representative permutes");
      for (std::size_t j = 0; j < i; ++j)
        ck.expect(!equivalence_witness(got[j], got[i]), qs(q) + " representatives " + std::to_string(j) + "," +
                                                              std::to_string(i) + " equivalent");
    }
  }
  for (std::uint64_t q = 2; q <= 64; q *= 2) {
    auto F = Field::of_order(q);
    std::set<Elt> image;
    for (Elt b = 0; b < q; ++b) image.insert(F->add(F->pow(b, 3), b));
    std::size_t delta = q - image.size();
    ck.expect(delta == (q + 1) / 3, qs(q) + " |Delta| " + std::to_string(delta));
    ck.expect(count_classes_exceptional(F).delta.size() == delta, qs(q) + " library Delta");
  }
}

void criterion4(Checker& ck, const AcceptanceOptions&) {
  for (auto [q, unused] : kTableOneClasses) {
    (void)unused;
    auto F = Field::of_order(q);
    for (const auto& e : table1(F)) {
      auto s = stabilizer(e.f).size();
      ck.expect(s == e.stabilizer, qs(q) + " sporadic table " + to_string(e.f) + " stabilizer " + std::to_string(s));
    }
  }
  for (auto q : std::vector<std::uint64_t>{3, 5, 7}) {
    auto F = Field::of_order(q);
    for (auto [a, b] : irreducible_depressed_cubics(*F)) {
      auto s = stabilizer(quartic_exceptional(F, a, b)).size();
      ck.expect(s == 3, qs(q) + " odd exceptional stabilizer " + std::to_string(s));
    }
  }
  for (auto q : std::vector<std::uint64_t>{2, 4, 8}) {
    auto F = Field::of_order(q);
    ck.expect(stabilizer(power_map(F, 4)).size() == q * q * q - q, qs(q) + " X^4 stabilizer");
    for (Elt a : count_classes_exceptional(F).delta) {
      auto s = stabilizer(RatFunc::polynomial(F, {0, a, 1, 0, 1})).size();
      ck.expect(s == q, qs(q) + " X^4+X^2+aX stabilizer " + std::to_string(s));
    }
  }
  auto F4 = Field::of_order(4);
  for (const auto& rep : count_classes_exceptional(F4).representatives) {
    const auto& L = rep.f.num();
    if (L.size() == 5 && L[2] == 0 && L[1] != 0) {
      auto s = stabilizer(rep.f).size();
      ck.expect(s == 12, "q=4 X^4+gX stabilizer " + std::to_string(s));
    }
  }
}

void criterion5(Checker& ck, const AcceptanceOptions&) {
  std::size_t pairs = 0;
  for (auto q : std::vector<std::uint64_t>{3, 5, 7}) {
    auto F = Field::of_order(q);
    FieldPtr E = F->extension(3);
    for (auto [a, b] : irreducible_depressed_cubics(*F)) {
      ck.expect(difference_factorization_check(F, a, b), qs(q) + " difference factorization");
      auto g = cubic_roots(F, a, b);
      std::set<Elt> want;
      for (Elt gi : g) want.insert(E->mul(E->from_int(4), gi));
      std::set<Elt> got;
      bool shape = true;
      for (const auto& bp : branch_points(quartic_exceptional(F, a, b))) {
        shape = shape && bp.ext_degree == 3 && !bp.point.infinite && bp.field == E;
        got.insert(bp.point.value);
      }
      ck.expect(shape && got == want, qs(q) + " branch points are 4 gamma_i");
    }
  }
  for (auto q : prime_powers(3, 13)) {
    if (q % 2 == 0) continue;
    auto F = Field::of_order(q);
    for (auto [a, b] : irreducible_depressed_cubics(*F)) {
      bool ok = true;
      try {
        auto [mu, nu] = quartic_symmetries(F, a, b);
        RatFunc f = quartic_exceptional(F, a, b);
        ok = compose(mu, compose(f, nu)) == f;
      } catch (const VerificationFailure&) {
        ok = false;
      }
      ck.expect(ok, qs(q) + " trace-formula symmetries");
      ++pairs;
    }
  }
  ck.note(std::to_string(pairs) + " (alpha, beta) pairs with q <= 13");
}

void criterion6(Checker& ck, const AcceptanceOptions&) {
  for (auto q : std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    auto F = Field::of_order(q);
    const Field& K = *F;
    for (unsigned n : {2u, 3u}) {
      std::set<std::string> families;
      for (const auto& f : search_candidates(F, n)) {
        auto c = classify(f);
        ck.expect(c.has_value() && witness_holds(*c, f), qs(q) + " classify " + to_string(f));
        if (!c) continue;
        families.insert(family_name(c->family));
        if (n == 2) {
          ck.expect(q % 2 == 0 && is_tag(*c, PowerMap{}), qs(q) + " degree 2 side condition");
        } else if (auto* pm = std::get_if<PowerMap>(&c->family)) {
          ck.expect(pm->n == 3 && std::gcd<std::uint64_t>(3, q - 1) == 1, qs(q) + " X^3 side condition");
        } else if (auto* rd = std::get_if<Redei>(&c->family)) {
          ck.expect(rd->n == 3 && std::gcd<std::uint64_t>(3, q + 1) == 1 && rd->delta >= q,
                    qs(q) + " Redei side condition");
        } else if (auto* ad = std::get_if<Additive>(&c->family)) {
          bool ok = q % 3 == 0 && ad->coeffs.size() == 2 && ad->coeffs[1] == 1;
          if (ok) {
            Elt alpha = K.neg(ad->coeffs[0]);
            ok = alpha == 0 || !K.is_square(alpha);
          }
          ck.expect(ok, qs(q) + " X^3 - aX side condition");
        } else {
          ck.expect(false, qs(q) + " unexpected degree-3 family");
        }
      }
      auto classes = search(F, n);
      std::size_t want = n == 2 ? (q % 2 == 0) : (q % 3 == 0 ? 2 : 1);
      ck.expect(classes.size() == want, qs(q) + " degree " + std::to_string(n) + " class count " +
                                            std::to_string(classes.size()));
    }
  }
}

bool is_exceptional_verdict(const ExceptionalityVerdict& v) { return std::holds_alternative<Exceptional>(v); }

void criterion7(Checker& ck, const AcceptanceOptions&) {
  std::size_t decided = 0;
  auto require_decided = [&](const ExceptionalityVerdict& v, const std::string& what) {
    ck.expect(!std::holds_alternative<Undetermined>(v), what + " undetermined");
    ++decided;
  };
  for (auto q : prime_powers(2, 9)) {
    auto F = Field::of_order(q);
    for (unsigned n = 1; n <= 4; ++n) {
      if (std::gcd<std::uint64_t>(n, q - 1) != 1) continue;
      auto v = decide_exceptional(power_map(F, n));
      require_decided(v, qs(q) + " X^" + std::to_string(n));
      ck.expect(is_exceptional_verdict(v), qs(q) + " X^" + std::to_string(n) + " exceptional");
    }
  }
  for (auto q : std::vector<std::uint64_t>{7, 13}) {
    auto F = Field::of_order(q);
    auto v = decide_exceptional(redei(F, 3, F->extension(2)->generator()));
    require_decided(v, qs(q) + " Redei");
    ck.expect(is_exceptional_verdict(v), qs(q) + " Redei exceptional");
  }
  std::size_t additive_count = 0;
  for (auto q : std::vector<std::uint64_t>{2, 4}) {
    auto F = Field::of_order(q);
    for (std::uint64_t code = 1; code < q * q * q * q; ++code) {
      std::vector<Elt> coeffs(4);
      std::uint64_t c = code;
      for (auto& x : coeffs) x = static_cast<Elt>(c % q), c /= q;
      Poly L = additive(*F, coeffs);
      if (!is_exceptional_additive(F, L)) continue;
      ++additive_count;
      auto v = decide_exceptional(RatFunc::polynomial(F, L));
      ck.expect(is_exceptional_verdict(v), qs(q) + " additive " + to_string(*F, L));
    }
  }
  for (auto q : std::vector<std::uint64_t>{3, 5, 7}) {
    auto F = Field::of_order(q);
    for (auto [a, b] : irreducible_depressed_cubics(*F)) {
      auto v = decide_exceptional(quartic_exceptional(F, a, b));
      require_decided(v, qs(q) + " quartic");
      ck.expect(is_exceptional_verdict(v), qs(q) + " quartic exceptional");
    }
  }
  for (auto [q, unused] : kTableOneClasses) {
    (void)unused;
    auto F = Field::of_order(q);
    for (const auto& e : table1(F)) {
      auto v = decide_exceptional(e.f);
      require_decided(v, qs(q) + " sporadic table");
      ck.expect(std::holds_alternative<NotExceptional>(v), qs(q) + " sporadic table entry " + to_string(e.f));
    }
    for (unsigned n = 2; n <= 4; ++n)
      for (const auto& f : search_candidates(F, n)) require_decided(decide_exceptional(f), qs(q) + " " + to_string(f));
  }
  ck.note(std::to_string(additive_count) + " exceptional additive polynomials");
}

// Subgroups <a, b, c> of S_4 with independent closure code.
std::size_t s4_subgroups_by_generators() {
  const auto& S = mono::SymmetricGroup::get(4);
  std::set<std::vector<bool>> seen;
  const std::size_t N = S.order();
  auto close = [&](std::vector<std::size_t> gens) {
    std::vector<bool> in(N, false);
    in[0] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < N; ++x)
        if (in[x])
          for (auto g : gens)
            if (!in[S.mul(x, g)]) in[S.mul(x, g)] = grew = true;
    }
    return in;
  };
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b)
      for (std::size_t c = b; c < N; ++c) seen.insert(close({a, b, c}));
  return seen.size();
}

void criterion8(Checker& ck, const AcceptanceOptions&) {
  auto f3 = mono::up_to_conjugacy(mono::filter(3, false));
  ck.expect(f3.size() == 1 && f3[0].A.order() == 6 && f3[0].G.order() == 3, "filter(3) = {(S3, A3)}");
  auto f4all = mono::filter(4, false);
  auto f4 = mono::up_to_conjugacy(f4all);
  bool a4v4 = f4.size() == 1 && f4[0].A.order() == 12 && mono::is_alternating_or_symmetric(f4[0].A) &&
              f4[0].G.order() == 4 && mono::is_transitive(f4[0].G);
  ck.expect(a4v4, "filter(4) = {(A4, V4)}");
  ck.expect(mono::filter(6, true).empty(), "filter(6, primitive) empty");
  auto s4 = mono::all_subgroups(4);
  std::size_t oracle = s4_subgroups_by_generators();
  ck.expect(s4.size() == 30 && oracle == 30, "all_subgroups(4) = 30, oracle " + std::to_string(oracle));

  auto s5 = mono::all_subgroups(5);
  const auto& S5 = mono::SymmetricGroup::get(5);
  std::map<std::size_t, std::size_t> by_order;
  std::set<mono::ElemSet, bool (*)(const mono::ElemSet&, const mono::ElemSet&)> keys(
      [](const mono::ElemSet& a, const mono::ElemSet& b) { return a.to_string() < b.to_string(); });
  for (const auto& H : s5) {
    ck.expect(120 % H.order() == 0, "Lagrange in S5");
    ++by_order[H.order()];
    keys.insert(H.elems);
  }
  ck.expect(by_order[8] == 15 && by_order[3] == 10 && by_order[5] == 6, "Sylow counts in S5");
  ck.expect(by_order[1] == 1 && by_order[120] == 1 && by_order[60] == 1, "trivial, A5, S5 unique");
  bool closed = true;
  for (const auto& H : s5)
    for (std::size_t g = 0; g < S5.order() && closed; ++g) {
      if (H.contains(g)) continue;
      auto gens = H.gens;
      gens.push_back(g);
      closed = keys.count(mono::closure(5, gens).elems) > 0;
    }
  ck.expect(closed, "S5 subgroup list closed under adjoining one element");
  ck.note("|Sub(S5)| = " + std::to_string(s5.size()));
}

bool field_axioms(const Field& F) {
  const Elt q = F.size();
  for (Elt a = 0; a < q; ++a) {
    if (a && F.mul(a, F.inv(a)) != 1) return false;
    if (F.add(a, F.neg(a)) != 0) return false;
    for (Elt b = 0; b < q; ++b) {
      if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a)) return false;
      for (Elt c = 0; c < q; ++c) {
        if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) return false;
        if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) return false;
        if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) return false;
      }
    }
  }
  return true;
}

void criterion9(Checker& ck, const AcceptanceOptions&) {
  for (auto q : prime_powers(2, 64)) ck.expect(field_axioms(*Field::of_order(q)), qs(q) + " field axioms");

  std::mt19937_64 rng(0x5eed);
  std::size_t quartics = 0;
  for (auto q : std::vector<std::uint64_t>{3, 5, 7}) {
    auto F = Field::of_order(q);
    std::uniform_int_distribution<Elt> coeff(0, static_cast<Elt>(q - 1));
    std::size_t made = 0;
    while (made < 50) {
      Poly a(5), b(5);
      for (auto& x : a) x = coeff(rng);
      for (auto& x : b) x = coeff(rng);
      poly::trim(a);
      poly::trim(b);
      if (b.empty()) continue;
      RatFunc f(F, a, b);
      if (f.degree() != 4 || !is_separable(f)) continue;
      ++made;
      auto bps = branch_points(f);
      std::set<std::pair<unsigned, std::uint64_t>> before, after;
      for (const auto& bp : bps) {
        std::uint64_t v = bp.point.infinite ? ~0ull : bp.point.value;
        std::uint64_t w = bp.point.infinite ? ~0ull : bp.field->frobenius(bp.point.value, 1, *F);
        before.emplace(bp.ext_degree, v);
        after.emplace(bp.ext_degree, w);
      }
      ck.expect(before == after, qs(q) + " Frobenius on branch points of " + to_string(f));
    }
    quartics += made;
  }

  for (auto [q, unused] : kTableOneClasses) {
    (void)unused;
    auto F = Field::of_order(q);
    std::uint64_t g = q * q * q - q;
    std::uint64_t total = 0;
    for (const auto& c : search(F, 4)) {
      std::uint64_t orbit = orbit_size_explicit(c.representative);
      ck.expect(orbit * c.stabilizer == g * g, qs(q) + " orbit x stabilizer for " + to_string(c.representative));
      total += orbit;
    }
    ck.expect(total == count_total_formula(q), qs(q) + " orbit sum");
  }

  std::size_t ore = 0;
  for (auto q : std::vector<std::uint64_t>{2, 3}) {
    auto F = Field::of_order(q);
    const Field& K = *F;
    for (unsigned d = 1; d <= 8; ++d) {
      std::uint64_t total = 1;
      for (unsigned i = 0; i < d; ++i) total *= q;
      for (Elt lead = 1; lead < q; ++lead)
        for (std::uint64_t code = 0; code < total; ++code) {
          Poly L(d + 1);
          std::uint64_t c = code;
          for (unsigned i = 0; i < d; ++i, c /= q) L[i] = static_cast<Elt>(c % q);
          L[d] = lead;
          if (!poly::is_squarefree(K, L)) continue;
          ++ore;
          bool add = is_additive(K, L);
          bool sym = roots_form_group_symbolic(K, L);
          ck.expect(add == sym, qs(q) + " Ore (symbolic) " + to_string(K, L));
          unsigned m = 1;
          for (const auto& [deg, part] : poly::distinct_degree(K, poly::monic(K, L))) m = std::lcm(m, deg);
          std::uint64_t size = 1;
          for (unsigned i = 0; i < m; ++i) size *= q;
          if (size <= (1u << 20)) ck.expect(roots_form_group(F, L, m) == add, qs(q) + " Ore (split) " + to_string(K, L));
        }
    }
  }
  ck.note(std::to_string(quartics) + " random quartics, " + std::to_string(ore) + " squarefree polynomials");
}

struct Spec {
  const char* title;
  void (*run)(Checker&, const AcceptanceOptions&);
  double limit;  // seconds, 0 for none
};

const Spec kSpecs[kCriterionCount] = {
    {"sporadic table reproduction by search", criterion1, 60},
    {"total counts of degree-4 permutations", criterion2, 300},
    {"exceptional class counts and representatives", criterion3, 0},
    {"stabilizer sizes", criterion4, 0},
    {"quartic identities", criterion5, 120},
    {"degree 2 and 3 classification", criterion6, 0},
    {"exceptionality decisions", criterion7, 0},
    {"monodromy filter", criterion8, 120},
    {"property suites", criterion9, 0},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must be 1..9");
  const Spec& spec = kSpecs[id - 1];
  Checker ck;
  auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    spec.run(ck, options);
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double limit = spec.limit;
  if (id == 1 && options.extended) limit = 3600;
  if (!error.empty()) ck.expect(false, "exception: " + error);
  if (limit > 0) ck.expect(secs <= limit, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit) + " s");
  return {id, spec.title, ck.passed(), ck.detail(), secs};
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) continue;
    out.push_back(run_criterion(id, options));
    if (options.progress) {
      const auto& r = out.back();
      *options.progress << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << std::endl;
    }
  }
  return out;
}

}  // namespace prf
