#include "prf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "prf/acceptance.hpp"
#include "prf/classify.hpp"
#include "prf/errors.hpp"
#include "prf/families.hpp"
#include "prf/monodromy.hpp"
#include "prf/parallel.hpp"
#include "prf/permtest.hpp"
#include "prf/text.hpp"

namespace prf {

namespace {

using Json = nlohmann::ordered_json;

struct FieldSpec {
  std::uint64_t q = 0;
  unsigned p = 0, k = 1;
  std::string mod;

  void add_to(CLI::App* app) {
    app->add_option("--q", q, "field order (prime power)");
    app->add_option("--p", p, "characteristic");
    app->add_option("--k", k, "extension degree over F_p");
    app->add_option("--mod", mod, "modulus of F_{p^k} over F_p in w");
  }

  FieldPtr build() const {
    std::string text;
    if (q) {
      if (p) throw ParseError("give either --q or --p/--k, not both");
      text = "GF(" + std::to_string(q) + ")";
    } else if (p) {
      text = "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    } else {
      throw ParseError("a field is required: --q or --p [--k]");
    }
    if (!mod.empty()) text += " mod " + mod;
    return parse_field(text);
  }
};

struct Config {
  FieldSpec field;
  std::string f;
  unsigned window = 12;
  std::uint64_t budget = kDefaultBudget;
  unsigned n = 4;
  bool extended = false;
  bool primitive = false;
  bool up_to_conjugacy = false;
  bool bruteforce = false;
  bool list_pairs = false;
  std::string family_kind;
  std::string delta;
  std::string alpha, beta;
  std::vector<std::string> coeffs;
  unsigned row = 0;
  std::vector<int> only;
  std::string out_path;
  unsigned workers = 0;
};

std::string tag_detail(const FamilyTag& tag, const Field& F) {
  struct Visitor {
    const Field& F;
    std::string operator()(const Linear&) const { return "Linear"; }
    std::string operator()(const PowerMap& t) const { return "PowerMap{n=" + std::to_string(t.n) + "}"; }
    std::string operator()(const Redei& t) const {
      return "Redei{n=" + std::to_string(t.n) + ", delta=" + to_string(*F.extension(2), t.delta) + "}";
    }
    std::string operator()(const Additive& t) const {
      std::string s = "Additive{";
      for (std::size_t i = 0; i < t.coeffs.size(); ++i) s += (i ? ", " : "") + to_string(F, t.coeffs[i]);
      return s + "}";
    }
    std::string operator()(const QuarticExceptional& t) const {
      return "QuarticExceptional{alpha=" + to_string(F, t.alpha) + ", beta=" + to_string(F, t.beta) + "}";
    }
    std::string operator()(const TableOne& t) const {
      std::string s = "TableOne{q=" + std::to_string(t.q) + ", row=" + std::to_string(t.row);
      if (t.parameter) s += ", parameter=" + to_string(F, *t.parameter);
      return s + "}";
    }
  };
  return std::visit(Visitor{F}, tag);
}

Json verdict_json(const ExceptionalityVerdict& v) {
  Json j;
  if (auto* e = std::get_if<Exceptional>(&v)) {
    j["verdict"] = "Exceptional";
    j["ell"] = e->ell;
    j["by_classification"] = e->by_classification;
    if (!e->family.empty()) j["family"] = e->family;
  } else if (auto* n = std::get_if<NotExceptional>(&v)) {
    j["verdict"] = "NotExceptional";
    j["failing_ell"] = n->failing_ell;
    if (!n->family.empty()) j["family"] = n->family;
  } else {
    j["verdict"] = "Undetermined";
    j["tested"] = std::get<Undetermined>(v).tested;
  }
  return j;
}

Json group_json(const mono::Subgroup& H) {
  const auto& S = mono::SymmetricGroup::get(H.n);
  Json gens = Json::array();
  for (auto g : H.gens) gens.push_back(mono::cycle_string(S.perm(g)));
  return Json{{"order", H.order()}, {"generators", gens}};
}

class Runner {
 public:
  Runner(const Config& c, std::ostream& out, std::ostream& err) : c_(c), out_(out), err_(err) {}

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  int exceptional() {
    auto F = c_.field.build();
    RatFunc f = parse_ratfunc(F, c_.f);
    Json j{{"field", to_string(*F)}, {"f", to_string(f)}};
    j.update(verdict_json(decide_exceptional(f, c_.window, c_.budget)));
    emit(j);
    return 0;
  }

  int classify_cmd() {
    auto F = c_.field.build();
    RatFunc f = parse_ratfunc(F, c_.f);
    auto r = classify(f);
    Json j{{"field", to_string(*F)}, {"f", to_string(f)}, {"permutation", r.has_value()}};
    if (r) {
      j["family"] = family_name(r->family);
      j["tag"] = tag_detail(r->family, *F);
      j["representative"] = to_string(r->representative);
      j["mu"] = to_string(r->mu);
      j["nu"] = to_string(r->nu);
      j["exceptional"] = r->exceptional;
      j["witness_verified"] = compose(r->mu, compose(r->representative, r->nu)) == f;
      j["stabilizer"] = stabilizer(f, c_.budget).size();
    }
    emit(j);
    return r && !j["witness_verified"].get<bool>() ? 1 : 0;
  }

  int stabilizer_cmd() {
    auto F = c_.field.build();
    RatFunc f = parse_ratfunc(F, c_.f);
    auto s = stabilizer(f, c_.budget);
    Json j{{"field", to_string(*F)}, {"f", to_string(f)}, {"size", s.size()}};
    if (c_.list_pairs) {
      Json pairs = Json::array();
      for (const auto& [mu, nu] : s.pairs) pairs.push_back(Json::array({to_string(mu), to_string(nu)}));
      j["pairs"] = pairs;
    }
    emit(j);
    return 0;
  }

  int search_cmd() {
    auto F = c_.field.build();
    auto classes = search(F, c_.n, c_.extended);
    std::size_t nonexc = 0;
    for (const auto& cl : classes) {
      nonexc += !cl.classification.exceptional;
      emit(Json{{"q", F->size()},
                {"n", c_.n},
                {"representative", to_string(cl.representative)},
                {"family", family_name(cl.classification.family)},
                {"tag", tag_detail(cl.classification.family, *F)},
                {"exceptional", cl.classification.exceptional},
                {"stabilizer", cl.stabilizer},
                {"orbit", cl.orbit},
                {"slice_members", cl.slice_members}});
    }
    err_ << classes.size() << " classes, " << nonexc << " non-exceptional\n";
    return 0;
  }

  int count_cmd() {
    auto F = c_.field.build();
    std::uint64_t q = F->size();
    std::uint64_t formula = count_total_formula(q);
    std::uint64_t assembled = count_total(F, c_.extended);
    Json j{{"q", q}, {"formula", formula}, {"assembled", assembled}};
    bool ok = formula == assembled;
    if (q <= 8 || c_.bruteforce) {
      std::uint64_t brute = count_total_bruteforce(F);
      j["bruteforce"] = brute;
      ok = ok && brute == formula;
    }
    j["agree"] = ok;
    emit(j);
    return ok ? 0 : 1;
  }

  int family_cmd() {
    auto F = c_.field.build();
    const Field& K = *F;
    auto elt = [&](const std::string& s) { return parse_element(K, s); };
    std::vector<std::pair<std::string, RatFunc>> made;
    const std::string& kind = c_.family_kind;
    if (kind == "redei") {
      auto E = F->extension(2);
      Elt d = c_.delta.empty() ? E->generator() : parse_element(*E, c_.delta);
      made.emplace_back("Redei", redei(F, c_.n, d));
    } else if (kind == "quartic") {
      if (c_.alpha.empty() || c_.beta.empty()) throw ParseError("family quartic needs --alpha and --beta");
      made.emplace_back("QuarticExceptional", quartic_exceptional(F, elt(c_.alpha), elt(c_.beta)));
    } else if (kind == "additive") {
      if (c_.coeffs.empty()) throw ParseError("family additive needs --coeffs");
      std::vector<Elt> cs;
      for (const auto& s : c_.coeffs) cs.push_back(elt(s));
      made.emplace_back("Additive", RatFunc::polynomial(F, additive(K, cs)));
    } else if (kind == "table1") {
      for (const auto& e : table1(F))
        if (!c_.row || e.row == c_.row) made.emplace_back("TableOne", e.f);
    } else {
      throw ParseError("unknown family '" + kind + "' (redei, quartic, additive, table1)");
    }
    bool ok = true;
    for (const auto& [name, f] : made) {
      Json j{{"family", name}, {"field", to_string(K)}, {"f", to_string(f)}, {"degree", f.degree()}};
      bool perm = is_permutation(f, 1, c_.budget);
      j["permutation"] = perm;
      if (f.degree() <= 4 && perm) {
        auto r = classify(f);
        bool match = r && family_name(r->family) == name &&
                     compose(r->mu, compose(r->representative, r->nu)) == f;
        j["classified_as"] = r ? tag_detail(r->family, K) : "none";
        j["classification_matches"] = match;
        ok = ok && match;
      }
      j.update(verdict_json(decide_exceptional(f, c_.window, c_.budget)));
      ok = ok && perm;
      emit(j);
    }
    return ok ? 0 : 1;
  }

  int monodromy_cmd() {
    auto pairs = mono::filter(c_.n, c_.primitive);
    if (c_.up_to_conjugacy) pairs = mono::up_to_conjugacy(pairs);
    for (const auto& pr : pairs)
      emit(Json{{"n", pr.n},
                {"A", group_json(pr.A)},
                {"G", group_json(pr.G)},
                {"A_primitive", pr.A_primitive},
                {"A_alternating_or_symmetric", pr.A_alt_or_sym}});
    err_ << pairs.size() << " pairs\n";
    return 0;
  }

  int verify_all() {
    AcceptanceOptions opt;
    opt.extended = c_.extended;
    opt.only = c_.only;
    opt.progress = &err_;
    bool ok = true;
    for (const auto& r : run_acceptance(opt)) {
      ok = ok && r.passed;
      emit(Json{{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return ok ? 0 : 1;
  }

 private:
  const Config& c_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"permutation rational functions over finite fields"};
  app.require_subcommand(1);
  app.add_option("--workers", c.workers, "worker threads (default: hardware concurrency)");
  app.add_option("--out", c.out_path, "write JSON lines to this file");

  auto* exc = app.add_subcommand("exceptional", "decide exceptionality of f");
  auto* cls = app.add_subcommand("classify", "classify a permutation of degree <= 4");
  auto* stb = app.add_subcommand("stabilizer", "pairs (mu, nu) with mu o f o nu = f");
  for (auto* s : {exc, cls, stb}) {
    c.field.add_to(s);
    s->add_option("--f", c.f, "rational function in x")->required();
    s->add_option("--budget", c.budget, "work budget");
  }
  exc->add_option("--window", c.window, "extension degrees tested");
  stb->add_flag("--list", c.list_pairs, "print every pair");

  auto* sch = app.add_subcommand("search", "equivalence classes of degree-n permutations");
  c.field.add_to(sch);
  sch->add_option("--n", c.n, "degree")->check(CLI::Range(1, 4));
  sch->add_flag("--extended", c.extended, "allow the extended field range");

  auto* cnt = app.add_subcommand("count", "number of degree-4 permutations three ways");
  c.field.add_to(cnt);
  cnt->add_flag("--extended", c.extended, "allow the extended field range");
  cnt->add_flag("--bruteforce", c.bruteforce, "brute force also for q > 8");

  auto* fam = app.add_subcommand("family", "construct and verify a family member");
  c.field.add_to(fam);
  fam->add_option("kind", c.family_kind, "redei, quartic, additive or table1")->required();
  fam->add_option("--n", c.n, "Redei degree");
  fam->add_option("--delta", c.delta, "Redei parameter in F_{q^2}");
  fam->add_option("--alpha", c.alpha, "quartic alpha");
  fam->add_option("--beta", c.beta, "quartic beta");
  fam->add_option("--coeffs", c.coeffs, "additive coefficients of X, X^p, X^(p^2), ...")->delimiter(',');
  fam->add_option("--row", c.row, "sporadic table row (default all)");
  fam->add_option("--window", c.window, "extension degrees tested");
  fam->add_option("--budget", c.budget, "work budget");

  auto* mon = app.add_subcommand("monodromy", "group pairs (A, G) passing the filter");
  mon->add_option("--n", c.n, "degree")->check(CLI::Range(1, 6));
  mon->add_flag("--primitive", c.primitive, "require A primitive");
  mon->add_flag("--up-to-conjugacy", c.up_to_conjugacy, "one pair per conjugacy class");

  auto* all = app.add_subcommand("verify-all", "run the acceptance criteria");
  all->add_flag("--extended", c.extended, "extended field range for the search criterion");
  all->add_option("--only", c.only, "criteria to run")->delimiter(',')->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (fam->parsed() && c.family_kind == "redei" && fam->count("--n") == 0) c.n = 3;
  if (c.workers) set_worker_count(c.workers);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "error: cannot open " << c.out_path << '\n';
      return 2;
    }
    sink = &file;
  }
  Runner r(c, *sink, err);
  try {
    if (exc->parsed()) return r.exceptional();
    if (cls->parsed()) return r.classify_cmd();
    if (stb->parsed()) return r.stabilizer_cmd();
    if (sch->parsed()) return r.search_cmd();
    if (cnt->parsed()) return r.count_cmd();
    if (fam->parsed()) return r.family_cmd();
    if (mon->parsed()) return r.monodromy_cmd();
    if (all->parsed()) return r.verify_all();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace prf
