#include "prf/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "prf/errors.hpp"

namespace prf {

namespace {

std::string symbol(unsigned level, unsigned depth) {
  return depth == 1 ? std::string("w") : "w" + std::to_string(level);
}

std::vector<const Field*> tower(const Field& F) {
  std::vector<const Field*> chain;
  for (const Field* f = &F; f; f = f->parent().get()) chain.push_back(f);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += "+";
    s += terms[i];
  }
  return s;
}

std::string term(const std::string& coeff, const std::string& var, std::size_t e) {
  if (e == 0) return coeff;
  std::string mono = var + (e > 1 ? "^" + std::to_string(e) : "");
  if (coeff == "1") return mono;
  if (coeff.find('+') != std::string::npos) return "(" + coeff + ")*" + mono;
  return coeff + "*" + mono;
}

std::string element_string(const Field& F, Elt e, unsigned depth) {
  if (F.is_prime_field()) return std::to_string(e);
  auto c = F.coefficients(e);
  std::string var = symbol(F.depth(), depth);
  std::vector<std::string> terms;
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i]) terms.push_back(term(element_string(*F.parent(), c[i], depth), var, i));
  return join_terms(terms);
}

std::string poly_string(const Field& F, const Poly& p, const std::string& var, unsigned depth) {
  std::vector<std::string> terms;
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i]) terms.push_back(term(element_string(F, p[i], depth), var, i));
  return join_terms(terms);
}

std::string strip_spaces(const std::string& s) {
  std::string r;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) r += ch;
  return r;
}

// Recursive-descent evaluator for expressions over F in one variable.
class ExprParser {
 public:
  ExprParser(FieldPtr F, std::string text, std::string var, std::map<std::string, Elt> symbols)
      : F_(std::move(F)), s_(strip_spaces(text)), var_(std::move(var)), symbols_(std::move(symbols)) {}

  RatFunc parse() {
    if (s_.empty()) fail("empty expression");
    RatFunc r = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    RatFunc r = term();
    if (negate) r = -r;
    for (;;) {
      if (accept('+')) r = r + term();
      else if (accept('-')) r = r - term();
      else return r;
    }
  }

  RatFunc term() {
    RatFunc r = factor();
    for (;;) {
      if (accept('*')) {
        r = r * factor();
      } else if (accept('/')) {
        RatFunc d = factor();
        if (d.num().empty()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc factor() {
    RatFunc base = primary();
    if (!accept('^')) return base;
    long long e = exponent();
    if (e < 0 && base.num().empty()) fail("negative power of zero");
    return power(base, e);
  }

  long long exponent() {
    bool paren = accept('(');
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -v : v;
  }

  RatFunc primary() {
    if (accept('(')) {
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      long long p = F_->characteristic();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = (v * 10 + (s_[pos_++] - '0')) % p;
      return RatFunc::constant(F_, F_->from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (!var_.empty() && (name == var_ || (var_ == "x" && name == "X"))) return RatFunc::identity(F_);
      auto it = symbols_.find(name);
      if (it != symbols_.end()) return RatFunc::constant(F_, it->second);
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected character");
  }

  FieldPtr F_;
  std::string s_;
  std::string var_;
  std::map<std::string, Elt> symbols_;
  std::size_t pos_ = 0;
};

// Generator symbols of the levels below `top` (exclusive) of a tower of
// total depth `depth`.
std::map<std::string, Elt> symbols_below(const std::vector<const Field*>& chain, unsigned top, unsigned depth) {
  std::map<std::string, Elt> sym;
  for (unsigned level = 1; level < top && level < chain.size(); ++level)
    sym[symbol(level, depth)] = chain[level]->generator();
  return sym;
}

std::map<std::string, Elt> element_symbols(const Field& F) {
  auto chain = tower(F);
  return symbols_below(chain, F.depth() + 1, F.depth());
}

}  // namespace

std::string to_string(const Field& F) {
  if (F.is_prime_field()) return "GF(" + std::to_string(F.characteristic()) + ")";
  std::string s = "GF(" + std::to_string(F.characteristic()) + "^" + std::to_string(F.degree()) + ")";
  auto chain = tower(F);
  unsigned depth = F.depth();
  for (unsigned level = 1; level < chain.size(); ++level)
    s += " mod " + poly_string(*chain[level - 1], chain[level]->modulus(), symbol(level, depth), depth);
  return s;
}

FieldPtr parse_field(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.rfind("GF(", 0) != 0) throw ParseError("field must start with GF(: '" + text + "'");
  std::size_t pos = 3;
  auto number = [&]() {
    std::size_t start = pos;
    unsigned long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > (1ull << 40)) throw ParseError("number too large in '" + text + "'");
    }
    if (pos == start) throw ParseError("expected number in '" + text + "'");
    return v;
  };
  unsigned long long p = number(), k = 1;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    k = number();
  }
  if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')' in '" + text + "'");
  ++pos;
  if (k == 1 && !is_prime_number(p)) {
    auto [pp, kk] = prime_power(p);
    if (!pp) throw ParseError("field order is not a prime power: '" + text + "'");
    p = pp;
    k = kk;
  }
  if (!is_prime_number(p) || k == 0) throw ParseError("invalid field order in '" + text + "'");

  std::vector<std::string> clauses;
  std::string rest = s.substr(pos);
  while (!rest.empty()) {
    if (rest.rfind("mod", 0) != 0) throw ParseError("expected 'mod' clause in '" + text + "'");
    rest = rest.substr(3);
    std::size_t next = rest.find("mod");
    clauses.push_back(rest.substr(0, next));
    rest = next == std::string::npos ? "" : rest.substr(next);
  }
  try {
    if (clauses.empty()) return Field::gf(static_cast<unsigned>(p), static_cast<unsigned>(k));
    unsigned depth = static_cast<unsigned>(clauses.size());
    std::vector<const Field*> chain;
    FieldPtr level = Field::prime(static_cast<unsigned>(p));
    chain.push_back(level.get());
    for (unsigned l = 1; l <= depth; ++l) {
      ExprParser parser(level, clauses[l - 1], symbol(l, depth), symbols_below(chain, l, depth));
      RatFunc m = parser.parse();
      if (!m.is_polynomial() || m.den() != Poly{1}) throw ParseError("modulus must be a polynomial: '" + text + "'");
      if (poly::deg(m.num()) < 2 || m.num().back() != 1)
        throw ParseError("modulus must be monic of degree at least 2: '" + text + "'");
      level = Field::extend(level, m.num());
      chain.push_back(level.get());
    }
    if (level->degree() != k) throw ParseError("moduli do not multiply to the stated degree: '" + text + "'");
    return level;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": '" + text + "'");
  }
}

std::string to_string(const Field& F, Elt e) { return element_string(F, e, F.depth()); }

Elt parse_element(const Field& F, const std::string& text) {
  ExprParser parser(F.ptr(), text, "", element_symbols(F));
  RatFunc r = parser.parse();
  if (r.degree() > 0) throw ParseError("not a field element: '" + text + "'");
  return r.num().empty() ? 0 : r.num()[0];
}

std::string to_string(const Field& F, const Poly& p, const std::string& var) {
  return poly_string(F, p, var, F.depth());
}

Poly parse_poly(const FieldPtr& F, const std::string& text) {
  ExprParser parser(F, text, "x", element_symbols(*F));
  RatFunc r = parser.parse();
  if (!r.is_polynomial()) throw ParseError("not a polynomial: '" + text + "'");
  return r.num();
}

std::string to_string(const RatFunc& f) {
  const Field& F = *f.field();
  if (f.is_polynomial()) return to_string(F, f.num());
  return "(" + to_string(F, f.num()) + ")/(" + to_string(F, f.den()) + ")";
}

RatFunc parse_ratfunc(const FieldPtr& F, const std::string& text) {
  ExprParser parser(F, text, "x", element_symbols(*F));
  return parser.parse();
}

std::string to_string(const Moebius& mu) { return to_string(mu.to_ratfunc()); }

std::string to_string(const Field& F, const ProjPoint& x) {
  return x.infinite ? std::string("inf") : to_string(F, x.value);
}

}  // namespace prf
