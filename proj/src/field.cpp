#include "prf/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "prf/errors.hpp"
#include "prf/poly.hpp"

namespace prf {

namespace {

// Fields up to this size get log/antilog tables.
constexpr std::uint32_t kTableLimit = 1u << 22;
constexpr std::uint32_t kNoLog = 0xffffffffu;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_int(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

struct Registry {
  std::mutex mutex;
  std::map<std::pair<const Field*, std::vector<Elt>>, FieldPtr> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  auto f = prime_factors(q);
  if (f.size() != 1) return {0, 0};
  unsigned k = 0;
  while (q > 1) {
    q /= f[0];
    ++k;
  }
  return {static_cast<unsigned>(f[0]), k};
}

FieldPtr Field::prime(unsigned p) {
  if (!is_prime_number(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (p >= kTableLimit) throw std::invalid_argument("characteristic too large");
  auto& reg = registry();
  std::pair<const Field*, std::vector<Elt>> key{nullptr, {p}};
  {
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second;
  }
  auto f = std::make_shared<Field>(Passkey{}, p);
  std::lock_guard<std::mutex> lock(reg.mutex);
  auto [it, inserted] = reg.fields.emplace(key, f);
  return it->second;
}

FieldPtr Field::gf(unsigned p, unsigned k) {
  if (k == 0) throw std::invalid_argument("field degree must be positive");
  auto base = prime(p);
  return k == 1 ? base : base->extension(k);
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return gf(p, k);
}

FieldPtr Field::extend(const FieldPtr& parent, std::vector<Elt> modulus) {
  poly::trim(modulus);
  if (poly::deg(modulus) < 1 || modulus.back() != 1)
    throw std::invalid_argument("modulus must be monic of positive degree");
  for (Elt c : modulus)
    if (c >= parent->size()) throw std::invalid_argument("modulus coefficient outside parent field");
  if (poly::deg(modulus) == 1) return parent;
  auto& reg = registry();
  std::pair<const Field*, std::vector<Elt>> key{parent.get(), modulus};
  {
    std::lock_guard<std::mutex> lock(reg.mutex);
    auto it = reg.fields.find(key);
    if (it != reg.fields.end()) return it->second;
  }
  if (!poly::is_irreducible(*parent, modulus)) throw std::invalid_argument("modulus is reducible");
  auto f = std::make_shared<Field>(Passkey{}, parent, modulus);
  std::lock_guard<std::mutex> lock(reg.mutex);
  auto [it, inserted] = reg.fields.emplace(key, f);
  return it->second;
}

Field::Field(Passkey, unsigned p) : p_(p), k_(1), d_(1), depth_(0), size_(p) {
  build_tables();
}

Field::Field(Passkey, FieldPtr parent, std::vector<Elt> modulus)
    : p_(parent->p_), parent_(std::move(parent)), modulus_(std::move(modulus)) {
  d_ = static_cast<unsigned>(modulus_.size() - 1);
  k_ = parent_->k_ * d_;
  depth_ = parent_->depth_ + 1;
  std::uint64_t s = 1;
  for (unsigned i = 0; i < d_; ++i) {
    s *= parent_->size_;
    if (s >= (1ull << 31)) throw std::invalid_argument("field too large");
  }
  size_ = static_cast<std::uint32_t>(s);
  if (size_ <= kTableLimit) build_tables();
}

FieldPtr Field::extension(unsigned d) const {
  if (d == 0) throw std::invalid_argument("extension degree must be positive");
  if (d == 1) return ptr();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = extensions_.find(d);
    if (it != extensions_.end()) return it->second;
  }
  auto m = find_irreducible(*this, d);
  auto f = extend(ptr(), m);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  extensions_.emplace(d, f);
  return f;
}

bool Field::lies_over(const Field& base) const noexcept {
  for (const Field* f = this; f; f = f->parent_.get())
    if (f == &base) return true;
  return false;
}

unsigned Field::degree_over(const Field& base) const {
  if (!lies_over(base)) throw std::invalid_argument("field does not lie over the given base");
  return k_ / base.k_;
}

Elt Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

Elt Field::generator() const {
  if (!parent_) throw std::logic_error("prime field has no generator");
  return parent_->size_;
}

Elt Field::add_digits(Elt a, Elt b) const noexcept {
  if (p_ == 2) return a ^ b;
  Elt r = 0, place = 1;
  while (a || b) {
    Elt s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Elt Field::neg_digits(Elt a) const noexcept {
  if (p_ == 2) return a;
  Elt r = 0, place = 1;
  while (a) {
    Elt c = a % p_;
    if (c) r += (p_ - c) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Elt Field::add(Elt a, Elt b) const noexcept {
  if (!parent_) {
    Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  if (!zech_.empty()) {
    if (!a) return b;
    if (!b) return a;
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t order = size_ - 1;
    std::uint32_t diff = lb >= la ? lb - la : lb + order - la;
    std::uint32_t z = zech_[diff];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  return add_digits(a, b);
}

Elt Field::neg(Elt a) const noexcept {
  if (!a) return 0;
  if (!parent_) return p_ - a;
  if (p_ == 2) return a;
  if (has_tables()) return exp_[log_[a] + log_minus_one_];
  return neg_digits(a);
}

Elt Field::mul(Elt a, Elt b) const noexcept {
  if (!a || !b) return 0;
  if (has_tables()) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

Elt Field::inv(Elt a) const {
  if (!a) throw std::domain_error("inverse of zero");
  if (has_tables()) {
    std::uint32_t order = size_ - 1;
    return exp_[(order - log_[a]) % order];
  }
  return pow_slow(a, size_ - 2);
}

Elt Field::pow(Elt a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (!a) return 0;
  if (has_tables()) {
    std::uint64_t order = size_ - 1;
    return exp_[mulmod(log_[a], e % order, order)];
  }
  return pow_slow(a, e);
}

Elt Field::pow_slow(Elt a, std::uint64_t e) const {
  Elt r = 1;
  while (e) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

Elt Field::mul_slow(Elt a, Elt b) const {
  if (!a || !b) return 0;
  if (!parent_) return static_cast<Elt>((static_cast<std::uint64_t>(a) * b) % p_);
  const Field& P = *parent_;
  auto x = coefficients(a), y = coefficients(b);
  std::vector<Elt> prod(2 * d_ - 1, 0);
  for (unsigned i = 0; i < d_; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < d_; ++j) prod[i + j] = P.add(prod[i + j], P.mul(x[i], y[j]));
  }
  for (unsigned i = 2 * d_ - 2; i >= d_; --i) {
    Elt c = prod[i];
    if (!c) continue;
    for (unsigned j = 0; j < d_; ++j) prod[i - d_ + j] = P.sub(prod[i - d_ + j], P.mul(c, modulus_[j]));
  }
  return from_coefficients(std::span<const Elt>(prod.data(), d_));
}

// x * (w + c), used to walk powers of a primitive element of that shape.
Elt Field::mul_linear(Elt x, Elt c) const {
  const Field& P = *parent_;
  auto v = coefficients(x);
  std::vector<Elt> u(d_ + 1, 0);
  for (unsigned i = 0; i < d_; ++i) {
    u[i + 1] = P.add(u[i + 1], v[i]);
    u[i] = P.add(u[i], P.mul(c, v[i]));
  }
  Elt top = u[d_];
  if (top)
    for (unsigned j = 0; j < d_; ++j) u[j] = P.sub(u[j], P.mul(top, modulus_[j]));
  return from_coefficients(std::span<const Elt>(u.data(), d_));
}

void Field::build_tables() {
  std::uint32_t order = size_ - 1;
  log_.assign(size_, kNoLog);
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  auto factors = prime_factors(order);
  auto is_primitive = [&](Elt g) {
    if (!g) return false;
    for (auto r : factors)
      if (pow_slow(g, order / r) == 1) return false;
    return true;
  };
  Elt g = 0;
  bool linear = false;
  if (parent_) {
    for (Elt c = 0; c < parent_->size_ && !g; ++c) {
      Elt cand = parent_->size_ + c;
      if (is_primitive(cand)) {
        g = cand;
        linear = true;
      }
    }
  }
  for (Elt cand = 1; !g && cand < size_; ++cand)
    if (is_primitive(cand)) g = cand;
  Elt x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = exp_[i + order] = x;
    log_[x] = i;
    x = linear ? mul_linear(x, g - parent_->size_) : mul_slow(x, g);
  }
  if (x != 1) throw std::logic_error("primitive element walk did not close");
  log_minus_one_ = p_ == 2 ? 0 : order / 2;
  if (parent_ && p_ != 2) {
    zech_.assign(order, kNoLog);
    for (std::uint32_t i = 0; i < order; ++i) {
      Elt s = add_digits(exp_[i], 1);
      if (s) zech_[i] = log_[s];
    }
  }
}

Elt Field::frobenius(Elt e, unsigned i, const Field& base) const {
  if (!lies_over(base)) throw std::invalid_argument("frobenius: base is not a subfield in the tower");
  if (e >= size_) throw std::out_of_range("element outside field");
  if (!e) return 0;
  std::uint64_t order = size_ - 1;
  return pow(e, powmod_int(base.size_, i, order));
}

Elt Field::trace(Elt e, const Field& base) const {
  unsigned m = degree_over(base);
  Elt s = 0;
  for (unsigned i = 0; i < m; ++i) s = add(s, frobenius(e, i, base));
  if (s >= base.size_) throw VerificationFailure("trace left the base field");
  return s;
}

bool Field::is_square(Elt e) const noexcept {
  if (p_ == 2 || !e) return true;
  return pow(e, (size_ - 1) / 2) == 1;
}

Elt Field::embed(Elt e, const Field& from) const {
  if (!lies_over(from)) throw std::invalid_argument("embed: target is not an extension of the source");
  if (e >= from.size_) throw std::out_of_range("element outside source field");
  return e;
}

std::vector<Elt> Field::coefficients(Elt e) const {
  if (!parent_) return {e};
  std::vector<Elt> c(d_);
  Elt q = parent_->size_;
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = e % q;
    e /= q;
  }
  return c;
}

Elt Field::from_coefficients(std::span<const Elt> c) const {
  if (!parent_) return c.empty() ? 0 : c[0];
  Elt r = 0;
  Elt q = parent_->size_;
  for (std::size_t i = std::min<std::size_t>(c.size(), d_); i-- > 0;) r = r * q + c[i];
  return r;
}

std::uint32_t Field::rank(Elt e) const noexcept {
  if (!parent_) return e;
  Elt q = parent_->size_;
  std::uint32_t r = 0;
  for (unsigned i = 0; i < d_; ++i) {
    r = r * q + parent_->rank(e % q);
    e /= q;
  }
  return r;
}

Elt Field::unrank(std::uint32_t r) const noexcept {
  if (!parent_) return r;
  Elt q = parent_->size_;
  std::vector<Elt> c(d_);
  for (unsigned i = d_; i-- > 0;) {
    c[i] = parent_->unrank(r % q);
    r /= q;
  }
  return from_coefficients(c);
}

const SubfieldEmbedding& Field::subfield_embedding(const Field& sub) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = embeddings_.find(&sub);
    if (it != embeddings_.end()) return *it->second;
  }
  auto emb = std::make_unique<SubfieldEmbedding>();
  emb->sub = sub.ptr();
  emb->image.resize(sub.size_);
  if (lies_over(sub)) {
    for (Elt e = 0; e < sub.size_; ++e) emb->image[e] = e;
  } else {
    if (!sub.parent_ || sub.parent_ != parent_ || d_ % sub.d_ != 0)
      throw std::invalid_argument("subfield_embedding: fields are not comparable siblings");
    auto rts = poly::roots(*this, sub.modulus_);
    if (rts.empty()) throw std::logic_error("subfield modulus has no root in the extension");
    Elt theta = rts.front();
    std::vector<Elt> powers(sub.d_);
    powers[0] = 1;
    for (unsigned i = 1; i < sub.d_; ++i) powers[i] = mul(powers[i - 1], theta);
    for (Elt e = 0; e < sub.size_; ++e) {
      auto c = sub.coefficients(e);
      Elt v = 0;
      for (unsigned i = 0; i < sub.d_; ++i) v = add(v, mul(c[i], powers[i]));
      emb->image[e] = v;
    }
  }
  for (Elt e = 0; e < sub.size_; ++e) emb->preimage.emplace(emb->image[e], e);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = embeddings_.emplace(&sub, std::move(emb));
  return *it->second;
}

namespace {

// Cheap necessary test: a root among the first few elements means reducible.
bool has_small_root(const Field& base, const Poly& f) {
  if (f[0] == 0) return true;
  Elt limit = std::min<Elt>(base.size(), 64);
  for (Elt x = 1; x < limit; ++x)
    if (poly::eval(base, f, x) == 0) return true;
  return false;
}

}  // namespace

std::vector<Elt> find_irreducible(const Field& base, unsigned d) {
  if (d == 0) throw std::invalid_argument("degree must be positive");
  std::uint64_t q = base.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) {
    total *= q;
    if (total > (1ull << 40)) {
      total = 1ull << 40;
      break;
    }
  }
  Poly f(d + 1, 0);
  f[d] = 1;
  for (std::uint64_t counter = 0; counter < total; ++counter) {
    // c_0 is the most significant digit of the counter.
    std::uint64_t c = counter;
    for (unsigned i = d; i-- > 0;) {
      f[i] = base.unrank(static_cast<std::uint32_t>(c % q));
      c /= q;
    }
    if (d >= 2 && has_small_root(base, f)) continue;
    if (poly::is_irreducible(base, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace prf
