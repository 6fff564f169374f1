#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

namespace prf {

// Field elements are indices into their field. An element of an extension
// E = K[w]/(m) with coefficient vector (c_0, ..., c_{d-1}) over K has index
// sum c_i |K|^i, so every element of K keeps its index inside E.
using Elt = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Image of a sibling subfield inside a larger extension of the same base.
struct SubfieldEmbedding {
  FieldPtr sub;
  std::vector<Elt> image;                    // indexed by sub element
  std::unordered_map<Elt, Elt> preimage;     // inverse of image
};

class Field : public std::enable_shared_from_this<Field> {
  struct Passkey {};

 public:
  static FieldPtr prime(unsigned p);
  static FieldPtr gf(unsigned p, unsigned k);
  // q must be a prime power.
  static FieldPtr of_order(std::uint64_t q);
  // Extension of parent by a monic irreducible modulus (constant term first).
  static FieldPtr extend(const FieldPtr& parent, std::vector<Elt> modulus);

  Field(Passkey, unsigned p);
  Field(Passkey, FieldPtr parent, std::vector<Elt> modulus);

  // Degree-d extension by the lex-least monic irreducible polynomial.
  FieldPtr extension(unsigned d) const;
  FieldPtr ptr() const { return shared_from_this(); }

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  unsigned relative_degree() const noexcept { return d_; }
  std::uint32_t size() const noexcept { return size_; }
  const FieldPtr& parent() const noexcept { return parent_; }
  const std::vector<Elt>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return !parent_; }
  unsigned depth() const noexcept { return depth_; }
  bool has_tables() const noexcept { return !exp_.empty(); }

  // True when base is this field or one of its tower ancestors.
  bool lies_over(const Field& base) const noexcept;
  unsigned degree_over(const Field& base) const;

  Elt from_int(long long v) const noexcept;
  // Class of the polynomial variable; only meaningful for extensions.
  Elt generator() const;

  Elt add(Elt a, Elt b) const noexcept;
  Elt neg(Elt a) const noexcept;
  Elt sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }
  Elt mul(Elt a, Elt b) const noexcept;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const noexcept;

  // e^(|base|^i)
  Elt frobenius(Elt e, unsigned i, const Field& base) const;
  Elt trace(Elt e, const Field& base) const;
  bool is_square(Elt e) const noexcept;
  Elt embed(Elt e, const Field& from) const;

  std::vector<Elt> coefficients(Elt e) const;
  Elt from_coefficients(std::span<const Elt> c) const;

  // Canonical order: coefficient vectors compared lexicographically from the
  // constant term upward, recursively down the tower.
  std::uint32_t rank(Elt e) const noexcept;
  Elt unrank(std::uint32_t r) const noexcept;
  bool less(Elt a, Elt b) const noexcept { return rank(a) < rank(b); }

  // Embedding of sub (an extension of the same parent, degree dividing ours)
  // sending its generator to the least root of its modulus.
  const SubfieldEmbedding& subfield_embedding(const Field& sub) const;

 private:
  Elt mul_slow(Elt a, Elt b) const;
  Elt pow_slow(Elt a, std::uint64_t e) const;
  Elt add_digits(Elt a, Elt b) const noexcept;
  Elt neg_digits(Elt a) const noexcept;
  Elt mul_linear(Elt x, Elt c) const;
  void build_tables();

  unsigned p_ = 0;
  unsigned k_ = 1;
  unsigned d_ = 1;
  unsigned depth_ = 0;
  std::uint32_t size_ = 0;
  FieldPtr parent_;
  std::vector<Elt> modulus_;

  std::vector<Elt> exp_;             // size 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;  // log(1 + g^i), odd non-prime fields
  std::uint32_t log_minus_one_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::map<unsigned, FieldPtr> extensions_;
  mutable std::map<const Field*, std::unique_ptr<SubfieldEmbedding>> embeddings_;
};

// Lex-least monic irreducible polynomial of degree d over base.
std::vector<Elt> find_irreducible(const Field& base, unsigned d);

bool is_prime_number(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Returns (p, k) with q = p^k, or (0, 0) if q is not a prime power.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);

}  // namespace prf
