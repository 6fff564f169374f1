#pragma once

#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

namespace prf::mono {

constexpr unsigned kMaxDegree = 6;
constexpr std::size_t kMaxOrder = 720;

// Images of 0..n-1.
using Perm = std::vector<std::uint8_t>;
using ElemSet = std::bitset<kMaxOrder>;

// S_n with elements indexed in lexicographic order of their image arrays;
// index 0 is the identity. mul(a, b) is a o b, acting on points.
class SymmetricGroup {
 public:
  static const SymmetricGroup& get(unsigned n);

  unsigned degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return perms_.size(); }
  const Perm& perm(std::size_t i) const { return perms_[i]; }
  std::size_t index(const Perm& p) const;
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * perms_.size() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  unsigned apply(std::size_t a, unsigned x) const { return perms_[a][x]; }
  bool is_even(std::size_t a) const { return even_[a]; }

  explicit SymmetricGroup(unsigned n);

 private:
  unsigned n_;
  std::vector<Perm> perms_;
  std::vector<std::uint16_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<bool> even_;
};

struct Subgroup {
  unsigned n;
  ElemSet elems;
  std::vector<std::size_t> gens;  // greedy generating set, increasing indices
  std::size_t order() const { return elems.count(); }
  bool contains(std::size_t g) const { return elems.test(g); }
  std::vector<std::size_t> elements() const;
  bool operator==(const Subgroup& o) const { return n == o.n && elems == o.elems; }
};

// Smallest subgroup containing the given elements.
Subgroup closure(unsigned n, const std::vector<std::size_t>& generators);
Subgroup subgroup_from_elements(unsigned n, const ElemSet& elems);

// Every subgroup of S_n, sorted by order then by element set.
std::vector<Subgroup> all_subgroups(unsigned n);

std::vector<std::vector<unsigned>> orbits(const Subgroup& H);
bool is_transitive(const Subgroup& H);
Subgroup point_stabilizer(const Subgroup& H, unsigned point);
bool is_subgroup_of(const Subgroup& H, const Subgroup& K);
bool is_normal(const Subgroup& G, const Subgroup& A);
// A/G cyclic: some a in A with <G, a> = A. Requires G normal in A.
bool is_cyclic_quotient(const Subgroup& A, const Subgroup& G);
// Orbits of the point stabilizers A_1 and G_1 (of point 0) that coincide.
std::size_t common_stabilizer_orbits(const Subgroup& A, const Subgroup& G);

// Via minimal block systems. Requires H transitive.
bool is_primitive(const Subgroup& H);
// No subgroup strictly between H_1 and H, scanning the given list.
bool is_primitive_by_definition(const Subgroup& H, const std::vector<Subgroup>& subgroups);

bool is_alternating_or_symmetric(const Subgroup& H);

Subgroup conjugate(const Subgroup& H, std::size_t s);  // s H s^-1

struct GroupPair {
  unsigned n;
  Subgroup A, G;
  bool A_primitive;
  bool A_alt_or_sym;
};

// Pairs (A, G) with A transitive (primitive if asked; not A_n or S_n when
// n >= 5), G a proper nontrivial transitive normal subgroup with A/G cyclic,
// and A_1, G_1 sharing exactly one orbit.
std::vector<GroupPair> filter(unsigned n, bool require_primitive);

// One pair per simultaneous S_n-conjugacy class, first in list order.
std::vector<GroupPair> up_to_conjugacy(const std::vector<GroupPair>& pairs);
bool pairs_conjugate(const GroupPair& x, const GroupPair& y);

// Cycle notation on points 1..n, "()" for the identity.
std::string cycle_string(const Perm& p);
std::string describe(const Subgroup& H);

}  // namespace prf::mono
