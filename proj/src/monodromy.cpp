#include "prf/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace prf::mono {

namespace {

void check_degree(unsigned n) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("permutation degree must be 1..6");
}

bool elemset_less(const ElemSet& a, const ElemSet& b) {
  for (std::size_t i = 0; i < kMaxOrder; ++i)
    if (a[i] != b[i]) return b[i];
  return false;
}

}  // namespace

SymmetricGroup::SymmetricGroup(unsigned n) : n_(n) {
  check_degree(n);
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t N = perms_.size();
  table_.resize(N * N);
  inverse_.resize(N);
  even_.resize(N);
  for (std::size_t a = 0; a < N; ++a) {
    Perm inv(n);
    for (unsigned i = 0; i < n; ++i) inv[perms_[a][i]] = static_cast<std::uint8_t>(i);
    inverse_[a] = index(inv);
    unsigned inversions = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) inversions += perms_[a][i] > perms_[a][j];
    even_[a] = inversions % 2 == 0;
    for (std::size_t b = 0; b < N; ++b) {
      Perm c(n);
      for (unsigned i = 0; i < n; ++i) c[i] = perms_[a][perms_[b][i]];
      table_[a * N + b] = static_cast<std::uint16_t>(index(c));
    }
  }
}

const SymmetricGroup& SymmetricGroup::get(unsigned n) {
  check_degree(n);
  static std::mutex m;
  static std::map<unsigned, std::unique_ptr<SymmetricGroup>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SymmetricGroup>(n);
  return *slot;
}

std::size_t SymmetricGroup::index(const Perm& p) const {
  auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || *it != p) throw std::invalid_argument("not a permutation of the right degree");
  return static_cast<std::size_t>(it - perms_.begin());
}

std::vector<std::size_t> Subgroup::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxOrder; ++i)
    if (elems[i]) out.push_back(i);
  return out;
}

Subgroup closure(unsigned n, const std::vector<std::size_t>& generators) {
  const auto& S = SymmetricGroup::get(n);
  ElemSet set;
  set.set(0);
  std::vector<std::size_t> list{0};
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto g : generators) {
      std::size_t h = S.mul(list[k], g);
      if (!set[h]) {
        set.set(h);
        list.push_back(h);
      }
    }
  return subgroup_from_elements(n, set);
}

Subgroup subgroup_from_elements(unsigned n, const ElemSet& elems) {
  const auto& S = SymmetricGroup::get(n);
  Subgroup H{n, elems, {}};
  ElemSet span;
  span.set(0);
  std::vector<std::size_t> list{0};
  for (std::size_t g = 0; g < S.order(); ++g) {
    if (!elems[g] || span[g]) continue;
    H.gens.push_back(g);
    // Re-close the span with the enlarged generator set.
    for (std::size_t k = 0; k < list.size(); ++k)
      for (auto x : H.gens) {
        std::size_t h = S.mul(list[k], x);
        if (!span[h]) {
          span.set(h);
          list.push_back(h);
        }
      }
  }
  if (span != elems) throw std::invalid_argument("element set is not a subgroup");
  return H;
}

std::vector<Subgroup> all_subgroups(unsigned n) {
  const auto& S = SymmetricGroup::get(n);
  std::vector<Subgroup> found{closure(n, {})};
  std::unordered_set<ElemSet> seen{found.front().elems};
  for (std::size_t k = 0; k < found.size(); ++k) {
    const Subgroup H = found[k];
    ElemSet done = H.elems;
    for (std::size_t g = 0; g < S.order(); ++g) {
      if (done[g]) continue;
      // <H, hg> = <H, g>, so the whole coset Hg is settled at once.
      for (std::size_t h = 0; h < S.order(); ++h)
        if (H.elems[h]) done.set(S.mul(h, g));
      auto gens = H.gens;
      gens.push_back(g);
      Subgroup K = closure(n, gens);
      if (seen.insert(K.elems).second) found.push_back(std::move(K));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return elemset_less(a.elems, b.elems);
  });
  return found;
}

std::vector<std::vector<unsigned>> orbits(const Subgroup& H) {
  const auto& S = SymmetricGroup::get(H.n);
  std::vector<int> label(H.n, -1);
  std::vector<std::vector<unsigned>> out;
  for (unsigned x = 0; x < H.n; ++x) {
    if (label[x] >= 0) continue;
    std::vector<unsigned> orbit{x};
    label[x] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto g : H.gens) {
        unsigned y = S.apply(g, orbit[k]);
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_transitive(const Subgroup& H) { return orbits(H).size() == 1; }

Subgroup point_stabilizer(const Subgroup& H, unsigned point) {
  const auto& S = SymmetricGroup::get(H.n);
  ElemSet set;
  for (auto g : H.elements())
    if (S.apply(g, point) == point) set.set(g);
  return subgroup_from_elements(H.n, set);
}

bool is_subgroup_of(const Subgroup& H, const Subgroup& K) { return (H.elems & ~K.elems).none(); }

bool is_normal(const Subgroup& G, const Subgroup& A) {
  if (!is_subgroup_of(G, A)) return false;
  const auto& S = SymmetricGroup::get(A.n);
  for (auto a : A.gens)
    for (auto g : G.gens)
      if (!G.contains(S.mul(S.mul(a, g), S.inv(a)))) return false;
  return true;
}

bool is_cyclic_quotient(const Subgroup& A, const Subgroup& G) {
  if (!is_normal(G, A)) throw std::invalid_argument("is_cyclic_quotient: G is not normal in A");
  for (auto a : A.elements()) {
    auto gens = G.gens;
    gens.push_back(a);
    if (closure(A.n, gens).elems == A.elems) return true;
  }
  return false;
}

std::size_t common_stabilizer_orbits(const Subgroup& A, const Subgroup& G) {
  auto oa = orbits(point_stabilizer(A, 0));
  auto og = orbits(point_stabilizer(G, 0));
  std::size_t count = 0;
  for (const auto& o : og)
    if (std::find(oa.begin(), oa.end(), o) != oa.end()) ++count;
  return count;
}

bool is_primitive(const Subgroup& H) {
  if (!is_transitive(H)) throw std::invalid_argument("is_primitive: group is not transitive");
  const auto& S = SymmetricGroup::get(H.n);
  const unsigned n = H.n;
  for (unsigned b = 1; b < n; ++b) {
    // Finest H-invariant partition with 0 and b in one block.
    std::vector<unsigned> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::deque<std::pair<unsigned, unsigned>> pending{{0u, b}};
    parent[find(b)] = find(0);
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      for (auto g : H.gens) {
        unsigned gx = find(S.apply(g, x)), gy = find(S.apply(g, y));
        if (gx != gy) {
          parent[gy] = gx;
          pending.emplace_back(S.apply(g, x), S.apply(g, y));
        }
      }
    }
    unsigned block = 0;
    for (unsigned x = 0; x < n; ++x) block += find(x) == find(0);
    if (block < n) return false;
  }
  return true;
}

bool is_primitive_by_definition(const Subgroup& H, const std::vector<Subgroup>& subgroups) {
  if (!is_transitive(H)) return false;
  Subgroup H1 = point_stabilizer(H, 0);
  for (const auto& K : subgroups) {
    if (K.n != H.n || K.elems == H.elems || K.elems == H1.elems) continue;
    if (is_subgroup_of(H1, K) && is_subgroup_of(K, H)) return false;
  }
  return true;
}

bool is_alternating_or_symmetric(const Subgroup& H) {
  const auto& S = SymmetricGroup::get(H.n);
  if (H.order() == S.order()) return true;
  if (2 * H.order() != S.order()) return false;
  for (auto g : H.elements())
    if (!S.is_even(g)) return false;
  return true;
}

Subgroup conjugate(const Subgroup& H, std::size_t s) {
  const auto& S = SymmetricGroup::get(H.n);
  ElemSet set;
  for (auto g : H.elements()) set.set(S.mul(S.mul(s, g), S.inv(s)));
  return subgroup_from_elements(H.n, set);
}

std::vector<GroupPair> filter(unsigned n, bool require_primitive) {
  auto subs = all_subgroups(n);
  std::vector<GroupPair> out;
  for (const auto& A : subs) {
    if (!is_transitive(A)) continue;
    bool prim = is_primitive(A);
    if (require_primitive && !prim) continue;
    bool altsym = is_alternating_or_symmetric(A);
    if (n >= 5 && altsym) continue;
    for (const auto& G : subs) {
      if (G.order() <= 1 || G.order() >= A.order() || A.order() % G.order() != 0) continue;
      if (!is_normal(G, A) || !is_transitive(G)) continue;
      if (!is_cyclic_quotient(A, G)) continue;
      if (common_stabilizer_orbits(A, G) != 1) continue;
      out.push_back({n, A, G, prim, altsym});
    }
  }
  return out;
}

bool pairs_conjugate(const GroupPair& x, const GroupPair& y) {
  if (x.n != y.n || x.A.order() != y.A.order() || x.G.order() != y.G.order()) return false;
  const auto& S = SymmetricGroup::get(x.n);
  for (std::size_t s = 0; s < S.order(); ++s)
    if (conjugate(x.A, s) == y.A && conjugate(x.G, s) == y.G) return true;
  return false;
}

std::vector<GroupPair> up_to_conjugacy(const std::vector<GroupPair>& pairs) {
  std::vector<GroupPair> out;
  for (const auto& p : pairs)
    if (std::none_of(out.begin(), out.end(), [&](const GroupPair& o) { return pairs_conjugate(o, p); }))
      out.push_back(p);
  return out;
}

std::string cycle_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (unsigned x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += '(';
    for (unsigned y = x; !seen[y]; y = p[y]) {
      if (y != x) out += ',';
      out += std::to_string(y + 1);
      seen[y] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string describe(const Subgroup& H) {
  const auto& S = SymmetricGroup::get(H.n);
  std::string out = "<";
  for (std::size_t i = 0; i < H.gens.size(); ++i) {
    if (i) out += ", ";
    out += cycle_string(S.perm(H.gens[i]));
  }
  return out + ">";
}

}  // namespace prf::mono
