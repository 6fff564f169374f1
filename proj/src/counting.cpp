#include <stdexcept>

#include "prf/classify.hpp"
#include "prf/errors.hpp"

namespace prf {

ExceptionalClassCount count_classes_exceptional(const FieldPtr& F) {
  const Field& K = *F;
  const std::uint64_t q = K.size();
  ExceptionalClassCount out{0, {}, {}};
  if (q % 2 == 1) {
    auto cubics = irreducible_depressed_cubics(K);
    if (cubics.empty()) throw VerificationFailure("no irreducible depressed cubic");
    auto [a, b] = cubics.front();
    out.representatives.push_back({QuarticExceptional{a, b}, quartic_exceptional(F, a, b), true});
    out.count = 1;
    return out;
  }

  auto add = [&](std::vector<Elt> coeffs) {
    Poly L = additive(K, coeffs);
    out.representatives.push_back({Additive{std::move(coeffs)}, RatFunc::polynomial(F, std::move(L)), true});
  };
  add({0, 0, 1});
  std::vector<bool> image(q, false);
  for (Elt b = 0; b < q; ++b) image[K.add(K.pow(b, 3), b)] = true;
  for (std::uint32_t r = 0; r < q; ++r) {
    Elt a = K.unrank(r);
    if (!image[a]) out.delta.push_back(a);
  }
  if (out.delta.size() != (q + 1) / 3) throw VerificationFailure("|Delta| differs from floor((q+1)/3)");
  for (Elt a : out.delta) add({a, 1, 1});
  if (q % 6 == 4) {
    Elt gamma = 0;
    for (std::uint32_t r = 0; r < q && !gamma; ++r) {
      Elt e = K.unrank(r);
      if (e && K.pow(e, (q - 1) / 3) != 1) gamma = e;
    }
    add({gamma, 0, 1});
    add({K.mul(gamma, gamma), 0, 1});
  }
  out.count = out.representatives.size();
  std::uint64_t expected = q % 6 == 2 ? (q + 4) / 3 : (q + 8) / 3;
  if (out.count != expected) throw VerificationFailure("exceptional class count differs from the closed form");
  return out;
}

std::uint64_t count_total_formula(std::uint64_t q) {
  switch (q) {
    case 2: return 78;
    case 3: return 1536;
    case 4: return 8160;
    case 5: return 24000;
    case 7: return 75264;
    case 8: return 222768;
    default: break;
  }
  if (q < 2) throw std::invalid_argument("count_total_formula: q must be a prime power");
  std::uint64_t g = q * q * q - q;
  if (q % 2 == 1) return g * g / 3;
  return q * (q - 1) * (q + 2) * (q * q * q + 1) / 3;
}

std::uint64_t count_total(const FieldPtr& F, bool extended) {
  std::uint64_t total = 0;
  for (const auto& c : search(F, 4, extended)) total += c.orbit;
  return total;
}

std::uint64_t count_total_bruteforce(const FieldPtr& F) {
  const Field& K = *F;
  const Elt q = K.size();
  if (q > 32) throw BudgetExceeded("count_total_bruteforce: q too large");
  auto values = [&](const Poly& a) {
    std::vector<Elt> v(q);
    for (Elt x = 0; x < q; ++x) v[x] = poly::eval(K, a, x);
    return v;
  };
  auto rootless = [&](const std::vector<Elt>& v) {
    for (Elt y : v)
      if (y == 0) return false;
    return true;
  };

  std::vector<Poly> nums;
  std::vector<std::vector<Elt>> num_vals;
  for (Elt a1 = 0; a1 < q; ++a1)
    for (Elt a2 = 0; a2 < q; ++a2)
      for (Elt a3 = 0; a3 < q; ++a3) {
        Poly a{0, a1, a2, a3, 1};
        auto v = values(a);
        bool only_zero = true;
        for (Elt x = 1; x < q && only_zero; ++x) only_zero = v[x] != 0;
        if (!only_zero) continue;
        nums.push_back(std::move(a));
        num_vals.push_back(std::move(v));
      }

  std::vector<Poly> dens{{1}};
  std::vector<std::vector<Elt>> den_inv{std::vector<Elt>(q, 1)};
  for (unsigned d = 1; d <= 3; ++d) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      Poly b(d + 1, 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i, c /= q) b[i] = static_cast<Elt>(c % q);
      auto v = values(b);
      if (!rootless(v)) continue;
      for (auto& y : v) y = K.inv(y);
      dens.push_back(std::move(b));
      den_inv.push_back(std::move(v));
    }
  }

  std::uint64_t count = 0;
  std::vector<std::uint32_t> stamp(q, 0);
  std::uint32_t cur = 0;
  for (std::size_t i = 0; i < nums.size(); ++i)
    for (std::size_t j = 0; j < dens.size(); ++j) {
      ++cur;
      bool injective = true;
      for (Elt x = 0; x < q && injective; ++x) {
        Elt y = K.mul(num_vals[i][x], den_inv[j][x]);
        injective = stamp[y] != cur;
        stamp[y] = cur;
      }
      if (injective && poly::deg(poly::gcd(K, nums[i], dens[j])) == 0) ++count;
    }
  return count * (static_cast<std::uint64_t>(q) * q * q - q);
}

}  // namespace prf
