#include <algorithm>
#include <mutex>
#include <set>

#include "prf/errors.hpp"
#include "prf/parallel.hpp"
#include "prf/ratfunc.hpp"

namespace prf {

std::vector<Moebius> symmetries(const RatFunc& f, unsigned m, std::uint64_t budget) {
  if (m == 0) throw std::invalid_argument("symmetries: m must be positive");
  FieldPtr E = f.field()->extension(m);
  if (Moebius::group_order(*E) > budget) throw BudgetExceeded("symmetries: PGL2 larger than budget");
  const Field& K = *E;
  RatFunc fe = f.over(E);
  const Elt q = K.size();

  std::vector<ProjPoint> samples{ProjPoint::inf(), ProjPoint::at(0), ProjPoint::at(1)};
  for (Elt v = 2; v < q && samples.size() < 6; ++v) samples.push_back(ProjPoint::at(v));
  std::vector<ProjPoint> values;
  for (auto x : samples) values.push_back(fe.eval_in(K, x));

  std::vector<std::vector<std::array<Elt, 4>>> found(worker_count() + 1);
  auto consider = [&](Elt a, Elt b, Elt c, Elt d, std::vector<std::array<Elt, 4>>& sink) {
    for (std::size_t i = 0; i < samples.size(); ++i)
      if (!(fe.eval_in(K, apply_matrix(K, a, b, c, d, samples[i])) == values[i])) return;
    auto mu = Moebius::from_matrix(E, a, b, c, d);
    if (compose(fe, mu) == fe) sink.push_back(mu.entries());
  };
  // Rows 0..q-1 are the maps with a = 1, b = row; row q holds a = 0, b = 1.
  parallel_for(static_cast<std::size_t>(q) + 1, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& sink = found[w];
    for (std::size_t row = begin; row < end; ++row) {
      if (row < q) {
        Elt b = static_cast<Elt>(row);
        for (Elt c = 0; c < q; ++c) {
          Elt bc = K.mul(b, c);
          for (Elt d = 0; d < q; ++d)
            if (d != bc) consider(1, b, c, d, sink);
        }
      } else {
        for (Elt c = 1; c < q; ++c)
          for (Elt d = 0; d < q; ++d) consider(0, 1, c, d, sink);
      }
    }
  });

  std::vector<Moebius> out;
  for (auto& part : found)
    for (auto& e : part) out.push_back(Moebius::from_matrix(E, e[0], e[1], e[2], e[3]));
  std::sort(out.begin(), out.end(), moebius_less);

  auto contains = [&](const Moebius& x) { return std::binary_search(out.begin(), out.end(), x, moebius_less); };
  for (const auto& s : out) {
    if (!contains(s.inverse())) throw VerificationFailure("symmetry set not closed under inverse");
    for (const auto& t : out)
      if (!contains(s * t)) throw VerificationFailure("symmetry set not closed under composition");
  }
  return out;
}

}  // namespace prf
