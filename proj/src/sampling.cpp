#include "reldoc/sampling.hpp"

#include <cmath>

namespace reldoc {

Value random_value(const Quantale& q, Rng& rng) {
  if (q.finite()) return static_cast<Value>(std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng));
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return 0.0;
    case 1: return kInf;
    case 2: return static_cast<double>(std::uniform_int_distribution<int>(1, 4)(rng));
    default: {
      // quarter-integers keep sums exact
      return std::round(std::uniform_real_distribution<double>(0.0, 6.0)(rng) * 4.0) / 4.0;
    }
  }
}

FinRel random_relation(const VRel& d, const FinSet& x, const FinSet& y, Rng& rng) {
  FinRel r(x, y, d.quantale().bottom());
  for (auto& v : r.entries) v = random_value(d.quantale(), rng);
  return r;
}

FinMap random_map(const FinSet& x, const FinSet& y, Rng& rng) {
  std::vector<std::size_t> t(x.size());
  for (auto& v : t) v = std::uniform_int_distribution<std::size_t>(0, y.size() - 1)(rng);
  return FinMap(x, y, std::move(t));
}

FinRel transitive_closure(const VRel& d, FinRel r) {
  while (true) {
    FinRel next = d.join(r, d.compose(r, r));
    if (d.leq(next, r)) return r;
    r = std::move(next);
  }
}

FinRel random_pseudometric(const VRel& lawvere, const FinSet& x, Rng& rng) {
  const std::size_t n = x.size();
  FinRel r(x, x, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    r.at(i, i) = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      Value w = random_value(lawvere.quantale(), rng);
      r.at(i, j) = r.at(j, i) = w;
    }
  }
  return transitive_closure(lawvere, r);
}

FinRel random_equivalence(const VRel& boolean, const FinSet& x, Rng& rng) {
  const std::size_t n = x.size();
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = std::uniform_int_distribution<std::size_t>(0, i)(rng);
  // block[i] <= i names the representative of a previous element's block
  for (std::size_t i = 0; i < n; ++i) block[i] = block[i] == i ? i : block[block[i]];
  FinRel r(x, x, boolean.quantale().bottom());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (block[i] == block[j]) r.at(i, j) = boolean.quantale().unit();
  return r;
}

FinRel random_equivalence_any(const VRel& d, const FinSet& x, Rng& rng) {
  const auto& q = d.quantale();
  const std::size_t n = x.size();
  FinRel r(x, x, q.bottom());
  for (std::size_t i = 0; i < n; ++i) {
    r.at(i, i) = q.join(q.unit(), random_value(q, rng));
    for (std::size_t j = i + 1; j < n; ++j) r.at(i, j) = r.at(j, i) = random_value(q, rng);
  }
  return transitive_closure(d, r);
}

}  // namespace reldoc
