#include "reldoc/probes.hpp"

namespace reldoc {

bool for_each_tuple(const std::vector<std::size_t>& radices, std::size_t budget, Rng& rng,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::size_t total = 1;
  bool overflow = false;
  for (std::size_t r : radices) {
    if (r == 0) return true;  // empty product: nothing to visit
    if (total > budget / r + 1) overflow = true;
    total *= r;
  }
  std::vector<std::size_t> ix(radices.size(), 0);
  if (!overflow && total <= budget) {
    while (true) {
      fn(ix);
      std::size_t k = ix.size();
      while (true) {
        if (k == 0) return true;
        --k;
        if (++ix[k] < radices[k]) break;
        ix[k] = 0;
      }
    }
  }
  for (std::size_t s = 0; s < budget; ++s) {
    for (std::size_t k = 0; k < ix.size(); ++k) ix[k] = std::uniform_int_distribution<std::size_t>(0, radices[k] - 1)(rng);
    fn(ix);
  }
  return false;
}

std::vector<std::vector<std::size_t>> object_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> t(k, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
}

}  // namespace reldoc
