#include "reldoc/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace reldoc {

Json QuotientCertificate::to_json() const {
  return Json{{"quotient", quotient()}, {"kernel_ok", kernel_ok}, {"universal", universal},
              {"effective", effective}, {"descent", descent},     {"scope", scope},
              {"failure", failure},     {"factorings", factorings}};
}

namespace {

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

VRelQuotient build_quotient_vrel(const VRel& d, const FinRel& rho, std::optional<std::vector<FinSet>> targets,
                                 std::size_t hom_cap) {
  require_endo(d, rho);
  if (!is_equivalence(d, rho)) throw Error(ErrorCode::not_equivalence, "relation is not an equivalence");
  const Quantale& q = d.quantale();
  const FinSet& x = rho.dom;
  const std::size_t n = x.size();
  auto linked = [&](std::size_t i, std::size_t j) { return !q.eq(rho.at(i, j), q.bottom()); };

  VRelQuotient out;
  for (std::size_t i = 0; i < n && !out.closure_applied; ++i)
    for (std::size_t j = 0; j < n && !out.closure_applied; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (linked(i, j) && linked(j, k) && !linked(i, k)) {
          out.closure_applied = true;
          break;
        }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (linked(i, j)) {
        std::size_t a = find(parent, i), b = find(parent, j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  // roots are the least elements of their classes
  std::vector<std::size_t> class_of(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(parent, i);
    if (r == i) {
      out.representatives.push_back(i);
      names.push_back("[" + x.element(i) + "]");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(out.representatives.begin(), out.representatives.end(), find(parent, i));
    class_of[i] = static_cast<std::size_t>(it - out.representatives.begin());
  }
  out.classes = FinSet(x.name() + "/~", names);
  out.q = FinMap(x, out.classes, class_of);

  std::vector<FinSet> ts;
  if (targets) {
    ts = *targets;
  } else {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) ts.push_back(numbered_set("Z" + std::to_string(k) + "_", k));
  }
  out.certificate = check_quotient_arrow_targets(d, out.q, rho, ts, hom_cap);
  return out;
}

Factorization factorize(const VRel& d, const FinMap& f, std::size_t hom_cap) {
  Factorization out;
  out.quotient = build_quotient_vrel(d, kernel(d, f), std::vector<FinSet>{f.cod}, hom_cap);
  const auto& reps = out.quotient.representatives;
  std::vector<std::size_t> t(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) t[c] = f(reps[c]);
  out.i = FinMap(out.quotient.classes, f.cod, t);
  out.injective = is_injective(d, graph(d, out.i));
  out.recomposes = FinMap::then(out.quotient.q, out.i) == f;
  return out;
}

}  // namespace reldoc
