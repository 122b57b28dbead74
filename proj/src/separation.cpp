#include "reldoc/extensional.hpp"

namespace reldoc {

bool is_separated(const VRel& d, const FinRel& rho) {
  require_endo(d, rho);
  const Quantale& q = d.quantale();
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j)
      if (i != j && q.leq(q.unit(), rho.at(i, j))) return false;
  return true;
}

SeparationResult separation_quotient(const VRel& d, const FinRel& rho) {
  require_endo(d, rho);
  if (!is_equivalence(d, rho)) throw Error(ErrorCode::not_equivalence, "relation is not an equivalence");
  const Quantale& q = d.quantale();
  const FinSet& x = rho.dom;
  const std::size_t n = x.size();
  // ~ is an equivalence (reflexive, symmetric, and transitive since
  // unit * unit = unit), so the least related element names the class
  std::vector<std::size_t> reps, class_of(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = reps.size();
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (q.leq(q.unit(), rho.at(reps[k], i))) {
        c = k;
        break;
      }
    if (c == reps.size()) {
      reps.push_back(i);
      names.push_back("[" + x.element(i) + "]");
    }
    class_of[i] = c;
  }
  SeparationResult r;
  r.classes = FinSet(x.name() + "/sep", names);
  r.q = FinMap(x, r.classes, class_of);
  r.section = FinMap(r.classes, x, reps);
  r.rho_sep = FinRel(r.classes, r.classes, q.bottom());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) r.rho_sep.at(a, b) = rho.at(reps[a], reps[b]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!q.eq(rho.at(i, j), r.rho_sep.at(class_of[i], class_of[j])))
        throw Error(ErrorCode::ill_defined, "separated distance depends on the representatives of " + x.element(i) +
                                                " and " + x.element(j));
  return r;
}

}  // namespace reldoc
