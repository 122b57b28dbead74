#include "reldoc/projalg.hpp"

#include "reldoc/powerset.hpp"

namespace reldoc {

MonadSpec<VRel> powerset_monad(std::shared_ptr<const VRel> d) {
  MonadSpec<VRel> m;
  m.name = "P";
  m.T = hausdorff_lifting(d, kPowersetCap);
  m.unit = [](const FinSet& x) { return singleton_map(x, kPowersetCap); };
  m.mult = [](const FinSet& x) { return union_map(x, kPowersetCap); };
  // pointwise over pairs of subsets, skipping pairs whose target is already top
  m.closed = [d](const FinMap& a, const FinRel& alpha, const FinMap& b) {
    const Quantale& q = d->quantale();
    FinRel conv = d->converse(alpha);
    for (std::size_t s = 0; s < a.dom.size(); ++s)
      for (std::size_t t = 0; t < b.dom.size(); ++t) {
        Value target = alpha.at(a(s), b(t));
        if (q.leq(q.top(), target)) continue;
        Value lifted = q.meet(hausdorff_half(q, alpha, s, t), hausdorff_half(q, conv, t, s));
        if (!q.leq(lifted, target)) return false;
      }
    return true;
  };
  return m;
}

std::vector<Algebra<VRel>> powerset_algebras(const MonadSpec<VRel>& m, const FinSet& x) {
  FinSet px = m.T.obj_map(x);
  std::vector<Algebra<VRel>> out;
  auto eta = m.unit(x);
  // the unit law fixes a on singletons, so only the other subsets vary
  for_each_map(px, x, kDefaultHomCap, [&](const FinMap& a) {
    if (FinMap::then(eta, a) != FinMap::identity(x)) return;
    Algebra<VRel> alg{x, a, std::nullopt};
    if (check_algebra(m, alg).ok()) out.push_back(std::move(alg));
  });
  return out;
}

}  // namespace reldoc
