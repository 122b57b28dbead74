#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/qr.hpp"
#include "reldoc/vrel.hpp"

namespace reldoc {

// Outcome of checking q : X -> W against an equivalence rho. Universality
// is only established relative to `scope` (the probe arrows tried).
struct QuotientCertificate {
  bool kernel_ok = false;  // rho <= gr q ; gr q°
  bool universal = false;  // every probe f with rho <= ker f factors uniquely
  bool effective = false;  // rho = gr q ; gr q°
  bool descent = false;    // d_W <= gr q° ; gr q
  std::size_t probes = 0;
  Json scope;
  Json failure;     // first probe without a unique factoring
  Json factorings;  // probe f -> its factoring h
  bool quotient() const { return kernel_ok && universal; }
  Json to_json() const;
};

// Probe arrows f : X -> Z for every listed target Z.
template <RelationalDoctrine D>
QuotientCertificate check_quotient_arrow(const D& d, const typename D::Arrow& q, const typename D::Relation& rho,
                                         const std::vector<typename D::Arrow>& probes,
                                         std::size_t hom_cap = kDefaultHomCap) {
  require_endo(d, rho);
  if (!is_equivalence(d, rho)) throw Error(ErrorCode::not_equivalence, "relation is not an equivalence");
  if (!d.same_object(d.arrow_dom(q), d.rel_dom(rho)))
    throw Error(ErrorCode::shape_mismatch, "arrow does not start at the carrier of the equivalence");
  QuotientCertificate c;
  const auto w = d.arrow_cod(q);
  c.kernel_ok = d.leq(rho, kernel(d, q));
  c.effective = equal(d, rho, kernel(d, q));
  c.descent = d.leq(d.identity(w), d.compose(cograph(d, q), graph(d, q)));
  c.universal = true;
  c.factorings = Json::array();
  for (const auto& f : probes) {
    if (!d.same_object(d.arrow_dom(f), d.arrow_dom(q)))
      throw Error(ErrorCode::shape_mismatch, "probe arrow does not start at the carrier");
    if (!d.leq(rho, kernel(d, f))) continue;
    ++c.probes;
    std::vector<typename D::Arrow> hs;
    for (const auto& h : d.homs(w, d.arrow_cod(f), hom_cap))
      if (d.same_arrow(d.then(q, h), f)) hs.push_back(h);
    if (hs.size() == 1) {
      c.factorings.push_back(Json{{"f", d.describe(f)}, {"h", d.describe(hs[0])}});
    } else if (c.universal) {
      c.universal = false;
      c.failure = Json{{"f", d.describe(f)}, {"factorings", hs.size()}};
    }
  }
  c.scope = Json{{"probe_arrows", probes.size()}, {"tested", c.probes}};
  return c;
}

// Probes are all arrows into each target (up to hom_cap).
template <RelationalDoctrine D>
QuotientCertificate check_quotient_arrow_targets(const D& d, const typename D::Arrow& q,
                                                 const typename D::Relation& rho,
                                                 const std::vector<typename D::Object>& targets,
                                                 std::size_t hom_cap = kDefaultHomCap) {
  std::vector<typename D::Arrow> probes;
  Json names = Json::array();
  for (const auto& z : targets) {
    for (auto& f : d.homs(d.arrow_dom(q), z, hom_cap)) probes.push_back(std::move(f));
    names.push_back(d.describe(z));
  }
  QuotientCertificate c = check_quotient_arrow(d, q, rho, probes, hom_cap);
  c.scope["targets"] = names;
  return c;
}

// Diagonals h : W -> Y with h after q = f and i after h = g, for a square
// g after q = i after f.
template <RelationalDoctrine D>
std::vector<typename D::Arrow> diagonal_fillers(const D& d, const typename D::Arrow& q, const typename D::Arrow& f,
                                                const typename D::Arrow& g, const typename D::Arrow& i,
                                                std::size_t hom_cap = kDefaultHomCap) {
  if (!d.same_arrow(d.then(q, g), d.then(f, i))) throw Error(ErrorCode::precondition_failed, "square does not commute");
  std::vector<typename D::Arrow> out;
  for (const auto& h : d.homs(d.arrow_cod(q), d.arrow_cod(f), hom_cap))
    if (d.same_arrow(d.then(q, h), f) && d.same_arrow(d.then(h, i), g)) out.push_back(h);
  return out;
}

// ------------------------------------------------------------ V-relations

struct VRelQuotient {
  FinSet classes;
  FinMap q;
  std::vector<std::size_t> representatives;  // least element of each class
  bool closure_applied = false;  // {rho != bottom} was not already transitive
  QuotientCertificate certificate;
};

// Classes of the equivalence generated by rho(x,x') != bottom, one per
// connected component. Universality is certified against every map into
// sets of size 1..min(|X|, 3), or into `targets` when given.
VRelQuotient build_quotient_vrel(const VRel& d, const FinRel& rho,
                                 std::optional<std::vector<FinSet>> targets = std::nullopt,
                                 std::size_t hom_cap = kDefaultHomCap);

struct Factorization {
  VRelQuotient quotient;
  FinMap i;
  bool injective = false;
  bool recomposes = false;  // f = i after q
};

// f = i after q with q the quotient of ker f and i injective.
Factorization factorize(const VRel& d, const FinMap& f, std::size_t hom_cap = kDefaultHomCap);

// -------------------------------------------------------------- QR quotients

// id_X : <X,rho> -> <X,sigma>, the quotient of sigma in QR. Throws
// NotCoarser when rho is not below sigma.
template <RelationalDoctrine D>
typename QR<D>::Arrow qr_quotient_arrow(const QR<D>& q, const typename QR<D>::Object& x,
                                        const typename D::Relation& sigma) {
  const D& b = q.base();
  if (!b.leq(x.rho, sigma)) throw Error(ErrorCode::not_coarser, "target equivalence is not coarser");
  auto y = q.object(x.base, sigma);
  return q.arrow(x, y, b.id_arrow(x.base));
}

// Factorization in QR: f = i after q with q = id : <X,rho> -> <X, D[f,f](sigma)>.
template <RelationalDoctrine D>
std::pair<typename QR<D>::Arrow, typename QR<D>::Arrow> factorize_qr(const QR<D>& q, const typename QR<D>::Arrow& f) {
  const D& b = q.base();
  auto k = b.reindex(f.base, f.base, f.cod.rho);
  auto mid = q.object(f.dom.base, k);
  return {q.arrow(f.dom, mid, b.id_arrow(f.dom.base)), q.arrow(mid, f.cod, f.base)};
}

}  // namespace reldoc
