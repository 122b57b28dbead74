#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/law_report.hpp"
#include "reldoc/lifting.hpp"
#include "reldoc/qr.hpp"
#include "reldoc/quotient.hpp"
#include "reldoc/vrel.hpp"

namespace reldoc {

// ------------------------------------------------------------ projectivity

struct ProjectivityResult {
  bool projective = true;
  std::size_t squares = 0;  // (f, q) pairs searched
  Json witness;             // f and q with no lift h
};

// For every listed q : X -> Y and every f : P -> Y, search h : P -> X with
// h;q = f. Relative to the listed quotient arrows only.
template <RelationalDoctrine D>
ProjectivityResult is_projective(const D& d, const typename D::Object& p,
                                 const std::vector<typename D::Arrow>& quotient_arrows,
                                 std::size_t hom_cap = kDefaultHomCap) {
  ProjectivityResult r;
  for (const auto& q : quotient_arrows) {
    auto lifts = d.homs(p, d.arrow_dom(q), hom_cap);
    for (const auto& f : d.homs(p, d.arrow_cod(q), hom_cap)) {
      ++r.squares;
      bool found = false;
      for (const auto& h : lifts)
        if (d.same_arrow(d.then(h, q), f)) {
          found = true;
          break;
        }
      if (!found) {
        r.projective = false;
        r.witness = Json{{"f", d.describe(f)}, {"q", d.describe(q)}};
        return r;
      }
    }
  }
  return r;
}

// Canonical quotient arrows id : <X,rho> -> <X,sigma> between supplied
// objects with the same carrier and rho <= sigma, plus id : <X,d> -> <X,rho>
// for every supplied object.
template <RelationalDoctrine D>
std::vector<typename QR<D>::Arrow> canonical_quotients(const QR<D>& q, const std::vector<typename QR<D>::Object>& objects) {
  const D& b = q.base();
  std::vector<typename QR<D>::Arrow> out;
  for (const auto& x : objects) {
    out.push_back(qr_quotient_arrow(q, q.discrete(x.base), x.rho));
    for (const auto& y : objects)
      if (b.same_object(x.base, y.base) && !q.same_object(x, y) && b.leq(x.rho, y.rho))
        out.push_back(qr_quotient_arrow(q, x, y.rho));
  }
  return out;
}

// <X,rho> is projective against the canonical quotients iff rho = d_X.
template <RelationalDoctrine D>
LawReport check_proj_obj_qc(const QR<D>& q, const std::vector<typename QR<D>::Object>& objects,
                            std::size_t hom_cap = kDefaultHomCap) {
  LawReport rep;
  rep.subject = "projective objects of QR";
  auto qs = canonical_quotients(q, objects);
  LawCheck& c = rep.add("projective_iff_discrete");
  c.exhaustive = true;
  for (const auto& x : objects) {
    bool discrete = equal(q.base(), x.rho, q.base().identity(x.base));
    auto r = is_projective(q, x, qs, hom_cap);
    c.record(r.projective == discrete, Json{{"object", q.describe(x)}, {"discrete", discrete},
                                            {"projective", r.projective}, {"square", r.witness}});
    if (r.projective == discrete && !discrete && c.detail.is_null())
      c.detail = Json{{"non_projective_example", q.describe(x)}, {"square", r.witness}};
  }
  return rep;
}

struct CoverResult {
  bool cover = true;
  Json nonprojective;  // member of G failing is_projective
  Json uncovered;      // object without a quotient arrow from G
  Json covers;         // object -> quotient arrow found
};

// Every member of G must be projective against `quotient_arrows`, and every
// object must receive an arrow from G certified as the quotient of its
// kernel (probing maps into `objects`).
template <RelationalDoctrine D>
CoverResult is_projective_cover(const D& d, const std::vector<typename D::Object>& g,
                                const std::vector<typename D::Object>& objects,
                                const std::vector<typename D::Arrow>& quotient_arrows,
                                std::size_t hom_cap = kDefaultHomCap) {
  CoverResult r;
  r.covers = Json::array();
  for (const auto& p : g) {
    auto pr = is_projective(d, p, quotient_arrows, hom_cap);
    if (!pr.projective) {
      r.cover = false;
      r.nonprojective = Json{{"object", d.describe(p)}, {"square", pr.witness}};
      return r;
    }
  }
  for (const auto& x : objects) {
    bool found = false;
    for (const auto& p : g) {
      for (const auto& a : d.homs(p, x, hom_cap)) {
        auto cert = check_quotient_arrow_targets(d, a, kernel(d, a), objects, hom_cap);
        if (cert.quotient()) {
          r.covers.push_back(Json{{"object", d.describe(x)}, {"arrow", d.describe(a)}});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      r.cover = false;
      r.uncovered = d.describe(x);
      return r;
    }
  }
  return r;
}

// All objects projective against the quotient arrows among them, versus all
// those quotient arrows split. Quotient arrows are found by certifying every
// arrow against the kernel, probing maps into `objects`.
template <RelationalDoctrine D>
LawReport check_proj_obj_choice(const D& d, const std::vector<typename D::Object>& objects,
                                std::size_t hom_cap = kDefaultHomCap) {
  LawReport rep;
  rep.subject = "projectivity and choice";
  std::vector<typename D::Arrow> quotients;
  for (const auto& x : objects)
    for (const auto& y : objects)
      for (const auto& a : d.homs(x, y, hom_cap))
        if (check_quotient_arrow_targets(d, a, kernel(d, a), objects, hom_cap).quotient()) quotients.push_back(a);
  bool all_projective = true;
  Json nonproj;
  for (const auto& x : objects) {
    auto r = is_projective(d, x, quotients, hom_cap);
    if (!r.projective) {
      all_projective = false;
      nonproj = Json{{"object", d.describe(x)}, {"square", r.witness}};
      break;
    }
  }
  bool all_split = true;
  Json unsplit;
  for (const auto& q : quotients) {
    bool split = false;
    for (const auto& s : d.homs(d.arrow_cod(q), d.arrow_dom(q), hom_cap))
      if (d.same_arrow(d.then(s, q), d.id_arrow(d.arrow_cod(q)))) {
        split = true;
        break;
      }
    if (!split) {
      all_split = false;
      unsplit = d.describe(q);
      break;
    }
  }
  LawCheck& c = rep.add("projective_iff_split");
  c.exhaustive = true;
  c.record(all_projective == all_split, Json{{"nonprojective", nonproj}, {"unsplit", unsplit}});
  c.cases = quotients.size();
  c.detail = Json{{"quotient_arrows", quotients.size()}, {"all_projective", all_projective}, {"all_split", all_split}};
  return rep;
}

// ------------------------------------------------------------------ monads

template <RelationalDoctrine D>
struct MonadSpec {
  std::string name;
  Lifting<D, D> T;
  std::function<typename D::Arrow(const typename D::Object&)> unit;  // X -> TX
  std::function<typename D::Arrow(const typename D::Object&)> mult;  // TTX -> TX
  // Optional direct test of gr a° ; T(alpha) ; gr b <= alpha.
  std::function<bool(const typename D::Arrow& a, const typename D::Relation& alpha, const typename D::Arrow& b)>
      closed;
};

template <RelationalDoctrine D>
struct Algebra {
  typename D::Object carrier;
  typename D::Arrow structure;  // T carrier -> carrier
  std::optional<typename D::Object> free_on;  // set for <TX, mu_X>
};

template <RelationalDoctrine D>
MonadSpec<D> identity_monad(std::shared_ptr<const D> d) {
  MonadSpec<D> m;
  m.name = "id";
  m.T = identity_lifting(d);
  m.unit = [d](const typename D::Object& x) { return d->id_arrow(x); };
  m.mult = [d](const typename D::Object& x) { return d->id_arrow(x); };
  return m;
}

// Finite powerset with Egli-Milner (Hausdorff) lifting, singleton unit and
// union multiplication.
MonadSpec<VRel> powerset_monad(std::shared_ptr<const VRel> d);

template <RelationalDoctrine D>
Algebra<D> free_algebra(const MonadSpec<D>& m, const typename D::Object& x) {
  return Algebra<D>{m.T.obj_map(x), m.mult(x), x};
}

// Unit and associativity laws of the structure map, checked pointwise.
template <RelationalDoctrine D>
LawReport check_algebra(const MonadSpec<D>& m, const Algebra<D>& a) {
  const D& d = *m.T.src;
  LawReport rep;
  rep.subject = "algebra";
  auto x = a.carrier;
  Json w{{"structure", d.describe(a.structure)}};
  bool typed = d.same_object(d.arrow_dom(a.structure), m.T.obj_map(x)) && d.same_object(d.arrow_cod(a.structure), x);
  rep.add("structure_type").record(typed, w);
  if (!typed) return rep;
  rep.add("unit").record(d.same_arrow(d.then(m.unit(x), a.structure), d.id_arrow(x)), w);
  rep.add("associativity")
      .record(d.same_arrow(d.then(m.mult(x), a.structure), d.then(m.T.arr_map(a.structure), a.structure)), w);
  return rep;
}

// Eilenberg-Moore doctrine over supplied algebras: homomorphisms as arrows,
// relations closed under the algebra operations as fibres.
template <RelationalDoctrine D>
class EM {
 public:
  using Object = Algebra<D>;
  struct Arrow {
    Object dom, cod;
    typename D::Arrow base;
  };
  struct Relation {
    Object dom, cod;
    typename D::Relation rel;
  };

  explicit EM(MonadSpec<D> m) : m_(std::move(m)) {}
  const D& base() const { return *m_.T.src; }
  const MonadSpec<D>& monad() const { return m_; }
  Provenance provenance() const { return Provenance::em; }

  // Throws PreconditionFailed when the algebra laws fail.
  Object algebra(const typename D::Object& x, const typename D::Arrow& a) const {
    Object o{x, a, std::nullopt};
    if (!check_algebra(m_, o).ok()) throw Error(ErrorCode::precondition_failed, "structure map is not an algebra");
    return o;
  }

  bool is_homomorphism(const Object& x, const Object& y, const typename D::Arrow& f) const {
    const D& d = base();
    return d.same_object(d.arrow_dom(f), x.carrier) && d.same_object(d.arrow_cod(f), y.carrier) &&
           d.same_arrow(d.then(x.structure, f), d.then(m_.T.arr_map(f), y.structure));
  }
  Arrow arrow(const Object& x, const Object& y, const typename D::Arrow& f) const {
    if (!is_homomorphism(x, y, f)) throw Error(ErrorCode::not_an_arrow, "not an algebra homomorphism");
    return Arrow{x, y, f};
  }

  // gr a° ; T(alpha) ; gr b <= alpha
  bool is_congruence(const Object& x, const Object& y, const typename D::Relation& a) const {
    if (m_.closed) return m_.closed(x.structure, a, y.structure);
    const D& d = base();
    auto closed = d.compose(d.compose(cograph(d, x.structure), m_.T.fib_map(a)), graph(d, y.structure));
    return d.leq(closed, a);
  }
  Relation relation(const Object& x, const Object& y, const typename D::Relation& a) const {
    if (!is_congruence(x, y, a)) throw Error(ErrorCode::not_congruence, "relation is not closed under the operations");
    return Relation{x, y, a};
  }

  const Object& rel_dom(const Relation& a) const { return a.dom; }
  const Object& rel_cod(const Relation& a) const { return a.cod; }
  const Object& arrow_dom(const Arrow& f) const { return f.dom; }
  const Object& arrow_cod(const Arrow& f) const { return f.cod; }
  bool same_object(const Object& x, const Object& y) const {
    return base().same_object(x.carrier, y.carrier) && base().same_arrow(x.structure, y.structure);
  }

  Relation identity(const Object& x) const { return relation(x, x, base().identity(x.carrier)); }
  Relation compose(const Relation& a, const Relation& b) const {
    return relation(a.dom, b.cod, base().compose(a.rel, b.rel));
  }
  Relation converse(const Relation& a) const { return relation(a.cod, a.dom, base().converse(a.rel)); }
  Relation reindex(const Arrow& f, const Arrow& g, const Relation& a) const {
    return relation(f.dom, g.dom, base().reindex(f.base, g.base, a.rel));
  }
  bool leq(const Relation& a, const Relation& b) const { return base().leq(a.rel, b.rel); }

  Arrow id_arrow(const Object& x) const { return Arrow{x, x, base().id_arrow(x.carrier)}; }
  Arrow then(const Arrow& f, const Arrow& g) const { return Arrow{f.dom, g.cod, base().then(f.base, g.base)}; }
  bool same_arrow(const Arrow& f, const Arrow& g) const { return base().same_arrow(f.base, g.base); }

  // Homomorphisms out of a free algebra are the extensions of maps on the
  // generators; otherwise base arrows are filtered.
  std::vector<Arrow> homs(const Object& x, const Object& y, std::size_t cap) const {
    std::vector<Arrow> out;
    if (x.free_on) {
      for (const auto& g : base().homs(*x.free_on, y.carrier, cap))
        out.push_back(Arrow{x, y, base().then(m_.T.arr_map(g), y.structure)});
      return out;
    }
    for (const auto& f : base().homs(x.carrier, y.carrier, cap))
      if (is_homomorphism(x, y, f)) out.push_back(Arrow{x, y, f});
    return out;
  }

  std::vector<Relation> fibre(const Object& x, const Object& y, std::size_t cap) const
    requires FiniteFibres<D>
  {
    std::vector<Relation> out;
    for (auto& a : base().fibre(x.carrier, y.carrier, cap))
      if (is_congruence(x, y, a)) out.push_back(Relation{x, y, std::move(a)});
    return out;
  }

  Json describe(const Object& x) const {
    return Json{{"carrier", base().describe(x.carrier)}, {"structure", base().describe(x.structure)}};
  }
  Json describe(const Arrow& f) const { return base().describe(f.base); }
  Json describe(const Relation& a) const { return base().describe(a.rel); }

 private:
  MonadSpec<D> m_;
};

template <RelationalDoctrine D>
EM<D> em_doctrine(MonadSpec<D> m) {
  return EM<D>(std::move(m));
}

// The counit a : <TX, mu_X> -> <X, a>: split by the unit, surjective, and a
// quotient arrow in EM against maps into `targets`.
template <RelationalDoctrine D>
LawReport counit_quotient_check(const EM<D>& em, const Algebra<D>& alg, const std::vector<Algebra<D>>& targets,
                                std::size_t hom_cap = kDefaultHomCap) {
  const D& d = em.base();
  const auto& m = em.monad();
  LawReport rep;
  rep.subject = "counit";
  auto one = [&](const std::string& law, bool pass, const Json& w) { rep.add(law).record(pass, w); };
  auto free = free_algebra(m, alg.carrier);
  bool hom = em.is_homomorphism(free, alg, alg.structure);
  one("homomorphism", hom, d.describe(alg.structure));
  if (!hom) return rep;
  one("split_by_unit", d.same_arrow(d.then(m.unit(alg.carrier), alg.structure), d.id_arrow(alg.carrier)),
      d.describe(alg.structure));
  one("surjective", is_surjective(d, graph(d, alg.structure)), d.describe(alg.structure));
  auto eps = em.arrow(free, alg, alg.structure);
  auto cert = check_quotient_arrow_targets(em, eps, kernel(em, eps), targets, hom_cap);
  one("quotient", cert.quotient(), cert.to_json());
  rep.get("quotient").detail = cert.scope;
  return rep;
}

// ------------------------------------------------- join-semilattice algebras

// Every powerset algebra on the given carrier, found by filtering all maps
// P X -> X through the algebra laws.
std::vector<Algebra<VRel>> powerset_algebras(const MonadSpec<VRel>& m, const FinSet& x);

}  // namespace reldoc
