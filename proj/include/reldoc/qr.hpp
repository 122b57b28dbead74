#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/laws.hpp"
#include "reldoc/lifting.hpp"

namespace reldoc {

// Intensional quotient completion. Objects are pairs <X, rho> with rho an
// equivalence on X; arrows are base arrows f with rho <= D[f,f](sigma);
// relations <X,rho> -> <Y,sigma> are descent data, i.e. base relations a
// with rho° ; a ; sigma <= a. The relational identity on <X,rho> is rho.
template <RelationalDoctrine D>
class QR {
 public:
  struct Object {
    typename D::Object base;
    typename D::Relation rho;
  };
  struct Arrow {
    Object dom, cod;
    typename D::Arrow base;
  };
  struct Relation {
    Object dom, cod;
    typename D::Relation rel;
  };

  explicit QR(D base) : base_(std::move(base)) {}
  const D& base() const { return base_; }
  Provenance provenance() const { return Provenance::qr; }

  // Throws NotEquivalence.
  Object object(typename D::Object x, typename D::Relation rho) const {
    require_endo(base_, rho);
    if (!base_.same_object(base_.rel_dom(rho), x))
      throw Error(ErrorCode::shape_mismatch, "relation does not live on the carrier");
    if (!is_equivalence(base_, rho)) throw Error(ErrorCode::not_equivalence, "carrier relation is not an equivalence");
    return Object{std::move(x), std::move(rho)};
  }
  // <X, d_X>
  Object discrete(const typename D::Object& x) const { return Object{x, base_.identity(x)}; }

  bool is_arrow(const Object& x, const Object& y, const typename D::Arrow& f) const {
    return base_.same_object(base_.arrow_dom(f), x.base) && base_.same_object(base_.arrow_cod(f), y.base) &&
           base_.leq(x.rho, base_.reindex(f, f, y.rho));
  }
  // Throws NotAnArrow.
  Arrow arrow(const Object& x, const Object& y, typename D::Arrow f) const {
    if (!is_arrow(x, y, f)) throw Error(ErrorCode::not_an_arrow, "base arrow does not preserve the equivalences");
    return Arrow{x, y, std::move(f)};
  }

  bool is_descent(const Object& x, const Object& y, const typename D::Relation& a) const {
    return base_.same_object(base_.rel_dom(a), x.base) && base_.same_object(base_.rel_cod(a), y.base) &&
           base_.leq(base_.compose(base_.compose(base_.converse(x.rho), a), y.rho), a);
  }
  // Throws NotDescentDatum.
  Relation relation(const Object& x, const Object& y, typename D::Relation a) const {
    if (!is_descent(x, y, a)) throw Error(ErrorCode::not_descent_datum, "relation is not closed under the equivalences");
    return Relation{x, y, std::move(a)};
  }

  const Object& rel_dom(const Relation& a) const { return a.dom; }
  const Object& rel_cod(const Relation& a) const { return a.cod; }
  const Object& arrow_dom(const Arrow& f) const { return f.dom; }
  const Object& arrow_cod(const Arrow& f) const { return f.cod; }
  bool same_object(const Object& x, const Object& y) const {
    return base_.same_object(x.base, y.base) && equal(base_, x.rho, y.rho);
  }

  Relation identity(const Object& x) const { return Relation{x, x, x.rho}; }
  Relation compose(const Relation& a, const Relation& b) const {
    if (!same_object(a.cod, b.dom)) throw Error(ErrorCode::shape_mismatch, "relations are not composable");
    return Relation{a.dom, b.cod, base_.compose(a.rel, b.rel)};
  }
  Relation converse(const Relation& a) const { return Relation{a.cod, a.dom, base_.converse(a.rel)}; }
  Relation reindex(const Arrow& f, const Arrow& g, const Relation& a) const {
    if (!same_object(f.cod, a.dom) || !same_object(g.cod, a.cod))
      throw Error(ErrorCode::shape_mismatch, "reindexing arrows do not match the fibre");
    return Relation{f.dom, g.dom, base_.reindex(f.base, g.base, a.rel)};
  }
  bool leq(const Relation& a, const Relation& b) const {
    if (!same_object(a.dom, b.dom) || !same_object(a.cod, b.cod))
      throw Error(ErrorCode::shape_mismatch, "relations live in different fibres");
    return base_.leq(a.rel, b.rel);
  }

  Arrow id_arrow(const Object& x) const { return Arrow{x, x, base_.id_arrow(x.base)}; }
  Arrow then(const Arrow& f, const Arrow& g) const {
    if (!same_object(f.cod, g.dom)) throw Error(ErrorCode::shape_mismatch, "arrows are not composable");
    return Arrow{f.dom, g.cod, base_.then(f.base, g.base)};
  }
  bool same_arrow(const Arrow& f, const Arrow& g) const {
    return same_object(f.dom, g.dom) && same_object(f.cod, g.cod) && base_.same_arrow(f.base, g.base);
  }
  std::vector<Arrow> homs(const Object& x, const Object& y, std::size_t cap) const {
    std::vector<Arrow> out;
    for (auto& f : base_.homs(x.base, y.base, cap))
      if (is_arrow(x, y, f)) out.push_back(Arrow{x, y, std::move(f)});
    return out;
  }
  std::vector<Relation> fibre(const Object& x, const Object& y, std::size_t cap) const
    requires FiniteFibres<D>
  {
    std::vector<Relation> out;
    for (auto& a : base_.fibre(x.base, y.base, cap))
      if (is_descent(x, y, a)) out.push_back(Relation{x, y, std::move(a)});
    return out;
  }
  // Descent data are closed under binary meets and joins and contain top
  // and bottom.
  Relation meet(const Relation& a, const Relation& b) const
    requires LatticeFibres<D>
  {
    return Relation{a.dom, a.cod, base_.meet(a.rel, b.rel)};
  }
  Relation join(const Relation& a, const Relation& b) const
    requires LatticeFibres<D>
  {
    return Relation{a.dom, a.cod, base_.join(a.rel, b.rel)};
  }
  Relation top(const Object& x, const Object& y) const
    requires LatticeFibres<D>
  {
    return Relation{x, y, base_.top(x.base, y.base)};
  }
  Relation bottom(const Object& x, const Object& y) const
    requires LatticeFibres<D>
  {
    return Relation{x, y, base_.bottom(x.base, y.base)};
  }

  Json describe(const Object& x) const { return Json{{"carrier", base_.describe(x.base)}, {"rho", base_.describe(x.rho)}}; }
  Json describe(const Arrow& f) const { return base_.describe(f.base); }
  Json describe(const Relation& a) const { return base_.describe(a.rel); }

 private:
  D base_;
};

// Q_R : R -> QR(R), X |-> <X, d_X>, identity on fibres. Strict.
template <RelationalDoctrine D>
Lifting<D, QR<D>> unit_lifting(std::shared_ptr<const D> d, std::shared_ptr<const QR<D>> q) {
  Lifting<D, QR<D>> u;
  u.name = "unit";
  u.src = d;
  u.tgt = q;
  u.obj_map = [q](const typename D::Object& x) { return q->discrete(x); };
  u.arr_map = [q, d](const typename D::Arrow& f) {
    return typename QR<D>::Arrow{q->discrete(d->arrow_dom(f)), q->discrete(d->arrow_cod(f)), f};
  };
  u.fib_map = [q, d](const typename D::Relation& a) {
    return typename QR<D>::Relation{q->discrete(d->rel_dom(a)), q->discrete(d->rel_cod(a)), a};
  };
  u.strict = true;
  return u;
}

// QR(QR(R)) -> QR(R), <<X,rho>,sigma> |-> <X,sigma>, identity on fibres.
template <RelationalDoctrine D>
Lifting<QR<QR<D>>, QR<D>> mult_lifting(std::shared_ptr<const QR<QR<D>>> qq, std::shared_ptr<const QR<D>> q) {
  using QQ = QR<QR<D>>;
  Lifting<QQ, QR<D>> m;
  m.name = "mult";
  m.src = qq;
  m.tgt = q;
  auto flat = [](const typename QQ::Object& x) { return typename QR<D>::Object{x.base.base, x.rho.rel}; };
  m.obj_map = flat;
  m.arr_map = [flat](const typename QQ::Arrow& f) {
    return typename QR<D>::Arrow{flat(f.dom), flat(f.cod), f.base.base};
  };
  m.fib_map = [flat](const typename QQ::Relation& a) {
    return typename QR<D>::Relation{flat(a.dom), flat(a.cod), a.rel.rel};
  };
  m.strict = true;
  return m;
}

// QR(F) : <X,rho> |-> <F X, F(rho)>. Throws NotEquivalence when F(rho) is not
// an equivalence (F is then not a 1-arrow).
template <RelationalDoctrine S, RelationalDoctrine T>
Lifting<QR<S>, QR<T>> rq_on_lifting(const Lifting<S, T>& F, std::shared_ptr<const QR<S>> qs,
                                    std::shared_ptr<const QR<T>> qt) {
  Lifting<QR<S>, QR<T>> r;
  r.name = "QR(" + F.name + ")";
  r.src = qs;
  r.tgt = qt;
  auto obj = [F, qt](const typename QR<S>::Object& x) { return qt->object(F.obj_map(x.base), F.fib_map(x.rho)); };
  r.obj_map = obj;
  r.arr_map = [F, obj](const typename QR<S>::Arrow& f) {
    return typename QR<T>::Arrow{obj(f.dom), obj(f.cod), F.arr_map(f.base)};
  };
  r.fib_map = [F, obj](const typename QR<S>::Relation& a) {
    return typename QR<T>::Relation{obj(a.dom), obj(a.cod), F.fib_map(a.rel)};
  };
  r.strict = F.strict;
  return r;
}

// Pointwise comparison of two parallel liftings on the probes: objects,
// arrows and fibre maps.
template <RelationalDoctrine S, RelationalDoctrine T>
LawReport liftings_agree(const Lifting<S, T>& F, const Lifting<S, T>& G, const ProbeSet<S>& p,
                         const std::string& subject = "liftings agree") {
  const T& t = *F.tgt;
  LawReport rep;
  rep.subject = subject;
  auto& objs = rep.add("objects");
  auto& arrs = rep.add("arrows");
  auto& fibs = rep.add("fibres");
  for (std::size_t i = 0; i < p.size(); ++i) {
    objs.record(t.same_object(F.obj_map(p.objects[i]), G.obj_map(p.objects[i])), Json{{"index", i}});
    for (std::size_t j = 0; j < p.size(); ++j) {
      for (const auto& f : p.arrs(i, j)) arrs.record(t.same_arrow(F.arr_map(f), G.arr_map(f)), Json{{"from", i}, {"to", j}});
      for (const auto& a : p.rels(i, j)) {
        auto l = F.fib_map(a), r = G.fib_map(a);
        fibs.record(t.same_object(t.rel_dom(l), t.rel_dom(r)) && t.same_object(t.rel_cod(l), t.rel_cod(r)) && equal(t, l, r),
                    Json{{"from", i}, {"to", j}});
      }
    }
  }
  return rep;
}

// lambda_<X,rho> = id_X : <<X,d_X>,rho> -> <<X,rho>,rho>, a 2-arrow
// QR(unit) => unit at QR(R).
template <RelationalDoctrine D>
TwoArrow<QR<D>, QR<QR<D>>> kz_lambda(std::shared_ptr<const QR<D>> q, std::shared_ptr<const QR<QR<D>>> qq) {
  return {"lambda", [q, qq](const typename QR<D>::Object& x) {
            auto disc = q->discrete(x.base);
            auto dom = qq->object(disc, typename QR<D>::Relation{disc, disc, x.rho});
            auto cod = qq->object(x, q->identity(x));
            return qq->arrow(dom, cod, q->arrow(disc, x, q->base().id_arrow(x.base)));
          }};
}

// kzd2: lambda at <X,d_X> is the identity of <<X,d_X>,d_X>.
// kzd3: mult applied to lambda at <X,rho> is the identity of <X,rho>.
template <RelationalDoctrine D>
LawReport check_kzd(std::shared_ptr<const QR<D>> q, std::shared_ptr<const QR<QR<D>>> qq,
                    const std::vector<typename D::Object>& base_objects,
                    const std::vector<typename QR<D>::Object>& objects,
                    std::optional<TwoArrow<QR<D>, QR<QR<D>>>> lambda = std::nullopt) {
  TwoArrow<QR<D>, QR<QR<D>>> lam = lambda ? *lambda : kz_lambda(q, qq);
  auto m = mult_lifting(qq, q);
  LawReport rep;
  rep.subject = "kz identities";
  auto& k2 = rep.add("kzd2");
  for (const auto& x : base_objects) {
    auto disc = q->discrete(x);
    auto c = lam.component(disc);
    k2.record(qq->same_arrow(c, qq->id_arrow(qq->discrete(disc))), Json{{"object", q->base().describe(x)}});
  }
  auto& k3 = rep.add("kzd3");
  for (const auto& x : objects) {
    auto c = m.arr_map(lam.component(x));
    k3.record(q->same_arrow(c, q->id_arrow(x)), Json{{"object", q->describe(x)}});
  }
  return rep;
}

}  // namespace reldoc
