#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/laws.hpp"
#include "reldoc/probes.hpp"

namespace reldoc {

// A functor between the bases together with a fibrewise map S(X,Y) ->
// T(FX,FY). `strict` is the claim checked by check_one_arrow.
template <RelationalDoctrine S, RelationalDoctrine T = S>
struct Lifting {
  using Src = S;
  using Tgt = T;
  std::string name;
  std::shared_ptr<const S> src;
  std::shared_ptr<const T> tgt;
  std::function<typename T::Object(const typename S::Object&)> obj_map;
  std::function<typename T::Arrow(const typename S::Arrow&)> arr_map;
  std::function<typename T::Relation(const typename S::Relation&)> fib_map;
  bool strict = false;
};

// Natural family of target arrows theta_X : F X -> G X.
template <RelationalDoctrine S, RelationalDoctrine T = S>
struct TwoArrow {
  std::string name;
  std::function<typename T::Arrow(const typename S::Object&)> component;
};

template <RelationalDoctrine D>
Lifting<D, D> identity_lifting(std::shared_ptr<const D> d) {
  Lifting<D, D> f;
  f.name = "id";
  f.src = d;
  f.tgt = d;
  f.obj_map = [](const typename D::Object& x) { return x; };
  f.arr_map = [](const typename D::Arrow& a) { return a; };
  f.fib_map = [](const typename D::Relation& a) { return a; };
  f.strict = true;
  return f;
}

// G after F. Throws ShapeMismatch when tgt(F) is not src(G).
template <RelationalDoctrine S, RelationalDoctrine T, RelationalDoctrine U>
Lifting<S, U> compose_liftings(const Lifting<S, T>& f, const Lifting<T, U>& g) {
  if (f.tgt != g.src) throw Error(ErrorCode::shape_mismatch, "liftings are not composable");
  Lifting<S, U> h;
  h.name = g.name + "." + f.name;
  h.src = f.src;
  h.tgt = g.tgt;
  h.obj_map = [f, g](const typename S::Object& x) { return g.obj_map(f.obj_map(x)); };
  h.arr_map = [f, g](const typename S::Arrow& a) { return g.arr_map(f.arr_map(a)); };
  h.fib_map = [f, g](const typename S::Relation& a) { return g.fib_map(f.fib_map(a)); };
  h.strict = f.strict && g.strict;
  return h;
}

// Functoriality of the base part, naturality and monotonicity of the fibre
// part, and the lax (or, for strict liftings, exact) preservation of
// identities, composition and converse.
template <RelationalDoctrine S, RelationalDoctrine T>
LawReport check_one_arrow(const Lifting<S, T>& F, const ProbeSet<S>& p) {
  using detail::ok;
  const S& s = *F.src;
  const T& t = *F.tgt;
  LawReport rep;
  rep.subject = "lifting " + F.name;
  Rng rng(p.seed);
  const std::size_t n = p.size();
  const std::size_t B = p.law_budget;
  auto R = [&](std::size_t i, std::size_t j) { return p.rels(i, j).size(); };
  auto A = [&](std::size_t i, std::size_t j) { return p.arrs(i, j).size(); };
  auto& objs = p.objects;
  auto cmp = [&](const typename T::Relation& a, const typename T::Relation& b) {
    return F.strict ? equal(t, a, b) : t.leq(a, b);
  };

  run_law(rep.add("arrow_identity"), n, 1, B, rng, [&](auto&) { return std::vector<std::size_t>{}; },
          [&](auto& o, auto&) -> std::optional<Json> {
            const auto& x = objs[o[0]];
            if (t.same_arrow(F.arr_map(s.id_arrow(x)), t.id_arrow(F.obj_map(x)))) return ok();
            return Json{{"object", s.describe(x)}};
          });
  run_law(rep.add("arrow_compose"), n, 3, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1]), A(o[1], o[2])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            const auto& g = p.arrs(o[1], o[2])[ix[1]];
            if (t.same_arrow(F.arr_map(s.then(f, g)), t.then(F.arr_map(f), F.arr_map(g)))) return ok();
            return Json{{"f", s.describe(f)}, {"g", s.describe(g)}};
          });
  run_law(rep.add("fibre_natural"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[2]), A(o[1], o[3]), R(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[2])[ix[0]];
            const auto& g = p.arrs(o[1], o[3])[ix[1]];
            const auto& a = p.rels(o[2], o[3])[ix[2]];
            auto l = F.fib_map(s.reindex(f, g, a));
            auto r = t.reindex(F.arr_map(f), F.arr_map(g), F.fib_map(a));
            if (equal(t, l, r)) return ok();
            return Json{{"f", s.describe(f)}, {"g", s.describe(g)}, {"alpha", s.describe(a)}};
          });
  run_law(rep.add("fibre_monotone"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[0], o[1])[ix[1]];
            if (!s.leq(a, b) || t.leq(F.fib_map(a), F.fib_map(b))) return ok();
            return Json{{"alpha", s.describe(a)}, {"beta", s.describe(b)}};
          });
  run_law(rep.add("preserve_identity"), n, 1, B, rng, [&](auto&) { return std::vector<std::size_t>{}; },
          [&](auto& o, auto&) -> std::optional<Json> {
            const auto& x = objs[o[0]];
            auto l = t.identity(F.obj_map(x));
            auto r = F.fib_map(s.identity(x));
            if (cmp(l, r)) return ok();
            return Json{{"object", s.describe(x)}, {"lifted_identity", t.describe(r)}};
          });
  run_law(rep.add("preserve_compose"), n, 3, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[1], o[2])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[1], o[2])[ix[1]];
            auto l = t.compose(F.fib_map(a), F.fib_map(b));
            auto r = F.fib_map(s.compose(a, b));
            if (cmp(l, r)) return ok();
            return Json{{"alpha", s.describe(a)}, {"beta", s.describe(b)}, {"lhs", t.describe(l)},
                        {"rhs", t.describe(r)}};
          });
  run_law(rep.add("preserve_converse"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            if (t.leq(t.converse(F.fib_map(a)), F.fib_map(s.converse(a)))) return ok();
            return Json{{"alpha", s.describe(a)}};
          });
  run_law(rep.add("preserve_graph"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            if (t.leq(graph(t, F.arr_map(f)), F.fib_map(graph(s, f))) &&
                t.leq(cograph(t, F.arr_map(f)), F.fib_map(cograph(s, f))))
              return ok();
            return Json{{"f", s.describe(f)}};
          });
  const Json mode = F.strict ? "equality" : "inequality";
  for (auto& c : rep.checks)
    if (c.law == "preserve_identity" || c.law == "preserve_compose") c.detail = Json{{"mode", mode}};
  return rep;
}

// Naturality of theta and the inequality F(a) <= T[theta_X, theta_Y](G a),
// together with its two graph reformulations.
template <RelationalDoctrine S, RelationalDoctrine T>
LawReport check_two_arrow(const TwoArrow<S, T>& theta, const Lifting<S, T>& F, const Lifting<S, T>& G,
                          const ProbeSet<S>& p) {
  using detail::ok;
  if (F.src != G.src || F.tgt != G.tgt) throw Error(ErrorCode::shape_mismatch, "liftings are not parallel");
  const S& s = *F.src;
  const T& t = *F.tgt;
  LawReport rep;
  rep.subject = "2-arrow " + theta.name;
  Rng rng(p.seed);
  const std::size_t n = p.size();
  const std::size_t B = p.law_budget;
  auto R = [&](std::size_t i, std::size_t j) { return p.rels(i, j).size(); };
  auto A = [&](std::size_t i, std::size_t j) { return p.arrs(i, j).size(); };
  auto& objs = p.objects;

  run_law(rep.add("component_type"), n, 1, B, rng, [&](auto&) { return std::vector<std::size_t>{}; },
          [&](auto& o, auto&) -> std::optional<Json> {
            const auto& x = objs[o[0]];
            auto c = theta.component(x);
            if (t.same_object(t.arrow_dom(c), F.obj_map(x)) && t.same_object(t.arrow_cod(c), G.obj_map(x)))
              return ok();
            return Json{{"object", s.describe(x)}};
          });
  if (!rep.ok()) return rep;
  run_law(rep.add("naturality"), n, 2, B, rng, [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            auto l = t.then(F.arr_map(f), theta.component(objs[o[1]]));
            auto r = t.then(theta.component(objs[o[0]]), G.arr_map(f));
            if (t.same_arrow(l, r)) return ok();
            return Json{{"f", s.describe(f)}};
          });
  auto each_rel = [&](LawCheck& c, auto&& pred) {
    run_law(c, n, 2, B, rng, [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
            [&](auto& o, auto& ix) -> std::optional<Json> {
              const auto& a = p.rels(o[0], o[1])[ix[0]];
              if (pred(a, theta.component(objs[o[0]]), theta.component(objs[o[1]]))) return ok();
              return Json{{"alpha", s.describe(a)}};
            });
  };
  each_rel(rep.add("fibre_inequality"), [&](const auto& a, const auto& tx, const auto& ty) {
    return t.leq(F.fib_map(a), t.reindex(tx, ty, G.fib_map(a)));
  });
  each_rel(rep.add("graph_form_sandwich"), [&](const auto& a, const auto& tx, const auto& ty) {
    return t.leq(F.fib_map(a), t.compose(t.compose(graph(t, tx), G.fib_map(a)), cograph(t, ty)));
  });
  each_rel(rep.add("graph_form_square"), [&](const auto& a, const auto& tx, const auto& ty) {
    return t.leq(t.compose(F.fib_map(a), graph(t, ty)), t.compose(graph(t, tx), G.fib_map(a)));
  });
  return rep;
}

// Coalgebra for the base part of an endolifting: structure : X -> F X.
template <RelationalDoctrine D>
struct Coalgebra {
  typename D::Object carrier;
  typename D::Arrow structure;
};

template <RelationalDoctrine D>
void require_coalgebra(const Lifting<D, D>& F, const Coalgebra<D>& c) {
  const D& d = *F.src;
  if (!d.same_object(d.arrow_dom(c.structure), c.carrier) ||
      !d.same_object(d.arrow_cod(c.structure), F.obj_map(c.carrier)))
    throw Error(ErrorCode::shape_mismatch, "structure map is not X -> F X");
}

// gr c ; F(a) ; gr d°
template <RelationalDoctrine D>
typename D::Relation bisimulation_step(const Lifting<D, D>& F, const Coalgebra<D>& c, const Coalgebra<D>& e,
                                       const typename D::Relation& a) {
  const D& d = *F.src;
  return d.compose(d.compose(graph(d, c.structure), F.fib_map(a)), cograph(d, e.structure));
}

template <RelationalDoctrine D>
bool is_bisimulation(const Lifting<D, D>& F, const Coalgebra<D>& c, const Coalgebra<D>& e,
                     const typename D::Relation& a) {
  const D& d = *F.src;
  require_coalgebra(F, c);
  require_coalgebra(F, e);
  if (!d.same_object(d.rel_dom(a), c.carrier) || !d.same_object(d.rel_cod(a), e.carrier))
    throw Error(ErrorCode::shape_mismatch, "relation does not connect the coalgebra carriers");
  return d.leq(a, bisimulation_step(F, c, e, a));
}

template <RelationalDoctrine D>
struct BisimResult {
  typename D::Relation relation;
  std::size_t iterations = 0;
  bool exact = false;                // iteration reached a fixpoint
  bool verified = false;             // result re-checked as a bisimulation
  bool above_certificates = true;    // every supplied bisimulation lies below
  std::vector<bool> certificate_ok;  // per certificate: is it a bisimulation
};

struct BisimOptions {
  std::size_t max_iter = 1000;
};

// Greatest bisimulation below `start` (top when absent), by iterating
// a -> a meet (gr c ; F(a) ; gr d°) until it stabilises. Relation equality
// uses the doctrine's order, so Lawvere entries stabilise up to its eps.
// Throws NonMonotoneLifting if a decreasing step makes F(a) grow.
template <LatticeFibres D>
BisimResult<D> greatest_bisimulation(const Lifting<D, D>& F, const Coalgebra<D>& c, const Coalgebra<D>& e,
                                     const BisimOptions& opt = {},
                                     std::optional<typename D::Relation> start = std::nullopt,
                                     const std::vector<typename D::Relation>& certificates = {}) {
  const D& d = *F.src;
  require_coalgebra(F, c);
  require_coalgebra(F, e);
  typename D::Relation a = start ? *start : d.top(c.carrier, e.carrier);
  if (!d.same_object(d.rel_dom(a), c.carrier) || !d.same_object(d.rel_cod(a), e.carrier))
    throw Error(ErrorCode::shape_mismatch, "start relation does not connect the coalgebra carriers");
  BisimResult<D> res;
  auto lifted = F.fib_map(a);
  while (res.iterations < opt.max_iter) {
    auto next = d.meet(a, d.compose(d.compose(graph(d, c.structure), lifted), cograph(d, e.structure)));
    ++res.iterations;
    auto next_lifted = F.fib_map(next);
    if (!d.leq(next_lifted, lifted))
      throw Error(ErrorCode::non_monotone_lifting, "lifting grew along a decreasing chain at iteration " +
                                                       std::to_string(res.iterations));
    bool stable = equal(d, next, a);
    a = std::move(next);
    lifted = std::move(next_lifted);
    if (stable) {
      res.exact = true;
      break;
    }
  }
  res.verified = d.leq(a, bisimulation_step(F, c, e, a));
  for (const auto& cert : certificates) {
    bool ok = is_bisimulation(F, c, e, cert);
    res.certificate_ok.push_back(ok);
    if (ok && !d.leq(cert, a)) res.above_certificates = false;
  }
  res.relation = std::move(a);
  return res;
}

}  // namespace reldoc
