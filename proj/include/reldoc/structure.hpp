#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/law_report.hpp"
#include "reldoc/laws.hpp"
#include "reldoc/probes.hpp"

namespace reldoc {

// ------------------------------------------ ordered categories with involution

// Hom posets are the fibres, composition and identities the relational ones,
// the involution is the converse.
template <FiniteFibres D>
class OrdCat {
 public:
  using Object = typename D::Object;
  using Arrow = typename D::Relation;

  OrdCat(D d, std::vector<Object> objects, std::size_t fibre_cap = 1u << 20)
      : d_(std::move(d)), objects_(std::move(objects)), cap_(fibre_cap) {}

  const D& doctrine() const { return d_; }
  const std::vector<Object>& objects() const { return objects_; }
  std::size_t fibre_cap() const { return cap_; }

  std::vector<Arrow> hom(const Object& x, const Object& y) const { return d_.fibre(x, y, cap_); }
  Arrow identity(const Object& x) const { return d_.identity(x); }
  // diagrammatic: first a, then b
  Arrow compose(const Arrow& a, const Arrow& b) const { return d_.compose(a, b); }
  Arrow involution(const Arrow& a) const { return d_.converse(a); }
  bool leq(const Arrow& a, const Arrow& b) const { return d_.leq(a, b); }
  bool same(const Arrow& a, const Arrow& b) const { return equal(d_, a, b); }
  decltype(auto) dom(const Arrow& a) const { return d_.rel_dom(a); }
  decltype(auto) cod(const Arrow& a) const { return d_.rel_cod(a); }
  bool same_object(const Object& x, const Object& y) const { return d_.same_object(x, y); }
  Json describe(const Arrow& a) const { return d_.describe(a); }
  Json describe(const Object& x) const { return d_.describe(x); }

 private:
  D d_;
  std::vector<Object> objects_;
  std::size_t cap_;
};

template <FiniteFibres D>
OrdCat<D> ord_category(D d, std::vector<typename D::Object> objects, std::size_t fibre_cap = 1u << 20) {
  return OrdCat<D>(std::move(d), std::move(objects), fibre_cap);
}

// Category, enrichment and involution laws over the supplied objects.
template <FiniteFibres D>
LawReport check_ord_category(const OrdCat<D>& c, std::size_t budget = 1u << 18, std::uint64_t seed = 0) {
  using detail::ok;
  LawReport rep;
  rep.subject = "ordered category with involution";
  const auto& objs = c.objects();
  const std::size_t n = objs.size();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<typename OrdCat<D>::Arrow>> homs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) homs[{i, j}] = c.hom(objs[i], objs[j]);
  auto H = [&](std::size_t i, std::size_t j) -> const auto& { return homs.at({i, j}); };
  Rng rng(seed);

  run_law(rep.add("unit"), n, 2, budget, rng, [&](auto& o) { return std::vector<std::size_t>{H(o[0], o[1]).size()}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = H(o[0], o[1])[ix[0]];
            if (c.same(c.compose(c.identity(objs[o[0]]), a), a) && c.same(c.compose(a, c.identity(objs[o[1]])), a))
              return ok();
            return Json{{"a", c.describe(a)}};
          });
  run_law(rep.add("associativity"), n, 4, budget, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{H(o[0], o[1]).size(), H(o[1], o[2]).size(), H(o[2], o[3]).size()};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = H(o[0], o[1])[ix[0]];
            const auto& b = H(o[1], o[2])[ix[1]];
            const auto& e = H(o[2], o[3])[ix[2]];
            if (c.same(c.compose(c.compose(a, b), e), c.compose(a, c.compose(b, e)))) return ok();
            return Json{{"a", c.describe(a)}, {"b", c.describe(b)}, {"c", c.describe(e)}};
          });
  run_law(rep.add("composition_monotone"), n, 3, budget, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{H(o[0], o[1]).size(), H(o[0], o[1]).size(), H(o[1], o[2]).size(),
                                            H(o[1], o[2]).size()};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = H(o[0], o[1])[ix[0]];
            const auto& a2 = H(o[0], o[1])[ix[1]];
            const auto& b = H(o[1], o[2])[ix[2]];
            const auto& b2 = H(o[1], o[2])[ix[3]];
            if (!c.leq(a, a2) || !c.leq(b, b2) || c.leq(c.compose(a, b), c.compose(a2, b2))) return ok();
            return Json{{"a", c.describe(a)}, {"a2", c.describe(a2)}, {"b", c.describe(b)}, {"b2", c.describe(b2)}};
          });
  run_law(rep.add("involution"), n, 2, budget, rng,
          [&](auto& o) { return std::vector<std::size_t>{H(o[0], o[1]).size(), H(o[0], o[1]).size()}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = H(o[0], o[1])[ix[0]];
            const auto& b = H(o[0], o[1])[ix[1]];
            auto ia = c.involution(a);
            bool typed = c.same_object(c.dom(ia), objs[o[1]]) && c.same_object(c.cod(ia), objs[o[0]]);
            bool self_inverse = c.same(c.involution(ia), a);
            bool monotone = !c.leq(a, b) || c.leq(ia, c.involution(b));
            if (typed && self_inverse && monotone) return ok();
            return Json{{"a", c.describe(a)}, {"b", c.describe(b)}};
          });
  run_law(rep.add("involution_reverses"), n, 3, budget, rng,
          [&](auto& o) { return std::vector<std::size_t>{H(o[0], o[1]).size(), H(o[1], o[2]).size()}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = H(o[0], o[1])[ix[0]];
            const auto& b = H(o[1], o[2])[ix[1]];
            if (c.same(c.involution(c.compose(a, b)), c.compose(c.involution(b), c.involution(a)))) return ok();
            return Json{{"a", c.describe(a)}, {"b", c.describe(b)}};
          });
  run_law(rep.add("involution_identity"), n, 1, budget, rng, [](auto&) { return std::vector<std::size_t>{}; },
          [&](auto& o, auto&) -> std::optional<Json> {
            const auto& x = objs[o[0]];
            if (c.same(c.involution(c.identity(x)), c.identity(x))) return ok();
            return Json{{"object", c.describe(x)}};
          });
  return rep;
}

// f is a map when f° is right adjoint to it: f;f° >= id_X and f°;f <= id_Y.
template <FiniteFibres D>
bool is_map(const OrdCat<D>& c, const typename OrdCat<D>::Arrow& f) {
  auto fc = c.involution(f);
  return c.leq(c.identity(c.dom(f)), c.compose(f, fc)) && c.leq(c.compose(fc, f), c.identity(c.cod(f)));
}

template <FiniteFibres D>
std::vector<typename OrdCat<D>::Arrow> maps_between(const OrdCat<D>& c, const typename D::Object& x,
                                                     const typename D::Object& y) {
  std::vector<typename OrdCat<D>::Arrow> out;
  for (auto& f : c.hom(x, y))
    if (is_map(c, f)) out.push_back(std::move(f));
  return out;
}

// RMap(C): base = maps of C, fibres = homs of C, reindexing a -> f;a;g°.
template <FiniteFibres D>
class RMap {
 public:
  using Object = typename D::Object;
  using Relation = typename D::Relation;
  struct Arrow {
    Relation map;
  };

  explicit RMap(OrdCat<D> c) : c_(std::move(c)) {}
  const OrdCat<D>& category() const { return c_; }
  Provenance provenance() const { return Provenance::rmap; }

  // Throws NotAnArrow unless f is a map.
  Arrow arrow(const Relation& f) const {
    if (!is_map(c_, f)) throw Error(ErrorCode::not_an_arrow, "relation is not a map");
    return Arrow{f};
  }

  decltype(auto) rel_dom(const Relation& a) const { return c_.dom(a); }
  decltype(auto) rel_cod(const Relation& a) const { return c_.cod(a); }
  decltype(auto) arrow_dom(const Arrow& f) const { return c_.dom(f.map); }
  decltype(auto) arrow_cod(const Arrow& f) const { return c_.cod(f.map); }
  bool same_object(const Object& x, const Object& y) const { return c_.same_object(x, y); }

  Relation identity(const Object& x) const { return c_.identity(x); }
  Relation compose(const Relation& a, const Relation& b) const { return c_.compose(a, b); }
  Relation converse(const Relation& a) const { return c_.involution(a); }
  Relation reindex(const Arrow& f, const Arrow& g, const Relation& a) const {
    return c_.compose(c_.compose(f.map, a), c_.involution(g.map));
  }
  bool leq(const Relation& a, const Relation& b) const { return c_.leq(a, b); }

  Arrow id_arrow(const Object& x) const { return Arrow{c_.identity(x)}; }
  Arrow then(const Arrow& f, const Arrow& g) const { return Arrow{c_.compose(f.map, g.map)}; }
  bool same_arrow(const Arrow& f, const Arrow& g) const { return c_.same(f.map, g.map); }
  std::vector<Arrow> homs(const Object& x, const Object& y, std::size_t) const {
    std::vector<Arrow> out;
    for (auto& f : maps_between(c_, x, y)) out.push_back(Arrow{std::move(f)});
    return out;
  }
  std::vector<Relation> fibre(const Object& x, const Object& y, std::size_t) const { return c_.hom(x, y); }

  Json describe(const Object& x) const { return c_.describe(x); }
  Json describe(const Arrow& f) const { return c_.describe(f.map); }
  Json describe(const Relation& a) const { return c_.describe(a); }

 private:
  OrdCat<D> c_;
};

template <FiniteFibres D>
RMap<D> rmap_doctrine(OrdCat<D> c) {
  return RMap<D>(std::move(c));
}

// The comparison X -> X, f -> gr f, alpha -> alpha from D to RMap(Ord(D)):
// faithful when D is extensional, full when D has unique choice, and the
// identity on fibres and relational operations.
template <FiniteFibres D>
LawReport check_rmap_comparison(const D& d, const RMap<D>& r, std::size_t hom_cap = kDefaultHomCap) {
  LawReport rep;
  rep.subject = "comparison with RMap(Ord)";
  const auto& objs = r.category().objects();
  LawCheck& faithful = rep.add("faithful");
  LawCheck& full = rep.add("full");
  LawCheck& fibres = rep.add("fibres");
  LawCheck& ops = rep.add("operations");
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto fs = d.homs(x, y, hom_cap);
      for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
          faithful.record(!equal(d, graph(d, fs[i]), graph(d, fs[j])),
                          Json{{"f", d.describe(fs[i])}, {"g", d.describe(fs[j])}});
      for (const auto& m : r.homs(x, y, hom_cap)) {
        bool hit = false;
        for (const auto& f : fs) hit = hit || equal(d, graph(d, f), m.map);
        full.record(hit, Json{{"map", r.describe(m)}});
      }
      auto a = d.fibre(x, y, r.category().fibre_cap());
      auto b = r.fibre(x, y, 0);
      bool same = a.size() == b.size();
      for (std::size_t i = 0; same && i < a.size(); ++i) same = equal(d, a[i], b[i]);
      fibres.record(same, Json{{"x", d.describe(x)}, {"y", d.describe(y)}});
      auto endo = d.fibre(y, y, r.category().fibre_cap());
      for (const auto& al : a) {
        bool agree = equal(d, r.converse(al), d.converse(al)) &&
                     equal(d, r.compose(r.identity(x), al), d.compose(d.identity(x), al));
        for (const auto& f : fs) {
          typename RMap<D>::Arrow gf{graph(d, f)};
          for (const auto& be : endo) agree = agree && equal(d, r.reindex(gf, gf, be), d.reindex(f, f, be));
        }
        ops.record(agree, Json{{"alpha", d.describe(al)}});
      }
    }
  return rep;
}

// --------------------------------------------------------- unique choice

enum class RucMode { exhaustive, sampled };

struct RucResult {
  bool holds = true;
  std::size_t functional_total = 0;  // relations that needed an arrow
  std::size_t checked = 0;
  bool exhaustive = true;
  Json witness;  // functional total relation with no arrow below it
};

// Every functional total alpha : X -> Y has some f with gr f <= alpha.
// Exhaustive mode walks the fibre; sampled mode draws from `sampler`.
template <RelationalDoctrine D>
RucResult check_ruc(const D& d, const typename D::Object& x, const typename D::Object& y, RucMode mode,
                    std::function<typename D::Relation(Rng&)> sampler = nullptr, std::size_t samples = 1000,
                    std::uint64_t seed = 0, std::size_t hom_cap = kDefaultHomCap, std::size_t fibre_cap = 1u << 20) {
  RucResult r;
  auto fs = d.homs(x, y, hom_cap);
  auto visit = [&](const typename D::Relation& a) {
    ++r.checked;
    if (!is_functional(d, a) || !is_total(d, a)) return;
    ++r.functional_total;
    for (const auto& f : fs)
      if (d.leq(graph(d, f), a)) return;
    if (r.holds) {
      r.holds = false;
      r.witness = Json{{"alpha", d.describe(a)}, {"functional", true}, {"total", true}, {"arrows_tried", fs.size()}};
    }
  };
  if (mode == RucMode::exhaustive) {
    if constexpr (FiniteFibres<D>) {
      for (const auto& a : d.fibre(x, y, fibre_cap)) visit(a);
    } else {
      throw Error(ErrorCode::precondition_failed, "exhaustive unique-choice check needs finite fibres");
    }
  } else {
    if (!sampler) throw Error(ErrorCode::precondition_failed, "sampled unique-choice check needs a sampler");
    r.exhaustive = false;
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) visit(sampler(rng));
  }
  return r;
}

// ------------------------------------------------------ cartesian structure

// Candidate product structure from base products and fibre meets. Not
// asserted lawful; see check_cartesian.
template <class D>
  requires CartesianBase<D> && LatticeFibres<D>
struct CartesianCandidate {
  using Object = typename D::Object;
  using Arrow = typename D::Arrow;
  using Relation = typename D::Relation;
  const D* d;

  Product<Object, Arrow> prod(const Object& x, const Object& y) const { return d->product(x, y); }
  Arrow p1(const Object& x, const Object& y) const { return prod(x, y).p1; }
  Arrow p2(const Object& x, const Object& y) const { return prod(x, y).p2; }
  Arrow diag(const Object& x) const { return d->pair(d->id_arrow(x), d->id_arrow(x), prod(x, x).obj); }
  Arrow bang(const Object& x) const { return d->bang(x); }
  Object one() const { return d->terminal(); }
  // f x g
  Arrow cross(const Arrow& f, const Arrow& g) const {
    auto src = prod(d->arrow_dom(f), d->arrow_dom(g));
    auto tgt = prod(d->arrow_cod(f), d->arrow_cod(g));
    return d->pair(d->then(src.p1, f), d->then(src.p2, g), tgt.obj);
  }
  // X x (Y x Z) -> (X x Y) x Z
  Arrow assoc(const Object& x, const Object& y, const Object& z) const {
    auto yz = prod(y, z);
    auto l = prod(x, yz.obj);
    auto xy = prod(x, y);
    auto first = d->pair(l.p1, d->then(l.p2, yz.p1), xy.obj);
    return d->pair(first, d->then(l.p2, yz.p2), prod(xy.obj, z).obj);
  }
  // X x Y -> Y x X
  Arrow swap(const Object& x, const Object& y) const {
    auto s = prod(x, y);
    return d->pair(s.p2, s.p1, prod(y, x).obj);
  }

  // a (x) b = (gr p1 ; a ; gr p1°) meet (gr p2 ; b ; gr p2°)
  Relation times(const Relation& a, const Relation& b) const {
    auto s = prod(d->rel_dom(a), d->rel_dom(b));
    auto t = prod(d->rel_cod(a), d->rel_cod(b));
    auto l = d->compose(d->compose(graph(*d, s.p1), a), cograph(*d, t.p1));
    auto r = d->compose(d->compose(graph(*d, s.p2), b), cograph(*d, t.p2));
    return d->meet(l, r);
  }
  // gr diag ; (a (x) b) ; gr diag°
  Relation meet(const Relation& a, const Relation& b) const {
    return d->compose(d->compose(graph(*d, diag(d->rel_dom(a))), times(a, b)), cograph(*d, diag(d->rel_cod(a))));
  }
  // gr ! ; gr !°
  Relation top(const Object& x, const Object& y) const { return d->compose(graph(*d, bang(x)), cograph(*d, bang(y))); }
};

// Throws NoProducts when the base has no chosen products.
template <class D>
  requires CartesianBase<D> && LatticeFibres<D>
CartesianCandidate<D> cartesian_candidate(const D& d) {
  (void)d.terminal();
  return CartesianCandidate<D>{&d};
}

// The defining (in)equations of a cartesian doctrine for the candidate,
// plus agreement of the derived meets and top with the fibre lattice.
template <class D>
  requires CartesianBase<D> && LatticeFibres<D>
LawReport check_cartesian(const D& d, const CartesianCandidate<D>& c, const ProbeSet<D>& p) {
  using detail::ok;
  LawReport rep;
  rep.subject = "cartesian";
  Rng rng(p.seed);
  const std::size_t n = p.size();
  const std::size_t B = p.law_budget;
  auto R = [&](std::size_t i, std::size_t j) { return p.rels(i, j).size(); };
  auto A = [&](std::size_t i, std::size_t j) { return p.arrs(i, j).size(); };
  const auto& objs = p.objects;
  auto none = [](auto&) { return std::vector<std::size_t>{}; };

  run_law(rep.add("terminal_identity"), 1, 1, B, rng, none, [&](auto&, auto&) -> std::optional<Json> {
    auto one = c.one();
    if (equal(d, d.identity(one), d.top(one, one))) return ok();
    return Json{{"identity", d.describe(d.identity(one))}};
  });
  run_law(rep.add("identity_product"), n, 2, B, rng, none, [&](auto& o, auto&) -> std::optional<Json> {
    const auto& x = objs[o[0]];
    const auto& y = objs[o[1]];
    auto pr = c.prod(x, y);
    auto rhs = d.meet(d.compose(graph(d, pr.p1), cograph(d, pr.p1)), d.compose(graph(d, pr.p2), cograph(d, pr.p2)));
    if (equal(d, d.identity(pr.obj), c.times(d.identity(x), d.identity(y))) && equal(d, d.identity(pr.obj), rhs))
      return ok();
    return Json{{"x", d.describe(x)}, {"y", d.describe(y)}};
  });
  run_law(rep.add("interchange"), n, 6, B, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{R(o[0], o[1]), R(o[1], o[2]), R(o[3], o[4]), R(o[4], o[5])};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[1], o[2])[ix[1]];
            const auto& a2 = p.rels(o[3], o[4])[ix[2]];
            const auto& b2 = p.rels(o[4], o[5])[ix[3]];
            auto l = d.compose(c.times(a, a2), c.times(b, b2));
            auto r = c.times(d.compose(a, b), d.compose(a2, b2));
            if (equal(d, l, r)) return ok();
            return Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}, {"alpha2", d.describe(a2)},
                        {"beta2", d.describe(b2)}, {"lhs", d.describe(l)}, {"rhs", d.describe(r)}};
          });
  run_law(rep.add("converse"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[2], o[3])[ix[1]];
            if (equal(d, d.converse(c.times(a, b)), c.times(d.converse(a), d.converse(b)))) return ok();
            return Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("below_top"), n, 2, B, rng, [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            auto t = c.top(objs[o[0]], objs[o[1]]);
            if (d.leq(a, t) && equal(d, t, d.top(objs[o[0]], objs[o[1]])) && equal(d, d.converse(t), c.top(objs[o[1]], objs[o[0]])))
              return ok();
            return Json{{"alpha", d.describe(a)}};
          });
  run_law(rep.add("projections"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[2], o[3])[ix[1]];
            auto s = c.prod(objs[o[0]], objs[o[2]]);
            auto t = c.prod(objs[o[1]], objs[o[3]]);
            auto ab = c.times(a, b);
            bool l = d.leq(ab, d.compose(d.compose(graph(d, s.p1), a), cograph(d, t.p1)));
            bool r = d.leq(ab, d.compose(d.compose(graph(d, s.p2), b), cograph(d, t.p2)));
            if (l && r) return ok();
            return Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("diagonal"), n, 2, B, rng, [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            auto r = d.compose(d.compose(graph(d, c.diag(objs[o[0]])), c.times(a, a)), cograph(d, c.diag(objs[o[1]])));
            if (d.leq(a, r)) return ok();
            return Json{{"alpha", d.describe(a)}};
          });
  run_law(rep.add("meets"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[0], o[1])[ix[1]];
            if (equal(d, c.meet(a, b), d.meet(a, b))) return ok();
            return Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("natural"), n, 4, B, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{A(o[0], o[1]), A(o[2], o[3]), R(o[1], o[1]), R(o[3], o[3])};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            const auto& g = p.arrs(o[2], o[3])[ix[1]];
            const auto& a = p.rels(o[1], o[1])[ix[2]];
            const auto& b = p.rels(o[3], o[3])[ix[3]];
            auto fg = c.cross(f, g);
            auto l = d.reindex(fg, fg, c.times(a, b));
            auto r = c.times(d.reindex(f, f, a), d.reindex(g, g, b));
            if (equal(d, l, r)) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}, {"alpha", d.describe(a)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("graph_product"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1]), A(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            const auto& g = p.arrs(o[2], o[3])[ix[1]];
            if (equal(d, graph(d, c.cross(f, g)), c.times(graph(d, f), graph(d, g)))) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}};
          });
  return rep;
}

// alpha;gr f meet beta = (alpha meet beta;gr f°);gr f
template <class D>
  requires LatticeFibres<D>
LawReport check_frobenius(const D& d, const ProbeSet<D>& p) {
  using detail::ok;
  LawReport rep;
  rep.subject = "frobenius";
  Rng rng(p.seed);
  run_law(rep.add("frobenius"), p.size(), 3, p.law_budget, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{p.arrs(o[1], o[2]).size(), p.rels(o[0], o[1]).size(),
                                            p.rels(o[0], o[2]).size()};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[1], o[2])[ix[0]];
            const auto& a = p.rels(o[0], o[1])[ix[1]];
            const auto& b = p.rels(o[0], o[2])[ix[2]];
            auto l = d.meet(d.compose(a, graph(d, f)), b);
            auto r = d.compose(d.meet(a, d.compose(b, cograph(d, f))), graph(d, f));
            if (equal(d, l, r)) return ok();
            return Json{{"f", d.describe(f)}, {"alpha", d.describe(a)}, {"beta", d.describe(b)},
                        {"lhs", d.describe(l)}, {"rhs", d.describe(r)}};
          });
  return rep;
}

// alpha ; gr p1[Y,A]° = gr p1[X,A]° ; (alpha (x) d_A)
template <class D>
  requires CartesianBase<D> && LatticeFibres<D>
LawReport check_beck_chevalley(const D& d, const CartesianCandidate<D>& c, const ProbeSet<D>& p) {
  using detail::ok;
  LawReport rep;
  rep.subject = "beck-chevalley";
  Rng rng(p.seed);
  run_law(rep.add("beck_chevalley"), p.size(), 3, p.law_budget, rng,
          [&](auto& o) { return std::vector<std::size_t>{p.rels(o[0], o[1]).size()}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& x = p.objects[o[0]];
            const auto& y = p.objects[o[1]];
            const auto& z = p.objects[o[2]];
            auto l = d.compose(a, cograph(d, c.p1(y, z)));
            auto r = d.compose(cograph(d, c.p1(x, z)), c.times(a, d.identity(z)));
            if (equal(d, l, r)) return ok();
            return Json{{"alpha", d.describe(a)}, {"a", d.describe(z)}};
          });
  return rep;
}

template <class D>
struct ModularSides {
  typename D::Relation lhs, rhs;  // alpha;gamma meet beta, (alpha meet beta;gamma°);gamma
  bool holds = false;
};

template <class D>
  requires LatticeFibres<D>
ModularSides<D> modular_sides(const D& d, const typename D::Relation& alpha, const typename D::Relation& beta,
                              const typename D::Relation& gamma) {
  auto l = d.meet(d.compose(alpha, gamma), beta);
  auto r = d.compose(d.meet(alpha, d.compose(beta, d.converse(gamma))), gamma);
  return ModularSides<D>{l, r, d.leq(l, r)};
}

// alpha;gamma meet beta <= (alpha meet beta;gamma°);gamma
template <class D>
  requires LatticeFibres<D>
LawReport check_modular(const D& d, const ProbeSet<D>& p) {
  using detail::ok;
  LawReport rep;
  rep.subject = "modular";
  Rng rng(p.seed);
  // every failing triple is kept (up to a limit), not just the first
  constexpr std::size_t kKeep = 32;
  std::size_t failing = 0;
  Json examples = Json::array();
  LawCheck& check = rep.add("modular");
  run_law(check, p.size(), 3, p.law_budget, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{p.rels(o[0], o[1]).size(), p.rels(o[0], o[2]).size(),
                                            p.rels(o[1], o[2]).size()};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[0], o[2])[ix[1]];
            const auto& g = p.rels(o[1], o[2])[ix[2]];
            auto s = modular_sides(d, a, b, g);
            if (s.holds) return ok();
            Json w{{"alpha", d.describe(a)}, {"beta", d.describe(b)}, {"gamma", d.describe(g)},
                   {"lhs", d.describe(s.lhs)}, {"rhs", d.describe(s.rhs)}};
            if (++failing <= kKeep) examples.push_back(w);
            return w;
          });
  if (failing > 0) check.detail = Json{{"failing_cases", failing}, {"examples", std::move(examples)}};
  return rep;
}

// ------------------------------------------------ relations as predicates

// phi(alpha) = (alpha (x) d_Y) ; gr diag_Y° ; gr !_Y  in R(X x Y, 1)
template <class D>
  requires CartesianBase<D> && LatticeFibres<D>
typename D::Relation phi(const D& d, const CartesianCandidate<D>& c, const typename D::Relation& a) {
  const auto& y = d.rel_cod(a);
  return d.compose(d.compose(c.times(a, d.identity(y)), cograph(d, c.diag(y))), graph(d, c.bang(y)));
}

// psi(beta) = gr p1° ; (d_X (x) gr diag_Y) ; gr assoc ; (beta (x) d_Y) ; gr p2[1,Y]
// for beta in R(X x Y, 1). The associator is explicit because products are
// not strictly associative.
template <class D>
  requires CartesianBase<D> && LatticeFibres<D>
typename D::Relation psi(const D& d, const CartesianCandidate<D>& c, const typename D::Object& x,
                         const typename D::Object& y, const typename D::Relation& b) {
  auto step1 = cograph(d, c.p1(x, y));
  auto step2 = c.times(d.identity(x), graph(d, c.diag(y)));
  auto step3 = graph(d, c.assoc(x, y, y));
  auto step4 = c.times(b, d.identity(y));
  auto step5 = graph(d, c.p2(c.one(), y));
  return d.compose(d.compose(d.compose(d.compose(step1, step2), step3), step4), step5);
}

// Round trip and preservation properties of phi on R(X,Y) and R(X x Y, 1),
// after confirming the modular law on `p`. Throws PreconditionFailed when it
// fails there.
template <class D>
  requires CartesianBase<D> && LatticeFibres<D> && FiniteFibres<D>
LawReport phi_psi_roundtrip(const D& d, const CartesianCandidate<D>& c, const typename D::Object& x,
                            const typename D::Object& y, const ProbeSet<D>& p, std::size_t fibre_cap = 1u << 20) {
  LawReport mod = check_modular(d, p);
  if (!mod.ok())
    throw Error(ErrorCode::precondition_failed,
                "modular law fails: " + mod.get("modular").witness.dump());
  LawReport rep;
  rep.subject = "phi/psi";
  auto xy = c.prod(x, y).obj;
  auto one = c.one();
  auto rel_xy = d.fibre(x, y, fibre_cap);
  auto preds = d.fibre(xy, one, fibre_cap);

  LawCheck& pp = rep.add("psi_phi");
  for (const auto& a : rel_xy) pp.record(equal(d, psi(d, c, x, y, phi(d, c, a)), a), Json{{"alpha", d.describe(a)}});
  LawCheck& ph = rep.add("phi_psi");
  for (const auto& b : preds) ph.record(equal(d, phi(d, c, psi(d, c, x, y, b)), b), Json{{"beta", d.describe(b)}});

  // identities become the equality predicate gr diag° ; gr !
  LawCheck& id = rep.add("identity");
  for (const auto& o : {x, y}) {
    auto eqp = d.compose(cograph(d, c.diag(o)), graph(d, c.bang(o)));
    id.record(equal(d, phi(d, c, d.identity(o)), eqp), Json{{"object", d.describe(o)}});
  }

  LawCheck& mt = rep.add("meets");
  for (const auto& a : rel_xy)
    for (const auto& b : rel_xy)
      mt.record(equal(d, phi(d, c, d.meet(a, b)), d.meet(phi(d, c, a), phi(d, c, b))),
                Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}});

  // composite in predicate form over (X x Y) x X
  {
    LawCheck& cm = rep.add("composition");
    auto xy_ = c.prod(x, y);
    auto three = c.prod(xy_.obj, x);
    auto p12 = three.p1;
    auto p23 = d.pair(d.then(three.p1, xy_.p2), three.p2, c.prod(y, x).obj);
    auto p13 = d.pair(d.then(three.p1, xy_.p1), three.p2, c.prod(x, x).obj);
    auto rel_yx = d.fibre(y, x, fibre_cap);
    for (const auto& a : rel_xy)
      for (const auto& b : rel_yx) {
        auto l = phi(d, c, d.compose(a, b));
        auto inner = d.meet(d.compose(graph(d, p12), phi(d, c, a)), d.compose(graph(d, p23), phi(d, c, b)));
        auto r = d.compose(cograph(d, p13), inner);
        cm.record(equal(d, l, r), Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}});
      }
  }

  LawCheck& cv = rep.add("converse");
  LawCheck& mc = rep.add("mod_converse");
  for (const auto& a : rel_xy) {
    auto l = phi(d, c, d.converse(a));
    auto r = d.compose(graph(d, c.swap(y, x)), phi(d, c, a));
    cv.record(equal(d, l, r), Json{{"alpha", d.describe(a)}});
    auto rhs = d.compose(d.compose(c.times(d.identity(x), d.converse(a)), cograph(d, c.diag(x))), graph(d, c.bang(x)));
    mc.record(equal(d, phi(d, c, a), rhs), Json{{"alpha", d.describe(a)}});
  }
  return rep;
}

}  // namespace reldoc
