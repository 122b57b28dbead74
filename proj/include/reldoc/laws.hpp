#pragma once

#include <optional>
#include <string>

#include "reldoc/doctrine.hpp"
#include "reldoc/probes.hpp"

namespace reldoc {

namespace detail {

inline std::optional<Json> ok() { return std::nullopt; }

}  // namespace detail

// Equations and lax-naturality inequalities of a relational doctrine over
// the probe set.
template <RelationalDoctrine D>
LawReport check_doctrine_laws(const D& d, const ProbeSet<D>& p, const std::string& subject = "doctrine") {
  using detail::ok;
  LawReport rep;
  rep.subject = subject;
  Rng rng(p.seed);
  const std::size_t n = p.size();
  const std::size_t B = p.law_budget;
  auto R = [&](std::size_t i, std::size_t j) { return p.rels(i, j).size(); };
  auto A = [&](std::size_t i, std::size_t j) { return p.arrs(i, j).size(); };
  auto& objs = p.objects;

  run_law(rep.add("left_unit"), n, 2, B, rng, [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            if (equal(d, d.compose(d.identity(objs[o[0]]), a), a)) return ok();
            return Json{{"alpha", d.describe(a)}};
          });
  run_law(rep.add("right_unit"), n, 2, B, rng, [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            if (equal(d, d.compose(a, d.identity(objs[o[1]])), a)) return ok();
            return Json{{"alpha", d.describe(a)}};
          });
  run_law(rep.add("assoc"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[1], o[2]), R(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[1], o[2])[ix[1]];
            const auto& c = p.rels(o[2], o[3])[ix[2]];
            auto l = d.compose(d.compose(a, b), c);
            auto r = d.compose(a, d.compose(b, c));
            if (equal(d, l, r)) return ok();
            return Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}, {"gamma", d.describe(c)},
                        {"lhs", d.describe(l)}, {"rhs", d.describe(r)}};
          });
  run_law(rep.add("converse_compose"), n, 3, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[1], o[2])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[1], o[2])[ix[1]];
            if (equal(d, d.converse(d.compose(a, b)), d.compose(d.converse(b), d.converse(a)))) return ok();
            return Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("converse_identity"), n, 1, B, rng, [&](auto&) { return std::vector<std::size_t>{}; },
          [&](auto& o, auto&) -> std::optional<Json> {
            auto id = d.identity(objs[o[0]]);
            if (equal(d, d.converse(id), id)) return ok();
            return Json{{"object", d.describe(objs[o[0]])}};
          });
  run_law(rep.add("converse_involutive"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            if (equal(d, d.converse(d.converse(a)), a)) return ok();
            return Json{{"alpha", d.describe(a)}};
          });
  run_law(rep.add("converse_monotone"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1]), R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& b = p.rels(o[0], o[1])[ix[1]];
            if (!d.leq(a, b) || d.leq(d.converse(a), d.converse(b))) return ok();
            return Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("compose_monotone"), n, 3, B, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{R(o[0], o[1]), R(o[0], o[1]), R(o[1], o[2]), R(o[1], o[2])};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            const auto& a2 = p.rels(o[0], o[1])[ix[1]];
            const auto& b = p.rels(o[1], o[2])[ix[2]];
            const auto& b2 = p.rels(o[1], o[2])[ix[3]];
            if (!d.leq(a, a2) || !d.leq(b, b2) || d.leq(d.compose(a, b), d.compose(a2, b2))) return ok();
            return Json{{"alpha", d.describe(a)}, {"alpha2", d.describe(a2)}, {"beta", d.describe(b)},
                        {"beta2", d.describe(b2)}};
          });
  run_law(rep.add("reindex_identity"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& a = p.rels(o[0], o[1])[ix[0]];
            if (equal(d, d.reindex(d.id_arrow(objs[o[0]]), d.id_arrow(objs[o[1]]), a), a)) return ok();
            return Json{{"alpha", d.describe(a)}};
          });
  // objects: A2 -> A -> X and B2 -> B -> Y
  run_law(rep.add("reindex_functorial"), n, 6, B, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{A(o[0], o[1]), A(o[1], o[2]), A(o[3], o[4]), A(o[4], o[5]),
                                            R(o[2], o[5])};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f2 = p.arrs(o[0], o[1])[ix[0]];
            const auto& f = p.arrs(o[1], o[2])[ix[1]];
            const auto& g2 = p.arrs(o[3], o[4])[ix[2]];
            const auto& g = p.arrs(o[4], o[5])[ix[3]];
            const auto& a = p.rels(o[2], o[5])[ix[4]];
            auto l = d.reindex(d.then(f2, f), d.then(g2, g), a);
            auto r = d.reindex(f2, g2, d.reindex(f, g, a));
            if (equal(d, l, r)) return ok();
            return Json{{"f", d.describe(f)}, {"f2", d.describe(f2)}, {"g", d.describe(g)}, {"g2", d.describe(g2)},
                        {"alpha", d.describe(a)}};
          });
  run_law(rep.add("reindex_monotone"), n, 4, B, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{A(o[0], o[2]), A(o[1], o[3]), R(o[2], o[3]), R(o[2], o[3])};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[2])[ix[0]];
            const auto& g = p.arrs(o[1], o[3])[ix[1]];
            const auto& a = p.rels(o[2], o[3])[ix[2]];
            const auto& b = p.rels(o[2], o[3])[ix[3]];
            if (!d.leq(a, b) || d.leq(d.reindex(f, g, a), d.reindex(f, g, b))) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}, {"alpha", d.describe(a)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("lax_identity"), n, 2, B, rng, [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            if (d.leq(d.identity(objs[o[0]]), d.reindex(f, f, d.identity(objs[o[1]])))) return ok();
            return Json{{"f", d.describe(f)}};
          });
  // f: X->A, g: Y->B, h: Z->C, alpha in R(A,B), beta in R(B,C)
  run_law(rep.add("lax_compose"), n, 6, B, rng,
          [&](auto& o) {
            return std::vector<std::size_t>{A(o[0], o[3]), A(o[1], o[4]), A(o[2], o[5]), R(o[3], o[4]), R(o[4], o[5])};
          },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[3])[ix[0]];
            const auto& g = p.arrs(o[1], o[4])[ix[1]];
            const auto& h = p.arrs(o[2], o[5])[ix[2]];
            const auto& a = p.rels(o[3], o[4])[ix[3]];
            const auto& b = p.rels(o[4], o[5])[ix[4]];
            auto l = d.compose(d.reindex(f, g, a), d.reindex(g, h, b));
            auto r = d.reindex(f, h, d.compose(a, b));
            if (d.leq(l, r)) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}, {"h", d.describe(h)}, {"alpha", d.describe(a)},
                        {"beta", d.describe(b)}, {"lhs", d.describe(l)}, {"rhs", d.describe(r)}};
          });
  run_law(rep.add("converse_natural"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[2]), A(o[1], o[3]), R(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[2])[ix[0]];
            const auto& g = p.arrs(o[1], o[3])[ix[1]];
            const auto& a = p.rels(o[2], o[3])[ix[2]];
            if (equal(d, d.converse(d.reindex(f, g, a)), d.reindex(g, f, d.converse(a)))) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}, {"alpha", d.describe(a)}};
          });
  if (!p.fibres_complete)
    for (auto& c : rep.checks) c.exhaustive = false;
  return rep;
}

// Graph calculus: graphs are functional and total, gr id = d,
// gr(g after f) = gr f ; gr g, E[id,f](d) = gr f, kernels are equivalences.
template <RelationalDoctrine D>
LawReport check_graph_laws(const D& d, const ProbeSet<D>& p, const std::string& subject = "graphs") {
  using detail::ok;
  LawReport rep;
  rep.subject = subject;
  Rng rng(p.seed + 1);
  const std::size_t n = p.size(), B = p.law_budget;
  auto A = [&](std::size_t i, std::size_t j) { return p.arrs(i, j).size(); };
  const auto& objs = p.objects;
  run_law(rep.add("graph_identity"), n, 1, B, rng, [&](auto&) { return std::vector<std::size_t>{}; },
          [&](auto& o, auto&) -> std::optional<Json> {
            const auto& x = objs[o[0]];
            if (equal(d, graph(d, d.id_arrow(x)), d.identity(x))) return ok();
            return Json{{"object", d.describe(x)}};
          });
  run_law(rep.add("graph_functional_total"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            auto g = graph(d, f);
            if (is_functional(d, g) && is_total(d, g)) return ok();
            return Json{{"f", d.describe(f)}};
          });
  run_law(rep.add("graph_compose"), n, 3, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1]), A(o[1], o[2])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            const auto& g = p.arrs(o[1], o[2])[ix[1]];
            if (equal(d, graph(d, d.then(f, g)), d.compose(graph(d, f), graph(d, g)))) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}};
          });
  run_law(rep.add("graph_left_adjoint"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            const auto& x = objs[o[0]];
            if (equal(d, left_adjoint(d, d.id_arrow(x), f, d.identity(x)), graph(d, f))) return ok();
            return Json{{"f", d.describe(f)}};
          });
  run_law(rep.add("kernel_equivalence"), n, 2, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[1])[ix[0]];
            if (is_equivalence(d, kernel(d, f))) return ok();
            return Json{{"f", d.describe(f)}};
          });
  return rep;
}

// Functional total relations are order-discrete: a <= b implies a = b.
template <RelationalDoctrine D>
LawReport check_fun_ord(const D& d, const ProbeSet<D>& p, const std::string& subject = "fun-ord") {
  LawReport rep;
  rep.subject = subject;
  auto& c = rep.add("functional_total_discrete");
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename D::Relation> ft;
      for (const auto& a : p.rels(i, j))
        if (is_functional(d, a) && is_total(d, a)) ft.push_back(a);
      // graphs are always functional and total: include them so sampled
      // fibres still exercise the law
      for (const auto& f : p.arrs(i, j)) ft.push_back(graph(d, f));
      for (const auto& a : ft)
        for (const auto& b : ft) {
          if (!d.leq(a, b)) continue;
          c.record(d.leq(b, a), Json{{"alpha", d.describe(a)}, {"beta", d.describe(b)}});
        }
    }
  if (!p.fibres_complete) c.exhaustive = false;
  return rep;
}

// E[f,g] is left adjoint to R[f,g]: b <= R(E(b)) and E(R(a)) <= a.
template <RelationalDoctrine D>
LawReport check_left_adjoint(const D& d, const ProbeSet<D>& p, const std::string& subject = "left-adjoint") {
  using detail::ok;
  LawReport rep;
  rep.subject = subject;
  Rng rng(p.seed + 2);
  const std::size_t n = p.size(), B = p.law_budget;
  auto R = [&](std::size_t i, std::size_t j) { return p.rels(i, j).size(); };
  auto A = [&](std::size_t i, std::size_t j) { return p.arrs(i, j).size(); };
  // f: X->A, g: Y->B
  run_law(rep.add("adjunction_unit"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[2]), A(o[1], o[3]), R(o[0], o[1])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[2])[ix[0]];
            const auto& g = p.arrs(o[1], o[3])[ix[1]];
            const auto& b = p.rels(o[0], o[1])[ix[2]];
            if (d.leq(b, d.reindex(f, g, left_adjoint(d, f, g, b)))) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}, {"beta", d.describe(b)}};
          });
  run_law(rep.add("adjunction_counit"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[2]), A(o[1], o[3]), R(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[2])[ix[0]];
            const auto& g = p.arrs(o[1], o[3])[ix[1]];
            const auto& a = p.rels(o[2], o[3])[ix[2]];
            if (d.leq(left_adjoint(d, f, g, d.reindex(f, g, a)), a)) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}, {"alpha", d.describe(a)}};
          });
  run_law(rep.add("reindex_graph_formula"), n, 4, B, rng,
          [&](auto& o) { return std::vector<std::size_t>{A(o[0], o[2]), A(o[1], o[3]), R(o[2], o[3])}; },
          [&](auto& o, auto& ix) -> std::optional<Json> {
            const auto& f = p.arrs(o[0], o[2])[ix[0]];
            const auto& g = p.arrs(o[1], o[3])[ix[1]];
            const auto& a = p.rels(o[2], o[3])[ix[2]];
            if (equal(d, d.reindex(f, g, a), d.compose(d.compose(graph(d, f), a), cograph(d, g)))) return ok();
            return Json{{"f", d.describe(f)}, {"g", d.describe(g)}, {"alpha", d.describe(a)}};
          });
  if (!p.fibres_complete)
    for (auto& c : rep.checks) c.exhaustive = false;
  return rep;
}

// Split monos have injective graphs, split epis surjective graphs, and
// isomorphisms bijective graphs.
template <RelationalDoctrine D>
LawReport check_split_arrows(const D& d, const ProbeSet<D>& p, const std::string& subject = "split-arrows") {
  LawReport rep;
  rep.subject = subject;
  auto& mono = rep.add("split_mono_injective");
  auto& epi = rep.add("split_epi_surjective");
  auto& iso = rep.add("iso_bijective");
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& f : p.arrs(i, j)) {
        bool split_mono = false, split_epi = false, is_iso = false;
        for (const auto& g : p.arrs(j, i)) {
          bool gf = is_identity_arrow(d, d.then(f, g));
          bool fg = is_identity_arrow(d, d.then(g, f));
          split_mono |= gf;
          split_epi |= fg;
          is_iso |= gf && fg;
        }
        auto gr = graph(d, f);
        Json w{{"f", d.describe(f)}};
        if (split_mono) mono.record(is_injective(d, gr), w);
        if (split_epi) epi.record(is_surjective(d, gr), w);
        if (is_iso) iso.record(is_injective(d, gr) && is_surjective(d, gr), w);
      }
  return rep;
}

struct BalanceResult {
  bool balanced = true;
  Json witness;  // first bijective arrow lacking an inverse
  std::size_t bijective_arrows = 0;
};

// Every enumerated arrow with injective and surjective graph must have a
// two-sided inverse among the enumerated arrows.
template <RelationalDoctrine D>
BalanceResult is_balanced(const D& d, const std::vector<typename D::Object>& objects,
                          std::size_t hom_cap = kDefaultHomCap) {
  BalanceResult res;
  for (const auto& x : objects)
    for (const auto& y : objects)
      for (const auto& f : d.homs(x, y, hom_cap)) {
        auto gr = graph(d, f);
        if (!(is_injective(d, gr) && is_surjective(d, gr))) continue;
        ++res.bijective_arrows;
        if (inverses(d, f, hom_cap).empty() && res.balanced) {
          res.balanced = false;
          res.witness = Json{{"arrow", d.describe(f)}, {"dom", d.describe(x)}, {"cod", d.describe(y)}};
        }
      }
  return res;
}

}  // namespace reldoc
