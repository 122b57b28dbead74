#include "doctest.h"
#include "oracles.hpp"
#include "reldoc/powerset.hpp"
#include "reldoc/quotient.hpp"
#include "reldoc/sampling.hpp"

using namespace reldoc;

namespace {

using QB = QR<VRel>;
using QQB = QR<QR<VRel>>;

std::shared_ptr<const VRel> boolean() { return std::make_shared<const VRel>(Quantale::boolean()); }
std::shared_ptr<const VRel> lawvere() { return std::make_shared<const VRel>(Quantale::lawvere()); }

std::vector<FinRel> equivalences(const VRel& d, const FinSet& x) {
  std::vector<FinRel> out;
  for (auto& r : d.fibre(x, x, 1u << 20))
    if (is_equivalence(d, r)) out.push_back(std::move(r));
  return out;
}

// every setoid on sets of size lo..hi
std::vector<QB::Object> setoids(const QB& q, std::size_t lo, std::size_t hi) {
  std::vector<QB::Object> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    FinSet x = numbered_set("S" + std::to_string(n) + "_", n);
    for (auto& r : equivalences(q.base(), x)) out.push_back(q.object(x, r));
  }
  return out;
}

FinRel metric(const FinSet& x, std::vector<std::vector<double>> rows) {
  std::vector<Value> e;
  for (auto& r : rows) e.insert(e.end(), r.begin(), r.end());
  return FinRel(x, x, e);
}

}  // namespace

TEST_CASE("equivalence relations") {
  auto l = lawvere();
  FinSet x("X", {"0", "1", "2"});
  CHECK(is_equivalence(*l, l->identity(x)));
  CHECK(is_equivalence(*l, metric(x, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})));
  FinSet y("Y", {"x", "y"});
  CHECK_FALSE(is_reflexive(*l, metric(y, {{1, 1}, {1, 0}})));
  CHECK_FALSE(is_transitive(*l, metric(x, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}})));
  CHECK_THROWS_AS(is_equivalence(*l, FinRel(x, y, 0.0)), Error);
}

TEST_CASE("quotients of V-relations") {
  SUBCASE("boolean class projection") {
    auto d = boolean();
    FinSet x("X", {"a", "b", "c"});
    FinRel rho(x, x, {1, 1, 0, 1, 1, 0, 0, 0, 1});
    auto res = build_quotient_vrel(*d, rho);
    CHECK(res.classes.elements() == std::vector<std::string>{"[a]", "[c]"});
    CHECK(res.q.table == std::vector<std::size_t>{0, 0, 1});
    CHECK(res.certificate.quotient());
    CHECK(res.certificate.effective);
    CHECK(res.certificate.descent);
    CHECK_FALSE(res.closure_applied);
    CHECK(res.certificate.probes > 0);
  }
  SUBCASE("lawvere connected components: quotient and descent but not effective") {
    auto d = lawvere();
    FinSet x("X", {"a", "b", "c"});
    FinRel rho = metric(x, {{0, 2, kInf}, {2, 0, kInf}, {kInf, kInf, 0}});
    auto res = build_quotient_vrel(*d, rho);
    CHECK(res.classes.size() == 2);
    CHECK(res.q.table == std::vector<std::size_t>{0, 0, 1});
    CHECK(res.certificate.quotient());
    CHECK(res.certificate.descent);
    CHECK_FALSE(res.certificate.effective);
  }
  SUBCASE("identity relation gives singleton classes") {
    auto d = lawvere();
    FinSet x = numbered_set("x", 4);
    auto res = build_quotient_vrel(*d, d->identity(x));
    CHECK(res.classes.size() == 4);
    CHECK(res.certificate.quotient());
    CHECK(res.certificate.effective);
    CHECK(res.certificate.descent);
  }
  SUBCASE("zero divisors need a closure step") {
    auto d = std::make_shared<const VRel>(Quantale::powerset({"a", "b"}));
    const Quantale& q = d->quantale();
    Value A = q.element("{a}"), B = q.element("{b}"), U = q.unit(), E = q.bottom();
    FinSet x("X", {"x", "y", "z"});
    FinRel rho(x, x, {U, A, E, A, U, B, E, B, U});
    REQUIRE(is_equivalence(*d, rho));
    auto res = build_quotient_vrel(*d, rho);
    CHECK(res.closure_applied);
    CHECK(res.classes.size() == 1);
    CHECK(res.certificate.quotient());
  }
  SUBCASE("connected components agree with a graph search") {
    auto d = lawvere();
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
      FinSet x = numbered_set("x", 5);
      FinRel rho = random_pseudometric(*d, x, rng);
      auto res = build_quotient_vrel(*d, rho, std::vector<FinSet>{});
      oracle::Matrix m(5, std::vector<double>(5));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m[i][j] = rho.at(i, j);
      auto comp = oracle::finite_components(m);
      std::vector<int> mine(res.q.table.begin(), res.q.table.end());
      CHECK(oracle::same_partition(comp, mine));
      CHECK_FALSE(res.closure_applied);
    }
  }
  CHECK_THROWS_AS(build_quotient_vrel(*boolean(), FinRel(numbered_set("x", 2), numbered_set("x", 2), 0.0)), Error);
}

TEST_CASE("quotient flags on hand-made arrows") {
  auto d = boolean();
  FinSet x("X", {"a", "b"});
  SUBCASE("identity quotient of the identity relation") {
    auto c = check_quotient_arrow_targets(*d, d->id_arrow(x), d->identity(x), {x, numbered_set("z", 3)});
    CHECK(c.quotient());
    CHECK(c.effective);
    CHECK(c.descent);
  }
  SUBCASE("a non-surjective arrow is not descent and not universal") {
    FinSet y("Y", {"u", "v", "w"});
    FinMap q(x, y, {0, 1});
    auto c = check_quotient_arrow_targets(*d, q, d->identity(x), {y});
    CHECK(c.kernel_ok);
    CHECK_FALSE(c.descent);
    CHECK_FALSE(c.universal);
    CHECK(c.failure.contains("factorings"));
  }
  SUBCASE("too fine a kernel") {
    FinMap q = FinMap::identity(x);
    auto c = check_quotient_arrow_targets(*d, q, d->top(x, x), {x});
    CHECK_FALSE(c.kernel_ok);
    CHECK_FALSE(c.quotient());
  }
}

TEST_CASE("quotient-injective factorization") {
  auto d = boolean();
  FinSet x("X", {"a", "b", "c"}), y("Y", {"u", "v", "w"});
  SUBCASE("injective arrow") {
    FinMap f(x, y, {2, 0, 1});
    auto r = factorize(*d, f);
    CHECK(r.quotient.classes.size() == 3);
    CHECK(r.recomposes);
    CHECK(r.injective);
    CHECK(r.i.table == f.table);
  }
  SUBCASE("constant arrow") {
    FinMap f(x, y, {1, 1, 1});
    auto r = factorize(*d, f);
    CHECK(r.quotient.classes.size() == 1);
    CHECK(r.i.table == std::vector<std::size_t>{1});
    CHECK(r.recomposes);
  }
  SUBCASE("two classes") {
    FinMap f(x, y, {0, 0, 1});
    auto r = factorize(*d, f);
    CHECK(r.quotient.classes.elements() == std::vector<std::string>{"[a]", "[c]"});
    CHECK(r.i.table == std::vector<std::size_t>{0, 1});
    CHECK(r.injective);
    CHECK(r.quotient.certificate.quotient());
    CHECK(r.quotient.certificate.effective);
  }
  SUBCASE("every map on small sets") {
    FinSet s = numbered_set("s", 3), t = numbered_set("t", 3);
    for (const auto& f : all_maps(s, t, 100)) {
      auto r = factorize(*lawvere(), f);
      CHECK(r.recomposes);
      CHECK(r.injective);
      CHECK(r.quotient.certificate.quotient());
    }
  }
}

TEST_CASE("quotient-injective orthogonality") {
  auto d = boolean();
  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    FinSet x = numbered_set("x", 1 + t % 4), y = numbered_set("y", 1 + t % 3), z = numbered_set("z", 4);
    auto quo = build_quotient_vrel(*d, random_equivalence(*d, x, rng), std::vector<FinSet>{});
    FinMap h0 = random_map(quo.classes, y, rng);
    // injective i : y -> z
    std::vector<std::size_t> perm = {0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    FinMap i(y, z, std::vector<std::size_t>(perm.begin(), perm.begin() + y.size()));
    REQUIRE(is_injective(*d, graph(*d, i)));
    FinMap f = FinMap::then(quo.q, h0), g = FinMap::then(h0, i);
    auto fill = diagonal_fillers(*d, quo.q, f, g, i);
    REQUIRE(fill.size() == 1);
    CHECK(fill[0] == h0);
  }
  FinSet x = numbered_set("x", 2);
  CHECK_THROWS_AS(diagonal_fillers(*d, FinMap::identity(x), FinMap::identity(x), FinMap(x, x, {1, 0}),
                                   FinMap::identity(x)),
                  Error);
}

TEST_CASE("surjections are quotients and the boolean doctrine is balanced") {
  auto d = boolean();
  std::vector<FinSet> sets;
  for (std::size_t n = 0; n <= 3; ++n) sets.push_back(numbered_set("s" + std::to_string(n) + "_", n));
  std::size_t surjections = 0;
  for (const auto& x : sets)
    for (const auto& y : sets)
      for (const auto& f : all_maps(x, y, 1000)) {
        bool surj = is_surjective(*d, graph(*d, f));
        auto c = check_quotient_arrow_targets(*d, f, kernel(*d, f), sets);
        // quotient arrows of their kernel are exactly the surjections
        CHECK(c.quotient() == surj);
        if (surj) ++surjections;
      }
  CHECK(surjections > 0);
  CHECK(is_balanced(*d, sets).balanced);
}

TEST_CASE("QR over booleans: setoids") {
  auto b = boolean();
  auto q = std::make_shared<const QB>(*b);
  auto objs = setoids(*q, 0, 2);
  REQUIRE(objs.size() == 4);
  auto p = exhaustive_probes(*q, objs);
  LawReport r = check_doctrine_laws(*q, p, "QR(boolean)");
  CHECK_MESSAGE(r.ok(), r.to_text());
  CHECK(check_graph_laws(*q, p).ok());
  CHECK(check_left_adjoint(*q, p).ok());

  FinSet x("X", {"a", "b"});
  auto disc = q->discrete(x);
  auto total = q->object(x, b->top(x, x));
  // the swap preserves the total relation but a constant map is not a map of discrete setoids
  CHECK(q->is_arrow(total, total, FinMap(x, x, {1, 0})));
  CHECK(q->is_arrow(disc, total, FinMap(x, x, {0, 0})));
  CHECK_FALSE(q->is_arrow(total, disc, FinMap::identity(x)));
  CHECK_THROWS_AS(q->arrow(total, disc, FinMap::identity(x)), Error);
  CHECK_THROWS_AS(q->relation(total, disc, b->identity(x)), Error);
  CHECK_THROWS_AS(q->object(x, FinRel(x, x, {1, 1, 0, 1})), Error);
}

TEST_CASE("QR over lawvere: metric spaces") {
  auto l = lawvere();
  auto q = std::make_shared<const QR<VRel>>(*l);
  Rng rng(5);
  std::vector<QB::Object> objs;
  for (std::size_t n = 1; n <= 3; ++n)
    for (int k = 0; k < 2; ++k) {
      FinSet x = numbered_set("m" + std::to_string(n) + "_" + std::to_string(k) + "_", n);
      objs.push_back(q->object(x, random_pseudometric(*l, x, rng)));
    }
  auto p = sampled_probes<QB>(
      *q, objs, 8,
      [&](const QB::Object& x, const QB::Object& y, Rng& g) {
        FinRel a = random_relation(*l, x.base, y.base, g);
        return q->relation(x, y, l->compose(l->compose(x.rho, a), y.rho));
      },
      9);
  p.law_budget = 1u << 15;
  CHECK(check_doctrine_laws(*q, p, "QR(lawvere)").ok());

  // non-expansive maps
  FinSet x("X", {"a", "b"});
  auto near = q->object(x, metric(x, {{0, 1}, {1, 0}}));
  auto far = q->object(x, metric(x, {{0, 3}, {3, 0}}));
  CHECK(q->is_arrow(far, near, FinMap::identity(x)));
  CHECK_FALSE(q->is_arrow(near, far, FinMap::identity(x)));

  // reindexing keeps descent data closed
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j)
      for (const auto& f : p.arrs(i, j))
        for (const auto& a : p.rels(j, j)) CHECK(q->is_descent(objs[i], objs[i], l->reindex(f.base, f.base, a.rel)));

  SUBCASE("not balanced: a bijective arrow without inverse") {
    FinSet two("T", {"x", "y"});
    auto indiscrete = q->object(two, FinRel(two, two, 0.0));
    auto point = q->discrete(terminal_set());
    auto res = is_balanced(*q, {indiscrete, point});
    CHECK_FALSE(res.balanced);
    CHECK(res.bijective_arrows > 0);
  }
}

TEST_CASE("quotient arrows in QR") {
  SUBCASE("boolean: discrete to total is an effective descent quotient") {
    auto b = boolean();
    QB q(*b);
    FinSet x("X", {"a", "b"});
    auto disc = q.discrete(x);
    auto arrow = qr_quotient_arrow(q, disc, b->top(x, x));
    auto targets = setoids(q, 1, 2);
    auto c = check_quotient_arrow_targets(q, arrow, q.relation(disc, disc, b->top(x, x)), targets);
    CHECK(c.quotient());
    CHECK(c.effective);
    CHECK(c.descent);
    CHECK(c.probes > 0);
    auto same = qr_quotient_arrow(q, disc, b->identity(x));
    CHECK(is_identity_arrow(q, same));
  }
  SUBCASE("lawvere: effective in QR although not downstairs") {
    auto l = lawvere();
    QB q(*l);
    FinSet x("X", {"a", "b"});
    auto disc = q.discrete(x);
    FinRel sigma = metric(x, {{0, 1}, {1, 0}});
    auto arrow = qr_quotient_arrow(q, disc, sigma);
    std::vector<QB::Object> targets = {q.discrete(x), q.object(x, sigma), q.object(x, metric(x, {{0, 2}, {2, 0}})),
                                       q.discrete(terminal_set())};
    auto c = check_quotient_arrow_targets(q, arrow, q.relation(disc, disc, sigma), targets);
    CHECK(c.quotient());
    CHECK(c.effective);
    CHECK(c.descent);
    auto down = build_quotient_vrel(*l, sigma);
    CHECK_FALSE(down.certificate.effective);
    CHECK_THROWS_AS(qr_quotient_arrow(q, q.object(x, sigma), l->identity(x)), Error);
  }
  SUBCASE("every boolean quotient arrow is quotient, effective and descent") {
    auto b = boolean();
    QB q(*b);
    auto objs = setoids(q, 1, 3);
    auto targets = setoids(q, 1, 2);
    for (const auto& o : objs)
      for (const auto& s : equivalences(*b, o.base)) {
        if (!b->leq(o.rho, s)) continue;
        auto a = qr_quotient_arrow(q, o, s);
        auto c = check_quotient_arrow_targets(q, a, q.relation(o, o, s), targets);
        CHECK((c.quotient() && c.effective && c.descent));
      }
  }
  SUBCASE("factorization inside QR") {
    auto l = lawvere();
    QB q(*l);
    FinSet x("X", {"a", "b", "c"}), y("Y", {"u", "v"});
    auto src = q.object(x, metric(x, {{0, 1, 4}, {1, 0, 4}, {4, 4, 0}}));
    auto tgt = q.object(y, metric(y, {{0, 2}, {2, 0}}));
    auto f = q.arrow(src, tgt, FinMap(x, y, {0, 0, 1}));
    auto [qa, ia] = factorize_qr(q, f);
    CHECK(q.same_arrow(q.then(qa, ia), f));
    CHECK(is_injective(q, graph(q, ia)));
    CHECK(is_surjective(q, graph(q, qa)));
  }
}

TEST_CASE("unit and multiplication liftings") {
  auto b = boolean();
  auto q = std::make_shared<const QB>(*b);
  auto qq = std::make_shared<const QQB>(*q);
  std::vector<FinSet> sets;
  for (std::size_t n = 0; n <= 2; ++n) sets.push_back(numbered_set("s" + std::to_string(n) + "_", n));

  auto unit = unit_lifting(b, q);
  auto pb = exhaustive_probes(*b, sets);
  LawReport ru = check_one_arrow(unit, pb);
  CHECK_MESSAGE(ru.ok(), ru.to_text());
  CHECK(unit.obj_map(sets[2]).rho.entries == b->identity(sets[2]).entries);

  // objects <<X,rho>,sigma> with rho <= sigma
  std::vector<QQB::Object> nested;
  for (const auto& o : setoids(*q, 0, 2))
    for (const auto& s : equivalences(*b, o.base))
      if (b->leq(o.rho, s)) nested.push_back(qq->object(o, q->relation(o, o, s)));
  auto mult = mult_lifting(qq, q);
  auto pqq = exhaustive_probes(*qq, nested);
  LawReport rm = check_one_arrow(mult, pqq);
  CHECK_MESSAGE(rm.ok(), rm.to_text());
  for (const auto& o : nested) CHECK(q->same_object(mult.obj_map(o), q->object(o.base.base, o.rho.rel)));

  // monad unit laws
  auto pq = exhaustive_probes(*q, setoids(*q, 0, 2));
  auto unit_q = unit_lifting<QB>(q, qq);
  auto left = compose_liftings(unit_q, mult);
  auto right = compose_liftings(rq_on_lifting(unit, q, qq), mult);
  auto id = identity_lifting(q);
  CHECK(liftings_agree(left, id, pq).ok());
  CHECK(liftings_agree(right, id, pq).ok());
}

TEST_CASE("QR on liftings") {
  auto b = boolean();
  auto q = std::make_shared<const QB>(*b);
  auto objs = setoids(*q, 0, 3);
  SUBCASE("identity") {
    auto r = rq_on_lifting(identity_lifting(b), q, q);
    auto p = exhaustive_probes(*q, setoids(*q, 0, 2));
    CHECK(liftings_agree(r, identity_lifting(q), p).ok());
  }
  SUBCASE("powerset lifting keeps equivalences") {
    auto P = hausdorff_lifting(b);
    auto r = rq_on_lifting(P, q, q);
    for (const auto& o : objs) {
      auto img = r.obj_map(o);
      CHECK(is_equivalence(*b, img.rho));
      CHECK(img.base == powerset_set(o.base));
    }
    auto p = exhaustive_probes(*q, setoids(*q, 0, 2));
    p.law_budget = 1u << 14;
    CHECK(check_one_arrow(r, p).ok());
  }
  SUBCASE("lawvere pseudometrics lift to pseudometrics") {
    auto l = lawvere();
    auto ql = std::make_shared<const QB>(*l);
    auto r = rq_on_lifting(hausdorff_lifting(l), ql, ql);
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
      FinSet x = numbered_set("p", 1 + t % 4);
      auto o = ql->object(x, random_pseudometric(*l, x, rng));
      CHECK_NOTHROW(r.obj_map(o));
    }
  }
  SUBCASE("the lax unit square is filled by quotient arrows") {
    auto P = hausdorff_lifting(b);
    auto unit = unit_lifting(b, q);
    auto top_path = compose_liftings(P, unit);
    auto bottom_path = compose_liftings(unit, rq_on_lifting(P, q, q));
    TwoArrow<VRel, QB> lam{"lambda_P", [&](const FinSet& x) {
                             auto px = P.obj_map(x);
                             return qr_quotient_arrow(*q, q->discrete(px), P.fib_map(b->identity(x)));
                           }};
    std::vector<FinSet> sets;
    for (std::size_t n = 0; n <= 2; ++n) sets.push_back(numbered_set("s" + std::to_string(n) + "_", n));
    auto p = exhaustive_probes(*b, sets);
    p.law_budget = 1u << 14;
    LawReport r = check_two_arrow(lam, top_path, bottom_path, p);
    CHECK_MESSAGE(r.ok(), r.to_text());
  }
}

TEST_CASE("lax idempotence identities") {
  SUBCASE("boolean setoids up to 3") {
    auto b = boolean();
    auto q = std::make_shared<const QB>(*b);
    auto qq = std::make_shared<const QQB>(*q);
    std::vector<FinSet> sets;
    for (std::size_t n = 0; n <= 3; ++n) sets.push_back(numbered_set("s" + std::to_string(n) + "_", n));
    auto objs = setoids(*q, 0, 3);
    LawReport r = check_kzd<VRel>(q, qq, sets, objs);
    CHECK(r.ok());
    CHECK(r.find("kzd3")->cases == objs.size());
  }
  SUBCASE("lawvere, 24 objects") {
    auto l = lawvere();
    auto q = std::make_shared<const QB>(*l);
    auto qq = std::make_shared<const QQB>(*q);
    Rng rng(77);
    std::vector<FinSet> sets;
    std::vector<QB::Object> objs;
    for (int t = 0; t < 24; ++t) {
      FinSet x = numbered_set("m" + std::to_string(t) + "_", 1 + t % 5);
      sets.push_back(x);
      objs.push_back(q->object(x, random_pseudometric(*l, x, rng)));
    }
    CHECK(check_kzd<VRel>(q, qq, sets, objs).ok());
  }
  SUBCASE("a swapped lambda component breaks kzd3") {
    auto b = boolean();
    auto q = std::make_shared<const QB>(*b);
    auto qq = std::make_shared<const QQB>(*q);
    FinSet x("X", {"a", "b"});
    auto total = q->object(x, b->top(x, x));
    TwoArrow<QB, QQB> bad{"swapped", [&](const QB::Object& o) {
                            auto disc = q->discrete(o.base);
                            auto dom = qq->object(disc, QB::Relation{disc, disc, o.rho});
                            auto cod = qq->object(o, q->identity(o));
                            FinMap m = o.base.size() == 2 ? FinMap(o.base, o.base, {1, 0}) : FinMap::identity(o.base);
                            return qq->arrow(dom, cod, q->arrow(disc, o, m));
                          }};
    LawReport r = check_kzd<VRel>(q, qq, {}, {total}, bad);
    CHECK_FALSE(r.passes("kzd3"));
  }
}
