// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reldoc/extensional.hpp"
#include "reldoc/laws.hpp"
#include "reldoc/powerset.hpp"
#include "reldoc/presented.hpp"
#include "reldoc/projalg.hpp"
#include "reldoc/qr.hpp"
#include "reldoc/quotient.hpp"
#include "reldoc/sampling.hpp"
#include "reldoc/structure.hpp"

using namespace reldoc;

namespace {

using QB = QR<VRel>;
using QQB = QR<QR<VRel>>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; `note` adds context for the summary line.
struct Verdict {
  bool pass = true;
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 4) problems.push_back(what);
    }
  }
  void report(const LawReport& r) {
    for (const auto& c : r.checks)
      require(c.pass, r.subject + "/" + c.law + " witness " + c.witness.dump());
  }
  void note(const std::string& s) { notes.push_back(s); }
  Outcome done() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < notes.size(); ++i) os << (i ? "; " : "") << notes[i];
    for (const auto& p : problems) os << " | " << p;
    return Outcome{pass, os.str()};
  }
};

std::shared_ptr<const VRel> boolean() { return std::make_shared<const VRel>(Quantale::boolean()); }
std::shared_ptr<const VRel> lawvere() { return std::make_shared<const VRel>(Quantale::lawvere(1e-9)); }

std::vector<FinSet> sets_upto(const std::string& prefix, std::size_t lo, std::size_t hi) {
  std::vector<FinSet> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(numbered_set(prefix + std::to_string(n) + "_", n));
  return out;
}

std::vector<FinRel> equivalences(const VRel& d, const FinSet& x) {
  std::vector<FinRel> out;
  for (auto& r : d.fibre(x, x, 1u << 20))
    if (is_equivalence(d, r)) out.push_back(std::move(r));
  return out;
}

std::vector<QB::Object> setoids(const QB& q, std::size_t lo, std::size_t hi) {
  std::vector<QB::Object> out;
  for (const auto& x : sets_upto("S", lo, hi))
    for (auto& r : equivalences(q.base(), x)) out.push_back(q.object(x, r));
  return out;
}

FinRel matrix(const FinSet& x, const std::vector<std::vector<double>>& rows) {
  std::vector<Value> e;
  for (const auto& r : rows) e.insert(e.end(), r.begin(), r.end());
  return FinRel(x, x, e);
}

std::vector<QB::Object> random_metric_objects(const QB& q, std::size_t count, std::size_t max_points, Rng& rng,
                                              const std::string& prefix) {
  std::vector<QB::Object> out;
  for (std::size_t t = 0; t < count; ++t) {
    FinSet x = numbered_set(prefix + std::to_string(t) + "_", 1 + t % max_points);
    out.push_back(q.object(x, random_pseudometric(q.base(), x, rng)));
  }
  return out;
}

std::size_t total_cases(const LawReport& r) {
  std::size_t n = 0;
  for (const auto& c : r.checks) n += c.cases;
  return n;
}

// ------------------------------------------------------------- criteria

Outcome modular_counterexample() {
  Verdict v;
  auto h = build_H_counterexample();
  auto el = [&](const std::string& s) {
    for (const auto& e : h.fibre(0, 0, 16))
      if (h.element_name(e) == s) return e;
    throw Error(ErrorCode::unknown_object, s);
  };
  auto p = exhaustive_probes(h, {std::size_t{0}});
  v.report(check_doctrine_laws(h, p, "H"));
  v.report(check_frobenius(h, p));
  LawReport m = check_modular(h, p);
  v.require(!m.ok(), "modular law unexpectedly holds");
  auto d11 = el("11"), a01 = el("01");
  // 11 meet (01;01)  and  ((11;01°) meet 01);01
  std::string lhs = h.element_name(h.meet(d11, h.compose(a01, a01)));
  std::string rhs = h.element_name(h.compose(h.meet(h.compose(d11, h.converse(a01)), a01), a01));
  v.require(lhs == "01", "lhs = " + lhs);
  v.require(rhs == "00", "rhs = " + rhs);
  auto s = modular_sides(h, a01, d11, a01);
  v.require(!s.holds && h.element_name(s.lhs) == lhs && h.element_name(s.rhs) == rhs, "modular_sides disagrees");
  v.note("11^(01;01)=" + lhs + ", ((11;01o)^01);01=" + rhs);
  return v.done();
}

Outcome ruc_counterexample() {
  Verdict v;
  VRel p(Quantale::powerset({"a", "b"}));
  FinSet one = terminal_set();
  FinSet y("Y", {"a", "b"});
  auto r = check_ruc(p, one, y, RucMode::exhaustive);
  v.require(!r.holds, "unique choice unexpectedly holds");
  // alpha(*, y) = {y}
  FinRel alpha(one, y, {p.quantale().element("{a}"), p.quantale().element("{b}")});
  v.require(r.witness.contains("alpha") && r.witness["alpha"] == p.describe(alpha),
            "witness " + r.witness.dump());
  v.require(is_functional(p, alpha) && is_total(p, alpha), "witness is not functional and total");
  for (const auto& f : p.homs(one, y, 10)) v.require(!p.leq(graph(p, f), alpha), "an arrow lies below the witness");
  v.note("witness alpha(*,y)={y}, functional and total, no arrow below");
  return v.done();
}

Outcome lawvere_quotient() {
  Verdict v;
  auto l = lawvere();
  FinSet x("X", {"a", "b", "c", "d"});
  const double I = kInf;
  FinRel rho = matrix(x, {{0, 2, I, I}, {2, 0, I, I}, {I, I, 0, 2}, {I, I, 2, 0}});
  auto r = build_quotient_vrel(*l, rho);
  const auto& c = r.certificate;
  v.require(c.quotient(), "not a quotient");
  v.require(c.descent, "not descent");
  v.require(!c.effective, "unexpectedly effective");
  v.require(r.classes.size() == 2, "expected two classes");
  FinRel ker = kernel(*l, r.q);
  bool zero_inf = true, mismatch_only_at_2 = true;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double k = ker.at(i, j);
      zero_inf = zero_inf && (k == 0 || k == I);
      bool differs = !l->quantale().eq(k, rho.at(i, j));
      mismatch_only_at_2 = mismatch_only_at_2 && (differs == (rho.at(i, j) == 2));
    }
  v.require(zero_inf, "kernel is not {0,inf}-valued");
  v.require(mismatch_only_at_2, "kernel and rho differ outside the distance-2 pairs");
  v.note("quotient, descent, not effective; kernel {0,inf} differs from rho exactly at distance 2");
  return v.done();
}

Outcome qr_suite() {
  Verdict v;
  std::size_t arrows = 0;
  {
    auto b = boolean();
    QB q(*b);
    auto p = exhaustive_probes(q, setoids(q, 0, 2));
    p.law_budget = 1u << 16;
    v.report(check_doctrine_laws(q, p, "QR(boolean)"));
    auto targets = setoids(q, 1, 2);
    for (const auto& o : setoids(q, 0, 4))
      for (const auto& s : equivalences(*b, o.base)) {
        if (!b->leq(o.rho, s)) continue;
        auto a = qr_quotient_arrow(q, o, s);
        auto c = check_quotient_arrow_targets(q, a, q.relation(o, o, s), targets);
        ++arrows;
        v.require(c.quotient() && c.effective && c.descent, "boolean quotient arrow on " + o.base.name());
      }
  }
  std::size_t metrics = 0;
  {
    auto l = lawvere();
    QB q(*l);
    Rng rng(2024);
    auto objs = random_metric_objects(q, 30, 4, rng, "M");
    metrics = objs.size();
    std::vector<QB::Object> small(objs.begin(), objs.begin() + 9);
    auto p = sampled_probes<QB>(
        q, small, 6,
        [&](const QB::Object& x, const QB::Object& y, Rng& g) {
          auto a = random_relation(*l, x.base, y.base, g);
          return q.relation(x, y, l->compose(l->compose(x.rho, a), y.rho));
        },
        5);
    p.law_budget = 1u << 14;
    v.report(check_doctrine_laws(q, p, "QR(lawvere)"));
    for (const auto& o : objs) {
      FinSet two = numbered_set("t", 2);
      std::vector<QB::Object> targets = {q.discrete(terminal_set()), o, q.object(two, matrix(two, {{0, 2}, {2, 0}}))};
      // discrete -> rho, and rho -> the halved pseudometric
      FinRel half = o.rho;
      for (auto& e : half.entries) e /= 2;
      std::vector<std::pair<QB::Object, FinRel>> cases = {{q.discrete(o.base), o.rho}, {o, half}};
      for (const auto& [src, s] : cases) {
        auto a = qr_quotient_arrow(q, src, s);
        auto c = check_quotient_arrow_targets(q, a, q.relation(src, src, s), targets);
        ++arrows;
        v.require(c.quotient() && c.effective && c.descent, "lawvere quotient arrow on " + o.base.name());
      }
    }
  }
  v.note(std::to_string(metrics) + " pseudometrics, " + std::to_string(arrows) +
         " quotient arrows certified quotient+effective+descent");
  return v.done();
}

Outcome monad_identities() {
  Verdict v;
  std::size_t objects = 0;
  {
    auto b = boolean();
    auto q = std::make_shared<const QB>(*b);
    auto qq = std::make_shared<const QQB>(*q);
    auto objs = setoids(*q, 0, 3);
    objects += objs.size();
    v.report(check_kzd<VRel>(q, qq, sets_upto("s", 0, 3), objs));
    auto unit = unit_lifting(b, q);
    auto mult = mult_lifting(qq, q);
    v.require(unit.strict && mult.strict, "unit/mult liftings not strict");
    v.report(check_one_arrow(unit, exhaustive_probes(*b, sets_upto("s", 0, 2))));
    std::vector<QQB::Object> nested;
    for (const auto& o : setoids(*q, 0, 2))
      for (const auto& s : equivalences(*b, o.base))
        if (b->leq(o.rho, s)) nested.push_back(qq->object(o, q->relation(o, o, s)));
    v.report(check_one_arrow(mult, exhaustive_probes(*qq, nested)));
  }
  {
    auto l = lawvere();
    auto q = std::make_shared<const QB>(*l);
    auto qq = std::make_shared<const QQB>(*q);
    Rng rng(77);
    auto objs = random_metric_objects(*q, 24, 5, rng, "m");
    std::vector<FinSet> sets;
    for (const auto& o : objs) sets.push_back(o.base);
    objects += objs.size();
    v.report(check_kzd<VRel>(q, qq, sets, objs));
  }
  v.note("kzd2/kzd3 on " + std::to_string(objects) + " objects; unit and mult strict");
  return v.done();
}

// f =ext g iff gr f = gr g; and =ext is a congruence for composition
template <class D>
void ext_checks(Verdict& v, const D& d, const std::vector<typename D::Object>& objs, std::size_t& cases,
                std::size_t hom_cap = 1000) {
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto hs = d.homs(x, y, hom_cap);
      for (const auto& f : hs)
        for (const auto& g : hs) {
          ++cases;
          v.require(ext_equal(d, f, g) == equal(d, graph(d, f), graph(d, g)), "graph criterion");
        }
    }
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& z : objs) {
        auto fs = d.homs(x, y, hom_cap);
        auto gs = d.homs(y, z, hom_cap);
        for (const auto& f : fs)
          for (const auto& f2 : fs) {
            if (!ext_equal(d, f, f2)) continue;
            for (const auto& g : gs)
              for (const auto& g2 : gs) {
                if (!ext_equal(d, g, g2)) continue;
                ++cases;
                v.require(ext_equal(d, d.then(f, g), d.then(f2, g2)), "congruence");
              }
          }
      }
}

Outcome core_battery() {
  Verdict v;
  auto b = boolean();
  // sizes <= 2: every law enumerated completely
  auto full = exhaustive_probes(*b, sets_upto("s", 0, 2));
  full.law_budget = std::size_t{1} << 24;
  std::vector<LawReport> reps = {check_doctrine_laws(*b, full, "boolean<=2"), check_graph_laws(*b, full),
                                 check_fun_ord(*b, full), check_left_adjoint(*b, full)};
  bool all_exhaustive = true;
  for (const auto& r : reps) {
    v.report(r);
    for (const auto& c : r.checks) all_exhaustive = all_exhaustive && c.exhaustive;
  }
  v.require(all_exhaustive, "a law over sizes <= 2 was not enumerated completely");
  // with size 3: budgeted, coverage reported
  auto big = exhaustive_probes(*b, sets_upto("s", 0, 3));
  big.law_budget = std::size_t{1} << 20;
  std::size_t laws3 = 0, exhaustive3 = 0;
  for (const auto& r : {check_doctrine_laws(*b, big, "boolean<=3"), check_graph_laws(*b, big), check_fun_ord(*b, big),
                        check_left_adjoint(*b, big)}) {
    v.report(r);
    for (const auto& c : r.checks) {
      ++laws3;
      exhaustive3 += c.exhaustive;
    }
  }
  std::size_t ext_cases = 0;
  ext_checks(v, *b, sets_upto("s", 0, 3), ext_cases);
  QB qb(*b);
  ext_checks(v, qb, setoids(qb, 0, 3), ext_cases);

  auto l = lawvere();
  auto lp = sampled_probes<VRel>(
      *l, sets_upto("l", 1, 3), 112,
      [&](const FinSet& x, const FinSet& y, Rng& g) { return random_relation(*l, x, y, g); }, 31);
  lp.law_budget = std::size_t{1} << 15;
  std::size_t sampled = 0;
  for (const auto& [k, rs] : lp.relations) sampled += rs.size();
  std::size_t lcases = 0;
  for (const auto& r : {check_doctrine_laws(*l, lp, "lawvere"), check_graph_laws(*l, lp), check_fun_ord(*l, lp),
                        check_left_adjoint(*l, lp)}) {
    v.report(r);
    lcases += total_cases(r);
  }
  QB ql(*l);
  Rng rng(99);
  ext_checks(v, ql, random_metric_objects(ql, 8, 3, rng, "e"), ext_cases);
  v.require(sampled >= 1000, "fewer than 1000 sampled lawvere relations");
  v.note("boolean: all laws exhaustive at sizes <=2; with size 3, " + std::to_string(exhaustive3) + "/" +
         std::to_string(laws3) + " laws exhaustive, rest sampled");
  v.note("lawvere: " + std::to_string(sampled) + " sampled relations, " + std::to_string(lcases) + " law cases");
  v.note(std::to_string(ext_cases) + " ext-eq cases");
  return v.done();
}

Outcome bisimilarity() {
  Verdict v;
  auto d = boolean();
  auto P = hausdorff_lifting(d);
  Rng rng(4242);
  std::size_t systems = 60;
  for (std::size_t t = 0; t < systems; ++t) {
    std::size_t n = 1 + t % 6;
    FinSet s = numbered_set("q", n);
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::vector<int>> osucc(n);
    std::bernoulli_distribution edge(0.1 + 0.05 * static_cast<double>(t % 8));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (edge(rng)) {
          succ[i].push_back(j);
          osucc[i].push_back(static_cast<int>(j));
        }
    auto c = transition_system(s, succ);
    auto res = greatest_bisimulation(P, c, c);
    v.require(res.exact && res.verified, "iteration did not stabilise");
    auto blocks = oracle::bisimilarity_classes(osucc);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        v.require((res.relation.at(i, j) == 1) == (blocks[i] == blocks[j]), "system " + std::to_string(t));
  }
  v.note(std::to_string(systems) + " systems agree with partition refinement");
  return v.done();
}

Outcome separation() {
  Verdict v;
  auto eq = eq_completion(VRel(Quantale::lawvere(1e-9)));
  const QB& q = eq.base();
  const VRel& l = q.base();
  Rng rng(5150);
  std::size_t n = 30, merged = 0;
  for (std::size_t t = 0; t < n; ++t) {
    FinSet x = numbered_set("p" + std::to_string(t) + "_", 1 + t % 4);
    FinRel rho = random_pseudometric(l, x, rng);
    auto s = separation_quotient(l, rho);
    v.require(is_separated(l, s.rho_sep), "output not separated");
    if (s.classes.size() < x.size()) ++merged;
    auto obj = q.object(x, rho);
    auto osep = q.object(s.classes, s.rho_sep);
    auto qa = eq.cls(q.arrow(obj, osep, s.q));
    auto sa = eq.cls(q.arrow(osep, obj, s.section));
    v.require(eq.same_arrow(eq.then(qa, sa), eq.id_arrow(obj)), "q;s is not the identity in EQ");
    v.require(eq.same_arrow(eq.then(sa, qa), eq.id_arrow(osep)), "s;q is not the identity in EQ");
  }
  v.note(std::to_string(n) + " pseudometrics (" + std::to_string(merged) + " with merged points); two-sided iso in EQ");
  return v.done();
}

Outcome projectivity() {
  Verdict v;
  {
    auto b = boolean();
    QB q(*b);
    auto objs = setoids(q, 2, 3);
    v.report(check_proj_obj_qc(q, objs));
    v.note(std::to_string(objs.size()) + " setoids on 2-3 points");
  }
  {
    auto d = boolean();
    auto m = powerset_monad(d);
    auto em = em_doctrine(m);
    std::vector<Algebra<VRel>> algs;
    for (std::size_t n = 1; n <= 3; ++n)
      for (auto& a : powerset_algebras(m, numbered_set("L" + std::to_string(n) + "_", n))) algs.push_back(std::move(a));
    std::vector<EM<VRel>::Arrow> counits;
    for (const auto& a : algs) counits.push_back(em.arrow(free_algebra(m, a.carrier), a, a.structure));
    std::size_t squares = 0;
    for (std::size_t n = 0; n <= 3; ++n) {
      auto r = is_projective(em, free_algebra(m, numbered_set("g", n)), counits);
      v.require(r.projective, "free algebra on " + std::to_string(n) + " generators: " + r.witness.dump());
      squares += r.squares;
    }
    v.note("free algebras on 0..3 generators vs " + std::to_string(counits.size()) + " counits, " +
           std::to_string(squares) + " squares");
  }
  return v.done();
}

Outcome bridge() {
  Verdict v;
  VRel b(Quantale::boolean());
  auto c = cartesian_candidate(b);
  auto objs = sets_upto("s", 0, 2);
  auto p = exhaustive_probes(b, objs);
  p.law_budget = 1u << 16;
  FinSet x = numbered_set("x", 2), y = numbered_set("y", 2);
  LawReport r = phi_psi_roundtrip(b, c, x, y, p);
  v.report(r);
  v.require(r.get("psi_phi").cases == 16, "expected 16 relations at size 2");
  v.require(r.get("phi_psi").cases == 16, "expected 16 predicates at size 2");
  auto rm = rmap_doctrine(ord_category(b, objs));
  v.report(check_rmap_comparison(b, rm));
  v.note("round trip on 16 relations; RMap(Ord) agrees fibrewise on sizes 0..2");
  return v.done();
}

struct Criterion {
  int id;
  const char* name;
  double bound_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "modular-law counterexample", 1, modular_counterexample},
      {2, "unique-choice counterexample", 1, ruc_counterexample},
      {3, "lawvere quotient flags", 1, lawvere_quotient},
      {4, "QR completion suite", 30, qr_suite},
      {5, "monad identities", 10, monad_identities},
      {6, "core law battery", 60, core_battery},
      {7, "bisimilarity vs partition refinement", 30, bisimilarity},
      {8, "separation", 20, separation},
      {9, "projectivity", 60, projectivity},
      {10, "phi/psi bridge and RMap", 10, bridge},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("threw ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.bound_s;
    bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%2d] %s  %-38s %7.3fs (limit %gs)%s  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs, c.bound_s,
                in_time ? "" : " TOO SLOW", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
