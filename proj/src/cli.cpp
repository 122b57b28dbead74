#include "reldoc/cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "reldoc/extensional.hpp"
#include "reldoc/laws.hpp"
#include "reldoc/powerset.hpp"
#include "reldoc/presented.hpp"
#include "reldoc/projalg.hpp"
#include "reldoc/qr.hpp"
#include "reldoc/quotient.hpp"
#include "reldoc/sampling.hpp"
#include "reldoc/structure.hpp"
#include "reldoc/vrel.hpp"

namespace reldoc {

namespace {

// ------------------------------------------------------------------ loading

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::bad_input, msg); }

const Json& section(const Json& j, const char* key) {
  static const Json empty = Json::object();
  if (!j.contains(key)) return empty;
  const Json& s = j.at(key);
  if (!s.is_object()) bad(std::string("'") + key + "' must be an object");
  return s;
}

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& id, const char* what) {
  auto it = m.find(id);
  if (it == m.end()) throw Error(ErrorCode::unknown_object, std::string("no ") + what + " named '" + id + "'");
  return it->second;
}

std::string str(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string()) bad(where + ": missing string field '" + key + "'");
  return j.at(key).get<std::string>();
}

std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<long long>() < 0))
    bad(where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Quantale parse_quantale(const Json& j, double eps, const std::string& id) {
  std::string kind;
  if (j.is_string())
    kind = j.get<std::string>();
  else if (j.is_object())
    kind = str(j, "kind", "quantale " + id);
  else
    bad("quantale " + id + " must be a string or an object");
  if (kind == "boolean") return Quantale::boolean();
  if (kind == "lawvere") return Quantale::lawvere(eps);
  if (kind == "powerset") {
    if (!j.is_object() || !j.contains("base") || !j.at("base").is_array()) bad("powerset quantale " + id + " needs 'base'");
    return Quantale::powerset(j.at("base").get<std::vector<std::string>>());
  }
  bad("unknown quantale kind '" + kind + "'");
}

NamedRelation parse_relation(const Instance& in, const Json& j, const std::string& id, const std::string& dom_key,
                             const std::string& cod_key) {
  if (!j.is_object()) bad("relation " + id + " must be an object");
  NamedRelation r{j.contains("quantale") ? str(j, "quantale", id) : std::string("boolean"), FinRel()};
  const Quantale& q = lookup(in.quantales, r.quantale, "quantale");
  const FinSet& x = lookup(in.sets, str(j, dom_key.c_str(), id), "set");
  const FinSet& y = lookup(in.sets, str(j, cod_key.c_str(), id), "set");
  if (!j.contains("matrix")) bad(id + ": missing 'matrix'");
  r.rel = VRel(q).from_json(x, y, j.at("matrix"));
  return r;
}

}  // namespace

Instance load_instance(const Json& j, const OptionOverrides& o) {
  if (!j.is_object()) bad("instance must be a JSON object");
  static const std::set<std::string> known{"schema_version", "quantales", "sets",       "maps",
                                           "relations",      "metric_spaces", "transition_systems",
                                           "algebras",       "doctrines", "options"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) bad("unknown top-level field '" + k + "'");
  if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion)
    bad("unsupported schema_version " + j.at("schema_version").dump());

  Instance in;
  const Json& opts = section(j, "options");
  for (const auto& [k, v] : opts.items()) {
    if (k == "eps") {
      if (!v.is_number() || !(v.get<double>() > 0)) bad("options.eps must be a positive number");
      in.options.eps = v.get<double>();
    } else if (k == "hom_cap") {
      in.options.hom_cap = count(v, "options.hom_cap");
    } else if (k == "max_iter") {
      in.options.max_iter = count(v, "options.max_iter");
    } else if (k == "sample_count") {
      in.options.sample_count = count(v, "options.sample_count");
    } else if (k == "law_budget") {
      in.options.law_budget = count(v, "options.law_budget");
    } else if (k == "seed") {
      in.options.seed = count(v, "options.seed");
    } else {
      bad("unknown option '" + k + "'");
    }
  }
  if (o.eps) in.options.eps = *o.eps;
  if (o.hom_cap) in.options.hom_cap = *o.hom_cap;
  if (o.max_iter) in.options.max_iter = *o.max_iter;
  if (o.seed) in.options.seed = *o.seed;

  in.quantales.emplace("boolean", Quantale::boolean());
  in.quantales.emplace("lawvere", Quantale::lawvere(in.options.eps));
  for (const auto& [id, v] : section(j, "quantales").items())
    in.quantales.insert_or_assign(id, parse_quantale(v, in.options.eps, id));

  for (const auto& [id, v] : section(j, "sets").items()) {
    if (!v.is_array()) bad("set " + id + " must be an array of element names");
    for (const auto& e : v)
      if (!e.is_string()) bad("set " + id + " has a non-string element");
    auto els = v.get<std::vector<std::string>>();
    if (std::set<std::string>(els.begin(), els.end()).size() != els.size()) bad("set " + id + " repeats an element");
    in.sets.emplace(id, FinSet(id, els));
  }

  for (const auto& [id, v] : section(j, "maps").items()) {
    if (!v.is_object()) bad("map " + id + " must be an object");
    const FinSet& x = lookup(in.sets, str(v, "dom", id), "set");
    const FinSet& y = lookup(in.sets, str(v, "cod", id), "set");
    if (!v.contains("table")) bad(id + ": missing 'table'");
    const Json& t = v.at("table");
    std::vector<std::size_t> table(x.size());
    if (t.is_array()) {
      if (t.size() != x.size()) throw Error(ErrorCode::shape_mismatch, "map " + id + " table has the wrong length");
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!t[i].is_string()) bad("map " + id + " table entries must be element names");
        table[i] = y.index_of(t[i].get<std::string>());
      }
    } else if (t.is_object()) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!t.contains(x.element(i)) || !t.at(x.element(i)).is_string())
          throw Error(ErrorCode::shape_mismatch, "map " + id + " has no image for " + x.element(i));
        table[i] = y.index_of(t.at(x.element(i)).get<std::string>());
      }
      if (t.size() != x.size()) throw Error(ErrorCode::shape_mismatch, "map " + id + " table names unknown elements");
    } else {
      bad("map " + id + " table must be an array or an object");
    }
    in.maps.emplace(id, FinMap(x, y, std::move(table)));
  }

  for (const auto& [id, v] : section(j, "relations").items())
    in.relations.emplace(id, parse_relation(in, v, id, "dom", "cod"));

  for (const auto& [id, v] : section(j, "metric_spaces").items()) {
    if (!v.is_object()) bad("metric space " + id + " must be an object");
    Json w = v;
    if (!w.contains("quantale")) w["quantale"] = "lawvere";
    NamedRelation r = parse_relation(in, w, id, "set", "set");
    VRel d(lookup(in.quantales, r.quantale, "quantale"));
    if (!is_equivalence(d, r.rel))
      throw Error(ErrorCode::not_equivalence, "metric space " + id + " is not reflexive, symmetric and transitive");
    in.metric_spaces.emplace(id, std::move(r));
  }

  for (const auto& [id, v] : section(j, "transition_systems").items()) {
    if (!v.is_object()) bad("transition system " + id + " must be an object");
    TransitionSpec ts{lookup(in.sets, str(v, "states", id), "set"), {}};
    ts.succ.resize(ts.states.size());
    if (v.contains("succ")) {
      const Json& s = v.at("succ");
      if (!s.is_object()) bad("transition system " + id + ": 'succ' must map states to successor lists");
      for (const auto& [from, tos] : s.items()) {
        std::size_t i = ts.states.index_of(from);
        if (!tos.is_array()) bad("transition system " + id + ": successors of " + from + " must be a list");
        std::set<std::size_t> seen;
        for (const auto& t : tos) {
          if (!t.is_string()) bad("transition system " + id + ": successors must be state names");
          seen.insert(ts.states.index_of(t.get<std::string>()));
        }
        ts.succ[i].assign(seen.begin(), seen.end());
      }
    }
    transition_system(ts.states, ts.succ);  // enforces the powerset cap
    in.transition_systems.emplace(id, std::move(ts));
  }

  if (!section(j, "algebras").empty()) {
    auto bool_rel = std::make_shared<const VRel>(Quantale::boolean());
    auto m = powerset_monad(bool_rel);
    for (const auto& [id, v] : section(j, "algebras").items()) {
      if (!v.is_object()) bad("algebra " + id + " must be an object");
      AlgebraSpec a{lookup(in.sets, str(v, "set", id), "set"), {}};
      FinSet px = powerset_set(a.carrier);
      if (!v.contains("join") || !v.at("join").is_array() || v.at("join").size() != px.size())
        throw Error(ErrorCode::shape_mismatch,
                    "algebra " + id + ": 'join' must list " + std::to_string(px.size()) + " elements by subset mask");
      for (const auto& e : v.at("join")) {
        if (!e.is_string()) bad("algebra " + id + ": joins must be element names");
        a.join.push_back(a.carrier.index_of(e.get<std::string>()));
      }
      Algebra<VRel> alg{a.carrier, FinMap(px, a.carrier, a.join), std::nullopt};
      LawReport r = check_algebra(m, alg);
      if (!r.ok()) throw Error(ErrorCode::precondition_failed, "algebra " + id + " fails: " + r.to_text());
      in.algebras.emplace(id, std::move(a));
    }
  }

  for (const auto& [id, v] : section(j, "doctrines").items()) {
    if (!v.is_object()) bad("doctrine " + id + " must be an object");
    DoctrineSpec d{str(v, "constructor", id), v.contains("quantale") ? str(v, "quantale", id) : "boolean"};
    if (d.constructor == "H") {
      d.quantale.clear();
    } else if (d.constructor == "vrel" || d.constructor == "qr") {
      lookup(in.quantales, d.quantale, "quantale");
    } else {
      bad("doctrine " + id + ": unknown constructor '" + d.constructor + "'");
    }
    in.doctrines.emplace(id, std::move(d));
  }
  return in;
}

Instance load_instance_file(const std::string& path, const OptionOverrides& o) {
  std::ifstream f(path);
  if (!f) bad("cannot open " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return load_instance(j, o);
}

// --------------------------------------------------------------- batteries

namespace {

constexpr std::size_t kExhaustiveFibre = 4096;

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  Json entries = Json::array();

  void add(const LawReport& r) {
    for (const auto& c : r.checks) {
      ++checks;
      if (!c.pass) ++failures;
    }
    entries.push_back(r.to_json());
  }
  void add_verdict(Json j, bool pass) {
    ++checks;
    if (!pass) ++failures;
    j["pass"] = pass;
    entries.push_back(std::move(j));
  }
  void skip(const std::string& subject, const std::string& reason) {
    entries.push_back(Json{{"subject", subject}, {"skipped", reason}});
  }
};

Json envelope(const std::string& command, const Instance& in) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"seed", in.options.seed}};
}

Json summary(const Tally& t) {
  return Json{{"checks", t.checks}, {"failures", t.failures}, {"pass", t.failures == 0}};
}

// |Q|^(|X||Y|) for every pair stays small enough to enumerate
bool small_fibres(const Quantale& q, const std::vector<std::size_t>& sizes) {
  if (!q.finite()) return false;
  for (std::size_t n : sizes)
    for (std::size_t m : sizes) {
      double c = std::pow(static_cast<double>(q.size()), static_cast<double>(n * m));
      if (c > kExhaustiveFibre) return false;
    }
  return true;
}

template <class D>
void core_battery(const D& d, const ProbeSet<D>& p, const std::string& name, Tally& t) {
  t.add(check_doctrine_laws(d, p, name + ": doctrine"));
  t.add(check_graph_laws(d, p, name + ": graphs"));
  t.add(check_fun_ord(d, p, name + ": arrows and order"));
  t.add(check_left_adjoint(d, p, name + ": left adjoints"));
}

template <class D>
void structure_battery(const D& d, const ProbeSet<D>& p, const LawFlags& f, const std::string& name, Tally& t) {
  if (f.frobenius) {
    if constexpr (LatticeFibres<D>) {
      auto r = check_frobenius(d, p);
      r.subject = name + ": frobenius";
      t.add(r);
    } else {
      t.skip(name + ": frobenius", "fibres have no meets");
    }
  }
  if (f.modular) {
    if constexpr (LatticeFibres<D>) {
      auto r = check_modular(d, p);
      r.subject = name + ": modular";
      t.add(r);
    } else {
      t.skip(name + ": modular", "fibres have no meets");
    }
  }
  if (f.cartesian) {
    if constexpr (CartesianBase<D> && LatticeFibres<D>) {
      try {
        auto c = cartesian_candidate(d);
        auto r = check_cartesian(d, c, p);
        r.subject = name + ": cartesian";
        t.add(r);
        auto bc = check_beck_chevalley(d, c, p);
        bc.subject = name + ": beck-chevalley";
        t.add(bc);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::no_products) throw;
        t.skip(name + ": cartesian", e.what());
      }
    } else {
      t.skip(name + ": cartesian", "base has no chosen products");
    }
  }
}

Json ruc_json(const std::string& subject, const RucResult& r) {
  Json j{{"subject", subject},
         {"holds", r.holds},
         {"mode", r.exhaustive ? "exhaustive" : "sampled"},
         {"checked", r.checked},
         {"functional_total", r.functional_total}};
  if (!r.holds) j["witness"] = r.witness;
  return j;
}

std::vector<FinSet> law_sets(const Instance& in) {
  std::vector<FinSet> out;
  for (const auto& [id, s] : in.sets)
    if (s.size() <= 3) out.push_back(s);
  if (in.sets.empty())
    for (std::size_t n = 0; n <= 2; ++n) out.push_back(numbered_set("n" + std::to_string(n) + "_", n));
  return out;
}

std::size_t ruc_samples(const Instance& in) { return std::max<std::size_t>(in.options.sample_count, 256); }

RucResult vrel_ruc(const Instance& in, const VRel& d, const FinSet& x, const FinSet& y) {
  if (small_fibres(d.quantale(), {x.size(), y.size()}))
    return check_ruc(d, x, y, RucMode::exhaustive, nullptr, 0, in.options.seed, in.options.hom_cap);
  return check_ruc(
      d, x, y, RucMode::sampled, [&](Rng& g) { return random_relation(d, x, y, g); }, ruc_samples(in),
      in.options.seed, in.options.hom_cap);
}

using QV = QR<VRel>;

QV::Object qr_object(const QV& q, const NamedRelation& m) { return q.object(m.rel.dom, m.rel); }

RucResult qr_ruc(const Instance& in, const QV& q, const QV::Object& x, const QV::Object& y) {
  const VRel& b = q.base();
  if (small_fibres(b.quantale(), {x.base.size(), y.base.size()}))
    return check_ruc(q, x, y, RucMode::exhaustive, nullptr, 0, in.options.seed, in.options.hom_cap);
  return check_ruc(
      q, x, y, RucMode::sampled,
      [&](Rng& g) { return q.relation(x, y, b.compose(b.compose(x.rho, random_relation(b, x.base, y.base, g)), y.rho)); },
      ruc_samples(in), in.options.seed, in.options.hom_cap);
}

Json run_doctrine(const Instance& in, const std::string& id, const DoctrineSpec& spec, const LawFlags& f,
                  Tally& total) {
  Tally t;
  const auto& o = in.options;
  if (spec.constructor == "H") {
    auto h = build_H_counterexample();
    auto p = exhaustive_probes(h, {std::size_t{0}}, o.hom_cap);
    p.law_budget = o.law_budget;
    p.seed = o.seed;
    core_battery(h, p, id, t);
    structure_battery(h, p, f, id, t);
    if (f.ruc) {
      auto r = check_ruc(h, 0, 0, RucMode::exhaustive, nullptr, 0, o.seed, o.hom_cap);
      t.add_verdict(ruc_json(id + ": unique choice", r), r.holds);
    }
  } else if (spec.constructor == "vrel") {
    VRel d(in.quantales.at(spec.quantale));
    auto objs = law_sets(in);
    std::vector<std::size_t> sizes;
    for (const auto& s : objs) sizes.push_back(s.size());
    ProbeSet<VRel> p =
        small_fibres(d.quantale(), sizes)
            ? exhaustive_probes(d, objs, o.hom_cap)
            : sampled_probes<VRel>(
                  d, objs, o.sample_count,
                  [&](const FinSet& x, const FinSet& y, Rng& g) { return random_relation(d, x, y, g); }, o.seed,
                  o.hom_cap);
    p.law_budget = o.law_budget;
    p.seed = o.seed;
    core_battery(d, p, id, t);
    structure_battery(d, p, f, id, t);
    if (f.ruc)
      for (const auto& x : objs)
        for (const auto& y : objs) {
          auto r = vrel_ruc(in, d, x, y);
          t.add_verdict(ruc_json(id + ": unique choice " + x.name() + " -> " + y.name(), r), r.holds);
        }
  } else {
    QV q(VRel(in.quantales.at(spec.quantale)));
    std::vector<QV::Object> objs;
    std::vector<std::string> names;
    std::vector<std::size_t> sizes;
    for (const auto& [mid, m] : in.metric_spaces)
      if (m.quantale == spec.quantale && m.rel.dom.size() <= 3) {
        objs.push_back(qr_object(q, m));
        names.push_back(mid);
        sizes.push_back(m.rel.dom.size());
      }
    if (objs.empty()) {
      t.skip(id, "no equivalences over " + spec.quantale + " with at most 3 points");
    } else {
      const VRel& b = q.base();
      ProbeSet<QV> p = small_fibres(b.quantale(), sizes)
                           ? exhaustive_probes(q, objs, o.hom_cap)
                           : sampled_probes<QV>(
                                 q, objs, o.sample_count,
                                 [&](const QV::Object& x, const QV::Object& y, Rng& g) {
                                   auto a = random_relation(b, x.base, y.base, g);
                                   return q.relation(x, y, b.compose(b.compose(x.rho, a), y.rho));
                                 },
                                 o.seed, o.hom_cap);
      p.law_budget = o.law_budget;
      p.seed = o.seed;
      core_battery(q, p, id, t);
      structure_battery(q, p, f, id, t);
      if (f.ruc)
        for (std::size_t i = 0; i < objs.size(); ++i)
          for (std::size_t j = 0; j < objs.size(); ++j) {
            auto r = qr_ruc(in, q, objs[i], objs[j]);
            t.add_verdict(ruc_json(id + ": unique choice " + names[i] + " -> " + names[j], r), r.holds);
          }
    }
  }
  total.checks += t.checks;
  total.failures += t.failures;
  return Json{{"constructor", spec.constructor}, {"quantale", spec.quantale}, {"pass", t.failures == 0},
              {"reports", t.entries}};
}

Json quotient_json(const Instance& in, const NamedRelation& m) {
  VRel d(in.quantales.at(m.quantale));
  auto r = build_quotient_vrel(d, m.rel, std::nullopt, in.options.hom_cap);
  return Json{{"quantale", m.quantale},
              {"classes", r.classes.to_json()},
              {"q", r.q.to_json()},
              {"representatives", r.representatives},
              {"closure_applied", r.closure_applied},
              {"quotient", r.certificate.quotient()},
              {"effective", r.certificate.effective},
              {"descent", r.certificate.descent},
              {"certificate", r.certificate.to_json()}};
}

Json separate_json(const Instance& in, const NamedRelation& m) {
  VRel d(in.quantales.at(m.quantale));
  auto s = separation_quotient(d, m.rel);
  return Json{{"quantale", m.quantale},
              {"separated_input", is_separated(d, m.rel)},
              {"classes", s.classes.to_json()},
              {"q", s.q.to_json()},
              {"section", s.section.to_json()},
              {"metric", d.describe(s.rho_sep)},
              {"separated", is_separated(d, s.rho_sep)}};
}

Json factorize_json(const Instance& in, const FinMap& f) {
  VRel d(Quantale::boolean());
  auto r = factorize(d, f, in.options.hom_cap);
  return Json{{"q", r.quotient.q.to_json()},
              {"i", r.i.to_json()},
              {"image", r.quotient.classes.to_json()},
              {"injective", r.injective},
              {"recomposes", r.recomposes},
              {"quotient", r.quotient.certificate.quotient()},
              {"certificate", r.quotient.certificate.to_json()}};
}

Json bisim_json(const Instance& in, const TransitionSpec& a, const TransitionSpec& b,
                const std::optional<NamedRelation>& start) {
  auto d = std::make_shared<const VRel>(start ? in.quantales.at(start->quantale) : Quantale::boolean());
  auto F = hausdorff_lifting(d);
  auto ca = transition_system(a.states, a.succ);
  auto cb = transition_system(b.states, b.succ);
  std::optional<FinRel> s;
  if (start) s = start->rel;
  auto r = greatest_bisimulation(F, ca, cb, BisimOptions{in.options.max_iter}, s);
  Json related = Json::array();
  const Quantale& q = d->quantale();
  for (std::size_t i = 0; i < r.relation.rows(); ++i)
    for (std::size_t j = 0; j < r.relation.cols(); ++j)
      if (q.leq(q.unit(), r.relation.at(i, j)))
        related.push_back(Json::array({a.states.element(i), b.states.element(j)}));
  return Json{{"quantale", q.name()},
              {"tag", r.exact ? "exact" : "approximate"},
              {"iterations", r.iterations},
              {"verified", r.verified},
              {"relation", d->describe(r.relation)},
              {"unit_related", related}};
}

}  // namespace

// ----------------------------------------------------------------- commands

CommandResult cmd_check_laws(const Instance& in, const std::vector<std::string>& targets, const LawFlags& flags) {
  std::vector<std::string> ids = targets;
  if (ids.empty())
    for (const auto& [id, d] : in.doctrines) ids.push_back(id);
  Tally total;
  Json out = envelope("laws", in);
  Json docs = Json::object();
  for (const auto& id : ids) docs[id] = run_doctrine(in, id, lookup(in.doctrines, id, "doctrine"), flags, total);
  out["doctrines"] = std::move(docs);
  out["summary"] = summary(total);
  return CommandResult{total.failures == 0 ? 0 : 1, std::move(out)};
}

CommandResult cmd_quotient(const Instance& in, const std::string& space) {
  Json out = envelope("quotient", in);
  out["space"] = space;
  out["result"] = quotient_json(in, lookup(in.metric_spaces, space, "metric space"));
  return CommandResult{0, std::move(out)};
}

CommandResult cmd_separate(const Instance& in, const std::string& space) {
  Json out = envelope("separate", in);
  out["space"] = space;
  out["result"] = separate_json(in, lookup(in.metric_spaces, space, "metric space"));
  return CommandResult{0, std::move(out)};
}

CommandResult cmd_factorize(const Instance& in, const std::string& map) {
  Json out = envelope("factorize", in);
  out["map"] = map;
  out["result"] = factorize_json(in, lookup(in.maps, map, "map"));
  bool ok = out["result"]["injective"].get<bool>() && out["result"]["recomposes"].get<bool>() &&
            out["result"]["quotient"].get<bool>();
  return CommandResult{ok ? 0 : 1, std::move(out)};
}

CommandResult cmd_bisim(const Instance& in, const std::string& ts1, const std::string& ts2,
                        const std::optional<std::string>& start) {
  Json out = envelope("bisim", in);
  out["systems"] = Json::array({ts1, ts2});
  std::optional<NamedRelation> s;
  if (start) {
    s = lookup(in.relations, *start, "relation");
    out["start"] = *start;
  }
  out["result"] = bisim_json(in, lookup(in.transition_systems, ts1, "transition system"),
                             lookup(in.transition_systems, ts2, "transition system"), s);
  return CommandResult{0, std::move(out)};
}

CommandResult cmd_ruc(const Instance& in, const std::string& doctrine, const std::string& x, const std::string& y) {
  const DoctrineSpec& spec = lookup(in.doctrines, doctrine, "doctrine");
  Json out = envelope("ruc", in);
  out["doctrine"] = doctrine;
  RucResult r;
  if (spec.constructor == "H") {
    r = check_ruc(build_H_counterexample(), 0, 0, RucMode::exhaustive, nullptr, 0, in.options.seed,
                  in.options.hom_cap);
  } else if (spec.constructor == "vrel") {
    VRel d(in.quantales.at(spec.quantale));
    r = vrel_ruc(in, d, lookup(in.sets, x, "set"), lookup(in.sets, y, "set"));
  } else {
    QV q(VRel(in.quantales.at(spec.quantale)));
    const auto& mx = lookup(in.metric_spaces, x, "metric space");
    const auto& my = lookup(in.metric_spaces, y, "metric space");
    if (mx.quantale != spec.quantale || my.quantale != spec.quantale)
      throw Error(ErrorCode::shape_mismatch, "metric spaces do not live over " + spec.quantale);
    r = qr_ruc(in, q, qr_object(q, mx), qr_object(q, my));
  }
  out["result"] = ruc_json(doctrine + ": unique choice " + x + " -> " + y, r);
  return CommandResult{r.holds ? 0 : 1, std::move(out)};
}

CommandResult cmd_report(const Instance& in) {
  Tally total;
  Json out = envelope("report", in);
  LawFlags all{true, true, true, true};

  Json docs = Json::object();
  for (const auto& [id, spec] : in.doctrines) docs[id] = run_doctrine(in, id, spec, all, total);
  out["doctrines"] = std::move(docs);

  Json spaces = Json::object();
  for (const auto& [id, m] : in.metric_spaces)
    spaces[id] = Json{{"quotient", quotient_json(in, m)}, {"separation", separate_json(in, m)}};
  out["metric_spaces"] = std::move(spaces);

  Json maps = Json::object();
  for (const auto& [id, f] : in.maps) {
    Json r = factorize_json(in, f);
    ++total.checks;
    if (!(r["injective"].get<bool>() && r["recomposes"].get<bool>() && r["quotient"].get<bool>())) ++total.failures;
    maps[id] = std::move(r);
  }
  out["maps"] = std::move(maps);

  Json systems = Json::object();
  for (const auto& [a, ta] : in.transition_systems)
    for (const auto& [b, tb] : in.transition_systems)
      if (a <= b) systems[a + " ~ " + b] = bisim_json(in, ta, tb, std::nullopt);
  out["transition_systems"] = std::move(systems);

  Json algs = Json::object();
  if (!in.algebras.empty()) {
    auto m = powerset_monad(std::make_shared<const VRel>(Quantale::boolean()));
    for (const auto& [id, a] : in.algebras) {
      FinSet px = powerset_set(a.carrier);
      LawReport r = check_algebra(m, Algebra<VRel>{a.carrier, FinMap(px, a.carrier, a.join), std::nullopt});
      r.subject = id;
      total.add(r);
      algs[id] = r.to_json();
    }
  }
  out["algebras"] = std::move(algs);
  out["summary"] = summary(total);
  return CommandResult{total.failures == 0 ? 0 : 1, std::move(out)};
}

CommandResult error_result(const std::string& command, const std::string& code, const std::string& message) {
  Json out{{"schema_version", kSchemaVersion}, {"command", command}, {"error", {{"code", code}, {"message", message}}}};
  return CommandResult{2, std::move(out)};
}

CommandResult error_result(const std::string& command, const Error& e) {
  return error_result(command, error_name(e.code()), e.what());
}

// ---------------------------------------------------------------- rendering

namespace {

bool is_law_report(const Json& j) { return j.is_object() && j.contains("subject") && j.contains("laws"); }

void render(std::ostream& os, const Json& j, const std::string& indent) {
  if (is_law_report(j)) {
    os << indent << (j["pass"].get<bool>() ? "PASS " : "FAIL ") << j["subject"].get<std::string>() << "\n";
    for (const auto& c : j["laws"]) {
      os << indent << "  " << (c["pass"].get<bool>() ? "pass " : "FAIL ") << c["law"].get<std::string>() << " ("
         << c["cases"].get<std::size_t>() << " cases, " << c["mode"].get<std::string>() << ")\n";
      if (c.contains("witness")) os << indent << "    witness: " << c["witness"].dump() << "\n";
    }
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && !v.empty() && v[0].is_primitive()) && !v.empty()) {
        os << indent << k << ":\n";
        render(os, v, indent + "  ");
      } else {
        os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << indent << "- " << v.dump() << "\n";
      } else if (is_law_report(v)) {
        render(os, v, indent);
      } else {
        os << indent << "-\n";
        render(os, v, indent + "  ");
      }
    }
    return;
  }
  os << indent << j.dump() << "\n";
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(os, j, "");
  return os.str();
}

}  // namespace reldoc
