#include "reldoc/quantale.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "reldoc/error.hpp"

namespace reldoc {

namespace {

std::size_t index_in(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::malformed_table, "unknown element '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

void check_distinct(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw Error(ErrorCode::malformed_table, "duplicate element '" + names[i] + "'");
}

// Reflexive-transitive closure of a relation on n points.
std::vector<char> order_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<char> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
  for (auto [a, b] : pairs) r[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k * n + j]) r[i * n + j] = 1;
  return r;
}

std::string format_real(double v) {
  if (v == kInf) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // prefer a short form when it round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

}  // namespace

Quantale Quantale::boolean() {
  return from_tables("boolean", {"0", "1"}, {{"0", "1"}},
                     {{"0", "0", "0"}, {"0", "1", "0"}, {"1", "0", "0"}, {"1", "1", "1"}}, "1");
}

Quantale Quantale::lawvere(double eps) {
  if (!(eps > 0)) throw Error(ErrorCode::bad_input, "eps must be positive");
  Quantale q;
  q.kind_ = Kind::lawvere;
  q.name_ = "lawvere";
  q.eps_ = eps;
  q.unit_ = 0;
  q.bottom_ = kInf;
  q.top_ = 0;
  q.zero_divisor_free_ = true;
  q.meet_is_tensor_ = false;
  return q;
}

Quantale Quantale::powerset(const std::vector<std::string>& base) {
  if (base.empty()) throw Error(ErrorCode::empty_base, "powerset quantale needs a nonempty base");
  check_distinct(base);
  if (base.size() > 12) throw Error(ErrorCode::size_limit, "powerset quantale base too large");
  Quantale q;
  q.kind_ = Kind::finite;
  std::string name = "P(";
  for (std::size_t i = 0; i < base.size(); ++i) name += (i ? "," : "") + base[i];
  q.name_ = name + ")";
  const std::size_t n = std::size_t{1} << base.size();
  q.n_ = n;
  for (std::size_t m = 0; m < n; ++m) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (m & (std::size_t{1} << i)) {
        s += (first ? "" : ",") + base[i];
        first = false;
      }
    q.elements_.push_back(s + "}");
  }
  q.leq_.assign(n * n, 0);
  q.tensor_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      q.leq_[a * n + b] = (a & ~b) == 0;
      q.tensor_[a * n + b] = static_cast<Value>(a & b);
    }
  q.unit_ = static_cast<Value>(n - 1);
  q.derive_lattice();
  q.derive_flags();
  return q;
}

Quantale Quantale::from_tables(std::string name, std::vector<std::string> carrier,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                               const std::vector<std::vector<std::string>>& tensor_triples,
                               const std::string& unit) {
  if (carrier.empty()) throw Error(ErrorCode::malformed_table, "empty carrier");
  check_distinct(carrier);
  Quantale q;
  q.kind_ = Kind::finite;
  q.name_ = std::move(name);
  q.elements_ = std::move(carrier);
  const std::size_t n = q.elements_.size();
  q.n_ = n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : leq_pairs) pairs.emplace_back(index_in(q.elements_, a), index_in(q.elements_, b));
  q.leq_ = order_closure(n, pairs);
  std::vector<char> seen(n * n, 0);
  q.tensor_.assign(n * n, 0);
  for (const auto& t : tensor_triples) {
    if (t.size() != 3) throw Error(ErrorCode::malformed_table, "tensor entries must be triples");
    std::size_t a = index_in(q.elements_, t[0]), b = index_in(q.elements_, t[1]), c = index_in(q.elements_, t[2]);
    if (seen[a * n + b] && q.tensor_[a * n + b] != static_cast<Value>(c))
      throw Error(ErrorCode::malformed_table, "conflicting tensor entries for (" + t[0] + "," + t[1] + ")");
    seen[a * n + b] = 1;
    q.tensor_[a * n + b] = static_cast<Value>(c);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!seen[a * n + b])
        throw Error(ErrorCode::malformed_table,
                    "tensor table not total: missing (" + q.elements_[a] + "," + q.elements_[b] + ")");
  q.unit_ = static_cast<Value>(index_in(q.elements_, unit));
  q.derive_lattice();
  q.derive_flags();
  return q;
}

void Quantale::derive_lattice() {
  const std::size_t n = n_;
  lattice_ = true;
  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  auto le = [&](std::size_t a, std::size_t b) { return leq_[a * n + b] != 0; };
  auto extreme = [&](bool least, auto&& admissible) -> long {
    for (std::size_t c = 0; c < n; ++c) {
      if (!admissible(c)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < n && ok; ++d)
        if (admissible(d) && !(least ? le(c, d) : le(d, c))) ok = false;
      if (ok) return static_cast<long>(c);
    }
    return -1;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      long j = extreme(true, [&](std::size_t c) { return le(a, c) && le(b, c); });
      long m = extreme(false, [&](std::size_t c) { return le(c, a) && le(c, b); });
      if (j < 0 || m < 0) lattice_ = false;
      join_[a * n + b] = static_cast<Value>(j < 0 ? a : static_cast<std::size_t>(j));
      meet_[a * n + b] = static_cast<Value>(m < 0 ? a : static_cast<std::size_t>(m));
    }
  long bot = extreme(true, [](std::size_t) { return true; });
  long top = extreme(false, [](std::size_t) { return true; });
  if (bot < 0 || top < 0) lattice_ = false;
  bottom_ = static_cast<Value>(bot < 0 ? 0 : bot);
  top_ = static_cast<Value>(top < 0 ? 0 : top);
}

void Quantale::derive_flags() {
  zero_divisor_free_ = true;
  meet_is_tensor_ = lattice_;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      Value t = tensor_[a * n_ + b];
      if (static_cast<Value>(a) != bottom_ && static_cast<Value>(b) != bottom_ && t == bottom_)
        zero_divisor_free_ = false;
      if (t != meet_[a * n_ + b]) meet_is_tensor_ = false;
    }
}

std::vector<Value> Quantale::elements() const {
  if (!finite()) throw Error(ErrorCode::precondition_failed, "carrier is not finite");
  std::vector<Value> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Value>(i);
  return out;
}

std::string Quantale::format(Value v) const {
  if (kind_ == Kind::lawvere) return format_real(v);
  return elements_.at(idx(v));
}

Value Quantale::parse(const std::string& token) const {
  if (kind_ == Kind::finite) return element(token);
  if (token == "inf" || token == "infinity" || token == "Infinity") return kInf;
  char* end = nullptr;
  double x = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0') throw Error(ErrorCode::bad_input, "not a number: " + token);
  return parse_number(x);
}

Value Quantale::parse_number(double x) const {
  if (kind_ == Kind::finite) throw Error(ErrorCode::bad_input, "numeric value for finite quantale " + name_);
  if (std::isnan(x) || x < 0) throw Error(ErrorCode::bad_input, "Lawvere values must lie in [0,inf]");
  return x;
}

Value Quantale::element(const std::string& name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) throw Error(ErrorCode::unknown_object, "no element '" + name + "' in " + name_);
  return static_cast<Value>(it - elements_.begin());
}

bool Quantale::operator==(const Quantale& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::lawvere) return eps_ == other.eps_;
  return elements_ == other.elements_ && leq_ == other.leq_ && tensor_ == other.tensor_ && unit_ == other.unit_;
}

const Quantale& Quantale::certified() const {
  LawReport r = check_quantale_laws(*this);
  for (const auto& c : r.checks)
    if (!c.pass)
      throw Error(ErrorCode::malformed_table, name_ + " violates " + c.law + ": " + c.witness.dump());
  return *this;
}

namespace {

Json wit(const Quantale& q, std::initializer_list<Value> vs) {
  Json j = Json::array();
  for (Value v : vs) j.push_back(q.format(v));
  return j;
}

void check_finite(const Quantale& q, LawReport& rep) {
  const auto el = q.elements();
  auto& order = rep.add("partial_order");
  for (Value a : el)
    for (Value b : el)
      order.record(!(a != b && q.leq(a, b) && q.leq(b, a)), wit(q, {a, b}));
  auto& lat = rep.add("lattice_completeness");
  lat.record(q.is_lattice(), Json("some pair lacks a join or meet, or no bottom/top"));
  auto& assoc = rep.add("assoc");
  auto& comm = rep.add("comm");
  auto& unit = rep.add("unit");
  for (Value a : el) {
    unit.record(q.tensor(a, q.unit()) == a && q.tensor(q.unit(), a) == a, wit(q, {a}));
    for (Value b : el) {
      comm.record(q.tensor(a, b) == q.tensor(b, a), wit(q, {a, b}));
      for (Value c : el)
        assoc.record(q.tensor(a, q.tensor(b, c)) == q.tensor(q.tensor(a, b), c), wit(q, {a, b, c}));
    }
  }
  auto& dist = rep.add("join_distribution");
  if (!q.is_lattice()) {
    dist.record(false, Json("joins undefined"));
    return;
  }
  const std::size_t n = el.size();
  if (n <= 12) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Value sup = q.bottom();
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) sup = q.join(sup, el[i]);
      for (Value a : el) {
        Value rhs = q.bottom();
        Json members = Json::array();
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::size_t{1} << i)) {
            rhs = q.join(rhs, q.tensor(a, el[i]));
            members.push_back(q.format(el[i]));
          }
        dist.record(q.tensor(a, sup) == rhs, Json{{"a", q.format(a)}, {"S", members}});
      }
    }
  } else {
    // binary joins plus the empty join determine all finite joins
    dist.exhaustive = false;
    for (Value a : el) {
      dist.record(q.tensor(a, q.bottom()) == q.bottom(), Json{{"a", q.format(a)}, {"S", Json::array()}});
      for (Value b : el)
        for (Value c : el)
          dist.record(q.tensor(a, q.join(b, c)) == q.join(q.tensor(a, b), q.tensor(a, c)), wit(q, {a, b, c}));
    }
  }
}

std::vector<Value> lawvere_samples(unsigned long long seed) {
  std::vector<Value> vs = {0.0, kInf, 0.5, 1.0, 2.0, 3.25, 1e6};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 9; ++i) vs.push_back(u(rng));
  return vs;
}

void check_lawvere(const Quantale& q, LawReport& rep, unsigned long long seed) {
  const auto vs = lawvere_samples(seed);
  auto& order = rep.add("partial_order");
  auto& lat = rep.add("lattice_completeness");
  auto& assoc = rep.add("assoc");
  auto& comm = rep.add("comm");
  auto& unit = rep.add("unit");
  auto& dist = rep.add("join_distribution");
  for (auto* c : {&order, &lat, &assoc, &comm, &unit, &dist}) c->exhaustive = false;
  for (Value a : vs) {
    unit.record(q.eq(q.tensor(a, q.unit()), a), wit(q, {a}));
    dist.record(q.eq(q.tensor(a, q.bottom()), q.bottom()), Json{{"a", q.format(a)}, {"S", Json::array()}});
    lat.record(q.leq(q.bottom(), a) && q.leq(a, q.top()), wit(q, {a}));
    for (Value b : vs) {
      order.record(!(q.leq(a, b) && q.leq(b, a)) || q.eq(a, b), wit(q, {a, b}));
      comm.record(q.eq(q.tensor(a, b), q.tensor(b, a)), wit(q, {a, b}));
      lat.record(q.leq(a, q.join(a, b)) && q.leq(q.meet(a, b), a), wit(q, {a, b}));
      for (Value c : vs) {
        assoc.record(q.eq(q.tensor(a, q.tensor(b, c)), q.tensor(q.tensor(a, b), c)), wit(q, {a, b, c}));
        dist.record(q.eq(q.tensor(a, q.join(b, c)), q.join(q.tensor(a, b), q.tensor(a, c))), wit(q, {a, b, c}));
      }
    }
  }
}

}  // namespace

LawReport check_quantale_laws(const Quantale& q, unsigned long long seed) {
  LawReport rep;
  rep.subject = "quantale " + q.name();
  if (q.finite())
    check_finite(q, rep);
  else
    check_lawvere(q, rep, seed);
  return rep;
}

// ---------------------------------------------------------------- semirings

Semiring Semiring::nonneg_reals(double eps) {
  Semiring s;
  s.kind_ = Kind::nonneg_real;
  s.name_ = "nonneg_reals";
  s.zero_ = 0;
  s.one_ = 1;
  s.eps_ = eps;
  return s;
}

Semiring Semiring::from_quantale(const Quantale& q) {
  if (!q.finite()) throw Error(ErrorCode::precondition_failed, "only finite quantales convert to table semirings");
  Semiring s;
  s.kind_ = Kind::finite;
  s.name_ = q.name();
  s.elements_ = q.element_names();
  s.n_ = q.size();
  const auto el = q.elements();
  for (Value a : el)
    for (Value b : el) {
      s.leq_.push_back(q.leq(a, b));
      s.add_.push_back(q.join(a, b));
      s.mul_.push_back(q.tensor(a, b));
    }
  s.zero_ = q.bottom();
  s.one_ = q.unit();
  return s;
}

Semiring Semiring::from_tables(std::string name, std::vector<std::string> carrier,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                               const std::vector<std::vector<std::string>>& add_triples,
                               const std::vector<std::vector<std::string>>& mul_triples,
                               const std::string& zero, const std::string& one) {
  if (carrier.empty()) throw Error(ErrorCode::malformed_table, "empty carrier");
  check_distinct(carrier);
  Semiring s;
  s.kind_ = Kind::finite;
  s.name_ = std::move(name);
  s.elements_ = std::move(carrier);
  const std::size_t n = s.elements_.size();
  s.n_ = n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : leq_pairs) pairs.emplace_back(index_in(s.elements_, a), index_in(s.elements_, b));
  s.leq_ = order_closure(n, pairs);
  auto fill = [&](const std::vector<std::vector<std::string>>& triples, std::vector<Value>& table, const char* what) {
    std::vector<char> seen(n * n, 0);
    table.assign(n * n, 0);
    for (const auto& t : triples) {
      if (t.size() != 3) throw Error(ErrorCode::malformed_table, std::string(what) + " entries must be triples");
      std::size_t a = index_in(s.elements_, t[0]), b = index_in(s.elements_, t[1]), c = index_in(s.elements_, t[2]);
      seen[a * n + b] = 1;
      table[a * n + b] = static_cast<Value>(c);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw Error(ErrorCode::malformed_table, std::string(what) + " table not total");
  };
  fill(add_triples, s.add_, "add");
  fill(mul_triples, s.mul_, "mul");
  s.zero_ = static_cast<Value>(index_in(s.elements_, zero));
  s.one_ = static_cast<Value>(index_in(s.elements_, one));
  return s;
}

std::vector<Value> Semiring::elements() const {
  if (kind_ != Kind::finite) throw Error(ErrorCode::precondition_failed, "carrier is not finite");
  std::vector<Value> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<Value>(i);
  return out;
}

std::string Semiring::format(Value v) const {
  if (kind_ == Kind::nonneg_real) return format_real(v);
  return elements_.at(idx(v));
}

LawReport check_semiring_laws(const Semiring& s, unsigned long long seed) {
  LawReport rep;
  rep.subject = "semiring " + s.name();
  std::vector<Value> el;
  bool exhaustive = s.kind() == Semiring::Kind::finite;
  if (exhaustive) {
    el = s.elements();
  } else {
    el = {0.0, 1.0, 0.5, 2.0, 3.0};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int i = 0; i < 5; ++i) el.push_back(std::round(u(rng) * 4) / 4);  // dyadic: exact arithmetic
  }
  auto f = [&](std::initializer_list<Value> vs) {
    Json j = Json::array();
    for (Value v : vs) j.push_back(s.format(v));
    return j;
  };
  const char* names[] = {"partial_order", "add_assoc", "add_comm", "add_zero", "mul_assoc", "mul_comm",
                         "mul_one", "zero_absorbing", "distributive", "add_monotone", "mul_monotone"};
  for (const char* n : names) rep.add(n).exhaustive = exhaustive;
  for (Value a : el) {
    rep.get("add_zero").record(s.eq(s.add(a, s.zero()), a), f({a}));
    rep.get("mul_one").record(s.eq(s.mul(a, s.one()), a), f({a}));
    rep.get("zero_absorbing").record(s.eq(s.mul(a, s.zero()), s.zero()), f({a}));
    for (Value b : el) {
      rep.get("partial_order").record(a == b || !(s.leq(a, b) && s.leq(b, a)) || s.kind() != Semiring::Kind::finite,
                                      f({a, b}));
      rep.get("add_comm").record(s.eq(s.add(a, b), s.add(b, a)), f({a, b}));
      rep.get("mul_comm").record(s.eq(s.mul(a, b), s.mul(b, a)), f({a, b}));
      for (Value c : el) {
        rep.get("add_assoc").record(s.eq(s.add(a, s.add(b, c)), s.add(s.add(a, b), c)), f({a, b, c}));
        rep.get("mul_assoc").record(s.eq(s.mul(a, s.mul(b, c)), s.mul(s.mul(a, b), c)), f({a, b, c}));
        rep.get("distributive").record(s.eq(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c))), f({a, b, c}));
        if (s.leq(a, b)) {
          rep.get("add_monotone").record(s.leq(s.add(a, c), s.add(b, c)), f({a, b, c}));
          rep.get("mul_monotone").record(s.leq(s.mul(a, c), s.mul(b, c)), f({a, b, c}));
        }
      }
    }
  }
  return rep;
}

}  // namespace reldoc
