#include "reldoc/finset.hpp"

#include <algorithm>

#include "reldoc/error.hpp"

namespace reldoc {

FinSet::FinSet() : data_(std::make_shared<const Data>()) {}

FinSet::FinSet(std::string name, std::vector<std::string> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (elements[i] == elements[j])
        throw Error(ErrorCode::bad_input, "set " + name + " repeats element '" + elements[i] + "'");
  data_ = std::make_shared<const Data>(Data{std::move(name), std::move(elements)});
}

std::size_t FinSet::index_of(const std::string& element) const {
  const auto& el = data_->elements;
  auto it = std::find(el.begin(), el.end(), element);
  if (it == el.end()) throw Error(ErrorCode::unknown_object, "'" + element + "' is not an element of " + name());
  return static_cast<std::size_t>(it - el.begin());
}

Json FinSet::to_json() const { return Json{{"name", name()}, {"elements", elements()}}; }

FinMap::FinMap(FinSet d, FinSet c, std::vector<std::size_t> t)
    : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
  if (table.size() != dom.size()) throw Error(ErrorCode::shape_mismatch, "map table does not cover " + dom.name());
  for (std::size_t v : table)
    if (v >= cod.size()) throw Error(ErrorCode::shape_mismatch, "map image outside " + cod.name());
}

FinMap FinMap::identity(const FinSet& x) {
  std::vector<std::size_t> t(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return FinMap(x, x, std::move(t));
}

FinMap FinMap::then(const FinMap& f, const FinMap& g) {
  if (f.cod != g.dom) throw Error(ErrorCode::shape_mismatch, "cannot compose " + f.cod.name() + " with " + g.dom.name());
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return FinMap(f.dom, g.cod, std::move(t));
}

Json FinMap::to_json() const {
  Json tab = Json::object();
  for (std::size_t i = 0; i < table.size(); ++i) tab[dom.element(i)] = cod.element(table[i]);
  return Json{{"dom", dom.name()}, {"cod", cod.name()}, {"table", tab}};
}

FinRel::FinRel(FinSet d, FinSet c, Value fill) : dom(std::move(d)), cod(std::move(c)) {
  entries.assign(dom.size() * cod.size(), fill);
}

FinRel::FinRel(FinSet d, FinSet c, std::vector<Value> e)
    : dom(std::move(d)), cod(std::move(c)), entries(std::move(e)) {
  if (entries.size() != dom.size() * cod.size())
    throw Error(ErrorCode::shape_mismatch, "matrix shape does not match " + dom.name() + " x " + cod.name());
}

Json value_to_json(const Quantale& q, Value v) {
  if (q.finite()) return q.format(v);
  if (v == kInf) return "inf";
  return v;
}

Value value_from_json(const Quantale& q, const Json& j) {
  if (j.is_string()) return q.parse(j.get<std::string>());
  // integers name elements of finite quantales such as boolean 0/1
  if (j.is_number_integer() && q.finite()) return q.parse(std::to_string(j.get<long long>()));
  if (j.is_number()) return q.parse_number(j.get<double>());
  throw Error(ErrorCode::bad_input, "value must be a string or number: " + j.dump());
}

Json rel_to_json(const Quantale& q, const FinRel& r) {
  Json m = Json::array();
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.cols(); ++j) row.push_back(value_to_json(q, r.at(i, j)));
    m.push_back(std::move(row));
  }
  return Json{{"dom", r.dom.name()}, {"cod", r.cod.name()}, {"matrix", m}};
}

std::size_t count_maps(std::size_t dom, std::size_t cod) {
  const std::size_t limit = static_cast<std::size_t>(-1);
  std::size_t n = 1;
  for (std::size_t i = 0; i < dom; ++i) {
    if (cod == 0) return 0;
    if (n > limit / cod) return limit;
    n *= cod;
  }
  return n;
}

void for_each_map(const FinSet& dom, const FinSet& cod, std::size_t cap,
                  const std::function<void(const FinMap&)>& fn) {
  const std::size_t total = count_maps(dom.size(), cod.size());
  if (total > cap)
    throw Error(ErrorCode::cap_exceeded, "hom(" + dom.name() + "," + cod.name() + ") has more than " +
                                             std::to_string(cap) + " maps");
  if (total == 0) return;
  std::vector<std::size_t> t(dom.size(), 0);
  while (true) {
    fn(FinMap(dom, cod, t));
    std::size_t k = t.size();
    while (k > 0) {
      --k;
      if (++t[k] < cod.size()) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (t.empty()) return;
  }
}

std::vector<FinMap> all_maps(const FinSet& dom, const FinSet& cod, std::size_t cap) {
  std::vector<FinMap> out;
  for_each_map(dom, cod, cap, [&](const FinMap& f) { out.push_back(f); });
  return out;
}

FinSet product_set(const FinSet& x, const FinSet& y) {
  std::vector<std::string> el;
  el.reserve(x.size() * y.size());
  for (const auto& a : x.elements())
    for (const auto& b : y.elements()) el.push_back("(" + a + "," + b + ")");
  return FinSet(x.name() + "x" + y.name(), std::move(el));
}

FinSet terminal_set() { return FinSet("1", {"*"}); }

FinSet powerset_set(const FinSet& x, std::size_t cap) {
  if (x.size() > cap)
    throw Error(ErrorCode::size_limit, "powerset of " + x.name() + " exceeds cap " + std::to_string(cap));
  const std::size_t n = std::size_t{1} << x.size();
  std::vector<std::string> el;
  el.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (m & (std::size_t{1} << i)) {
        s += (first ? "" : ",") + x.element(i);
        first = false;
      }
    el.push_back(s + "}");
  }
  return FinSet("P(" + x.name() + ")", std::move(el));
}

FinSet numbered_set(const std::string& name, std::size_t n) {
  std::vector<std::string> el;
  for (std::size_t i = 0; i < n; ++i) el.push_back(name + std::to_string(i));
  return FinSet(name, std::move(el));
}

}  // namespace reldoc
