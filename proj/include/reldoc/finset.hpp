#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "reldoc/quantale.hpp"

namespace reldoc {

// Finite named set with a fixed element order. Cheap to copy (shared,
// immutable payload); equality compares name and elements.
class FinSet {
 public:
  FinSet();
  FinSet(std::string name, std::vector<std::string> elements);

  const std::string& name() const { return data_->name; }
  const std::vector<std::string>& elements() const { return data_->elements; }
  std::size_t size() const { return data_->elements.size(); }
  const std::string& element(std::size_t i) const { return data_->elements.at(i); }
  std::size_t index_of(const std::string& element) const;  // throws UnknownObject

  bool operator==(const FinSet& other) const {
    return data_ == other.data_ || (data_->name == other.data_->name && data_->elements == other.data_->elements);
  }
  bool operator!=(const FinSet& other) const { return !(*this == other); }

  Json to_json() const;

 private:
  struct Data {
    std::string name;
    std::vector<std::string> elements;
  };
  std::shared_ptr<const Data> data_;
};

// Total function between finite sets.
struct FinMap {
  FinSet dom, cod;
  std::vector<std::size_t> table;

  FinMap() = default;
  FinMap(FinSet d, FinSet c, std::vector<std::size_t> t);  // validates

  std::size_t operator()(std::size_t x) const { return table[x]; }
  bool operator==(const FinMap& o) const { return dom == o.dom && cod == o.cod && table == o.table; }
  bool operator!=(const FinMap& o) const { return !(*this == o); }

  static FinMap identity(const FinSet& x);
  // g after f, i.e. x -> g(f(x)).
  static FinMap then(const FinMap& f, const FinMap& g);
  Json to_json() const;
};

// Dense |dom| x |cod| matrix of values.
struct FinRel {
  FinSet dom, cod;
  std::vector<Value> entries;

  FinRel() = default;
  FinRel(FinSet d, FinSet c, Value fill);
  FinRel(FinSet d, FinSet c, std::vector<Value> e);  // validates shape

  std::size_t rows() const { return dom.size(); }
  std::size_t cols() const { return cod.size(); }
  Value& at(std::size_t i, std::size_t j) { return entries[i * cod.size() + j]; }
  Value at(std::size_t i, std::size_t j) const { return entries[i * cod.size() + j]; }
};

Json value_to_json(const Quantale& q, Value v);
Value value_from_json(const Quantale& q, const Json& j);
Json rel_to_json(const Quantale& q, const FinRel& r);

// Calls fn for every map dom -> cod in lexicographic order of tables
// (last element varies fastest). Throws CapExceeded when |cod|^|dom| > cap.
void for_each_map(const FinSet& dom, const FinSet& cod, std::size_t cap,
                  const std::function<void(const FinMap&)>& fn);
std::vector<FinMap> all_maps(const FinSet& dom, const FinSet& cod, std::size_t cap);
// |cod|^|dom|, saturating.
std::size_t count_maps(std::size_t dom, std::size_t cod);

// Product set with row-major pairing: (x_i, y_j) has index i*|Y|+j.
FinSet product_set(const FinSet& x, const FinSet& y);
FinSet terminal_set();
// Subsets in binary-counting order over element order: bit i <-> element i.
// Throws SizeLimit when |x| > cap.
FinSet powerset_set(const FinSet& x, std::size_t cap = 10);
FinSet numbered_set(const std::string& name, std::size_t n);

}  // namespace reldoc
