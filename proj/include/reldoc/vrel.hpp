#pragma once

#include <cstddef>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/finset.hpp"
#include "reldoc/quantale.hpp"

namespace reldoc {

// V-valued relations between finite sets.
class VRel {
 public:
  using Object = FinSet;
  using Arrow = FinMap;
  using Relation = FinRel;

  explicit VRel(Quantale q) : q_(std::move(q)) {}

  const Quantale& quantale() const { return q_; }
  Provenance provenance() const { return Provenance::concrete; }

  const FinSet& rel_dom(const FinRel& a) const { return a.dom; }
  const FinSet& rel_cod(const FinRel& a) const { return a.cod; }
  const FinSet& arrow_dom(const FinMap& f) const { return f.dom; }
  const FinSet& arrow_cod(const FinMap& f) const { return f.cod; }
  bool same_object(const FinSet& x, const FinSet& y) const { return x == y; }

  FinRel identity(const FinSet& x) const;
  FinRel compose(const FinRel& a, const FinRel& b) const;
  FinRel converse(const FinRel& a) const;
  // (a, b) -> alpha(f a, g b)
  FinRel reindex(const FinMap& f, const FinMap& g, const FinRel& a) const;
  bool leq(const FinRel& a, const FinRel& b) const;

  FinMap id_arrow(const FinSet& x) const { return FinMap::identity(x); }
  FinMap then(const FinMap& f, const FinMap& g) const { return FinMap::then(f, g); }
  bool same_arrow(const FinMap& f, const FinMap& g) const { return f == g; }
  std::vector<FinMap> homs(const FinSet& x, const FinSet& y, std::size_t cap) const { return all_maps(x, y, cap); }

  // Every relation X -> Y, entries enumerated in carrier order, last entry
  // fastest. Finite quantales only; throws CapExceeded.
  std::vector<FinRel> fibre(const FinSet& x, const FinSet& y, std::size_t cap) const;

  FinRel meet(const FinRel& a, const FinRel& b) const;
  FinRel join(const FinRel& a, const FinRel& b) const;
  FinRel top(const FinSet& x, const FinSet& y) const { return FinRel(x, y, q_.top()); }
  FinRel bottom(const FinSet& x, const FinSet& y) const { return FinRel(x, y, q_.bottom()); }

  Product<FinSet, FinMap> product(const FinSet& x, const FinSet& y) const;
  // <f, g> : Z -> P where P is product(cod f, cod g).obj
  FinMap pair(const FinMap& f, const FinMap& g, const FinSet& p) const;
  FinSet terminal() const { return terminal_set(); }
  FinMap bang(const FinSet& x) const { return FinMap(x, terminal_set(), std::vector<std::size_t>(x.size(), 0)); }

  Json describe(const FinSet& x) const { return x.to_json(); }
  Json describe(const FinMap& f) const { return f.to_json(); }
  Json describe(const FinRel& a) const { return rel_to_json(q_, a); }

  FinRel make(const FinSet& x, const FinSet& y, std::vector<Value> entries) const {
    return FinRel(x, y, std::move(entries));
  }
  // Matrix from JSON rows (values as element names, numbers or "inf").
  FinRel from_json(const FinSet& x, const FinSet& y, const Json& rows) const;

 private:
  void require_shape(const FinRel& a, const FinRel& b) const;
  Quantale q_;
};

// Matrices over an ordered semiring with finite sums.
class Mat {
 public:
  using Object = FinSet;
  using Arrow = FinMap;
  using Relation = FinRel;

  explicit Mat(Semiring s) : s_(std::move(s)) {}
  const Semiring& semiring() const { return s_; }
  Provenance provenance() const { return Provenance::concrete; }

  const FinSet& rel_dom(const FinRel& a) const { return a.dom; }
  const FinSet& rel_cod(const FinRel& a) const { return a.cod; }
  const FinSet& arrow_dom(const FinMap& f) const { return f.dom; }
  const FinSet& arrow_cod(const FinMap& f) const { return f.cod; }
  bool same_object(const FinSet& x, const FinSet& y) const { return x == y; }

  FinRel identity(const FinSet& x) const;
  FinRel compose(const FinRel& a, const FinRel& b) const;
  FinRel converse(const FinRel& a) const;
  FinRel reindex(const FinMap& f, const FinMap& g, const FinRel& a) const;
  bool leq(const FinRel& a, const FinRel& b) const;

  FinMap id_arrow(const FinSet& x) const { return FinMap::identity(x); }
  FinMap then(const FinMap& f, const FinMap& g) const { return FinMap::then(f, g); }
  bool same_arrow(const FinMap& f, const FinMap& g) const { return f == g; }
  std::vector<FinMap> homs(const FinSet& x, const FinSet& y, std::size_t cap) const { return all_maps(x, y, cap); }

  Json describe(const FinSet& x) const { return x.to_json(); }
  Json describe(const FinMap& f) const { return f.to_json(); }
  Json describe(const FinRel& a) const;

 private:
  Semiring s_;
};

}  // namespace reldoc
