#pragma once

#include <cstddef>
#include <vector>

#include "reldoc/doctrine.hpp"
#include "reldoc/qr.hpp"
#include "reldoc/vrel.hpp"

namespace reldoc {

// f and g are R-equal when d_X <= R[f,g](d_Y). Throws NotParallel.
template <RelationalDoctrine D>
bool ext_equal(const D& d, const typename D::Arrow& f, const typename D::Arrow& g) {
  if (!d.same_object(d.arrow_dom(f), d.arrow_dom(g)) || !d.same_object(d.arrow_cod(f), d.arrow_cod(g)))
    throw Error(ErrorCode::not_parallel, "arrows are not parallel");
  return d.leq(d.identity(d.arrow_dom(f)), d.reindex(f, g, d.identity(d.arrow_cod(f))));
}

struct ExtensionalityResult {
  bool extensional = true;
  std::size_t pairs = 0;
  Json witness;  // distinct R-equal pair
};

// Scans every parallel pair among homs between the listed objects.
template <RelationalDoctrine D>
ExtensionalityResult is_extensional(const D& d, const std::vector<typename D::Object>& objects,
                                    std::size_t hom_cap = kDefaultHomCap) {
  ExtensionalityResult r;
  for (const auto& x : objects)
    for (const auto& y : objects) {
      auto hs = d.homs(x, y, hom_cap);
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
          ++r.pairs;
          if (!d.same_arrow(hs[i], hs[j]) && ext_equal(d, hs[i], hs[j]) && r.extensional) {
            r.extensional = false;
            r.witness = Json{{"f", d.describe(hs[i])}, {"g", d.describe(hs[j])}};
          }
        }
    }
  return r;
}

// Extensional collapse: same objects and fibres, arrows taken modulo
// R-equality. Each class is represented by its least member in the base's
// hom enumeration order.
template <RelationalDoctrine D>
class EC {
 public:
  using Object = typename D::Object;
  using Relation = typename D::Relation;
  struct Arrow {
    typename D::Arrow rep;
  };

  explicit EC(D base, std::size_t hom_cap = kDefaultHomCap) : base_(std::move(base)), cap_(hom_cap) {}
  const D& base() const { return base_; }
  Provenance provenance() const { return Provenance::ec; }

  // Class of a base arrow. Throws CapExceeded via the base enumeration.
  Arrow cls(const typename D::Arrow& f) const {
    for (auto& g : base_.homs(base_.arrow_dom(f), base_.arrow_cod(f), cap_))
      if (ext_equal(base_, f, g)) return Arrow{std::move(g)};
    return Arrow{f};  // f outside the enumeration; keep it as its own representative
  }

  decltype(auto) rel_dom(const Relation& a) const { return base_.rel_dom(a); }
  decltype(auto) rel_cod(const Relation& a) const { return base_.rel_cod(a); }
  decltype(auto) arrow_dom(const Arrow& f) const { return base_.arrow_dom(f.rep); }
  decltype(auto) arrow_cod(const Arrow& f) const { return base_.arrow_cod(f.rep); }
  bool same_object(const Object& x, const Object& y) const { return base_.same_object(x, y); }

  Relation identity(const Object& x) const { return base_.identity(x); }
  Relation compose(const Relation& a, const Relation& b) const { return base_.compose(a, b); }
  Relation converse(const Relation& a) const { return base_.converse(a); }
  Relation reindex(const Arrow& f, const Arrow& g, const Relation& a) const { return base_.reindex(f.rep, g.rep, a); }
  bool leq(const Relation& a, const Relation& b) const { return base_.leq(a, b); }

  Arrow id_arrow(const Object& x) const { return cls(base_.id_arrow(x)); }
  Arrow then(const Arrow& f, const Arrow& g) const { return cls(base_.then(f.rep, g.rep)); }
  bool same_arrow(const Arrow& f, const Arrow& g) const { return ext_equal(base_, f.rep, g.rep); }
  // One representative per class.
  std::vector<Arrow> homs(const Object& x, const Object& y, std::size_t cap) const {
    auto hs = base_.homs(x, y, std::min(cap, cap_));
    std::vector<Arrow> out;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      bool first = true;
      for (const auto& r : out)
        if (ext_equal(base_, r.rep, hs[i])) {
          first = false;
          break;
        }
      if (first) out.push_back(Arrow{hs[i]});
    }
    return out;
  }
  // Members of each class, in enumeration order.
  std::vector<std::vector<typename D::Arrow>> classes(const Object& x, const Object& y) const {
    std::vector<std::vector<typename D::Arrow>> out;
    for (auto& f : base_.homs(x, y, cap_)) {
      bool placed = false;
      for (auto& c : out)
        if (ext_equal(base_, c.front(), f)) {
          c.push_back(f);
          placed = true;
          break;
        }
      if (!placed) out.push_back({f});
    }
    return out;
  }

  std::vector<Relation> fibre(const Object& x, const Object& y, std::size_t cap) const
    requires FiniteFibres<D>
  {
    return base_.fibre(x, y, cap);
  }
  Relation meet(const Relation& a, const Relation& b) const
    requires LatticeFibres<D>
  {
    return base_.meet(a, b);
  }
  Relation join(const Relation& a, const Relation& b) const
    requires LatticeFibres<D>
  {
    return base_.join(a, b);
  }
  Relation top(const Object& x, const Object& y) const
    requires LatticeFibres<D>
  {
    return base_.top(x, y);
  }
  Relation bottom(const Object& x, const Object& y) const
    requires LatticeFibres<D>
  {
    return base_.bottom(x, y);
  }

  Json describe(const Object& x) const { return base_.describe(x); }
  Json describe(const Arrow& f) const { return base_.describe(f.rep); }
  Json describe(const Relation& a) const { return base_.describe(a); }

 private:
  D base_;
  std::size_t cap_;
};

// EC(QR(R)).
template <RelationalDoctrine D>
using EQ = EC<QR<D>>;

template <RelationalDoctrine D>
EQ<D> eq_completion(D base, std::size_t hom_cap = kDefaultHomCap) {
  return EQ<D>(QR<D>(std::move(base)), hom_cap);
}

// --------------------------------------------------- separation of V-metrics

// unit <= rho(x,y) implies x = y
bool is_separated(const VRel& d, const FinRel& rho);

struct SeparationResult {
  FinSet classes;
  FinMap q;        // class projection
  FinMap section;  // least representative of each class
  FinRel rho_sep;  // rho_sep([x],[y]) = rho(x,y)
};

// Quotient by x ~ y iff unit <= rho(x,y). Throws NotEquivalence, and
// IllDefined if rho differs between representatives beyond the quantale's
// equality.
SeparationResult separation_quotient(const VRel& d, const FinRel& rho);

}  // namespace reldoc
