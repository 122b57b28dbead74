#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "reldoc/error.hpp"
#include "reldoc/law_report.hpp"

namespace reldoc {

enum class Provenance { concrete, presented, qr, ec, change_of_base, em, rmap };
const char* provenance_name(Provenance p);

inline constexpr std::size_t kDefaultHomCap = 100000;

// Uniform doctrine interface. Arrow composition is diagrammatic:
// d.then(f, g) is "f then g", i.e. g after f. Relational composition
// d.compose(a, b) is a;b.
template <class D>
concept RelationalDoctrine = requires(const D& d, const typename D::Object& x, const typename D::Arrow& f,
                                      const typename D::Relation& a, std::size_t cap) {
  { d.rel_dom(a) } -> std::convertible_to<typename D::Object>;
  { d.rel_cod(a) } -> std::convertible_to<typename D::Object>;
  { d.arrow_dom(f) } -> std::convertible_to<typename D::Object>;
  { d.arrow_cod(f) } -> std::convertible_to<typename D::Object>;
  { d.same_object(x, x) } -> std::same_as<bool>;
  { d.identity(x) } -> std::same_as<typename D::Relation>;
  { d.compose(a, a) } -> std::same_as<typename D::Relation>;
  { d.converse(a) } -> std::same_as<typename D::Relation>;
  { d.reindex(f, f, a) } -> std::same_as<typename D::Relation>;
  { d.leq(a, a) } -> std::same_as<bool>;
  { d.id_arrow(x) } -> std::same_as<typename D::Arrow>;
  { d.then(f, f) } -> std::same_as<typename D::Arrow>;
  { d.same_arrow(f, f) } -> std::same_as<bool>;
  { d.homs(x, x, cap) } -> std::same_as<std::vector<typename D::Arrow>>;
  { d.describe(x) } -> std::same_as<Json>;
  { d.describe(f) } -> std::same_as<Json>;
  { d.describe(a) } -> std::same_as<Json>;
  { d.provenance() } -> std::same_as<Provenance>;
};

// Doctrines whose fibres can be listed (finite quantale values).
template <class D>
concept FiniteFibres = RelationalDoctrine<D> && requires(const D& d, const typename D::Object& x, std::size_t cap) {
  { d.fibre(x, x, cap) } -> std::same_as<std::vector<typename D::Relation>>;
};

// Fibres with binary meets/joins and top/bottom.
template <class D>
concept LatticeFibres = RelationalDoctrine<D> && requires(const D& d, const typename D::Object& x,
                                                          const typename D::Relation& a) {
  { d.meet(a, a) } -> std::same_as<typename D::Relation>;
  { d.join(a, a) } -> std::same_as<typename D::Relation>;
  { d.top(x, x) } -> std::same_as<typename D::Relation>;
  { d.bottom(x, x) } -> std::same_as<typename D::Relation>;
};

template <class Object, class Arrow>
struct Product {
  Object obj;
  Arrow p1, p2;
};

// Base category with chosen finite products.
template <class D>
concept CartesianBase = RelationalDoctrine<D> && requires(const D& d, const typename D::Object& x,
                                                          const typename D::Arrow& f) {
  { d.product(x, x) } -> std::same_as<Product<typename D::Object, typename D::Arrow>>;
  { d.pair(f, f, x) } -> std::same_as<typename D::Arrow>;
  { d.terminal() } -> std::same_as<typename D::Object>;
  { d.bang(x) } -> std::same_as<typename D::Arrow>;
};

// ----------------------------------------------------------- generic calculus

template <RelationalDoctrine D>
bool equal(const D& d, const typename D::Relation& a, const typename D::Relation& b) {
  return d.leq(a, b) && d.leq(b, a);
}

template <RelationalDoctrine D>
typename D::Relation identity_rel(const D& d, const typename D::Object& x) {
  return d.identity(x);
}

template <RelationalDoctrine D>
typename D::Relation graph(const D& d, const typename D::Arrow& f) {
  auto y = d.arrow_cod(f);
  return d.reindex(f, d.id_arrow(y), d.identity(y));
}

template <RelationalDoctrine D>
typename D::Relation cograph(const D& d, const typename D::Arrow& f) {
  return d.converse(graph(d, f));
}

// E[f,g](b) = gr f° ; b ; gr g
template <RelationalDoctrine D>
typename D::Relation left_adjoint(const D& d, const typename D::Arrow& f, const typename D::Arrow& g,
                                  const typename D::Relation& b) {
  return d.compose(d.compose(cograph(d, f), b), graph(d, g));
}

template <RelationalDoctrine D>
typename D::Relation kernel(const D& d, const typename D::Arrow& f) {
  auto g = graph(d, f);
  return d.compose(g, d.converse(g));
}

template <RelationalDoctrine D>
bool is_functional(const D& d, const typename D::Relation& a) {
  return d.leq(d.compose(d.converse(a), a), d.identity(d.rel_cod(a)));
}

template <RelationalDoctrine D>
bool is_total(const D& d, const typename D::Relation& a) {
  return d.leq(d.identity(d.rel_dom(a)), d.compose(a, d.converse(a)));
}

template <RelationalDoctrine D>
bool is_injective(const D& d, const typename D::Relation& a) {
  return d.leq(d.compose(a, d.converse(a)), d.identity(d.rel_dom(a)));
}

template <RelationalDoctrine D>
bool is_surjective(const D& d, const typename D::Relation& a) {
  return d.leq(d.identity(d.rel_cod(a)), d.compose(d.converse(a), a));
}

template <RelationalDoctrine D>
void require_endo(const D& d, const typename D::Relation& r) {
  if (!d.same_object(d.rel_dom(r), d.rel_cod(r)))
    throw Error(ErrorCode::shape_mismatch, "expected an endo-relation");
}

template <RelationalDoctrine D>
bool is_reflexive(const D& d, const typename D::Relation& r) {
  require_endo(d, r);
  return d.leq(d.identity(d.rel_dom(r)), r);
}

template <RelationalDoctrine D>
bool is_symmetric(const D& d, const typename D::Relation& r) {
  require_endo(d, r);
  return d.leq(d.converse(r), r);
}

template <RelationalDoctrine D>
bool is_transitive(const D& d, const typename D::Relation& r) {
  require_endo(d, r);
  return d.leq(d.compose(r, r), r);
}

template <RelationalDoctrine D>
bool is_equivalence(const D& d, const typename D::Relation& r) {
  return is_reflexive(d, r) && is_symmetric(d, r) && is_transitive(d, r);
}

// Identity on objects is the identity arrow up to same_arrow.
template <RelationalDoctrine D>
bool is_identity_arrow(const D& d, const typename D::Arrow& f) {
  return d.same_object(d.arrow_dom(f), d.arrow_cod(f)) && d.same_arrow(f, d.id_arrow(d.arrow_dom(f)));
}

// Two-sided inverse of f among homs(cod f, dom f), if any.
template <RelationalDoctrine D>
std::vector<typename D::Arrow> inverses(const D& d, const typename D::Arrow& f, std::size_t cap) {
  std::vector<typename D::Arrow> out;
  for (const auto& g : d.homs(d.arrow_cod(f), d.arrow_dom(f), cap))
    if (is_identity_arrow(d, d.then(f, g)) && is_identity_arrow(d, d.then(g, f))) out.push_back(g);
  return out;
}

}  // namespace reldoc
