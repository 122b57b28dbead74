#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reldoc/doctrine.hpp"

namespace reldoc {

// Finite category given by tables.
class SmallCategory {
 public:
  struct ArrowSpec {
    std::string name;
    std::size_t dom, cod;
  };

  // Also creates the identity arrow "id_<name>".
  std::size_t add_object(const std::string& name);
  std::size_t add_arrow(const std::string& name, std::size_t dom, std::size_t cod);
  void set_then(std::size_t f, std::size_t g, std::size_t h);  // g after f = h
  // Fills identity composites; throws MalformedTable when a composite is
  // missing or composition is not associative.
  void finalize();

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(std::size_t x) const { return objects_.at(x); }
  const ArrowSpec& arrow(std::size_t f) const { return arrows_.at(f); }
  std::size_t identity(std::size_t x) const { return identities_.at(x); }
  std::size_t then(std::size_t f, std::size_t g) const;

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowSpec> arrows_;
  std::vector<std::size_t> identities_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> then_;
};

// Doctrine R(F-,F-) over a small category along a functor F into the base
// of D.
template <RelationalDoctrine D>
class ChangeOfBase {
 public:
  using Object = std::size_t;
  struct Arrow {
    std::size_t id = 0;
    bool operator==(const Arrow&) const = default;
  };
  struct Relation {
    std::size_t dom = 0, cod = 0;
    typename D::Relation rel;
  };

  ChangeOfBase(D base, SmallCategory src, std::vector<typename D::Object> on_objects,
               std::vector<typename D::Arrow> on_arrows)
      : base_(std::move(base)), src_(std::move(src)), fo_(std::move(on_objects)), fa_(std::move(on_arrows)) {
    if (fo_.size() != src_.object_count() || fa_.size() != src_.arrow_count())
      throw Error(ErrorCode::non_functorial, "functor tables do not cover the source category");
    for (std::size_t f = 0; f < fa_.size(); ++f) {
      const auto& s = src_.arrow(f);
      if (!base_.same_object(base_.arrow_dom(fa_[f]), fo_[s.dom]) ||
          !base_.same_object(base_.arrow_cod(fa_[f]), fo_[s.cod]))
        throw Error(ErrorCode::non_functorial, "image of " + s.name + " has the wrong endpoints");
    }
    for (std::size_t x = 0; x < fo_.size(); ++x)
      if (!base_.same_arrow(fa_[src_.identity(x)], base_.id_arrow(fo_[x])))
        throw Error(ErrorCode::non_functorial, "identity on " + src_.object_name(x) + " not preserved");
    for (std::size_t f = 0; f < fa_.size(); ++f)
      for (std::size_t g = 0; g < fa_.size(); ++g)
        if (src_.arrow(f).cod == src_.arrow(g).dom &&
            !base_.same_arrow(fa_[src_.then(f, g)], base_.then(fa_[f], fa_[g])))
          throw Error(ErrorCode::non_functorial,
                      "composite of " + src_.arrow(f).name + " and " + src_.arrow(g).name + " not preserved");
  }

  const D& base() const { return base_; }
  const SmallCategory& source() const { return src_; }
  const typename D::Object& image(std::size_t x) const { return fo_.at(x); }
  Provenance provenance() const { return Provenance::change_of_base; }

  Relation lift(std::size_t x, std::size_t y, typename D::Relation r) const {
    if (!base_.same_object(base_.rel_dom(r), fo_.at(x)) || !base_.same_object(base_.rel_cod(r), fo_.at(y)))
      throw Error(ErrorCode::shape_mismatch, "relation does not live over the image objects");
    return Relation{x, y, std::move(r)};
  }

  std::size_t rel_dom(const Relation& a) const { return a.dom; }
  std::size_t rel_cod(const Relation& a) const { return a.cod; }
  std::size_t arrow_dom(Arrow f) const { return src_.arrow(f.id).dom; }
  std::size_t arrow_cod(Arrow f) const { return src_.arrow(f.id).cod; }
  bool same_object(std::size_t x, std::size_t y) const { return x == y; }

  Relation identity(std::size_t x) const { return {x, x, base_.identity(fo_.at(x))}; }
  Relation compose(const Relation& a, const Relation& b) const {
    if (a.cod != b.dom) throw Error(ErrorCode::shape_mismatch, "relations are not composable");
    return {a.dom, b.cod, base_.compose(a.rel, b.rel)};
  }
  Relation converse(const Relation& a) const { return {a.cod, a.dom, base_.converse(a.rel)}; }
  Relation reindex(Arrow f, Arrow g, const Relation& a) const {
    if (arrow_cod(f) != a.dom || arrow_cod(g) != a.cod)
      throw Error(ErrorCode::shape_mismatch, "reindexing arrows do not match the fibre");
    return {arrow_dom(f), arrow_dom(g), base_.reindex(fa_[f.id], fa_[g.id], a.rel)};
  }
  bool leq(const Relation& a, const Relation& b) const {
    if (a.dom != b.dom || a.cod != b.cod) throw Error(ErrorCode::shape_mismatch, "relations live in different fibres");
    return base_.leq(a.rel, b.rel);
  }

  Arrow id_arrow(std::size_t x) const { return Arrow{src_.identity(x)}; }
  Arrow then(Arrow f, Arrow g) const { return Arrow{src_.then(f.id, g.id)}; }
  bool same_arrow(Arrow f, Arrow g) const { return f == g; }
  std::vector<Arrow> homs(std::size_t x, std::size_t y, std::size_t cap) const {
    std::vector<Arrow> out;
    for (std::size_t f = 0; f < src_.arrow_count(); ++f)
      if (src_.arrow(f).dom == x && src_.arrow(f).cod == y) out.push_back(Arrow{f});
    if (out.size() > cap) throw Error(ErrorCode::cap_exceeded, "hom-set exceeds cap");
    return out;
  }
  std::vector<Relation> fibre(std::size_t x, std::size_t y, std::size_t cap) const
    requires FiniteFibres<D>
  {
    std::vector<Relation> out;
    for (auto& r : base_.fibre(fo_.at(x), fo_.at(y), cap)) out.push_back({x, y, std::move(r)});
    return out;
  }

  Json describe(std::size_t x) const { return src_.object_name(x); }
  Json describe(Arrow f) const { return src_.arrow(f.id).name; }
  Json describe(const Relation& a) const { return base_.describe(a.rel); }

 private:
  D base_;
  SmallCategory src_;
  std::vector<typename D::Object> fo_;
  std::vector<typename D::Arrow> fa_;
};

}  // namespace reldoc
