#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reldoc/doctrine.hpp"

namespace reldoc {

// Finitely presented doctrine: every operation is a lookup table.
//
// Build with add_object / add_arrow / set_* and then call finalize(), which
// fills tables that are forced (identity arrows, reindexing along identity
// pairs) and throws MalformedTable when anything is still missing.
class PresentedDoctrine {
 public:
  using Object = std::size_t;
  struct Arrow {
    std::size_t id = 0;
    bool operator==(const Arrow&) const = default;
  };
  struct Relation {
    std::size_t dom = 0, cod = 0, elem = 0;
    bool operator==(const Relation&) const = default;
  };

  explicit PresentedDoctrine(std::string name = "presented") : name_(std::move(name)) {}

  // Also creates the identity arrow "id_<name>".
  std::size_t add_object(const std::string& name);
  Arrow add_arrow(const std::string& name, std::size_t dom, std::size_t cod);
  // g after f = h
  void set_then(Arrow f, Arrow g, Arrow h);
  void set_fibre(std::size_t x, std::size_t y, std::vector<std::string> elements,
                 const std::vector<std::pair<std::string, std::string>>& leq_pairs);
  void set_identity(std::size_t x, const std::string& elem);
  void set_compose(std::size_t x, std::size_t y, std::size_t z, const std::string& a, const std::string& b,
                   const std::string& c);
  void set_converse(std::size_t x, std::size_t y, const std::string& a, const std::string& b);
  // f : A -> X, g : B -> Y, a in R(X,Y), b in R(A,B)
  void set_reindex(Arrow f, Arrow g, const std::string& a, const std::string& b);
  void finalize();

  const std::string& name() const { return name_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t object(const std::string& name) const;
  Arrow arrow(const std::string& name) const;
  const std::string& object_name(std::size_t x) const { return objects_.at(x); }
  const std::string& arrow_name(Arrow f) const { return arrows_.at(f.id).name; }
  Relation element(std::size_t x, std::size_t y, const std::string& name) const;
  const std::string& element_name(const Relation& a) const;

  Provenance provenance() const { return Provenance::presented; }
  std::size_t rel_dom(const Relation& a) const { return a.dom; }
  std::size_t rel_cod(const Relation& a) const { return a.cod; }
  std::size_t arrow_dom(Arrow f) const { return arrows_.at(f.id).dom; }
  std::size_t arrow_cod(Arrow f) const { return arrows_.at(f.id).cod; }
  bool same_object(std::size_t x, std::size_t y) const { return x == y; }

  Relation identity(std::size_t x) const;
  Relation compose(const Relation& a, const Relation& b) const;
  Relation converse(const Relation& a) const;
  Relation reindex(Arrow f, Arrow g, const Relation& a) const;
  bool leq(const Relation& a, const Relation& b) const;

  Arrow id_arrow(std::size_t x) const { return Arrow{identities_.at(x)}; }
  Arrow then(Arrow f, Arrow g) const;
  bool same_arrow(Arrow f, Arrow g) const { return f == g; }
  std::vector<Arrow> homs(std::size_t x, std::size_t y, std::size_t cap) const;
  std::vector<Relation> fibre(std::size_t x, std::size_t y, std::size_t cap) const;

  // Lattice operations derived from the fibre order.
  Relation meet(const Relation& a, const Relation& b) const;
  Relation join(const Relation& a, const Relation& b) const;
  Relation top(std::size_t x, std::size_t y) const;
  Relation bottom(std::size_t x, std::size_t y) const;

  // Products exist only for the one-object, one-arrow base (terminal
  // category); otherwise these throw NoProducts.
  Product<std::size_t, Arrow> product(std::size_t x, std::size_t y) const;
  Arrow pair(Arrow f, Arrow g, std::size_t p) const;
  std::size_t terminal() const;
  Arrow bang(std::size_t x) const;

  Json describe(std::size_t x) const { return objects_.at(x); }
  Json describe(Arrow f) const { return arrows_.at(f.id).name; }
  Json describe(const Relation& a) const { return element_name(a); }

 private:
  struct ArrowSpec {
    std::string name;
    std::size_t dom, cod;
  };
  struct Fibre {
    std::vector<std::string> elements;
    std::vector<char> leq;  // n*n
    std::vector<long> meet, join;
    long top = -1, bottom = -1;
  };
  using Key2 = std::pair<std::size_t, std::size_t>;
  using Key3 = std::tuple<std::size_t, std::size_t, std::size_t>;

  const Fibre& fibre_at(std::size_t x, std::size_t y) const;
  std::size_t elem_index(std::size_t x, std::size_t y, const std::string& name) const;
  void require_terminal_base() const;

  std::string name_;
  std::vector<std::string> objects_;
  std::vector<ArrowSpec> arrows_;
  std::vector<std::size_t> identities_;
  std::map<Key2, std::size_t> then_;
  std::map<Key2, Fibre> fibres_;
  std::map<std::size_t, std::size_t> identity_elem_;
  std::map<std::pair<Key3, Key2>, std::size_t> compose_;  // ((x,y,z),(a,b)) -> c
  std::map<std::pair<Key2, std::size_t>, std::size_t> converse_;
  std::map<std::pair<Key2, std::size_t>, std::size_t> reindex_;  // ((f,g),a) -> b
};

// One object, one arrow, fibre {00,01,10,11} ordered componentwise,
// composition = meet, d = 11, converse swaps 01 and 10.
PresentedDoctrine build_H_counterexample();

}  // namespace reldoc
