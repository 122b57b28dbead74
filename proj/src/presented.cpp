#include "reldoc/presented.hpp"

#include <algorithm>

#include "reldoc/error.hpp"

namespace reldoc {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::malformed_table, what); }

}  // namespace

std::size_t PresentedDoctrine::add_object(const std::string& name) {
  if (std::find(objects_.begin(), objects_.end(), name) != objects_.end()) malformed("duplicate object " + name);
  objects_.push_back(name);
  const std::size_t x = objects_.size() - 1;
  arrows_.push_back({"id_" + name, x, x});
  identities_.push_back(arrows_.size() - 1);
  return x;
}

PresentedDoctrine::Arrow PresentedDoctrine::add_arrow(const std::string& name, std::size_t dom, std::size_t cod) {
  if (dom >= objects_.size() || cod >= objects_.size()) malformed("arrow " + name + " has unknown endpoints");
  for (const auto& a : arrows_)
    if (a.name == name) malformed("duplicate arrow " + name);
  arrows_.push_back({name, dom, cod});
  return Arrow{arrows_.size() - 1};
}

void PresentedDoctrine::set_then(Arrow f, Arrow g, Arrow h) {
  if (arrow_cod(f) != arrow_dom(g) || arrow_dom(h) != arrow_dom(f) || arrow_cod(h) != arrow_cod(g))
    malformed("composite " + arrow_name(h) + " has the wrong type");
  then_[{f.id, g.id}] = h.id;
}

void PresentedDoctrine::set_fibre(std::size_t x, std::size_t y, std::vector<std::string> elements,
                                  const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  if (elements.empty()) malformed("empty fibre");
  Fibre f;
  const std::size_t n = elements.size();
  f.elements = std::move(elements);
  f.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) f.leq[i * n + i] = 1;
  auto idx = [&](const std::string& s) {
    auto it = std::find(f.elements.begin(), f.elements.end(), s);
    if (it == f.elements.end()) malformed("unknown fibre element " + s);
    return static_cast<std::size_t>(it - f.elements.begin());
  };
  for (const auto& [a, b] : leq_pairs) f.leq[idx(a) * n + idx(b)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (f.leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (f.leq[k * n + j]) f.leq[i * n + j] = 1;
  auto le = [&](std::size_t a, std::size_t b) { return f.leq[a * n + b] != 0; };
  auto extreme = [&](bool least, auto&& ok) -> long {
    for (std::size_t c = 0; c < n; ++c) {
      if (!ok(c)) continue;
      bool best = true;
      for (std::size_t d = 0; d < n && best; ++d)
        if (ok(d) && !(least ? le(c, d) : le(d, c))) best = false;
      if (best) return static_cast<long>(c);
    }
    return -1;
  };
  f.meet.assign(n * n, -1);
  f.join.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      f.join[a * n + b] = extreme(true, [&](std::size_t c) { return le(a, c) && le(b, c); });
      f.meet[a * n + b] = extreme(false, [&](std::size_t c) { return le(c, a) && le(c, b); });
    }
  f.bottom = extreme(true, [](std::size_t) { return true; });
  f.top = extreme(false, [](std::size_t) { return true; });
  fibres_[{x, y}] = std::move(f);
}

void PresentedDoctrine::set_identity(std::size_t x, const std::string& elem) {
  identity_elem_[x] = elem_index(x, x, elem);
}

void PresentedDoctrine::set_compose(std::size_t x, std::size_t y, std::size_t z, const std::string& a,
                                    const std::string& b, const std::string& c) {
  compose_[{{x, y, z}, {elem_index(x, y, a), elem_index(y, z, b)}}] = elem_index(x, z, c);
}

void PresentedDoctrine::set_converse(std::size_t x, std::size_t y, const std::string& a, const std::string& b) {
  converse_[{{x, y}, elem_index(x, y, a)}] = elem_index(y, x, b);
}

void PresentedDoctrine::set_reindex(Arrow f, Arrow g, const std::string& a, const std::string& b) {
  reindex_[{{f.id, g.id}, elem_index(arrow_cod(f), arrow_cod(g), a)}] = elem_index(arrow_dom(f), arrow_dom(g), b);
}

void PresentedDoctrine::finalize() {
  const std::size_t no = objects_.size(), na = arrows_.size();
  for (std::size_t f = 0; f < na; ++f) {
    then_.try_emplace({identities_[arrows_[f].dom], f}, f);
    then_.try_emplace({f, identities_[arrows_[f].cod]}, f);
  }
  for (std::size_t f = 0; f < na; ++f)
    for (std::size_t g = 0; g < na; ++g)
      if (arrows_[f].cod == arrows_[g].dom && !then_.count({f, g}))
        malformed("missing composite of " + arrows_[f].name + " and " + arrows_[g].name);
  for (std::size_t f = 0; f < na; ++f)
    for (std::size_t g = 0; g < na; ++g)
      for (std::size_t h = 0; h < na; ++h)
        if (arrows_[f].cod == arrows_[g].dom && arrows_[g].cod == arrows_[h].dom &&
            then_.at({then_.at({f, g}), h}) != then_.at({f, then_.at({g, h})}))
          malformed("base composition not associative at " + arrows_[f].name + "," + arrows_[g].name + "," +
                    arrows_[h].name);
  for (std::size_t x = 0; x < no; ++x) {
    for (std::size_t y = 0; y < no; ++y)
      if (!fibres_.count({x, y})) malformed("missing fibre " + objects_[x] + "," + objects_[y]);
    if (!identity_elem_.count(x)) malformed("missing identity relation on " + objects_[x]);
  }
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y) {
      const std::size_t nxy = fibres_.at({x, y}).elements.size();
      for (std::size_t a = 0; a < nxy; ++a)
        if (!converse_.count({{x, y}, a})) malformed("missing converse in fibre " + objects_[x] + "," + objects_[y]);
      for (std::size_t z = 0; z < no; ++z) {
        const std::size_t nyz = fibres_.at({y, z}).elements.size();
        for (std::size_t a = 0; a < nxy; ++a)
          for (std::size_t b = 0; b < nyz; ++b)
            if (!compose_.count({{x, y, z}, {a, b}}))
              malformed("missing composite in " + objects_[x] + "," + objects_[y] + "," + objects_[z]);
      }
    }
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y) {
      const std::size_t n = fibres_.at({x, y}).elements.size();
      for (std::size_t a = 0; a < n; ++a) reindex_.try_emplace({{identities_[x], identities_[y]}, a}, a);
    }
  for (std::size_t f = 0; f < na; ++f)
    for (std::size_t g = 0; g < na; ++g) {
      const std::size_t n = fibres_.at({arrows_[f].cod, arrows_[g].cod}).elements.size();
      for (std::size_t a = 0; a < n; ++a)
        if (!reindex_.count({{f, g}, a}))
          malformed("missing reindexing along " + arrows_[f].name + "," + arrows_[g].name);
    }
}

std::size_t PresentedDoctrine::object(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) throw Error(ErrorCode::unknown_object, "no object " + name);
  return static_cast<std::size_t>(it - objects_.begin());
}

PresentedDoctrine::Arrow PresentedDoctrine::arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return Arrow{i};
  throw Error(ErrorCode::unknown_object, "no arrow " + name);
}

const PresentedDoctrine::Fibre& PresentedDoctrine::fibre_at(std::size_t x, std::size_t y) const {
  auto it = fibres_.find({x, y});
  if (it == fibres_.end()) throw Error(ErrorCode::unknown_object, "no fibre over the given objects");
  return it->second;
}

std::size_t PresentedDoctrine::elem_index(std::size_t x, std::size_t y, const std::string& name) const {
  const auto& el = fibre_at(x, y).elements;
  auto it = std::find(el.begin(), el.end(), name);
  if (it == el.end()) throw Error(ErrorCode::unknown_object, "no relation " + name + " in fibre");
  return static_cast<std::size_t>(it - el.begin());
}

PresentedDoctrine::Relation PresentedDoctrine::element(std::size_t x, std::size_t y, const std::string& name) const {
  return Relation{x, y, elem_index(x, y, name)};
}

const std::string& PresentedDoctrine::element_name(const Relation& a) const {
  return fibre_at(a.dom, a.cod).elements.at(a.elem);
}

PresentedDoctrine::Relation PresentedDoctrine::identity(std::size_t x) const {
  auto it = identity_elem_.find(x);
  if (it == identity_elem_.end()) throw Error(ErrorCode::unknown_object, "no identity relation");
  return Relation{x, x, it->second};
}

PresentedDoctrine::Relation PresentedDoctrine::compose(const Relation& a, const Relation& b) const {
  if (a.cod != b.dom) throw Error(ErrorCode::shape_mismatch, "relations are not composable");
  return Relation{a.dom, b.cod, compose_.at({{a.dom, a.cod, b.cod}, {a.elem, b.elem}})};
}

PresentedDoctrine::Relation PresentedDoctrine::converse(const Relation& a) const {
  return Relation{a.cod, a.dom, converse_.at({{a.dom, a.cod}, a.elem})};
}

PresentedDoctrine::Relation PresentedDoctrine::reindex(Arrow f, Arrow g, const Relation& a) const {
  if (arrow_cod(f) != a.dom || arrow_cod(g) != a.cod)
    throw Error(ErrorCode::shape_mismatch, "reindexing arrows do not match the fibre");
  return Relation{arrow_dom(f), arrow_dom(g), reindex_.at({{f.id, g.id}, a.elem})};
}

bool PresentedDoctrine::leq(const Relation& a, const Relation& b) const {
  if (a.dom != b.dom || a.cod != b.cod) throw Error(ErrorCode::shape_mismatch, "relations live in different fibres");
  const auto& f = fibre_at(a.dom, a.cod);
  return f.leq[a.elem * f.elements.size() + b.elem] != 0;
}

PresentedDoctrine::Arrow PresentedDoctrine::then(Arrow f, Arrow g) const {
  auto it = then_.find({f.id, g.id});
  if (it == then_.end()) throw Error(ErrorCode::shape_mismatch, "arrows are not composable");
  return Arrow{it->second};
}

std::vector<PresentedDoctrine::Arrow> PresentedDoctrine::homs(std::size_t x, std::size_t y, std::size_t cap) const {
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].dom == x && arrows_[i].cod == y) out.push_back(Arrow{i});
  if (out.size() > cap) throw Error(ErrorCode::cap_exceeded, "hom-set exceeds cap");
  return out;
}

std::vector<PresentedDoctrine::Relation> PresentedDoctrine::fibre(std::size_t x, std::size_t y,
                                                                  std::size_t cap) const {
  const auto& f = fibre_at(x, y);
  if (f.elements.size() > cap) throw Error(ErrorCode::cap_exceeded, "fibre exceeds cap");
  std::vector<Relation> out;
  for (std::size_t i = 0; i < f.elements.size(); ++i) out.push_back(Relation{x, y, i});
  return out;
}

PresentedDoctrine::Relation PresentedDoctrine::meet(const Relation& a, const Relation& b) const {
  if (a.dom != b.dom || a.cod != b.cod) throw Error(ErrorCode::shape_mismatch, "relations live in different fibres");
  const auto& f = fibre_at(a.dom, a.cod);
  long m = f.meet[a.elem * f.elements.size() + b.elem];
  if (m < 0) throw Error(ErrorCode::precondition_failed, "fibre has no meet for these elements");
  return Relation{a.dom, a.cod, static_cast<std::size_t>(m)};
}

PresentedDoctrine::Relation PresentedDoctrine::join(const Relation& a, const Relation& b) const {
  if (a.dom != b.dom || a.cod != b.cod) throw Error(ErrorCode::shape_mismatch, "relations live in different fibres");
  const auto& f = fibre_at(a.dom, a.cod);
  long j = f.join[a.elem * f.elements.size() + b.elem];
  if (j < 0) throw Error(ErrorCode::precondition_failed, "fibre has no join for these elements");
  return Relation{a.dom, a.cod, static_cast<std::size_t>(j)};
}

PresentedDoctrine::Relation PresentedDoctrine::top(std::size_t x, std::size_t y) const {
  const auto& f = fibre_at(x, y);
  if (f.top < 0) throw Error(ErrorCode::precondition_failed, "fibre has no top");
  return Relation{x, y, static_cast<std::size_t>(f.top)};
}

PresentedDoctrine::Relation PresentedDoctrine::bottom(std::size_t x, std::size_t y) const {
  const auto& f = fibre_at(x, y);
  if (f.bottom < 0) throw Error(ErrorCode::precondition_failed, "fibre has no bottom");
  return Relation{x, y, static_cast<std::size_t>(f.bottom)};
}

void PresentedDoctrine::require_terminal_base() const {
  if (objects_.size() != 1 || arrows_.size() != 1)
    throw Error(ErrorCode::no_products, name_ + " does not declare finite products");
}

Product<std::size_t, PresentedDoctrine::Arrow> PresentedDoctrine::product(std::size_t, std::size_t) const {
  require_terminal_base();
  return {0, Arrow{0}, Arrow{0}};
}

PresentedDoctrine::Arrow PresentedDoctrine::pair(Arrow, Arrow, std::size_t) const {
  require_terminal_base();
  return Arrow{0};
}

std::size_t PresentedDoctrine::terminal() const {
  require_terminal_base();
  return 0;
}

PresentedDoctrine::Arrow PresentedDoctrine::bang(std::size_t) const {
  require_terminal_base();
  return Arrow{0};
}

PresentedDoctrine build_H_counterexample() {
  PresentedDoctrine h("H");
  const std::size_t star = h.add_object("*");
  const std::vector<std::string> el = {"00", "01", "10", "11"};
  h.set_fibre(star, star, el, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
  h.set_identity(star, "11");
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) h.set_compose(star, star, star, el[a], el[b], el[a & b]);
  h.set_converse(star, star, "00", "00");
  h.set_converse(star, star, "01", "10");
  h.set_converse(star, star, "10", "01");
  h.set_converse(star, star, "11", "11");
  h.finalize();
  return h;
}

}  // namespace reldoc
