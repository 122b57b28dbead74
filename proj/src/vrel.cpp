#include "reldoc/vrel.hpp"

#include <algorithm>

#include "reldoc/error.hpp"

namespace reldoc {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::concrete: return "concrete";
    case Provenance::presented: return "presented";
    case Provenance::qr: return "qr";
    case Provenance::ec: return "ec";
    case Provenance::change_of_base: return "change-of-base";
    case Provenance::em: return "em";
    case Provenance::rmap: return "rmap";
  }
  return "unknown";
}

namespace {

void require_composable(const FinRel& a, const FinRel& b) {
  if (a.cod != b.dom)
    throw Error(ErrorCode::shape_mismatch, "cod " + a.cod.name() + " does not match dom " + b.dom.name());
}

FinRel transpose(const FinRel& a) {
  FinRel out(a.cod, a.dom, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

FinRel precompose(const FinMap& f, const FinMap& g, const FinRel& a) {
  if (f.cod != a.dom || g.cod != a.cod)
    throw Error(ErrorCode::shape_mismatch, "reindexing maps do not land in " + a.dom.name() + " x " + a.cod.name());
  FinRel out(f.dom, g.dom, 0.0);
  for (std::size_t i = 0; i < f.dom.size(); ++i)
    for (std::size_t j = 0; j < g.dom.size(); ++j) out.at(i, j) = a.at(f(i), g(j));
  return out;
}

}  // namespace

FinRel VRel::identity(const FinSet& x) const {
  FinRel out(x, x, q_.bottom());
  for (std::size_t i = 0; i < x.size(); ++i) out.at(i, i) = q_.unit();
  return out;
}

FinRel VRel::compose(const FinRel& a, const FinRel& b) const {
  require_composable(a, b);
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  FinRel out(a.dom, b.cod, q_.bottom());
  if (q_.kind() == Quantale::Kind::lawvere) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < p; ++k) {
        Value acc = kInf;
        for (std::size_t j = 0; j < m; ++j) acc = std::min(acc, a.at(i, j) + b.at(j, k));
        out.at(i, k) = acc;
      }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) {
      Value acc = q_.bottom();
      for (std::size_t j = 0; j < m; ++j) acc = q_.join(acc, q_.tensor(a.at(i, j), b.at(j, k)));
      out.at(i, k) = acc;
    }
  return out;
}

FinRel VRel::converse(const FinRel& a) const { return transpose(a); }

FinRel VRel::reindex(const FinMap& f, const FinMap& g, const FinRel& a) const { return precompose(f, g, a); }

void VRel::require_shape(const FinRel& a, const FinRel& b) const {
  if (a.dom != b.dom || a.cod != b.cod) throw Error(ErrorCode::shape_mismatch, "relations live in different fibres");
}

bool VRel::leq(const FinRel& a, const FinRel& b) const {
  require_shape(a, b);
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!q_.leq(a.entries[i], b.entries[i])) return false;
  return true;
}

FinRel VRel::meet(const FinRel& a, const FinRel& b) const {
  require_shape(a, b);
  FinRel out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = q_.meet(a.entries[i], b.entries[i]);
  return out;
}

FinRel VRel::join(const FinRel& a, const FinRel& b) const {
  require_shape(a, b);
  FinRel out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = q_.join(a.entries[i], b.entries[i]);
  return out;
}

std::vector<FinRel> VRel::fibre(const FinSet& x, const FinSet& y, std::size_t cap) const {
  if (!q_.finite()) throw Error(ErrorCode::precondition_failed, "fibres over " + q_.name() + " are not finite");
  const std::size_t cells = x.size() * y.size();
  const std::size_t total = count_maps(cells, q_.size());
  if (total > cap) throw Error(ErrorCode::cap_exceeded, "fibre " + x.name() + "," + y.name() + " too large");
  std::vector<FinRel> out;
  out.reserve(total);
  std::vector<std::size_t> digits(cells, 0);
  while (true) {
    std::vector<Value> e(cells);
    for (std::size_t i = 0; i < cells; ++i) e[i] = static_cast<Value>(digits[i]);
    out.emplace_back(x, y, std::move(e));
    std::size_t k = cells;
    bool done = true;
    while (k > 0) {
      --k;
      if (++digits[k] < q_.size()) {
        done = false;
        break;
      }
      digits[k] = 0;
    }
    if (done) break;
  }
  return out;
}

Product<FinSet, FinMap> VRel::product(const FinSet& x, const FinSet& y) const {
  FinSet p = product_set(x, y);
  std::vector<std::size_t> t1(p.size()), t2(p.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      t1[i * y.size() + j] = i;
      t2[i * y.size() + j] = j;
    }
  return {p, FinMap(p, x, std::move(t1)), FinMap(p, y, std::move(t2))};
}

FinMap VRel::pair(const FinMap& f, const FinMap& g, const FinSet& p) const {
  if (f.dom != g.dom) throw Error(ErrorCode::shape_mismatch, "pairing needs a common domain");
  if (p.size() != f.cod.size() * g.cod.size()) throw Error(ErrorCode::shape_mismatch, "not the product object");
  std::vector<std::size_t> t(f.dom.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f(i) * g.cod.size() + g(i);
  return FinMap(f.dom, p, std::move(t));
}

FinRel VRel::from_json(const FinSet& x, const FinSet& y, const Json& rows) const {
  if (!rows.is_array() || rows.size() != x.size())
    throw Error(ErrorCode::shape_mismatch, "matrix must have " + std::to_string(x.size()) + " rows");
  std::vector<Value> e;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != y.size())
      throw Error(ErrorCode::shape_mismatch, "matrix rows must have " + std::to_string(y.size()) + " entries");
    for (const auto& v : row) e.push_back(value_from_json(q_, v));
  }
  return FinRel(x, y, std::move(e));
}

// ------------------------------------------------------------------- Mat

FinRel Mat::identity(const FinSet& x) const {
  FinRel out(x, x, s_.zero());
  for (std::size_t i = 0; i < x.size(); ++i) out.at(i, i) = s_.one();
  return out;
}

FinRel Mat::compose(const FinRel& a, const FinRel& b) const {
  require_composable(a, b);
  FinRel out(a.dom, b.cod, s_.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      Value acc = s_.zero();
      for (std::size_t j = 0; j < a.cols(); ++j) acc = s_.add(acc, s_.mul(a.at(i, j), b.at(j, k)));
      out.at(i, k) = acc;
    }
  return out;
}

FinRel Mat::converse(const FinRel& a) const { return transpose(a); }

FinRel Mat::reindex(const FinMap& f, const FinMap& g, const FinRel& a) const { return precompose(f, g, a); }

bool Mat::leq(const FinRel& a, const FinRel& b) const {
  if (a.dom != b.dom || a.cod != b.cod) throw Error(ErrorCode::shape_mismatch, "relations live in different fibres");
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (!s_.leq(a.entries[i], b.entries[i])) return false;
  return true;
}

Json Mat::describe(const FinRel& a) const {
  Json m = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (s_.kind() == Semiring::Kind::finite)
        row.push_back(s_.format(a.at(i, j)));
      else
        row.push_back(a.at(i, j));
    }
    m.push_back(std::move(row));
  }
  return Json{{"dom", a.dom.name()}, {"cod", a.cod.name()}, {"matrix", m}};
}

}  // namespace reldoc
