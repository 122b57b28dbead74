#include "reldoc/powerset.hpp"

#include <bit>

namespace reldoc {

std::size_t subset_index(const std::vector<std::size_t>& elements) {
  std::size_t m = 0;
  for (std::size_t e : elements) m |= std::size_t{1} << e;
  return m;
}

std::vector<std::size_t> subset_members(std::size_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

FinMap direct_image(const FinMap& f, std::size_t cap) {
  FinSet px = powerset_set(f.dom, cap), py = powerset_set(f.cod, cap);
  std::vector<std::size_t> t(px.size());
  for (std::size_t m = 0; m < px.size(); ++m) {
    std::size_t img = 0;
    for (std::size_t x : subset_members(m)) img |= std::size_t{1} << f(x);
    t[m] = img;
  }
  return FinMap(px, py, std::move(t));
}

FinMap singleton_map(const FinSet& x, std::size_t cap) {
  FinSet px = powerset_set(x, cap);
  std::vector<std::size_t> t(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) t[i] = std::size_t{1} << i;
  return FinMap(x, px, std::move(t));
}

FinMap union_map(const FinSet& x, std::size_t cap) {
  FinSet px = powerset_set(x, cap);
  FinSet ppx = powerset_set(px, cap);
  std::vector<std::size_t> t(ppx.size());
  for (std::size_t m = 0; m < ppx.size(); ++m) {
    std::size_t u = 0;
    for (std::size_t a : subset_members(m)) u |= a;
    t[m] = u;
  }
  return FinMap(ppx, px, std::move(t));
}

Value hausdorff_half(const Quantale& q, const FinRel& a, std::size_t A, std::size_t B) {
  Value inf = q.top();
  for (std::size_t x : subset_members(A)) {
    Value sup = q.bottom();
    for (std::size_t y : subset_members(B)) sup = q.join(sup, a.at(x, y));
    inf = q.meet(inf, sup);
  }
  return inf;
}

FinRel hausdorff_relation(const VRel& d, const FinRel& a, std::size_t cap) {
  const Quantale& q = d.quantale();
  FinSet px = powerset_set(a.dom, cap), py = powerset_set(a.cod, cap);
  FinRel conv = d.converse(a);
  FinRel out(px, py, q.bottom());
  for (std::size_t A = 0; A < px.size(); ++A)
    for (std::size_t B = 0; B < py.size(); ++B)
      out.at(A, B) = q.meet(hausdorff_half(q, a, A, B), hausdorff_half(q, conv, B, A));
  return out;
}

Lifting<VRel> hausdorff_lifting(std::shared_ptr<const VRel> d, std::size_t cap) {
  Lifting<VRel> f;
  f.name = "P";
  f.src = d;
  f.tgt = d;
  f.obj_map = [cap](const FinSet& x) { return powerset_set(x, cap); };
  f.arr_map = [cap](const FinMap& g) { return direct_image(g, cap); };
  f.fib_map = [d, cap](const FinRel& a) { return hausdorff_relation(*d, a, cap); };
  f.strict = false;
  return f;
}

Coalgebra<VRel> transition_system(const FinSet& states, const std::vector<std::vector<std::size_t>>& succ,
                                  std::size_t cap) {
  if (succ.size() != states.size())
    throw Error(ErrorCode::shape_mismatch, "successor lists do not match the states");
  std::vector<std::size_t> t;
  for (const auto& s : succ) {
    for (std::size_t j : s)
      if (j >= states.size()) throw Error(ErrorCode::unknown_object, "successor out of range");
    t.push_back(subset_index(s));
  }
  return Coalgebra<VRel>{states, FinMap(states, powerset_set(states, cap), std::move(t))};
}

}  // namespace reldoc
