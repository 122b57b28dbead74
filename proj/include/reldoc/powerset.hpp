#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "reldoc/lifting.hpp"
#include "reldoc/vrel.hpp"

namespace reldoc {

constexpr std::size_t kPowersetCap = 10;

// Subset index (bit i <-> element i) of the given element indices.
std::size_t subset_index(const std::vector<std::size_t>& elements);
std::vector<std::size_t> subset_members(std::size_t mask);

// P f : P X -> P Y
FinMap direct_image(const FinMap& f, std::size_t cap = kPowersetCap);
// x -> {x}
FinMap singleton_map(const FinSet& x, std::size_t cap = kPowersetCap);
// P P X -> P X by union. Needs |P X| <= cap as well.
FinMap union_map(const FinSet& x, std::size_t cap = kPowersetCap);

// h(A,B) = meet over x in A of join over y in B of a(x,y)
Value hausdorff_half(const Quantale& q, const FinRel& a, std::size_t A, std::size_t B);
// P(a)(A,B) = h_a(A,B) meet h_{a°}(B,A)
FinRel hausdorff_relation(const VRel& d, const FinRel& a, std::size_t cap = kPowersetCap);

// Powerset functor with the Hausdorff / Egli-Milner fibre map.
Lifting<VRel> hausdorff_lifting(std::shared_ptr<const VRel> d, std::size_t cap = kPowersetCap);

// Finite transition system as a P-coalgebra; succ[i] lists successor indices.
Coalgebra<VRel> transition_system(const FinSet& states, const std::vector<std::vector<std::size_t>>& succ,
                                  std::size_t cap = kPowersetCap);

}  // namespace reldoc
