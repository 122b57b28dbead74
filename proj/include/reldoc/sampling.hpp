#pragma once

#include <cstddef>
#include <vector>

#include "reldoc/finset.hpp"
#include "reldoc/probes.hpp"
#include "reldoc/vrel.hpp"

namespace reldoc {

// Random value of the quantale. Lawvere values mix 0, inf, small integers
// and uniform reals so that ties and absorption both occur.
Value random_value(const Quantale& q, Rng& rng);
FinRel random_relation(const VRel& d, const FinSet& x, const FinSet& y, Rng& rng);
FinMap random_map(const FinSet& x, const FinSet& y, Rng& rng);

// Pseudometric (reflexive, symmetric, transitive Lawvere relation) as the
// shortest-path closure of random symmetric edge weights; weights include 0
// and inf, so points may coincide or sit in separate components.
FinRel random_pseudometric(const VRel& lawvere, const FinSet& x, Rng& rng);
// Boolean equivalence relation from a random partition.
FinRel random_equivalence(const VRel& boolean, const FinSet& x, Rng& rng);
// Equivalence relation for any quantale: closure of a random symmetric
// relation with unit on the diagonal.
FinRel random_equivalence_any(const VRel& d, const FinSet& x, Rng& rng);

// Smallest transitive relation above r (r assumed reflexive).
FinRel transitive_closure(const VRel& d, FinRel r);

}  // namespace reldoc
