#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "reldoc/doctrine.hpp"

namespace reldoc {

using Rng = std::mt19937_64;

// Visits index tuples over the given radices: the full product when it has
// at most `budget` elements, otherwise `budget` uniformly drawn tuples.
// Returns true when the visit was exhaustive.
bool for_each_tuple(const std::vector<std::size_t>& radices, std::size_t budget, Rng& rng,
                    const std::function<void(const std::vector<std::size_t>&)>& fn);

// All n^k tuples over {0..n-1}.
std::vector<std::vector<std::size_t>> object_tuples(std::size_t n, std::size_t k);

// Objects of interest plus, per ordered pair of object indices, the
// relations and arrows the checkers quantify over.
template <RelationalDoctrine D>
struct ProbeSet {
  using Object = typename D::Object;
  using Arrow = typename D::Arrow;
  using Relation = typename D::Relation;

  std::vector<Object> objects;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Relation>> relations;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Arrow>> arrows;
  // true when every relation list is the whole fibre
  bool fibres_complete = false;
  // cases per law, spread evenly over object tuples
  std::size_t law_budget = 1u << 20;
  std::uint64_t seed = 0;

  const std::vector<Relation>& rels(std::size_t i, std::size_t j) const { return relations.at({i, j}); }
  const std::vector<Arrow>& arrs(std::size_t i, std::size_t j) const { return arrows.at({i, j}); }
  std::size_t size() const { return objects.size(); }
};

template <RelationalDoctrine D>
void fill_arrows(const D& d, ProbeSet<D>& p, std::size_t hom_cap) {
  for (std::size_t i = 0; i < p.objects.size(); ++i)
    for (std::size_t j = 0; j < p.objects.size(); ++j) p.arrows[{i, j}] = d.homs(p.objects[i], p.objects[j], hom_cap);
}

// Whole fibres and whole hom-sets.
template <FiniteFibres D>
ProbeSet<D> exhaustive_probes(const D& d, std::vector<typename D::Object> objects,
                              std::size_t hom_cap = kDefaultHomCap, std::size_t fibre_cap = 1u << 20) {
  ProbeSet<D> p;
  p.objects = std::move(objects);
  for (std::size_t i = 0; i < p.objects.size(); ++i)
    for (std::size_t j = 0; j < p.objects.size(); ++j) p.relations[{i, j}] = d.fibre(p.objects[i], p.objects[j], fibre_cap);
  fill_arrows(d, p, hom_cap);
  p.fibres_complete = true;
  return p;
}

// `per_pair` relations per fibre drawn by `sample`, plus the distinguished
// relations identity (on endo-fibres) so unit laws always see them.
template <RelationalDoctrine D>
ProbeSet<D> sampled_probes(
    const D& d, std::vector<typename D::Object> objects, std::size_t per_pair,
    const std::function<typename D::Relation(const typename D::Object&, const typename D::Object&, Rng&)>& sample,
    std::uint64_t seed, std::size_t hom_cap = kDefaultHomCap) {
  ProbeSet<D> p;
  p.objects = std::move(objects);
  p.seed = seed;
  Rng rng(seed);
  for (std::size_t i = 0; i < p.objects.size(); ++i)
    for (std::size_t j = 0; j < p.objects.size(); ++j) {
      auto& v = p.relations[{i, j}];
      if (i == j) v.push_back(d.identity(p.objects[i]));
      while (v.size() < per_pair) v.push_back(sample(p.objects[i], p.objects[j], rng));
    }
  fill_arrows(d, p, hom_cap);
  return p;
}

// Runs `body` for every object tuple of arity k and every element tuple
// described by `radices(objs)`, spreading the check's budget over object
// tuples. `body` returns a witness on failure.
template <class Radices, class Body>
void run_law(LawCheck& check, std::size_t n_objects, std::size_t k, std::size_t budget, Rng& rng,
             Radices&& radices, Body&& body) {
  const auto tuples = object_tuples(n_objects, k);
  if (tuples.empty()) return;
  const std::size_t per = std::max<std::size_t>(1, budget / tuples.size());
  for (const auto& objs : tuples) {
    std::vector<std::size_t> r = radices(objs);
    bool full = for_each_tuple(r, per, rng, [&](const std::vector<std::size_t>& ix) {
      std::optional<Json> w = body(objs, ix);
      check.record(!w.has_value(), w ? *w : Json());
    });
    if (!full) check.exhaustive = false;
  }
}

}  // namespace reldoc
