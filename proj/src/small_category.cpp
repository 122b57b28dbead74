#include <algorithm>

#include "reldoc/change_of_base.hpp"

namespace reldoc {

std::size_t SmallCategory::add_object(const std::string& name) {
  if (std::find(objects_.begin(), objects_.end(), name) != objects_.end())
    throw Error(ErrorCode::malformed_table, "duplicate object " + name);
  objects_.push_back(name);
  arrows_.push_back({"id_" + name, objects_.size() - 1, objects_.size() - 1});
  identities_.push_back(arrows_.size() - 1);
  return objects_.size() - 1;
}

std::size_t SmallCategory::add_arrow(const std::string& name, std::size_t dom, std::size_t cod) {
  if (dom >= objects_.size() || cod >= objects_.size())
    throw Error(ErrorCode::malformed_table, "arrow " + name + " has unknown endpoints");
  arrows_.push_back({name, dom, cod});
  return arrows_.size() - 1;
}

void SmallCategory::set_then(std::size_t f, std::size_t g, std::size_t h) {
  if (arrows_.at(f).cod != arrows_.at(g).dom || arrows_.at(h).dom != arrows_[f].dom || arrows_[h].cod != arrows_[g].cod)
    throw Error(ErrorCode::malformed_table, "composite " + arrows_[h].name + " has the wrong type");
  then_[{f, g}] = h;
}

void SmallCategory::finalize() {
  const std::size_t n = arrows_.size();
  for (std::size_t f = 0; f < n; ++f) {
    then_.try_emplace({identities_[arrows_[f].dom], f}, f);
    then_.try_emplace({f, identities_[arrows_[f].cod]}, f);
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      if (arrows_[f].cod == arrows_[g].dom && !then_.count({f, g}))
        throw Error(ErrorCode::malformed_table, "missing composite of " + arrows_[f].name + " and " + arrows_[g].name);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (arrows_[f].cod == arrows_[g].dom && arrows_[g].cod == arrows_[h].dom &&
            then_.at({then_.at({f, g}), h}) != then_.at({f, then_.at({g, h})}))
          throw Error(ErrorCode::malformed_table, "composition not associative");
}

std::size_t SmallCategory::then(std::size_t f, std::size_t g) const {
  auto it = then_.find({f, g});
  if (it == then_.end()) throw Error(ErrorCode::shape_mismatch, "arrows are not composable");
  return it->second;
}

}  // namespace reldoc
