#include "grlie/subspace.hpp"

#include <stdexcept>

namespace grlie {

bool GradedSubspace::insert(const ComponentKey& key, Vec v) {
  if (v.size() != ambient_) {
    throw std::invalid_argument("GradedSubspace ambient dimension mismatch");
  }
  if (is_zero_vec(v)) return false;
  auto it = components_.find(key);
  if (it == components_.end()) {
    it = components_.emplace(key, EchelonBasis(ambient_)).first;
  }
  const bool grew = it->second.insert(std::move(v));
  if (it->second.dimension() == 0) components_.erase(it);
  return grew;
}

bool GradedSubspace::contains(const ComponentKey& key, const Vec& v) const {
  if (is_zero_vec(v)) return true;
  const auto it = components_.find(key);
  if (it == components_.end()) return false;
  return it->second.contains(v);
}

const EchelonBasis* GradedSubspace::component(const ComponentKey& key) const {
  const auto it = components_.find(key);
  return it == components_.end() ? nullptr : &it->second;
}

std::size_t GradedSubspace::dimension() const {
  std::size_t d = 0;
  for (const auto& [key, basis] : components_) d += basis.dimension();
  return d;
}

std::vector<Vec> GradedSubspace::all_vectors() const {
  std::vector<Vec> out;
  for (const auto& [key, basis] : components_) {
    for (const auto& row : basis.rows()) out.push_back(row);
  }
  return out;
}

bool GradedSubspace::contains_subspace(const GradedSubspace& other) const {
  for (const auto& [key, basis] : other.components_) {
    for (const auto& row : basis.rows()) {
      if (!contains(key, row)) return false;
    }
  }
  return true;
}

bool GradedSubspace::same_space(const GradedSubspace& other) const {
  return contains_subspace(other) && other.contains_subspace(*this);
}

void GradedSubspace::absorb(const GradedSubspace& other) {
  for (const auto& [key, basis] : other.components_) {
    for (const auto& row : basis.rows()) insert(key, row);
  }
}

}  // namespace grlie
