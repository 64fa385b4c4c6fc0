#pragma once

#include <compare>
#include <map>
#include <string>

#include "grlie/group.hpp"
#include "grlie/matrix.hpp"

namespace grlie {

enum class Parity : int { even = 0, odd = 1 };

inline Parity parity_add(Parity a, Parity b) {
  return Parity((int(a) + int(b)) % 2);
}
inline std::string parity_to_string(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

/// Homogeneous component label: a grading degree together with a parity.
struct ComponentKey {
  GroupElement degree;
  Parity parity = Parity::even;
  auto operator<=>(const ComponentKey&) const = default;
};

inline std::string key_to_string(const ComponentKey& k) {
  return element_to_string(k.degree) + " " + parity_to_string(k.parity);
}

/// Graded subspace of an n-dimensional algebra, stored per (degree, parity)
/// component as an echelon basis of ambient coordinate vectors. Each stored
/// vector is supported only on basis indices of its own component; empty
/// components are never kept, so map traversal order is canonical.
class GradedSubspace {
 public:
  explicit GradedSubspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Echelon-inserts v into the component; returns true when the dimension
  /// grew. Zero vectors are ignored.
  bool insert(const ComponentKey& key, Vec v);
  bool contains(const ComponentKey& key, const Vec& v) const;
  /// Null when the component is absent (zero).
  const EchelonBasis* component(const ComponentKey& key) const;

  std::size_t dimension() const;
  std::size_t ambient_dimension() const { return ambient_; }
  bool empty() const { return components_.empty(); }
  const std::map<ComponentKey, EchelonBasis>& components() const {
    return components_;
  }

  /// All component vectors concatenated in canonical component order.
  std::vector<Vec> all_vectors() const;

  bool contains_subspace(const GradedSubspace& other) const;
  /// Same spans componentwise.
  bool same_space(const GradedSubspace& other) const;

  /// Componentwise union (sum of subspaces).
  void absorb(const GradedSubspace& other);

 private:
  std::size_t ambient_;
  std::map<ComponentKey, EchelonBasis> components_;
};

}  // namespace grlie
