#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grlie {

/// Finitely generated abelian group Z^free_rank x Z/m1 x ... x Z/mt.
/// The API is multiplicative; internally an element is an additive integer
/// coordinate vector whose torsion coordinates are kept reduced into
/// [0, mi). The identity is the all-zero vector.
struct GroupSpec {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // each modulus >= 2

  std::size_t coord_count() const { return free_rank + torsion.size(); }
  bool operator==(const GroupSpec&) const = default;
};

/// Coordinate vector of length spec.coord_count(). The canonical ordering
/// used for deterministic iteration everywhere is the lexicographic order
/// on reduced coordinate vectors, i.e. std::vector's operator<.
using GroupElement = std::vector<std::int64_t>;

/// Throws std::invalid_argument when a torsion modulus is < 2.
void check_spec(const GroupSpec& spec);

GroupElement identity(const GroupSpec& spec);

/// Reduces torsion coordinates into [0, mi). Throws on length mismatch.
GroupElement reduce(const GroupSpec& spec, GroupElement a);

GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b);

GroupElement inverse(const GroupSpec& spec, const GroupElement& a);

bool is_identity(const GroupSpec& spec, const GroupElement& a);

std::string element_to_string(const GroupElement& a);

}  // namespace grlie
