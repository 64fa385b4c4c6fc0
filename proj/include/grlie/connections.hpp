#pragma once

#include <optional>
#include <set>
#include <vector>

#include "grlie/algebra.hpp"
#include "grlie/group.hpp"

namespace grlie {

/// The support of a grading as a combinatorial object: a finite set of
/// non-identity group elements. Connection computations never consult
/// structure constants.
struct SupportGraph {
  GroupSpec group;
  std::set<GroupElement> elements;

  static SupportGraph from_algebra(const ValidatedAlgebra& alg);
  bool symmetric() const;
  bool contains(const GroupElement& g) const { return elements.count(g) > 0; }
};

/// Equivalence class of the connection relation. Closed under inverses and
/// under the product/factor rule: h in C, s and h*s in the support imply
/// h*s and s in C.
struct ConnectionClass {
  GroupElement representative;  // smallest member in canonical order
  std::set<GroupElement> members;
  bool operator==(const ConnectionClass&) const = default;
};

/// Least fixed point seeded with {g, g^{-1}} of the rules
///   (R1) h in C           => h^{-1} in C
///   (R2) h in C, s in S, h*s in S => h*s in C and s in C.
/// Requires g in the support and a symmetric support.
ConnectionClass connection_class(const SupportGraph& sg, const GroupElement& g);

/// Partition of the support into connection classes, ordered by smallest
/// member. Requires a symmetric support.
std::vector<ConnectionClass> connection_classes(const SupportGraph& sg);

/// Completeness bound for the chain oracle: |support| + 1.
std::size_t complete_oracle_depth(const SupportGraph& sg);

/// Literal chain enumeration: breadth-first search over chains
/// g1, g2, ..., gn of support elements with g1 = g, all partial products
/// g1...gt (t < n) inside the support, and total product in
/// {g', g'^{-1}}. Returns the first witnessing chain of length <= max_len
/// in canonical order, or nullopt. Chain elements may repeat.
std::optional<std::vector<GroupElement>> oracle_connected(
    const SupportGraph& sg, const GroupElement& g, const GroupElement& g_prime,
    std::size_t max_len);

/// Partition induced by the oracle at the given depth, ordered like
/// connection_classes. Intended for cross-checks and audits.
std::vector<std::set<GroupElement>> oracle_partition(const SupportGraph& sg,
                                                     std::size_t max_len);

}  // namespace grlie
