#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grlie/errors.hpp"
#include "grlie/group.hpp"
#include "grlie/matrix.hpp"
#include "grlie/subspace.hpp"

namespace grlie {

struct BasisVector {
  std::string name;
  GroupElement degree;  // reduced coordinates
  Parity parity = Parity::even;
  bool operator==(const BasisVector&) const = default;
};

struct BracketTerm {
  std::size_t target = 0;
  Rational coeff;
  bool operator==(const BracketTerm&) const = default;
};

/// Structure-constant table keyed by ordered basis pairs (i, j), i <= j.
/// The i > j mirror is derived from skew-supersymmetry, never stored.
using BracketTable =
    std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>>;

/// One table entry as supplied by a caller or a document, before the
/// canonical i <= j normalization.
struct RawBracketEntry {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<BracketTerm> terms;
};

enum class ViolationKind { structure, grading, parity, skew_symmetry, jacobi };

std::string violation_kind_to_string(ViolationKind k);

struct Violation {
  ViolationKind kind = ViolationKind::structure;
  std::vector<std::size_t> indices;  // witnessing basis pair or triple
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// G-graded Lie superalgebra presented by a homogeneous basis and a
/// structure-constant table. Construction normalizes the table; validate()
/// decides whether the data actually is a graded Lie superalgebra.
class GradedSuperalgebra {
 public:
  GradedSuperalgebra() = default;

  /// Optional document metadata, carried through serialization untouched.
  std::string name;
  std::string description;

  /// Mirrored entries (left > right) are folded onto the canonical slot via
  /// the sign rule; a redundant supply that disagrees with its mirror is
  /// recorded and reported by validate() as a skew-supersymmetry violation.
  static GradedSuperalgebra build(GroupSpec group,
                                  std::vector<BasisVector> basis,
                                  const std::vector<RawBracketEntry>& entries);

  const GroupSpec& group() const { return group_; }
  const std::vector<BasisVector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const BracketTable& table() const { return table_; }

  /// [b_i, b_j] as a list of terms; handles the i > j mirror sign and the
  /// stored diagonal.
  std::vector<BracketTerm> bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the table to coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Checks, in order: structural integrity, grading compatibility, parity
  /// compatibility, skew-supersymmetry (mirror conflicts and even
  /// diagonals), and the super Jacobi identity on all basis triples.
  /// Structural problems suppress the axiom checks.
  ValidationReport validate() const;

  ComponentKey key_of_basis(std::size_t i) const {
    return ComponentKey{basis_[i].degree, basis_[i].parity};
  }

  /// Component of a homogeneous vector; throws when the support of v mixes
  /// components. Zero vectors yield nullopt.
  std::optional<ComponentKey> homogeneous_key(const Vec& v) const;

  bool operator==(const GradedSuperalgebra&) const = default;

 private:
  GroupSpec group_;
  std::vector<BasisVector> basis_;
  BracketTable table_;
  std::vector<Violation> structural_;  // collected during build()
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Certified handle: constructing one runs validate() and throws
/// ValidationError unless the report is clean. Analyses take this type so
/// the axioms are known to hold.
class ValidatedAlgebra {
 public:
  explicit ValidatedAlgebra(GradedSuperalgebra alg);
  const GradedSuperalgebra& operator*() const { return alg_; }
  const GradedSuperalgebra* operator->() const { return &alg_; }
  const GradedSuperalgebra& algebra() const { return alg_; }

 private:
  GradedSuperalgebra alg_;
};

struct SupportInfo {
  std::set<GroupElement> sigma;       // non-identity degrees with L_g != 0
  std::set<GroupElement> sigma_even;  // L_g even part nonzero
  std::set<GroupElement> sigma_odd;   // L_g odd part nonzero
  bool symmetric = true;  // g in sigma_even/odd implies g^{-1} in the same set
};

SupportInfo support(const ValidatedAlgebra& alg);

/// Span of the basis vectors with the given degree and parity.
GradedSubspace homogeneous_component(const ValidatedAlgebra& alg,
                                     const GroupElement& degree, Parity parity);

/// Dimension of L_g^parity (basis count).
std::size_t component_dim(const GradedSuperalgebra& alg,
                          const GroupElement& degree, Parity parity);

/// Splits an arbitrary vector into homogeneous parts keyed by component.
std::map<ComponentKey, Vec> split_homogeneous(const GradedSuperalgebra& alg,
                                              const Vec& v);

/// Renders a coordinate vector as a combination of basis names.
std::string format_linear_combo(const GradedSuperalgebra& alg, const Vec& v);

}  // namespace grlie
