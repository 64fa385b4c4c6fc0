#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlie/ideals.hpp"

namespace grlie {

/// Coarse decomposition L = U + sum of class ideals, with U a complement of
/// the span of opposite-degree brackets inside the identity component.
struct SupportDecomposition {
  GradedSubspace complement;       // U
  GradedSubspace bracket_span;     // span{[L_g, L_{g^{-1}}] : g in support}
  std::vector<ClassIdeal> ideals;  // one per connection class, canonical order
};

/// Requires a symmetric support. Verifies that distinct class ideals
/// bracket to zero before returning (VerificationFailure otherwise).
SupportDecomposition support_decomposition(const ValidatedAlgebra& alg);

/// With zero center and a bracket-generated identity component the class
/// ideals decompose the algebra as a direct sum; this verifies independence
/// and exhaustion (dimension sum equals dim L) and throws
/// VerificationFailure when the guaranteed decomposition fails to check.
std::vector<ClassIdeal> direct_sum_decomposition(const ValidatedAlgebra& alg);

/// A bracket-closed graded subspace turned into a standalone algebra.
/// `embedding` holds the new basis vectors in ambient coordinates.
struct RestrictedAlgebra {
  ValidatedAlgebra algebra;
  std::vector<Vec> embedding;
};

/// Recomputes structure constants on a basis of s. Throws
/// std::invalid_argument when s is not closed under the bracket.
RestrictedAlgebra restrict_to(const ValidatedAlgebra& alg,
                              const GradedSubspace& s);

enum class VerdictKind {
  gr_simple,
  split,                // two gr-simple pieces with zero cross bracket
  small_self_inverse,   // one self-inverse degree, 2-dim component, (2+n)-dim
  small_pair_line,      // pair {g, g^{-1}}, 1-dim components, 3-dim total
  small_pair_plane,     // pair {g, g^{-1}}, 2-dim components, (4+n)-dim
};

std::string verdict_kind_to_string(VerdictKind k);

/// Dimension and support facts for one summand of the final decomposition.
struct PieceSummary {
  std::set<GroupElement> support;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
};

struct ComponentVerdict {
  VerdictKind kind = VerdictKind::gr_simple;
  std::size_t dim = 0;
  std::size_t small_n = 0;             // bracket-part dimension of small kinds
  std::set<GroupElement> support;
  std::vector<PieceSummary> pieces;    // two entries when kind == split
  std::vector<ClosureTrace> closure_traces;
  std::vector<std::string> evidence;   // dimension data backing the verdict
};

/// One-class component with more than two support degrees under the full
/// hypothesis bundle: decides gr-simplicity, and when a proper ideal
/// exists, splits off its support complement and re-certifies both pieces.
/// Every consequence the theory guarantees about the split (inverse-free
/// ideal support, vanishing mixed brackets, identity component inside the
/// ideal, gr-simple pieces) is re-verified; a failure raises
/// VerificationFailure.
ComponentVerdict split_component(const ValidatedAlgebra& component);

/// Pattern facts of the low-cardinality support shapes, evaluated without
/// any center or simplicity requirement so they can be tested standalone.
struct SmallPatternMatch {
  std::optional<VerdictKind> kind;  // one of the small_* kinds
  GroupElement degree;              // the distinguished support degree
  std::size_t n = 0;                // bracket-part dimension
  std::string detail;
};
SmallPatternMatch match_small_pattern(const ValidatedAlgebra& component);

/// Component with at most two support degrees under maximal length, zero
/// center and a bracket-generated identity component: gr-simple, or one of
/// the three small shapes. Anything else raises VerificationFailure.
ComponentVerdict classify_small(const ValidatedAlgebra& component);

struct StructureReport {
  HypothesisReport hypothesis;
  std::vector<ComponentVerdict> simple_components;  // gr-simple summands
  std::vector<ComponentVerdict> small_components;   // low-dimensional summands
  bool direct_sum_checked = false;
  std::size_t total_dim = 0;
};

/// Full pipeline under the five-predicate bundle: direct sum of class
/// ideals, restriction of each, dispatch by class size, reassembly with
/// exhaustive re-verification (dimension audit, pairwise-zero brackets
/// among the small summands).
StructureReport structure_decomposition(const ValidatedAlgebra& alg);

}  // namespace grlie
