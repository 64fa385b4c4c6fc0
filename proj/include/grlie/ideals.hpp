#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlie/algebra.hpp"
#include "grlie/connections.hpp"

namespace grlie {

/// Ideal attached to a connection class: the span of the opposite-degree
/// brackets over the class (inside the identity component) plus the class's
/// homogeneous components. Always a graded ideal.
struct ClassIdeal {
  ConnectionClass cls;
  GradedSubspace one_part;    // inside the identity component
  GradedSubspace outer_part;  // direct sum of the class's components
  GradedSubspace total;
};

ClassIdeal class_ideal(const ValidatedAlgebra& alg, const ConnectionClass& cls);

struct IdealWitness {
  ComponentKey vector_key;
  Vec vector;                // subspace vector whose bracket escapes
  std::size_t basis_index;   // algebra basis vector it was bracketed with
};

struct IdealCheck {
  bool is_ideal = false;
  std::optional<IdealWitness> witness;  // first escaping pair otherwise
};

/// True iff bracketing every stored vector with every algebra basis vector
/// stays inside the subspace, componentwise.
IdealCheck is_graded_ideal(const ValidatedAlgebra& alg, const GradedSubspace& s);

struct ClosureTrace {
  std::string generator;
  std::size_t rounds = 0;
  std::size_t final_dim = 0;
  std::vector<std::size_t> dims;  // dimension after each round
};

/// Least graded subspace containing the generators and closed under
/// bracketing with the whole algebra. Iterates bracket-with-basis rounds,
/// re-echelonizing, until the dimension stabilizes.
GradedSubspace ideal_closure(const ValidatedAlgebra& alg,
                             const GradedSubspace& generators,
                             ClosureTrace* trace = nullptr);

/// Z(L) = {v : [v, L] = 0}, returned as graded components. The center of a
/// group-graded algebra is graded; that fact is re-checked and a failure
/// raises VerificationFailure.
GradedSubspace center(const ValidatedAlgebra& alg);

/// span{[L_g, L_{g^{-1}}] : g in support}, inside the identity component.
GradedSubspace opposite_bracket_span(const ValidatedAlgebra& alg);

/// True when every bracket between vectors of the two subspaces vanishes.
bool subspaces_bracket_to_zero(const ValidatedAlgebra& alg,
                               const GradedSubspace& lhs,
                               const GradedSubspace& rhs);

struct Predicate {
  bool holds = true;
  std::string witness;  // filled when the predicate fails
};

/// The hypothesis bundle behind the structure results: symmetric support,
/// zero center, identity component generated by opposite-degree brackets,
/// every support component of dimension at most one per parity, and
/// nonvanishing of all support-compatible brackets.
struct HypothesisReport {
  Predicate symmetric_support;
  Predicate center_zero;
  Predicate identity_generated;
  Predicate maximal_length;
  Predicate multiplicative;

  bool bundle() const {
    return symmetric_support.holds && center_zero.holds &&
           identity_generated.holds && maximal_length.holds &&
           multiplicative.holds;
  }
  std::vector<std::string> failed_flags() const;
  std::vector<std::string> failed_witnesses() const;
};

HypothesisReport hypothesis_report(const ValidatedAlgebra& alg);

/// Raises HypothesesNotMet listing every flag in `required` that fails.
void require_hypotheses(const HypothesisReport& report,
                        const std::vector<std::string>& required);

struct SimplicityVerdict {
  enum class Kind { simple, not_simple, inapplicable };
  Kind kind = Kind::inapplicable;
  /// Proper graded ideal witnessing non-simplicity. Zero-dimensional when
  /// non-simplicity came from a vanishing bracket.
  std::optional<GradedSubspace> proper_ideal;
  std::string reason;
  std::vector<ClosureTrace> traces;
};

/// Decides gr-simplicity under maximal length + zero center + generated
/// identity component: the algebra is gr-simple iff the bracket is nonzero
/// and the closure of every one-dimensional support component is the whole
/// algebra. Outside those hypotheses the verdict is `inapplicable` (the
/// one-generator enumeration would be incomplete).
SimplicityVerdict is_gr_simple(const ValidatedAlgebra& alg);

}  // namespace grlie
