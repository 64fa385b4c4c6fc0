#pragma once

#include <string>

#include "grlie/algebra.hpp"
#include "grlie/connections.hpp"
#include "grlie/decomposition.hpp"

namespace grlie {

/// Parses an algebra document:
///   {"group": {"free_rank": r, "torsion": [m1, ...]},
///    "basis": [{"name": ..., "degree": [ints], "parity": 0|1}, ...],
///    "brackets": [{"left": i, "right": j,
///                  "result": [[k, "p/q"], ...]}, ...]}
/// with the i <= j convention; unlisted pairs are zero. Structural problems
/// (malformed scalars, unknown indices, shape mismatches, inconsistent
/// duplicates) raise ParseError with field context; axiom validation is a
/// separate step.
GradedSuperalgebra parse_algebra(const std::string& text);

/// Deterministic inverse of parse_algebra: fixed field order, entries
/// sorted by (left, right), scalars in lowest terms.
std::string serialize_algebra(const GradedSuperalgebra& alg);

enum class OutputFormat { text, structured };

// Renderers for the CLI surface. Deterministic: identical inputs yield
// byte-identical output.
std::string render_validation(const GradedSuperalgebra& alg,
                              const ValidationReport& report, OutputFormat f);
std::string render_support(const SupportInfo& info, OutputFormat f);
std::string render_connections(const std::vector<ConnectionClass>& classes,
                               const SupportGraph& sg, std::size_t oracle_depth,
                               OutputFormat f);
std::string render_support_decomposition(const ValidatedAlgebra& alg,
                                         const SupportDecomposition& dec,
                                         OutputFormat f);
std::string render_structure_report(const StructureReport& report,
                                    OutputFormat f);
std::string render_hypotheses(const HypothesisReport& report, OutputFormat f);

struct FullReport {
  std::string rendered;
  bool hypotheses_unmet = false;  // some section was skipped for hypotheses
};

/// Every analysis section in one document (a single JSON object in
/// structured mode). Sections whose hypotheses fail render the failure in
/// place instead of aborting the report. oracle_depth 0 means the complete
/// depth.
FullReport render_full_report(const ValidatedAlgebra& alg,
                              std::size_t oracle_depth, OutputFormat f);

}  // namespace grlie
