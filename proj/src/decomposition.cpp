#include "grlie/decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace grlie {

namespace {

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

std::vector<std::size_t> basis_indices_at(const GradedSuperalgebra& a,
                                          const GroupElement& degree) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.basis()[i].degree == degree) out.push_back(i);
  }
  return out;
}

std::string degrees_to_string(const std::set<GroupElement>& degrees) {
  std::string out = "{";
  bool first = true;
  for (const auto& g : degrees) {
    if (!first) out += ", ";
    out += element_to_string(g);
    first = false;
  }
  return out + "}";
}

const std::vector<std::string> kFullBundle = {
    "symmetric_support", "center_zero", "identity_generated", "maximal_length",
    "multiplicative"};

}  // namespace

std::string verdict_kind_to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::gr_simple: return "gr-simple";
    case VerdictKind::split: return "split";
    case VerdictKind::small_self_inverse: return "small-self-inverse";
    case VerdictKind::small_pair_line: return "small-pair-line";
    case VerdictKind::small_pair_plane: return "small-pair-plane";
  }
  return "unknown";
}

SupportDecomposition support_decomposition(const ValidatedAlgebra& alg) {
  const auto& a = *alg;
  const std::size_t n = a.dim();
  const SupportInfo info = support(alg);
  if (!info.symmetric) {
    throw HypothesesNotMet({"symmetric_support"},
                           "the decomposition needs a symmetric support");
  }

  SupportDecomposition out{GradedSubspace(n), opposite_bracket_span(alg), {}};

  // U: greedy complement of the bracket span inside the identity component,
  // extended by the identity-degree basis vectors in index order.
  const GroupElement one = identity(a.group());
  for (const Parity p : {Parity::even, Parity::odd}) {
    const ComponentKey key{one, p};
    std::vector<Vec> ambient;
    for (std::size_t i = 0; i < n; ++i) {
      if (a.basis()[i].degree == one && a.basis()[i].parity == p) {
        ambient.push_back(unit_vector(n, i));
      }
    }
    std::vector<Vec> sub;
    if (const EchelonBasis* eb = out.bracket_span.component(key)) {
      sub = eb->rows();
    }
    for (auto& v : complement(sub, ambient)) out.complement.insert(key, v);
  }

  const SupportGraph sg = SupportGraph::from_algebra(alg);
  for (const auto& cls : connection_classes(sg)) {
    out.ideals.push_back(class_ideal(alg, cls));
  }

  for (std::size_t i = 0; i < out.ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < out.ideals.size(); ++j) {
      if (!subspaces_bracket_to_zero(alg, out.ideals[i].total,
                                     out.ideals[j].total)) {
        throw VerificationFailure(
            "distinct class ideals bracket to something nonzero");
      }
    }
  }

  std::size_t identity_dim = 0;
  for (const auto& b : a.basis()) {
    if (b.degree == one) ++identity_dim;
  }
  GradedSubspace all(n);
  all.absorb(out.complement);
  for (const auto& ci : out.ideals) all.absorb(ci.total);
  if (out.complement.dimension() + out.bracket_span.dimension() != identity_dim ||
      all.dimension() != n) {
    throw VerificationFailure(
        "complement and class ideals fail to fill the algebra");
  }
  return out;
}

std::vector<ClassIdeal> direct_sum_decomposition(const ValidatedAlgebra& alg) {
  const HypothesisReport report = hypothesis_report(alg);
  require_hypotheses(report, {"center_zero", "identity_generated"});

  const SupportGraph sg = SupportGraph::from_algebra(alg);
  std::vector<ClassIdeal> ideals;
  for (const auto& cls : connection_classes(sg)) {
    ideals.push_back(class_ideal(alg, cls));
  }

  std::size_t dim_sum = 0;
  GradedSubspace all(alg->dim());
  for (const auto& ci : ideals) {
    dim_sum += ci.total.dimension();
    all.absorb(ci.total);
  }
  if (dim_sum != alg->dim() || all.dimension() != alg->dim()) {
    throw VerificationFailure(
        "direct sum audit failed: class ideal dimensions sum to " +
        std::to_string(dim_sum) + " with joint span of dimension " +
        std::to_string(all.dimension()) + " in an algebra of dimension " +
        std::to_string(alg->dim()));
  }
  return ideals;
}

RestrictedAlgebra restrict_to(const ValidatedAlgebra& alg,
                              const GradedSubspace& s) {
  const auto& a = *alg;
  std::vector<BasisVector> new_basis;
  std::vector<Vec> embedding;
  std::map<ComponentKey, std::size_t> offsets;
  for (const auto& [key, basis] : s.components()) {
    offsets[key] = new_basis.size();
    for (const auto& row : basis.rows()) {
      new_basis.push_back({format_linear_combo(a, row), key.degree, key.parity});
      embedding.push_back(row);
    }
  }

  std::vector<RawBracketEntry> entries;
  for (std::size_t i = 0; i < new_basis.size(); ++i) {
    for (std::size_t j = i; j < new_basis.size(); ++j) {
      const Vec w = a.bracket(embedding[i], embedding[j]);
      if (is_zero_vec(w)) continue;
      const ComponentKey wkey{
          multiply(a.group(), new_basis[i].degree, new_basis[j].degree),
          parity_add(new_basis[i].parity, new_basis[j].parity)};
      const EchelonBasis* comp = s.component(wkey);
      std::optional<Vec> coords =
          comp ? comp->coordinates(w) : std::optional<Vec>{};
      if (!coords) {
        throw std::invalid_argument(
            "subspace is not closed under the bracket: [" + new_basis[i].name +
            ", " + new_basis[j].name + "] escapes");
      }
      RawBracketEntry entry{i, j, {}};
      for (std::size_t k = 0; k < coords->size(); ++k) {
        if (!is_zero((*coords)[k])) {
          entry.terms.push_back({offsets[wkey] + k, (*coords)[k]});
        }
      }
      if (!entry.terms.empty()) entries.push_back(std::move(entry));
    }
  }

  try {
    return RestrictedAlgebra{
        ValidatedAlgebra(GradedSuperalgebra::build(a.group(), std::move(new_basis),
                                                   entries)),
        std::move(embedding)};
  } catch (const ValidationError& e) {
    throw VerificationFailure(
        std::string("restriction of a bracket-closed subspace failed to "
                    "validate: ") +
        e.what());
  }
}

ComponentVerdict split_component(const ValidatedAlgebra& component) {
  const auto& a = *component;
  const std::size_t n = a.dim();
  const SupportInfo info = support(component);
  const HypothesisReport report = hypothesis_report(component);
  require_hypotheses(report, kFullBundle);
  if (info.sigma.size() <= 2) {
    throw HypothesesNotMet({"support_size"},
                           "split analysis needs more than two support degrees");
  }
  const SupportGraph sg = SupportGraph::from_algebra(component);
  if (connection_classes(sg).size() != 1) {
    throw HypothesesNotMet({"connected_support"},
                           "split analysis needs a fully connected support");
  }

  const SimplicityVerdict sv = is_gr_simple(component);
  ComponentVerdict verdict;
  verdict.dim = n;
  verdict.support = info.sigma;
  verdict.closure_traces = sv.traces;
  if (sv.kind == SimplicityVerdict::Kind::simple) {
    verdict.kind = VerdictKind::gr_simple;
    verdict.evidence.push_back(sv.reason);
    return verdict;
  }
  if (sv.kind == SimplicityVerdict::Kind::inapplicable) {
    throw VerificationFailure("simplicity test inapplicable after the "
                              "hypothesis bundle was verified");
  }

  // Proper ideal found: the theory pins down the shape of the split.
  // Every consequence is re-checked; a failure is a bug, not bad input.
  const GradedSubspace& ideal = *sv.proper_ideal;
  const GroupElement one = identity(a.group());

  std::set<GroupElement> sigma_ideal;
  for (const auto& g : info.sigma) {
    bool full = true;
    for (const std::size_t i : basis_indices_at(a, g)) {
      full = full && ideal.contains(a.key_of_basis(i), unit_vector(n, i));
    }
    if (full) sigma_ideal.insert(g);
  }

  for (const auto& [key, basis] : ideal.components()) {
    if (key.degree != one && !sigma_ideal.count(key.degree)) {
      throw VerificationFailure(
          "a proper ideal holds a fragment of component " +
          key_to_string(key) + " without the full degree");
    }
  }
  for (const std::size_t i : basis_indices_at(a, one)) {
    if (!ideal.contains(a.key_of_basis(i), unit_vector(n, i))) {
      throw VerificationFailure(
          "the identity component is not inside the proper ideal");
    }
  }
  const std::size_t identity_dim = basis_indices_at(a, one).size();
  if (identity_dim != 0) {
    throw VerificationFailure(
        "a proper ideal coexists with a nonzero identity component in a "
        "connected component");
  }
  std::size_t expected = identity_dim;
  for (const auto& g : sigma_ideal) expected += basis_indices_at(a, g).size();
  if (ideal.dimension() != expected) {
    throw VerificationFailure("proper ideal dimension mismatch");
  }

  // The ideal's support never carries an inverse pair.
  for (const auto& g : sigma_ideal) {
    if (sigma_ideal.count(inverse(a.group(), g))) {
      throw VerificationFailure(
          "a proper ideal contains both a support degree and its inverse");
    }
  }
  // The identity component kills every degree outside the ideal's support.
  for (const auto& g : info.sigma) {
    if (sigma_ideal.count(g)) continue;
    for (const std::size_t i : basis_indices_at(a, one)) {
      for (const std::size_t j : basis_indices_at(a, g)) {
        if (!is_zero_vec(a.bracket(unit_vector(n, i), unit_vector(n, j)))) {
          throw VerificationFailure(
              "identity component brackets onto a degree outside the ideal");
        }
      }
    }
  }
  // Opposite-degree brackets across the boundary vanish.
  for (const auto& g : sigma_ideal) {
    const GroupElement ginv = inverse(a.group(), g);
    if (sigma_ideal.count(ginv) || !info.sigma.count(ginv)) continue;
    for (const std::size_t i : basis_indices_at(a, g)) {
      for (const std::size_t j : basis_indices_at(a, ginv)) {
        if (!is_zero_vec(a.bracket(unit_vector(n, i), unit_vector(n, j)))) {
          throw VerificationFailure(
              "opposite-degree bracket across the split boundary is nonzero");
        }
      }
    }
  }

  GradedSubspace complement_ideal(n);
  std::set<GroupElement> sigma_rest;
  for (const auto& g : info.sigma) {
    if (sigma_ideal.count(g)) continue;
    sigma_rest.insert(g);
    for (const std::size_t i : basis_indices_at(a, g)) {
      complement_ideal.insert(a.key_of_basis(i), unit_vector(n, i));
    }
  }
  if (!subspaces_bracket_to_zero(component, ideal, complement_ideal)) {
    throw VerificationFailure("the two split pieces do not commute");
  }
  if (ideal.dimension() + complement_ideal.dimension() != n) {
    throw VerificationFailure("split pieces do not fill the component");
  }

  verdict.kind = VerdictKind::split;
  const GradedSubspace* piece_list[] = {&ideal, &complement_ideal};
  for (const GradedSubspace* piece : piece_list) {
    const RestrictedAlgebra restricted = restrict_to(component, *piece);
    const SimplicityVerdict piece_verdict = is_gr_simple(restricted.algebra);
    if (piece_verdict.kind != SimplicityVerdict::Kind::simple) {
      throw VerificationFailure("a split piece is not gr-simple: " +
                                piece_verdict.reason);
    }
    PieceSummary summary;
    summary.dim = piece->dimension();
    summary.support =
        piece == &ideal ? sigma_ideal : sigma_rest;
    for (const auto& b : restricted.algebra->basis()) {
      summary.basis_names.push_back(b.name);
    }
    verdict.pieces.push_back(std::move(summary));
  }
  verdict.evidence.push_back("proper ideal support " +
                             degrees_to_string(sigma_ideal) +
                             ", complement support " +
                             degrees_to_string(sigma_rest));
  return verdict;
}

SmallPatternMatch match_small_pattern(const ValidatedAlgebra& component) {
  const auto& a = *component;
  const std::size_t n = a.dim();
  const SupportInfo info = support(component);
  const GroupElement one = identity(a.group());
  const std::size_t identity_dim = basis_indices_at(a, one).size();
  SmallPatternMatch match;

  auto bracket_span_dim = [&](const GroupElement& g, const GroupElement& h,
                              GradedSubspace* out) {
    GradedSubspace span(n);
    for (const std::size_t i : basis_indices_at(a, g)) {
      for (const std::size_t j : basis_indices_at(a, h)) {
        const Vec w = a.bracket(unit_vector(n, i), unit_vector(n, j));
        if (is_zero_vec(w)) continue;
        span.insert(*a.homogeneous_key(w), w);
      }
    }
    const std::size_t d = span.dimension();
    if (out) *out = span;
    return d;
  };
  auto brackets_vanish = [&](const GroupElement& g, const GroupElement& h) {
    for (const std::size_t i : basis_indices_at(a, g)) {
      for (const std::size_t j : basis_indices_at(a, h)) {
        if (!is_zero_vec(a.bracket(unit_vector(n, i), unit_vector(n, j)))) {
          return false;
        }
      }
    }
    return true;
  };

  if (info.sigma.size() == 1) {
    const GroupElement g = *info.sigma.begin();
    if (g != inverse(a.group(), g)) {
      match.detail = "single support degree is not self-inverse";
      return match;
    }
    const std::size_t dg = basis_indices_at(a, g).size();
    const std::size_t sn = bracket_span_dim(g, g, nullptr);
    if (dg == 2 && sn >= 1 && sn <= 3 && sn == identity_dim &&
        n == 2 + sn) {
      match.kind = VerdictKind::small_self_inverse;
      match.degree = g;
      match.n = sn;
      match.detail = "dim L_g = 2, bracket part of dimension " +
                     std::to_string(sn) + ", total dimension " +
                     std::to_string(n);
    } else {
      match.detail = "self-inverse degree with dim L_g = " + std::to_string(dg) +
                     ", bracket part " + std::to_string(sn) +
                     ", total dimension " + std::to_string(n);
    }
    return match;
  }

  if (info.sigma.size() == 2) {
    const GroupElement g1 = *info.sigma.begin();
    const GroupElement g2 = *std::next(info.sigma.begin());
    if (inverse(a.group(), g1) != g2) {
      match.detail = "two support degrees are not mutually inverse";
      return match;
    }
    const std::size_t d1 = basis_indices_at(a, g1).size();
    const std::size_t d2 = basis_indices_at(a, g2).size();
    if (d1 == 1 && d2 == 1 && n == 3) {
      // Distinguished degree: its self bracket and the action of the
      // identity part on the opposite degree both vanish.
      for (const GroupElement& g : {g1, g2}) {
        const GroupElement ginv = inverse(a.group(), g);
        GradedSubspace span(n);
        if (bracket_span_dim(g, ginv, &span) != 1 || identity_dim != 1)
          continue;
        if (!brackets_vanish(g, g)) continue;
        bool tail_vanishes = true;
        for (const auto& [key, basis] : span.components()) {
          for (const auto& w : basis.rows()) {
            for (const std::size_t j : basis_indices_at(a, ginv)) {
              tail_vanishes = tail_vanishes &&
                              is_zero_vec(a.bracket(w, unit_vector(n, j)));
            }
          }
        }
        if (!tail_vanishes) continue;
        match.kind = VerdictKind::small_pair_line;
        match.degree = g;
        match.n = 1;
        match.detail =
            "one-dimensional components, 2-dimensional ideal at degree " +
            element_to_string(g);
        return match;
      }
      match.detail = "3-dimensional pair shape without the vanishing side "
                     "conditions";
      return match;
    }
    if (d1 == 2 && d2 == 2) {
      const std::size_t sn = bracket_span_dim(g1, g2, nullptr);
      if (sn <= 4 && sn == identity_dim && n == 4 + sn) {
        match.kind = VerdictKind::small_pair_plane;
        match.degree = g1;
        match.n = sn;
        match.detail = "two 2-dimensional components, bracket part of "
                       "dimension " +
                       std::to_string(sn);
      } else {
        match.detail = "2-dimensional components but dimensions do not fit";
      }
      return match;
    }
    match.detail = "component dimensions " + std::to_string(d1) + ", " +
                   std::to_string(d2) + " fit no classified shape";
    return match;
  }
  match.detail = "support size " + std::to_string(info.sigma.size());
  return match;
}

ComponentVerdict classify_small(const ValidatedAlgebra& component) {
  const auto& a = *component;
  const SupportInfo info = support(component);
  const HypothesisReport report = hypothesis_report(component);
  require_hypotheses(report, {"symmetric_support", "center_zero",
                              "identity_generated", "maximal_length"});
  if (info.sigma.size() > 2) {
    throw HypothesesNotMet({"support_size"},
                           "small classification needs at most two support "
                           "degrees");
  }

  const SimplicityVerdict sv = is_gr_simple(component);
  ComponentVerdict verdict;
  verdict.dim = a.dim();
  verdict.support = info.sigma;
  verdict.closure_traces = sv.traces;
  if (sv.kind == SimplicityVerdict::Kind::simple) {
    verdict.kind = VerdictKind::gr_simple;
    verdict.evidence.push_back(sv.reason);
    return verdict;
  }
  if (sv.kind == SimplicityVerdict::Kind::inapplicable) {
    throw VerificationFailure("simplicity test inapplicable after its "
                              "hypotheses were verified");
  }

  const SmallPatternMatch match = match_small_pattern(component);
  if (!match.kind) {
    throw VerificationFailure(
        "a non-gr-simple small component fits none of the classified "
        "shapes: " +
        match.detail);
  }
  verdict.kind = *match.kind;
  verdict.small_n = match.n;
  verdict.evidence.push_back(match.detail);
  verdict.evidence.push_back(sv.reason);
  return verdict;
}

StructureReport structure_decomposition(const ValidatedAlgebra& alg) {
  StructureReport out;
  out.hypothesis = hypothesis_report(alg);
  require_hypotheses(out.hypothesis, kFullBundle);
  out.total_dim = alg->dim();

  const std::vector<ClassIdeal> ideals = direct_sum_decomposition(alg);
  std::vector<const GradedSubspace*> small_spans;
  std::size_t dim_sum = 0;

  for (const auto& ci : ideals) {
    const RestrictedAlgebra restricted = restrict_to(alg, ci.total);
    ComponentVerdict verdict = ci.cls.members.size() > 2
                                   ? split_component(restricted.algebra)
                                   : classify_small(restricted.algebra);
    if (verdict.kind == VerdictKind::gr_simple) {
      dim_sum += verdict.dim;
      out.simple_components.push_back(std::move(verdict));
    } else if (verdict.kind == VerdictKind::split) {
      for (const auto& piece : verdict.pieces) {
        ComponentVerdict half;
        half.kind = VerdictKind::gr_simple;
        half.dim = piece.dim;
        half.support = piece.support;
        half.evidence.push_back("piece of a split component with support " +
                                degrees_to_string(verdict.support));
        dim_sum += half.dim;
        out.simple_components.push_back(std::move(half));
      }
    } else {
      dim_sum += verdict.dim;
      out.small_components.push_back(std::move(verdict));
      small_spans.push_back(&ci.total);
    }
  }

  if (dim_sum != alg->dim()) {
    throw VerificationFailure("component dimensions sum to " +
                              std::to_string(dim_sum) +
                              " in an algebra of dimension " +
                              std::to_string(alg->dim()));
  }
  for (std::size_t i = 0; i < small_spans.size(); ++i) {
    for (std::size_t j = i + 1; j < small_spans.size(); ++j) {
      if (!subspaces_bracket_to_zero(alg, *small_spans[i], *small_spans[j])) {
        throw VerificationFailure(
            "two small components bracket to something nonzero");
      }
    }
  }
  out.direct_sum_checked = true;
  return out;
}

}  // namespace grlie
