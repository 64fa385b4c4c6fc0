#include "grlie/ideals.hpp"

#include <sstream>

namespace grlie {

namespace {

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

/// Inserts a homogeneous vector, deriving its component key. No-op on zero.
bool insert_homogeneous(const GradedSuperalgebra& alg, GradedSubspace& s,
                        const Vec& v) {
  const auto key = alg.homogeneous_key(v);
  if (!key) return false;
  return s.insert(*key, v);
}

}  // namespace

ClassIdeal class_ideal(const ValidatedAlgebra& alg, const ConnectionClass& cls) {
  const auto& a = *alg;
  const SupportInfo info = support(alg);
  if (!info.symmetric) {
    throw HypothesesNotMet({"symmetric_support"},
                           "class ideals need a symmetric support");
  }
  for (const auto& g : cls.members) {
    if (!info.sigma.count(g)) {
      throw std::invalid_argument("connection class member " +
                                  element_to_string(g) +
                                  " is not in this algebra's support");
    }
  }

  ClassIdeal out{cls, GradedSubspace(a.dim()), GradedSubspace(a.dim()),
                 GradedSubspace(a.dim())};
  for (const auto& g : cls.members) {
    const GroupElement ginv = inverse(a.group(), g);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.basis()[i].degree != g) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) {
        if (a.basis()[j].degree != ginv) continue;
        insert_homogeneous(a, out.one_part,
                           a.bracket(unit_vector(a.dim(), i),
                                     unit_vector(a.dim(), j)));
      }
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.basis()[i].degree == g) {
        out.outer_part.insert(a.key_of_basis(i), unit_vector(a.dim(), i));
      }
    }
  }
  out.total = out.one_part;
  out.total.absorb(out.outer_part);
  return out;
}

IdealCheck is_graded_ideal(const ValidatedAlgebra& alg, const GradedSubspace& s) {
  const auto& a = *alg;
  for (const auto& [key, basis] : s.components()) {
    for (const auto& v : basis.rows()) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const Vec w = a.bracket(v, unit_vector(a.dim(), j));
        if (is_zero_vec(w)) continue;
        const ComponentKey wkey{
            multiply(a.group(), key.degree, a.basis()[j].degree),
            parity_add(key.parity, a.basis()[j].parity)};
        if (!s.contains(wkey, w)) {
          return {false, IdealWitness{key, v, j}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

GradedSubspace ideal_closure(const ValidatedAlgebra& alg,
                             const GradedSubspace& generators,
                             ClosureTrace* trace) {
  const auto& a = *alg;
  GradedSubspace closed = generators;
  std::size_t rounds = 0;
  if (trace) trace->dims.push_back(closed.dimension());
  bool grew = true;
  while (grew) {
    grew = false;
    ++rounds;
    // Snapshot: bracket every current vector with every basis vector.
    const auto snapshot = closed.components();
    for (const auto& [key, basis] : snapshot) {
      for (const auto& v : basis.rows()) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          const Vec w = a.bracket(v, unit_vector(a.dim(), j));
          if (is_zero_vec(w)) continue;
          const ComponentKey wkey{
              multiply(a.group(), key.degree, a.basis()[j].degree),
              parity_add(key.parity, a.basis()[j].parity)};
          if (closed.insert(wkey, w)) grew = true;
        }
      }
    }
    if (trace) trace->dims.push_back(closed.dimension());
  }
  if (trace) {
    trace->rounds = rounds;
    trace->final_dim = closed.dimension();
  }
  return closed;
}

GradedSubspace center(const ValidatedAlgebra& alg) {
  const auto& a = *alg;
  const std::size_t n = a.dim();
  // Column i of the stacked adjoint holds [b_i, b_j] for every j.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.bracket_basis(i, j)) {
        stacked(j * n + t.target, i) += t.coeff;
      }
    }
  }
  const std::vector<Vec> null_basis = kernel(stacked);

  GradedSubspace graded(n);
  for (const auto& v : null_basis) {
    for (const auto& [key, part] : split_homogeneous(a, v)) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero_vec(a.bracket(part, unit_vector(n, j)))) {
          throw VerificationFailure(
              "a homogeneous part of a central element is not central; "
              "the center of a graded algebra must be graded");
        }
      }
      graded.insert(key, part);
    }
  }
  if (graded.dimension() != null_basis.size()) {
    throw VerificationFailure("graded center dimension mismatch");
  }
  return graded;
}

GradedSubspace opposite_bracket_span(const ValidatedAlgebra& alg) {
  const auto& a = *alg;
  const std::size_t n = a.dim();
  const SupportInfo info = support(alg);
  GradedSubspace generated(n);
  for (const auto& g : info.sigma) {
    const GroupElement ginv = inverse(a.group(), g);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.basis()[i].degree != g) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (a.basis()[j].degree != ginv) continue;
        insert_homogeneous(a, generated,
                           a.bracket(unit_vector(n, i), unit_vector(n, j)));
      }
    }
  }
  return generated;
}

bool subspaces_bracket_to_zero(const ValidatedAlgebra& alg,
                               const GradedSubspace& lhs,
                               const GradedSubspace& rhs) {
  const auto& a = *alg;
  for (const auto& [lk, lbasis] : lhs.components()) {
    for (const auto& lv : lbasis.rows()) {
      for (const auto& [rk, rbasis] : rhs.components()) {
        for (const auto& rv : rbasis.rows()) {
          if (!is_zero_vec(a.bracket(lv, rv))) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::string> HypothesisReport::failed_flags() const {
  std::vector<std::string> out;
  if (!symmetric_support.holds) out.push_back("symmetric_support");
  if (!center_zero.holds) out.push_back("center_zero");
  if (!identity_generated.holds) out.push_back("identity_generated");
  if (!maximal_length.holds) out.push_back("maximal_length");
  if (!multiplicative.holds) out.push_back("multiplicative");
  return out;
}

std::vector<std::string> HypothesisReport::failed_witnesses() const {
  std::vector<std::string> out;
  if (!symmetric_support.holds) out.push_back(symmetric_support.witness);
  if (!center_zero.holds) out.push_back(center_zero.witness);
  if (!identity_generated.holds) out.push_back(identity_generated.witness);
  if (!maximal_length.holds) out.push_back(maximal_length.witness);
  if (!multiplicative.holds) out.push_back(multiplicative.witness);
  return out;
}

HypothesisReport hypothesis_report(const ValidatedAlgebra& alg) {
  const auto& a = *alg;
  const std::size_t n = a.dim();
  const SupportInfo info = support(alg);
  HypothesisReport report;

  if (!info.symmetric) {
    report.symmetric_support = {false, "some support degree lacks its inverse"};
    for (const auto* side : {&info.sigma_even, &info.sigma_odd}) {
      for (const auto& g : *side) {
        if (!side->count(inverse(a.group(), g))) {
          report.symmetric_support.witness =
              "degree " + element_to_string(g) +
              " is in the support but its inverse is not (same parity)";
          break;
        }
      }
    }
  }

  const GradedSubspace z = center(alg);
  if (z.dimension() != 0) {
    const Vec witness = z.all_vectors().front();
    report.center_zero = {false,
                          "central element " + format_linear_combo(a, witness)};
  }

  const GradedSubspace generated = opposite_bracket_span(alg);
  const GroupElement one = identity(a.group());
  std::size_t identity_dim = 0;
  for (const auto& b : a.basis()) {
    if (b.degree == one) ++identity_dim;
  }
  if (generated.dimension() != identity_dim) {
    std::string witness = "identity component has dimension " +
                          std::to_string(identity_dim) +
                          ", opposite-degree brackets span only " +
                          std::to_string(generated.dimension());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.basis()[i].degree != one) continue;
      const ComponentKey key{one, a.basis()[i].parity};
      if (!generated.contains(key, unit_vector(n, i))) {
        witness += "; '" + a.basis()[i].name + "' is not generated";
        break;
      }
    }
    report.identity_generated = {false, witness};
  }

  for (const auto& g : info.sigma) {
    for (const Parity p : {Parity::even, Parity::odd}) {
      const std::size_t d = component_dim(a, g, p);
      if (d > 1) {
        report.maximal_length = {
            false, "component " + element_to_string(g) + " " +
                       parity_to_string(p) + " has dimension " +
                       std::to_string(d)};
      }
    }
  }

  // Every support-compatible pair must bracket to something nonzero:
  // g in sigma^i, g' in sigma^j with g g' in sigma requires
  // [L_g^i, L_{g'}^j] != 0. Pairs whose product is the identity are the
  // separate identity-generation condition and are skipped.
  for (const auto& g : info.sigma) {
    for (const Parity pg : {Parity::even, Parity::odd}) {
      if ((pg == Parity::even ? info.sigma_even : info.sigma_odd).count(g) == 0) {
        continue;
      }
      for (const auto& h : info.sigma) {
        for (const Parity ph : {Parity::even, Parity::odd}) {
          if ((ph == Parity::even ? info.sigma_even : info.sigma_odd).count(h) ==
              0) {
            continue;
          }
          const GroupElement gh = multiply(a.group(), g, h);
          if (!info.sigma.count(gh)) continue;
          bool nonzero = false;
          for (std::size_t i = 0; i < n && !nonzero; ++i) {
            if (a.basis()[i].degree != g || a.basis()[i].parity != pg) continue;
            for (std::size_t j = 0; j < n && !nonzero; ++j) {
              if (a.basis()[j].degree != h || a.basis()[j].parity != ph) continue;
              nonzero =
                  !is_zero_vec(a.bracket(unit_vector(n, i), unit_vector(n, j)));
            }
          }
          if (!nonzero && report.multiplicative.holds) {
            report.multiplicative = {
                false, "[L_" + element_to_string(g) + "^" +
                           parity_to_string(pg) + ", L_" +
                           element_to_string(h) + "^" + parity_to_string(ph) +
                           "] = 0 although " + element_to_string(gh) +
                           " is in the support"};
          }
        }
      }
    }
  }
  return report;
}

void require_hypotheses(const HypothesisReport& report,
                        const std::vector<std::string>& required) {
  std::vector<std::string> failed;
  std::string detail;
  const auto flags = report.failed_flags();
  const auto witnesses = report.failed_witnesses();
  for (const auto& need : required) {
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (flags[i] == need) {
        failed.push_back(need);
        if (!detail.empty()) detail += "; ";
        detail += need + ": " + witnesses[i];
      }
    }
  }
  if (!failed.empty()) {
    throw HypothesesNotMet(std::move(failed), "hypotheses not met: " + detail);
  }
}

SimplicityVerdict is_gr_simple(const ValidatedAlgebra& alg) {
  const auto& a = *alg;
  const HypothesisReport report = hypothesis_report(alg);
  SimplicityVerdict verdict;
  if (!report.maximal_length.holds || !report.center_zero.holds ||
      !report.identity_generated.holds) {
    verdict.kind = SimplicityVerdict::Kind::inapplicable;
    std::string reason = "requires maximal length, zero center and a "
                         "bracket-generated identity component; failed:";
    for (const auto& f : report.failed_flags()) {
      if (f == "maximal_length" || f == "center_zero" ||
          f == "identity_generated") {
        reason += " " + f;
      }
    }
    verdict.reason = reason;
    return verdict;
  }

  bool bracket_nonzero = false;
  for (const auto& [key, terms] : a.table()) {
    if (!terms.empty()) bracket_nonzero = true;
  }
  if (!bracket_nonzero) {
    verdict.kind = SimplicityVerdict::Kind::not_simple;
    verdict.proper_ideal = GradedSubspace(a.dim());
    verdict.reason = "the bracket vanishes identically";
    return verdict;
  }

  // Any nonzero graded ideal meets some one-dimensional support component
  // and therefore contains it (ideals inside the identity component vanish
  // under these hypotheses), so checking the closures of all support
  // components is a complete test.
  const SupportInfo info = support(alg);
  for (const auto& g : info.sigma) {
    for (const Parity p : {Parity::even, Parity::odd}) {
      if (component_dim(a, g, p) == 0) continue;
      GradedSubspace generator = homogeneous_component(alg, g, p);
      ClosureTrace trace;
      std::size_t index = 0;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.basis()[i].degree == g && a.basis()[i].parity == p) index = i;
      }
      trace.generator = a.basis()[index].name + " @ " + element_to_string(g) +
                        " " + parity_to_string(p);
      GradedSubspace closed = ideal_closure(alg, generator, &trace);
      verdict.traces.push_back(trace);
      if (closed.dimension() != a.dim()) {
        verdict.kind = SimplicityVerdict::Kind::not_simple;
        verdict.proper_ideal = std::move(closed);
        verdict.reason = "the ideal generated by " + trace.generator +
                         " is proper (dimension " +
                         std::to_string(verdict.proper_ideal->dimension()) + ")";
        return verdict;
      }
    }
  }
  verdict.kind = SimplicityVerdict::Kind::simple;
  verdict.reason = "every support component generates the whole algebra";
  return verdict;
}

}  // namespace grlie
