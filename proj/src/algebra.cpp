#include "grlie/algebra.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace grlie {

namespace {

// [b_i, b_j] = mirror_sign * [b_j, b_i]
Rational mirror_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? Rational(1) : Rational(-1);
}

// (-1)^{p_i p_j} in the super Jacobi identity
Rational jacobi_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? Rational(-1) : Rational(1);
}

std::vector<BracketTerm> normalize_terms(std::vector<BracketTerm> terms) {
  std::map<std::size_t, Rational> acc;
  for (auto& t : terms) acc[t.target] += t.coeff;
  std::vector<BracketTerm> out;
  for (auto& [target, coeff] : acc) {
    if (!is_zero(coeff)) out.push_back({target, coeff});
  }
  return out;
}

std::vector<BracketTerm> scaled(const std::vector<BracketTerm>& terms,
                                const Rational& factor) {
  std::vector<BracketTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back({t.target, t.coeff * factor});
  return out;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

std::string violation_kind_to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::structure: return "structure";
    case ViolationKind::grading: return "grading";
    case ViolationKind::parity: return "parity";
    case ViolationKind::skew_symmetry: return "skew-supersymmetry";
    case ViolationKind::jacobi: return "super-jacobi";
  }
  return "unknown";
}

GradedSuperalgebra GradedSuperalgebra::build(
    GroupSpec group, std::vector<BasisVector> basis,
    const std::vector<RawBracketEntry>& entries) {
  GradedSuperalgebra alg;
  check_spec(group);
  alg.group_ = std::move(group);

  std::set<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!names.insert(basis[i].name).second) {
      alg.structural_.push_back({ViolationKind::structure,
                                 {i},
                                 "duplicate basis name '" + basis[i].name + "'"});
    }
    if (basis[i].degree.size() != alg.group_.coord_count()) {
      alg.structural_.push_back(
          {ViolationKind::structure,
           {i},
           "degree of '" + basis[i].name + "' has " +
               std::to_string(basis[i].degree.size()) + " coordinates, group has " +
               std::to_string(alg.group_.coord_count())});
    } else {
      basis[i].degree = reduce(alg.group_, basis[i].degree);
    }
  }
  alg.basis_ = std::move(basis);
  const std::size_t n = alg.basis_.size();

  for (const auto& entry : entries) {
    bool in_range = entry.left < n && entry.right < n;
    for (const auto& t : entry.terms) in_range = in_range && t.target < n;
    if (!in_range) {
      alg.structural_.push_back({ViolationKind::structure,
                                 {entry.left, entry.right},
                                 "bracket entry references an out-of-range basis index"});
      continue;
    }
    std::size_t i = entry.left, j = entry.right;
    std::vector<BracketTerm> terms = normalize_terms(entry.terms);
    if (i > j) {
      std::swap(i, j);
      terms = scaled(terms,
                     mirror_sign(alg.basis_[i].parity, alg.basis_[j].parity));
    }
    const auto slot = alg.table_.find({i, j});
    if (slot == alg.table_.end()) {
      if (!terms.empty()) alg.table_[{i, j}] = std::move(terms);
    } else if (slot->second != terms) {
      alg.structural_.push_back(
          {ViolationKind::skew_symmetry,
           {entry.left, entry.right},
           "redundant entry for (" + alg.basis_[entry.left].name + ", " +
               alg.basis_[entry.right].name +
               ") is inconsistent with its mirror under skew-supersymmetry"});
    }
  }
  return alg;
}

std::vector<BracketTerm> GradedSuperalgebra::bracket_basis(std::size_t i,
                                                           std::size_t j) const {
  if (i <= j) {
    const auto it = table_.find({i, j});
    return it == table_.end() ? std::vector<BracketTerm>{} : it->second;
  }
  const auto it = table_.find({j, i});
  if (it == table_.end()) return {};
  return scaled(it->second, mirror_sign(basis_[i].parity, basis_[j].parity));
}

Vec GradedSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw std::invalid_argument("bracket operand length mismatch");
  }
  Vec out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      const Rational c = x[i] * y[j];
      for (const auto& t : bracket_basis(i, j)) out[t.target] += c * t.coeff;
    }
  }
  return out;
}

ValidationReport GradedSuperalgebra::validate() const {
  ValidationReport report;
  bool fatal = false;
  for (const auto& v : structural_) {
    report.violations.push_back(v);
    fatal = fatal || v.kind == ViolationKind::structure;
  }
  if (fatal) return report;

  const std::size_t n = dim();
  for (const auto& [key, terms] : table_) {
    const auto [i, j] = key;
    const GroupElement product =
        multiply(group_, basis_[i].degree, basis_[j].degree);
    const Parity psum = parity_add(basis_[i].parity, basis_[j].parity);
    for (const auto& t : terms) {
      if (basis_[t.target].degree != product) {
        report.violations.push_back(
            {ViolationKind::grading,
             {i, j, t.target},
             "[" + basis_[i].name + ", " + basis_[j].name + "] hits '" +
                 basis_[t.target].name + "' of degree " +
                 element_to_string(basis_[t.target].degree) + ", expected " +
                 element_to_string(product)});
      }
      if (basis_[t.target].parity != psum) {
        report.violations.push_back(
            {ViolationKind::parity,
             {i, j, t.target},
             "[" + basis_[i].name + ", " + basis_[j].name + "] hits '" +
                 basis_[t.target].name + "' of parity " +
                 parity_to_string(basis_[t.target].parity) + ", expected " +
                 parity_to_string(psum)});
      }
    }
  }

  // Even diagonals must vanish: [x, x] = 0 for even x in characteristic 0.
  for (std::size_t i = 0; i < n; ++i) {
    if (basis_[i].parity != Parity::even) continue;
    const auto it = table_.find({i, i});
    if (it != table_.end() && !it->second.empty()) {
      report.violations.push_back(
          {ViolationKind::skew_symmetry,
           {i, i},
           "[" + basis_[i].name + ", " + basis_[i].name +
               "] must be zero for an even basis vector"});
    }
  }

  // Super Jacobi on all basis triples: the residual must vanish exactly.
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ej = unit_vector(n, j);
      const Rational sign = jacobi_sign(basis_[i].parity, basis_[j].parity);
      const Vec bij = bracket(ei, ej);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ek = unit_vector(n, k);
        Vec residual = bracket(ei, bracket(ej, ek));
        axpy(residual, Rational(-1), bracket(bij, ek));
        axpy(residual, -sign, bracket(ej, bracket(ei, ek)));
        if (!is_zero_vec(residual)) {
          report.violations.push_back(
              {ViolationKind::jacobi,
               {i, j, k},
               "super Jacobi fails on (" + basis_[i].name + ", " +
                   basis_[j].name + ", " + basis_[k].name + "), residual " +
                   format_linear_combo(*this, residual)});
        }
      }
    }
  }
  return report;
}

std::optional<ComponentKey> GradedSuperalgebra::homogeneous_key(
    const Vec& v) const {
  std::optional<ComponentKey> key;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(v[i])) continue;
    const ComponentKey k = key_of_basis(i);
    if (!key) {
      key = k;
    } else if (*key != k) {
      throw std::invalid_argument("vector is not homogeneous");
    }
  }
  return key;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(
          report.violations.empty()
              ? "validation failed"
              : "validation failed: " + report.violations.front().detail +
                    (report.violations.size() > 1
                         ? " (+" + std::to_string(report.violations.size() - 1) +
                               " more)"
                         : "")),
      report_(std::move(report)) {}

ValidatedAlgebra::ValidatedAlgebra(GradedSuperalgebra alg) : alg_(std::move(alg)) {
  ValidationReport report = alg_.validate();
  if (!report.ok()) throw ValidationError(std::move(report));
}

SupportInfo support(const ValidatedAlgebra& alg) {
  SupportInfo info;
  const auto& a = *alg;
  for (const auto& b : a.basis()) {
    if (is_identity(a.group(), b.degree)) continue;
    info.sigma.insert(b.degree);
    (b.parity == Parity::even ? info.sigma_even : info.sigma_odd).insert(b.degree);
  }
  for (const auto* side : {&info.sigma_even, &info.sigma_odd}) {
    for (const auto& g : *side) {
      if (!side->count(inverse(a.group(), g))) info.symmetric = false;
    }
  }
  return info;
}

GradedSubspace homogeneous_component(const ValidatedAlgebra& alg,
                                     const GroupElement& degree, Parity parity) {
  const auto& a = *alg;
  const GroupElement d = reduce(a.group(), degree);
  GradedSubspace out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.basis()[i].degree == d && a.basis()[i].parity == parity) {
      Vec v(a.dim(), Rational(0));
      v[i] = 1;
      out.insert({d, parity}, std::move(v));
    }
  }
  return out;
}

std::size_t component_dim(const GradedSuperalgebra& alg,
                          const GroupElement& degree, Parity parity) {
  std::size_t d = 0;
  for (const auto& b : alg.basis()) {
    if (b.degree == degree && b.parity == parity) ++d;
  }
  return d;
}

std::map<ComponentKey, Vec> split_homogeneous(const GradedSuperalgebra& alg,
                                              const Vec& v) {
  std::map<ComponentKey, Vec> parts;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (is_zero(v[i])) continue;
    const ComponentKey key = alg.key_of_basis(i);
    auto it = parts.find(key);
    if (it == parts.end()) {
      it = parts.emplace(key, Vec(alg.dim(), Rational(0))).first;
    }
    it->second[i] = v[i];
  }
  return parts;
}

std::string format_linear_combo(const GradedSuperalgebra& alg, const Vec& v) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < alg.dim() && i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Rational c = v[i];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        out << "-";
        c = -c;
      } else {
        out << "+";
      }
    }
    if (c != 1) out << rational_to_string(c) << "*";
    out << alg.basis()[i].name;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace grlie
