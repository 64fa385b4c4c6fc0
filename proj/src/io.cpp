#include "grlie/io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace grlie {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<BracketTerm> normalize_terms(std::vector<BracketTerm> terms) {
  std::map<std::size_t, Rational> acc;
  for (auto& t : terms) acc[t.target] += t.coeff;
  std::vector<BracketTerm> out;
  for (auto& [target, coeff] : acc) {
    if (!is_zero(coeff)) out.push_back({target, coeff});
  }
  return out;
}

std::string group_to_string(const GroupSpec& spec) {
  std::string out;
  if (spec.free_rank == 1) out = "Z";
  if (spec.free_rank > 1) out = "Z^" + std::to_string(spec.free_rank);
  for (auto m : spec.torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + std::to_string(m);
  }
  return out.empty() ? "trivial" : out;
}

ordered_json group_to_json(const GroupSpec& spec) {
  ordered_json g;
  g["free_rank"] = spec.free_rank;
  g["torsion"] = spec.torsion;
  return g;
}

ordered_json degrees_to_json(const std::set<GroupElement>& degrees) {
  ordered_json out = ordered_json::array();
  for (const auto& g : degrees) out.push_back(g);
  return out;
}

std::string degrees_to_text(const std::set<GroupElement>& degrees) {
  std::string out = "{";
  bool first = true;
  for (const auto& g : degrees) {
    if (!first) out += ", ";
    out += element_to_string(g);
    first = false;
  }
  return out + "}";
}

ordered_json subspace_to_json(const GradedSubspace& s) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, basis] : s.components()) {
    ordered_json comp;
    comp["degree"] = key.degree;
    comp["parity"] = parity_to_string(key.parity);
    ordered_json vectors = ordered_json::array();
    for (const auto& row : basis.rows()) {
      ordered_json v = ordered_json::array();
      for (const auto& c : row) v.push_back(rational_to_string(c));
      vectors.push_back(std::move(v));
    }
    comp["vectors"] = std::move(vectors);
    out.push_back(std::move(comp));
  }
  return out;
}

std::string subspace_to_text(const GradedSuperalgebra& alg,
                             const GradedSubspace& s, const std::string& indent) {
  std::ostringstream out;
  if (s.components().empty()) {
    out << indent << "(zero)\n";
    return out.str();
  }
  for (const auto& [key, basis] : s.components()) {
    out << indent << key_to_string(key) << ": ";
    bool first = true;
    for (const auto& row : basis.rows()) {
      if (!first) out << ", ";
      out << format_linear_combo(alg, row);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

ordered_json hypotheses_to_json(const HypothesisReport& report) {
  ordered_json out;
  auto add = [&](const char* name, const Predicate& p) {
    ordered_json entry;
    entry["holds"] = p.holds;
    if (!p.holds) entry["witness"] = p.witness;
    out[name] = std::move(entry);
  };
  add("symmetric_support", report.symmetric_support);
  add("center_zero", report.center_zero);
  add("identity_generated", report.identity_generated);
  add("maximal_length", report.maximal_length);
  add("multiplicative", report.multiplicative);
  return out;
}

std::string hypotheses_to_text(const HypothesisReport& report) {
  std::ostringstream out;
  auto add = [&](const char* name, const Predicate& p) {
    out << "  " << name << ": " << (p.holds ? "yes" : "no");
    if (!p.holds) out << " (" << p.witness << ")";
    out << "\n";
  };
  add("symmetric_support", report.symmetric_support);
  add("center_zero", report.center_zero);
  add("identity_generated", report.identity_generated);
  add("maximal_length", report.maximal_length);
  add("multiplicative", report.multiplicative);
  return out.str();
}

ordered_json verdict_to_json(const ComponentVerdict& v) {
  ordered_json out;
  out["kind"] = verdict_kind_to_string(v.kind);
  out["dim"] = v.dim;
  out["support"] = degrees_to_json(v.support);
  if (v.kind == VerdictKind::small_self_inverse ||
      v.kind == VerdictKind::small_pair_line ||
      v.kind == VerdictKind::small_pair_plane) {
    out["bracket_part_dim"] = v.small_n;
  }
  if (!v.pieces.empty()) {
    ordered_json pieces = ordered_json::array();
    for (const auto& p : v.pieces) {
      ordered_json pj;
      pj["support"] = degrees_to_json(p.support);
      pj["dim"] = p.dim;
      pj["basis"] = p.basis_names;
      pieces.push_back(std::move(pj));
    }
    out["pieces"] = std::move(pieces);
  }
  if (!v.closure_traces.empty()) {
    ordered_json traces = ordered_json::array();
    for (const auto& t : v.closure_traces) {
      ordered_json tj;
      tj["generator"] = t.generator;
      tj["rounds"] = t.rounds;
      tj["dims"] = t.dims;
      tj["final_dim"] = t.final_dim;
      traces.push_back(std::move(tj));
    }
    out["closure_traces"] = std::move(traces);
  }
  out["evidence"] = v.evidence;
  return out;
}

std::string verdict_to_text(const ComponentVerdict& v, const std::string& indent) {
  std::ostringstream out;
  out << indent << verdict_kind_to_string(v.kind) << ", dim " << v.dim
      << ", support " << degrees_to_text(v.support);
  if (v.kind == VerdictKind::small_self_inverse ||
      v.kind == VerdictKind::small_pair_line ||
      v.kind == VerdictKind::small_pair_plane) {
    out << ", bracket part dim " << v.small_n;
  }
  out << "\n";
  for (const auto& p : v.pieces) {
    out << indent << "  piece: dim " << p.dim << ", support "
        << degrees_to_text(p.support) << "\n";
  }
  for (const auto& t : v.closure_traces) {
    out << indent << "  closure of " << t.generator << ": " << t.rounds
        << " round(s), final dim " << t.final_dim << "\n";
  }
  for (const auto& e : v.evidence) {
    out << indent << "  " << e << "\n";
  }
  return out.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

GradedSuperalgebra parse_algebra(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("top level must be an object");
    GroupSpec spec;
    std::string meta_name;
    std::string meta_description;
    if (doc.contains("name")) meta_name = doc.at("name").get<std::string>();
    if (doc.contains("description")) {
      meta_description = doc.at("description").get<std::string>();
    }
    const auto& group = doc.at("group");
    spec.free_rank = group.at("free_rank").get<std::size_t>();
    for (const auto& m : group.at("torsion")) {
      spec.torsion.push_back(m.get<std::int64_t>());
    }
    check_spec(spec);

    std::vector<BasisVector> basis;
    for (const auto& b : doc.at("basis")) {
      BasisVector v;
      v.name = b.at("name").get<std::string>();
      for (const auto& c : b.at("degree")) {
        v.degree.push_back(c.get<std::int64_t>());
      }
      if (v.degree.size() != spec.coord_count()) {
        throw ParseError("basis '" + v.name + "': degree has " +
                         std::to_string(v.degree.size()) +
                         " coordinates, group has " +
                         std::to_string(spec.coord_count()));
      }
      const int parity = b.at("parity").get<int>();
      if (parity != 0 && parity != 1) {
        throw ParseError("basis '" + v.name + "': parity must be 0 or 1");
      }
      v.parity = Parity(parity);
      basis.push_back(std::move(v));
    }

    std::vector<RawBracketEntry> entries;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<BracketTerm>> seen;
    std::size_t pos = 0;
    for (const auto& e : doc.at("brackets")) {
      RawBracketEntry entry;
      entry.left = e.at("left").get<std::size_t>();
      entry.right = e.at("right").get<std::size_t>();
      const std::string where = "brackets[" + std::to_string(pos) + "]";
      if (entry.left >= basis.size() || entry.right >= basis.size()) {
        throw ParseError(where + ": unknown basis index");
      }
      for (const auto& term : e.at("result")) {
        if (!term.is_array() || term.size() != 2) {
          throw ParseError(where + ": result terms must be [index, scalar]");
        }
        BracketTerm t;
        t.target = term[0].get<std::size_t>();
        if (t.target >= basis.size()) {
          throw ParseError(where + ": unknown basis index in result");
        }
        try {
          if (term[1].is_string()) {
            t.coeff = rational_from_string(term[1].get<std::string>());
          } else if (term[1].is_number_integer()) {
            t.coeff = make_rational(term[1].get<long>());
          } else {
            throw std::invalid_argument("scalar must be a string or integer");
          }
        } catch (const std::invalid_argument& err) {
          throw ParseError(where + ": " + err.what());
        }
        entry.terms.push_back(std::move(t));
      }
      const auto key = std::make_pair(entry.left, entry.right);
      const auto normalized = normalize_terms(entry.terms);
      const auto prior = seen.find(key);
      if (prior != seen.end()) {
        if (prior->second != normalized) {
          throw ParseError(where + ": duplicate pair (" +
                           std::to_string(entry.left) + ", " +
                           std::to_string(entry.right) +
                           ") with inconsistent values");
        }
        ++pos;
        continue;
      }
      seen.emplace(key, normalized);
      entries.push_back(std::move(entry));
      ++pos;
    }
    GradedSuperalgebra alg =
        GradedSuperalgebra::build(std::move(spec), std::move(basis), entries);
    alg.name = std::move(meta_name);
    alg.description = std::move(meta_description);
    return alg;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document shape error: ") + e.what());
  }
}

std::string serialize_algebra(const GradedSuperalgebra& alg) {
  ordered_json doc;
  if (!alg.name.empty()) doc["name"] = alg.name;
  if (!alg.description.empty()) doc["description"] = alg.description;
  doc["group"] = group_to_json(alg.group());
  ordered_json basis = ordered_json::array();
  for (const auto& b : alg.basis()) {
    ordered_json v;
    v["name"] = b.name;
    v["degree"] = b.degree;
    v["parity"] = int(b.parity);
    basis.push_back(std::move(v));
  }
  doc["basis"] = std::move(basis);
  ordered_json brackets = ordered_json::array();
  for (const auto& [key, terms] : alg.table()) {
    if (terms.empty()) continue;
    ordered_json e;
    e["left"] = key.first;
    e["right"] = key.second;
    ordered_json result = ordered_json::array();
    for (const auto& t : terms) {
      result.push_back(ordered_json::array(
          {t.target, rational_to_string(t.coeff)}));
    }
    e["result"] = std::move(result);
    brackets.push_back(std::move(e));
  }
  doc["brackets"] = std::move(brackets);
  return dump(doc);
}

std::string render_validation(const GradedSuperalgebra& alg,
                              const ValidationReport& report, OutputFormat f) {
  if (f == OutputFormat::structured) {
    ordered_json out;
    out["group"] = group_to_json(alg.group());
    out["dim"] = alg.dim();
    out["valid"] = report.ok();
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
      ordered_json vj;
      vj["kind"] = violation_kind_to_string(v.kind);
      vj["indices"] = v.indices;
      ordered_json names = ordered_json::array();
      for (auto i : v.indices) {
        if (i < alg.dim()) names.push_back(alg.basis()[i].name);
      }
      vj["basis"] = std::move(names);
      vj["detail"] = v.detail;
      violations.push_back(std::move(vj));
    }
    out["violations"] = std::move(violations);
    return dump(out);
  }
  std::ostringstream out;
  out << "algebra of dimension " << alg.dim() << " graded by "
      << group_to_string(alg.group()) << "\n";
  out << "valid: " << (report.ok() ? "yes" : "no") << "\n";
  for (const auto& v : report.violations) {
    out << "  " << violation_kind_to_string(v.kind) << ": " << v.detail << "\n";
  }
  return out.str();
}

std::string render_support(const SupportInfo& info, OutputFormat f) {
  if (f == OutputFormat::structured) {
    ordered_json out;
    out["sigma"] = degrees_to_json(info.sigma);
    out["sigma_even"] = degrees_to_json(info.sigma_even);
    out["sigma_odd"] = degrees_to_json(info.sigma_odd);
    out["symmetric"] = info.symmetric;
    return dump(out);
  }
  std::ostringstream out;
  out << "support: " << degrees_to_text(info.sigma) << "\n";
  out << "  even part: " << degrees_to_text(info.sigma_even) << "\n";
  out << "  odd part: " << degrees_to_text(info.sigma_odd) << "\n";
  out << "  symmetric: " << (info.symmetric ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_connections(const std::vector<ConnectionClass>& classes,
                               const SupportGraph& sg, std::size_t oracle_depth,
                               OutputFormat f) {
  // Cross-check the fixed-point partition against the chain oracle before
  // rendering anything.
  const auto oracle = oracle_partition(sg, oracle_depth);
  const std::string depth_hint =
      oracle_depth < complete_oracle_depth(sg)
          ? " (depth " + std::to_string(oracle_depth) +
                " is below the completeness bound " +
                std::to_string(complete_oracle_depth(sg)) + ")"
          : "";
  if (oracle.size() != classes.size()) {
    throw VerificationFailure("oracle partition disagrees with the fixed "
                              "point (class counts differ)" +
                              depth_hint);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (oracle[i] != classes[i].members) {
      throw VerificationFailure("oracle partition disagrees with the fixed "
                                "point (class members differ)" +
                                depth_hint);
    }
  }

  struct Audit {
    GroupElement member;
    std::vector<GroupElement> chain;
  };
  std::vector<std::vector<Audit>> audits(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& member : classes[i].members) {
      auto chain =
          oracle_connected(sg, classes[i].representative, member, oracle_depth);
      if (!chain) {
        throw VerificationFailure("no witnessing chain for a class member");
      }
      audits[i].push_back({member, std::move(*chain)});
    }
  }

  if (f == OutputFormat::structured) {
    ordered_json out;
    out["oracle_depth"] = oracle_depth;
    out["oracle_consistent"] = true;
    ordered_json cj = ordered_json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ordered_json c;
      c["representative"] = classes[i].representative;
      c["members"] = degrees_to_json(classes[i].members);
      ordered_json chains = ordered_json::array();
      for (const auto& audit : audits[i]) {
        ordered_json a;
        a["member"] = audit.member;
        ordered_json links = ordered_json::array();
        for (const auto& g : audit.chain) links.push_back(g);
        a["chain"] = std::move(links);
        chains.push_back(std::move(a));
      }
      c["chains"] = std::move(chains);
      cj.push_back(std::move(c));
    }
    out["classes"] = std::move(cj);
    return dump(out);
  }
  std::ostringstream out;
  out << classes.size() << " connection class(es), oracle depth "
      << oracle_depth << ", oracle agrees\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "  class " << element_to_string(classes[i].representative) << ": "
        << degrees_to_text(classes[i].members) << "\n";
    for (const auto& audit : audits[i]) {
      out << "    chain to " << element_to_string(audit.member) << ":";
      for (const auto& g : audit.chain) out << " " << element_to_string(g);
      out << "\n";
    }
  }
  return out.str();
}

std::string render_support_decomposition(const ValidatedAlgebra& alg,
                                         const SupportDecomposition& dec,
                                         OutputFormat f) {
  if (f == OutputFormat::structured) {
    ordered_json out;
    out["complement_dim"] = dec.complement.dimension();
    out["complement"] = subspace_to_json(dec.complement);
    out["bracket_span_dim"] = dec.bracket_span.dimension();
    ordered_json ideals = ordered_json::array();
    for (const auto& ci : dec.ideals) {
      ordered_json ij;
      ij["class"] = degrees_to_json(ci.cls.members);
      ij["one_part_dim"] = ci.one_part.dimension();
      ij["outer_part_dim"] = ci.outer_part.dimension();
      ij["total_dim"] = ci.total.dimension();
      ij["graded_ideal"] = is_graded_ideal(alg, ci.total).is_ideal;
      ideals.push_back(std::move(ij));
    }
    out["ideals"] = std::move(ideals);
    return dump(out);
  }
  std::ostringstream out;
  out << "complement inside the identity component (dim "
      << dec.complement.dimension() << "):\n";
  out << subspace_to_text(*alg, dec.complement, "  ");
  out << "class ideals:\n";
  for (const auto& ci : dec.ideals) {
    out << "  class " << degrees_to_text(ci.cls.members) << ": total dim "
        << ci.total.dimension() << " (identity part "
        << ci.one_part.dimension() << ", support part "
        << ci.outer_part.dimension() << "), graded ideal: "
        << (is_graded_ideal(alg, ci.total).is_ideal ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string render_hypotheses(const HypothesisReport& report, OutputFormat f) {
  if (f == OutputFormat::structured) return dump(hypotheses_to_json(report));
  return "hypotheses:\n" + hypotheses_to_text(report);
}

FullReport render_full_report(const ValidatedAlgebra& alg,
                              std::size_t oracle_depth, OutputFormat f) {
  FullReport out;
  ordered_json combined;
  std::ostringstream text;

  // Renders one section; hypotheses failures land in the section body
  // instead of aborting the whole report.
  auto section = [&](const char* title,
                     const std::function<std::string()>& render) {
    std::string body;
    try {
      body = render();
    } catch (const HypothesesNotMet& e) {
      out.hypotheses_unmet = true;
      if (f == OutputFormat::structured) {
        ordered_json err;
        err["flags"] = e.failed_flags();
        err["message"] = e.what();
        ordered_json wrap;
        wrap["hypotheses_not_met"] = std::move(err);
        combined[title] = std::move(wrap);
        return;
      }
      body = std::string("  ") + e.what() + "\n";
    }
    if (f == OutputFormat::structured) {
      if (!combined.contains(title)) {
        combined[title] = nlohmann::ordered_json::parse(body);
      }
    } else {
      text << "== " << title << " ==\n" << body;
    }
  };

  section("validation",
          [&] { return render_validation(*alg, ValidationReport{}, f); });
  section("support", [&] { return render_support(support(alg), f); });
  section("connections", [&] {
    const SupportGraph sg = SupportGraph::from_algebra(alg);
    const std::size_t depth =
        oracle_depth ? oracle_depth : complete_oracle_depth(sg);
    return render_connections(connection_classes(sg), sg, depth, f);
  });
  section("ideals", [&] {
    return render_support_decomposition(alg, support_decomposition(alg), f);
  });
  section("hypotheses", [&] {
    if (f == OutputFormat::structured) {
      return dump(hypotheses_to_json(hypothesis_report(alg)));
    }
    return hypotheses_to_text(hypothesis_report(alg));
  });
  section("decomposition", [&] {
    return render_structure_report(structure_decomposition(alg), f);
  });

  out.rendered = f == OutputFormat::structured ? dump(combined) : text.str();
  return out;
}

std::string render_structure_report(const StructureReport& report,
                                    OutputFormat f) {
  if (f == OutputFormat::structured) {
    ordered_json out;
    out["hypotheses"] = hypotheses_to_json(report.hypothesis);
    ordered_json simple = ordered_json::array();
    for (const auto& v : report.simple_components) {
      simple.push_back(verdict_to_json(v));
    }
    out["simple_components"] = std::move(simple);
    ordered_json small = ordered_json::array();
    for (const auto& v : report.small_components) {
      small.push_back(verdict_to_json(v));
    }
    out["small_components"] = std::move(small);
    out["direct_sum_checked"] = report.direct_sum_checked;
    out["total_dim"] = report.total_dim;
    return dump(out);
  }
  std::ostringstream out;
  out << "structure decomposition of an algebra of dimension "
      << report.total_dim << "\n";
  out << "hypotheses:\n" << hypotheses_to_text(report.hypothesis);
  out << "gr-simple components (" << report.simple_components.size() << "):\n";
  for (const auto& v : report.simple_components) {
    out << verdict_to_text(v, "  ");
  }
  out << "small components (" << report.small_components.size() << "):\n";
  for (const auto& v : report.small_components) {
    out << verdict_to_text(v, "  ");
  }
  out << "direct sum checked: " << (report.direct_sum_checked ? "yes" : "no")
      << "\n";
  return out.str();
}

}  // namespace grlie
