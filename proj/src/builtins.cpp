#include "grlie/builtins.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace grlie {

namespace {

RawBracketEntry entry(std::size_t i, std::size_t j,
                      std::initializer_list<std::pair<std::size_t, long>> terms) {
  RawBracketEntry e{i, j, {}};
  for (const auto& [target, coeff] : terms) {
    e.terms.push_back({target, make_rational(coeff)});
  }
  return e;
}

GroupElement img_scaled(const GroupSpec& to, const GroupElement& image,
                        std::int64_t factor) {
  GroupElement out(to.coord_count(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = image[i] * factor;
  return reduce(to, out);
}

}  // namespace

GroupHom make_hom(GroupSpec from, GroupSpec to,
                  std::vector<GroupElement> generator_images) {
  check_spec(from);
  check_spec(to);
  if (generator_images.size() != from.coord_count()) {
    throw std::invalid_argument("homomorphism needs one image per generator");
  }
  for (auto& img : generator_images) img = reduce(to, img);
  // A torsion generator of order m must land on an element killed by m.
  for (std::size_t t = 0; t < from.torsion.size(); ++t) {
    const GroupElement scaled =
        img_scaled(to, generator_images[from.free_rank + t], from.torsion[t]);
    if (!is_identity(to, scaled)) {
      throw std::invalid_argument(
          "homomorphism image incompatible with torsion order " +
          std::to_string(from.torsion[t]));
    }
  }
  return GroupHom{std::move(from), std::move(to), std::move(generator_images)};
}

GroupElement apply_hom(const GroupHom& hom, const GroupElement& a) {
  const GroupElement ar = reduce(hom.from, a);
  GroupElement out = identity(hom.to);
  for (std::size_t i = 0; i < ar.size(); ++i) {
    out = multiply(hom.to, out, img_scaled(hom.to, hom.generator_images[i], ar[i]));
  }
  return out;
}

GradedSuperalgebra pushforward(const GradedSuperalgebra& alg,
                               const GroupHom& hom) {
  if (!(alg.group() == hom.from)) {
    throw std::invalid_argument("homomorphism domain does not match the "
                                "algebra's grading group");
  }
  std::vector<BasisVector> basis = alg.basis();
  for (auto& b : basis) b.degree = apply_hom(hom, b.degree);
  std::vector<RawBracketEntry> entries;
  for (const auto& [key, terms] : alg.table()) {
    entries.push_back({key.first, key.second, terms});
  }
  return GradedSuperalgebra::build(hom.to, std::move(basis), entries);
}

GradedSuperalgebra direct_sum(const GradedSuperalgebra& a,
                              const GradedSuperalgebra& b,
                              const std::string& suffix_a,
                              const std::string& suffix_b) {
  if (!(a.group() == b.group())) {
    throw std::invalid_argument("direct sum needs a common grading group");
  }
  std::vector<BasisVector> basis;
  std::set<std::string> used;
  auto push = [&](const BasisVector& src, const std::string& suffix) {
    BasisVector out = src;
    out.name += suffix;
    while (!used.insert(out.name).second) out.name += "'";
    basis.push_back(std::move(out));
  };
  for (const auto& v : a.basis()) push(v, suffix_a);
  for (const auto& v : b.basis()) push(v, suffix_b);

  std::vector<RawBracketEntry> entries;
  for (const auto& [key, terms] : a.table()) {
    entries.push_back({key.first, key.second, terms});
  }
  const std::size_t offset = a.dim();
  for (const auto& [key, terms] : b.table()) {
    RawBracketEntry e{key.first + offset, key.second + offset, terms};
    for (auto& t : e.terms) t.target += offset;
    entries.push_back(std::move(e));
  }
  return GradedSuperalgebra::build(a.group(), std::move(basis), entries);
}

GradedSuperalgebra sl2() {
  const GroupSpec z{1, {}};
  // e = 0, h = 1, f = 2
  return GradedSuperalgebra::build(
      z,
      {{"e", {1}, Parity::even}, {"h", {0}, Parity::even},
       {"f", {-1}, Parity::even}},
      {entry(0, 1, {{0, -2}}),   // [e,h] = -2e
       entry(0, 2, {{1, 1}}),    // [e,f] = h
       entry(1, 2, {{2, -2}})}); // [h,f] = -2f
}

GradedSuperalgebra osp12() {
  const GroupSpec z{1, {}};
  // e2 = 0, e1 = 1, h = 2, f1 = 3, f2 = 4
  return GradedSuperalgebra::build(
      z,
      {{"e2", {2}, Parity::even},
       {"e1", {1}, Parity::odd},
       {"h", {0}, Parity::even},
       {"f1", {-1}, Parity::odd},
       {"f2", {-2}, Parity::even}},
      {entry(0, 2, {{0, -2}}),   // [e2,h]  = -2 e2
       entry(0, 3, {{1, 1}}),    // [e2,f1] = e1
       entry(0, 4, {{2, 1}}),    // [e2,f2] = h
       entry(1, 1, {{0, 2}}),    // [e1,e1] = 2 e2
       entry(1, 2, {{1, -1}}),   // [e1,h]  = -e1
       entry(1, 3, {{2, -1}}),   // [e1,f1] = -h
       entry(1, 4, {{3, -1}}),   // [e1,f2] = -f1
       entry(2, 3, {{3, -1}}),   // [h,f1]  = -f1
       entry(2, 4, {{4, -2}}),   // [h,f2]  = -2 f2
       entry(3, 3, {{4, -2}})}); // [f1,f1] = -2 f2
}

GradedSuperalgebra sl2xsl2() {
  const GroupSpec z2{2, {}};
  const GroupHom axis1 = make_hom({1, {}}, z2, {{1, 0}});
  const GroupHom axis2 = make_hom({1, {}}, z2, {{0, 1}});
  return direct_sum(pushforward(sl2(), axis1), pushforward(sl2(), axis2), "1",
                    "2");
}

GradedSuperalgebra sl2center() {
  const GroupSpec z{1, {}};
  // e = 0, h = 1, f = 2, z = 3 (central)
  return GradedSuperalgebra::build(
      z,
      {{"e", {1}, Parity::even},
       {"h", {0}, Parity::even},
       {"f", {-1}, Parity::even},
       {"z", {0}, Parity::even}},
      {entry(0, 1, {{0, -2}}), entry(0, 2, {{1, 1}}), entry(1, 2, {{2, -2}})});
}

GradedSuperalgebra sl3() {
  const GroupSpec z2{2, {}};
  // h1 = 0, h2 = 1, e12 = 2, e23 = 3, e13 = 4, e21 = 5, e32 = 6, e31 = 7
  return GradedSuperalgebra::build(
      z2,
      {{"h1", {0, 0}, Parity::even},
       {"h2", {0, 0}, Parity::even},
       {"e12", {1, 0}, Parity::even},
       {"e23", {0, 1}, Parity::even},
       {"e13", {1, 1}, Parity::even},
       {"e21", {-1, 0}, Parity::even},
       {"e32", {0, -1}, Parity::even},
       {"e31", {-1, -1}, Parity::even}},
      {entry(0, 2, {{2, 2}}),          // [h1,e12] = 2 e12
       entry(0, 3, {{3, -1}}),         // [h1,e23] = -e23
       entry(0, 4, {{4, 1}}),          // [h1,e13] = e13
       entry(0, 5, {{5, -2}}),         // [h1,e21] = -2 e21
       entry(0, 6, {{6, 1}}),          // [h1,e32] = e32
       entry(0, 7, {{7, -1}}),         // [h1,e31] = -e31
       entry(1, 2, {{2, -1}}),         // [h2,e12] = -e12
       entry(1, 3, {{3, 2}}),          // [h2,e23] = 2 e23
       entry(1, 4, {{4, 1}}),          // [h2,e13] = e13
       entry(1, 5, {{5, 1}}),          // [h2,e21] = e21
       entry(1, 6, {{6, -2}}),         // [h2,e32] = -2 e32
       entry(1, 7, {{7, -1}}),         // [h2,e31] = -e31
       entry(2, 3, {{4, 1}}),          // [e12,e23] = e13
       entry(2, 5, {{0, 1}}),          // [e12,e21] = h1
       entry(2, 7, {{6, -1}}),         // [e12,e31] = -e32
       entry(3, 6, {{1, 1}}),          // [e23,e32] = h2
       entry(3, 7, {{5, 1}}),          // [e23,e31] = e21
       entry(4, 5, {{3, -1}}),         // [e13,e21] = -e23
       entry(4, 6, {{2, 1}}),          // [e13,e32] = e12
       entry(4, 7, {{0, 1}, {1, 1}}),  // [e13,e31] = h1 + h2
       entry(5, 6, {{7, -1}})});       // [e21,e32] = -e31
}

GradedSuperalgebra osp12xsl2() {
  const GroupSpec z2{2, {}};
  const GroupHom axis1 = make_hom({1, {}}, z2, {{1, 0}});
  const GroupHom axis2 = make_hom({1, {}}, z2, {{0, 1}});
  return direct_sum(pushforward(osp12(), axis1), pushforward(sl2(), axis2), "",
                    "'");
}

GradedSuperalgebra mixed3() {
  const GroupSpec z2{0, {2}};
  // p = 0 (identity, odd), u = 1 (degree 1, even), t = 2 (degree 1, odd)
  return GradedSuperalgebra::build(
      z2,
      {{"p", {0}, Parity::odd},
       {"u", {1}, Parity::even},
       {"t", {1}, Parity::odd}},
      {entry(0, 1, {{2, 1}}),   // [p,u] = t
       entry(1, 2, {{0, 1}})}); // [u,t] = p
}

GradedSuperalgebra mixed4() {
  const GroupSpec z2{0, {2}};
  // q = 0 (identity, even), p = 1 (identity, odd),
  // u = 2 (degree 1, even), t = 3 (degree 1, odd)
  return GradedSuperalgebra::build(
      z2,
      {{"q", {0}, Parity::even},
       {"p", {0}, Parity::odd},
       {"u", {1}, Parity::even},
       {"t", {1}, Parity::odd}},
      {entry(0, 1, {{1, -2}}),  // [q,p] = -2p
       entry(0, 2, {{2, -2}}),  // [q,u] = -2u
       entry(1, 3, {{2, 1}}),   // [p,t] = u
       entry(2, 3, {{1, 1}}),   // [u,t] = p
       entry(3, 3, {{0, 1}})}); // [t,t] = q
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "sl2",  "osp12",  "sl2xsl2", "sl2center",
      "sl3",  "osp12xsl2", "mixed3", "mixed4"};
  return names;
}

GradedSuperalgebra builtin(const std::string& name) {
  static const std::map<std::string, GradedSuperalgebra (*)()> registry = {
      {"sl2", sl2},           {"osp12", osp12},
      {"sl2xsl2", sl2xsl2},   {"sl2center", sl2center},
      {"sl3", sl3},           {"osp12xsl2", osp12xsl2},
      {"mixed3", mixed3},     {"mixed4", mixed4}};
  const auto it = registry.find(name);
  if (it != registry.end()) {
    GradedSuperalgebra alg = it->second();
    alg.name = name;
    return alg;
  }
  {
    std::string known;
    for (const auto& n : builtin_names()) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    throw std::invalid_argument("unknown builtin '" + name + "' (known: " +
                                known + ")");
  }
}

}  // namespace grlie
