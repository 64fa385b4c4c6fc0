#pragma once

#include <random>
#include <vector>

#include "grlie/builtins.hpp"
#include "grlie/connections.hpp"

namespace grlie::testing {

inline Vec uv(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline Vec vec_of(std::initializer_list<long> coords) {
  Vec v;
  for (long c : coords) v.push_back(make_rational(c));
  return v;
}

inline RawBracketEntry entry(
    std::size_t i, std::size_t j,
    std::initializer_list<std::pair<std::size_t, long>> terms) {
  RawBracketEntry e{i, j, {}};
  for (const auto& [target, coeff] : terms) {
    e.terms.push_back({target, make_rational(coeff)});
  }
  return e;
}

/// Random symmetric support of size <= 2 * base_count over the given group.
inline SupportGraph random_symmetric_support(const GroupSpec& spec,
                                             std::mt19937& rng,
                                             std::size_t base_count) {
  SupportGraph sg;
  sg.group = spec;
  std::uniform_int_distribution<int> free_coord(-2, 2);
  while (sg.elements.size() < 1) {
    for (std::size_t k = 0; k < base_count; ++k) {
      GroupElement g(spec.coord_count());
      for (std::size_t i = 0; i < spec.free_rank; ++i) g[i] = free_coord(rng);
      for (std::size_t t = 0; t < spec.torsion.size(); ++t) {
        g[spec.free_rank + t] =
            std::uniform_int_distribution<std::int64_t>(0, spec.torsion[t] - 1)(rng);
      }
      g = reduce(spec, g);
      if (is_identity(spec, g)) continue;
      sg.elements.insert(g);
      sg.elements.insert(inverse(spec, g));
    }
  }
  return sg;
}

/// Random homomorphism into `to`; torsion generators get images of
/// compatible order (falling back to the identity image).
inline GroupHom random_hom(const GroupSpec& from, const GroupSpec& to,
                           std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(-2, 2);
  std::vector<GroupElement> images;
  for (std::size_t gen = 0; gen < from.coord_count(); ++gen) {
    const bool is_torsion = gen >= from.free_rank;
    const std::int64_t order = is_torsion ? from.torsion[gen - from.free_rank] : 0;
    GroupElement image = identity(to);
    for (int attempt = 0; attempt < 16; ++attempt) {
      GroupElement candidate(to.coord_count());
      for (std::size_t i = 0; i < to.free_rank; ++i) candidate[i] = coord(rng);
      for (std::size_t t = 0; t < to.torsion.size(); ++t) {
        candidate[to.free_rank + t] =
            std::uniform_int_distribution<std::int64_t>(0, to.torsion[t] - 1)(rng);
      }
      candidate = reduce(to, candidate);
      if (!is_torsion) {
        image = candidate;
        break;
      }
      GroupElement scaled(to.coord_count(), 0);
      for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = candidate[i] * order;
      }
      if (is_identity(to, scaled)) {
        image = candidate;
        break;
      }
    }
    images.push_back(image);
  }
  return make_hom(from, to, images);
}

}  // namespace grlie::testing
