#pragma once

#include <string>
#include <vector>

#include "grlie/algebra.hpp"

namespace grlie {

/// Homomorphism between finitely generated abelian groups, given by the
/// images of the source generators (free generators first, then torsion
/// generators). Construction checks that each torsion generator's image has
/// compatible order.
struct GroupHom {
  GroupSpec from;
  GroupSpec to;
  std::vector<GroupElement> generator_images;
};

GroupHom make_hom(GroupSpec from, GroupSpec to,
                  std::vector<GroupElement> generator_images);
GroupElement apply_hom(const GroupHom& hom, const GroupElement& a);

/// Regrades an algebra along a group homomorphism: same basis and table,
/// degrees mapped. Compatibility of the grading is preserved.
GradedSuperalgebra pushforward(const GradedSuperalgebra& alg,
                               const GroupHom& hom);

/// External direct sum over a common grading group. Basis names get the
/// given suffixes; remaining collisions are disambiguated with primes.
GradedSuperalgebra direct_sum(const GradedSuperalgebra& a,
                              const GradedSuperalgebra& b,
                              const std::string& suffix_a = "",
                              const std::string& suffix_b = "'");

// Builtin corpus. Every entry is certified by the validator in the tests.

/// sl(2) with its weight grading over Z: e at 1, h at 0, f at -1.
GradedSuperalgebra sl2();
/// osp(1|2) over Z: even sl(2) at degrees {0, +-2}, odd pair at +-1.
GradedSuperalgebra osp12();
/// sl(2) + sl(2) over Z^2, one summand per axis.
GradedSuperalgebra sl2xsl2();
/// sl(2) over Z plus one central even generator z at the identity degree.
GradedSuperalgebra sl2center();
/// sl(3) with its full root grading over Z^2.
GradedSuperalgebra sl3();
/// osp(1|2) + sl(2) over Z^2 on disjoint axes.
GradedSuperalgebra osp12xsl2();
/// 3-dimensional mixed-parity algebra over Z/2 with one self-inverse
/// support degree: not gr-simple, zero center, bracket part of dimension 1.
GradedSuperalgebra mixed3();
/// 4-dimensional variant with bracket part of dimension 2.
GradedSuperalgebra mixed4();

const std::vector<std::string>& builtin_names();
/// Throws std::invalid_argument for unknown names.
GradedSuperalgebra builtin(const std::string& name);

}  // namespace grlie
