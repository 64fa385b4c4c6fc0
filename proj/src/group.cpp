#include "grlie/group.hpp"

#include <stdexcept>

namespace grlie {

namespace {

void check_length(const GroupSpec& spec, const GroupElement& a) {
  if (a.size() != spec.coord_count()) {
    throw std::invalid_argument("group element has " + std::to_string(a.size()) +
                                " coordinates, spec expects " +
                                std::to_string(spec.coord_count()));
  }
}

}  // namespace

void check_spec(const GroupSpec& spec) {
  for (auto m : spec.torsion) {
    if (m < 2) {
      throw std::invalid_argument("torsion modulus must be >= 2, got " +
                                  std::to_string(m));
    }
  }
}

GroupElement identity(const GroupSpec& spec) {
  return GroupElement(spec.coord_count(), 0);
}

GroupElement reduce(const GroupSpec& spec, GroupElement a) {
  check_length(spec, a);
  for (std::size_t t = 0; t < spec.torsion.size(); ++t) {
    const std::int64_t m = spec.torsion[t];
    std::int64_t& c = a[spec.free_rank + t];
    c = ((c % m) + m) % m;
  }
  return a;
}

GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b) {
  check_length(spec, a);
  check_length(spec, b);
  GroupElement out(spec.coord_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return reduce(spec, std::move(out));
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
  check_length(spec, a);
  GroupElement out(spec.coord_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a[i];
  return reduce(spec, std::move(out));
}

bool is_identity(const GroupSpec& spec, const GroupElement& a) {
  const GroupElement r = reduce(spec, a);
  for (auto c : r) {
    if (c != 0) return false;
  }
  return true;
}

std::string element_to_string(const GroupElement& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  out += ")";
  return out;
}

}  // namespace grlie
