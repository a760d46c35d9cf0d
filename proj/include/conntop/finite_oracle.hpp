#pragma once

#include <cstdint>
#include <vector>

#include "conntop/presentation.hpp"

namespace conntop {
namespace oracle {

// A concrete finite abelian group: the product of Z/n over `factors`.
// Elements are mixed-radix indices into the product.
struct ConcreteGroup {
  std::vector<std::uint64_t> factors;  // each >= 2
  std::uint64_t order = 1;

  std::vector<std::uint64_t> decode(std::uint64_t index) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& coords) const;
  std::uint64_t scale(std::uint64_t m, std::uint64_t index) const;  // m * x
};

ConcreteGroup make_group(std::vector<std::uint64_t> factors, std::uint64_t max_order = 1000000);

// Presentation with only finite cyclic terms, one factor per copy.
// Raises NotFinite / TooLarge.
ConcreteGroup realize(const Presentation& g, std::uint64_t max_order = 1000000);

// An enumerated subgroup: sorted element indices, closed under the group
// operation by construction.
struct ElementSet {
  std::vector<std::uint64_t> elems;
  std::uint64_t size() const { return elems.size(); }
};

ElementSet all_elements(const ConcreteGroup& g);
ElementSet image_mG(std::uint64_t m, const ConcreteGroup& g);
ElementSet kernel_m(std::uint64_t m, const ConcreteGroup& g);

// Isomorphism type by element counting: the multiplicity of Z(p^i) is read
// off from the sizes of the p-torsion layers of p^(i-1)S and p^i S.
Presentation iso_type(const ConcreteGroup& g, const ElementSet& s);
Presentation iso_type(const ConcreteGroup& g);

// All multisets of prime-power factors giving a group of order exactly n.
std::vector<std::vector<std::uint64_t>> factor_multisets_of_order(std::uint64_t n);

}  // namespace oracle
}  // namespace conntop
