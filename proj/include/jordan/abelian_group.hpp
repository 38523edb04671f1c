#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "jordan/bigint.hpp"
#include "jordan/caps.hpp"

namespace jordan {

/// Group element as a tuple of residues, one per cyclic component.
using Element = std::vector<std::int64_t>;

class CyclicProduct;

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... | d_k, each
/// d_i > 1. The empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Throws InvalidArgument unless the list is a divisibility chain of factors > 1.
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> invariant_factors);

  /// Normalizes an arbitrary direct product of cyclic groups.
  static FiniteAbelianGroup from_cyclic_orders(std::span<const std::uint64_t> orders);
  static FiniteAbelianGroup cyclic(std::uint64_t n);
  /// Recovers the structure of an abelian group from how many elements it has
  /// of each order. Throws InvalidArgument if no abelian group fits.
  static FiniteAbelianGroup from_element_orders(std::map<std::uint64_t, std::uint64_t> const& histogram);

  std::vector<std::uint64_t> const& invariant_factors() const noexcept { return factors_; }
  std::uint64_t order() const;
  /// Minimal number of generators.
  std::size_t rank() const noexcept { return factors_.size(); }
  bool is_trivial() const noexcept { return factors_.empty(); }

  /// Exact number of subgroups, from the p-primary types (Birkhoff's count of
  /// subgroups of each type mu inside type lambda).
  BigInt subgroup_count() const;

  /// "1", "Z_4", "Z_2+Z_2".
  std::string str() const;
  CyclicProduct as_product() const;

  friend bool operator==(FiniteAbelianGroup const&, FiniteAbelianGroup const&) = default;

 private:
  std::vector<std::uint64_t> factors_;
};

/// A subgroup given by generators, with its membership bitmap over the
/// element indices of the ambient group.
struct Subgroup {
  std::vector<Element> generators;
  std::vector<bool> members;
  std::uint64_t order = 1;

  bool contains_index(std::uint64_t i) const { return members[i]; }
};

/// Z_{m_1} x ... x Z_{m_k} with arbitrary moduli >= 1. Elements are indexed
/// in mixed radix, first component least significant.
class CyclicProduct {
 public:
  CyclicProduct() = default;
  explicit CyclicProduct(std::vector<std::uint64_t> moduli);

  std::vector<std::uint64_t> const& moduli() const noexcept { return moduli_; }
  std::size_t components() const noexcept { return moduli_.size(); }
  std::uint64_t order() const noexcept { return order_; }

  std::uint64_t index(Element const& e) const;
  Element element(std::uint64_t index) const;
  Element zero() const { return Element(moduli_.size(), 0); }
  Element reduce(Element e) const;
  Element add(Element const& a, Element const& b) const;
  Element negate(Element const& a) const;
  Element scale(Element const& a, std::int64_t k) const;
  std::uint64_t element_order(Element const& a) const;

  Subgroup span(std::span<const Element> generators) const;
  /// span(S.generators + {g}) computed from S's bitmap by adding cosets.
  Subgroup join(Subgroup const& s, Element const& g) const;

  FiniteAbelianGroup structure() const;
  FiniteAbelianGroup subgroup_structure(Subgroup const& s) const;
  FiniteAbelianGroup quotient(std::span<const Element> generators) const;

  /// All subgroups, trivial first, then in discovery order. Throws
  /// CapExceeded if the order exceeds caps.center_order or the count exceeds
  /// caps.subgroup_count.
  std::vector<Subgroup> subgroups(Caps const& caps = {}) const;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
};

std::string element_str(Element const& e);

}  // namespace jordan
