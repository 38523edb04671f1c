#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/abelian_group.hpp"
#include "jordan/bound_value.hpp"
#include "jordan/caps.hpp"

namespace jordan::finite {

/// Bijection of {1..degree}, stored 0-based.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);
  /// Throws InvalidArgument unless `images` is a bijection of 0..n-1.
  static Permutation from_images(std::vector<std::uint32_t> images);
  /// Disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()"
  /// and "" are the identity.
  static Permutation parse(std::string_view cycles, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::vector<std::uint32_t> const& images() const noexcept { return images_; }
  bool is_identity() const;

  /// (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(Permutation const& a, Permutation const& b);
  Permutation inverse() const;
  /// Same permutation on a larger point set; the new points are fixed.
  Permutation extended(std::size_t degree, std::size_t shift = 0) const;

  std::string str() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept;
};

/// Group generated by permutations of a common degree. The element list is
/// computed on first use; element 0 is the identity.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Permutation> const& generators() const noexcept { return generators_; }

  /// Throws CapExceeded (with the number of elements found so far as a lower
  /// bound) when the group has more than caps.closure_order elements.
  std::vector<Permutation> const& elements(Caps const& caps = {}) const;
  std::size_t order(Caps const& caps = {}) const { return elements(caps).size(); }
  bool is_abelian() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  mutable std::optional<std::vector<Permutation>> elements_;
};

/// The group generated by `gens`, with its elements materialized.
PermGroup closure(std::vector<Permutation> gens, Caps const& caps = {});
/// G1 x G2 acting on disjoint point sets.
PermGroup direct_product(PermGroup const& a, PermGroup const& b);

/// Largest order of an abelian subgroup. Searches iterated centralizers
/// C(g_1, ..., g_k): every maximal abelian subgroup is its own centralizer.
std::uint64_t max_abelian_order(PermGroup const& g, Caps const& caps = {});
/// |G| over the largest abelian subgroup; the subgroup need not be normal.
std::uint64_t jordan_index(PermGroup const& g, Caps const& caps = {});
/// Largest jordan_index over all subgroups. Throws CapExceeded carrying
/// jordan_index(G) as a lower bound when |G| > caps.subgroup_enum_order.
std::uint64_t jordan_constant_exact(PermGroup const& g, Caps const& caps = {});
/// Number of subgroups, from the same enumeration.
std::size_t subgroup_count(PermGroup const& g, Caps const& caps = {});

/// Invariant factors of an abelian group; InvalidArgument otherwise.
FiniteAbelianGroup abelian_invariants(PermGroup const& g, Caps const& caps = {});
std::uint64_t rkf_abelian(PermGroup const& g, Caps const& caps = {});

/// A group the caller asserts lives in GL_n, in a connected group of
/// dimension n, or in Aut^0 of an n-dimensional variety.
struct BoundContext {
  enum class Kind { gl, connected, aut0 };
  Kind kind = Kind::gl;
  int n = 1;

  /// "gl:2", "connected:3", "aut0:1".
  static BoundContext parse(std::string_view text);
  std::string str() const;
  /// The computed Jordan constant bound for the context.
  BoundValue bound(Caps const& caps = {}) const;
};

struct VerifyReport {
  BoundContext context;
  std::uint64_t order = 1;
  std::uint64_t index = 1;
  std::optional<std::uint64_t> constant;  // absent when over the cap
  BoundValue bound;
  bool pass = true;

  /// Largest of the computed Jordan quantities.
  std::uint64_t observed() const;
  /// "12 <= 390624 PASS".
  std::string str() const;
};

VerifyReport verify_bound(PermGroup const& g, BoundContext const& context, Caps const& caps = {});

/// "degree N" then one generator per line; '#' starts a comment.
PermGroup parse_perm_group(std::string_view text);
PermGroup load_perm_group(std::filesystem::path const& path);

}  // namespace jordan::finite
