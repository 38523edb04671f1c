#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/abelian_group.hpp"
#include "jordan/bigint.hpp"
#include "jordan/smith.hpp"

namespace jordan::roots {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Dynkin type. Only one representative of each low-rank
/// isomorphism is admissible: A_l (l>=1), B_l (l>=2), C_l (l>=3),
/// D_l (l>=4), E_6/E_7/E_8, F_4, G_2.
class SimpleType {
 public:
  /// Throws InvalidArgument with the reason when the rank is not admissible.
  SimpleType(Family family, int rank);

  /// "A1", "D4", "E8".
  static SimpleType parse(std::string_view text);
  static bool admissible(Family family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::int64_t dim() const;
  std::string name() const;

  friend auto operator<=>(SimpleType const&, SimpleType const&) = default;

 private:
  Family family_;
  int rank_;
};

/// All admissible types of rank <= max_rank, ordered by family then rank.
std::vector<SimpleType> admissible_types(int max_rank);
/// All admissible types with dim <= max_dim, ordered by (dim, family, rank).
std::vector<SimpleType> types_up_to_dim(std::int64_t max_dim);

struct CatalogEntry {
  std::int64_t dim;
  int rank;
  FiniteAbelianGroup center;  // center of the simply connected form
};

/// The classification table row for the type.
CatalogEntry catalog_entry(SimpleType type);

/// Highest weight in fundamental-weight coordinates; all entries >= 0.
class DominantWeight {
 public:
  DominantWeight() = default;
  explicit DominantWeight(std::vector<std::int64_t> coords);

  static DominantWeight zero(std::size_t rank) { return DominantWeight(std::vector<std::int64_t>(rank, 0)); }
  static DominantWeight fundamental(std::size_t rank, std::size_t i);
  /// "[1,0,0]".
  static DominantWeight parse(std::string_view text);

  std::vector<std::int64_t> const& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  bool is_zero() const;
  std::string str() const;

  friend auto operator<=>(DominantWeight const&, DominantWeight const&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// The image of the center of the simply connected group inside Z^r / C Z^r,
/// where C is the Cartan matrix acting on column vectors.
struct CenterPresentation {
  FiniteAbelianGroup group;
  /// Coset representative in Z^r of each invariant-factor generator.
  std::vector<std::vector<std::int64_t>> generator_coweights;
  /// The k-th character numerator of weight lambda is lambda . column k, mod d_k.
  IntMatrix character_columns;
  SmithForm smith;
  std::vector<std::size_t> smith_index;  // smith diagonal position of each factor
};

struct RootSystem {
  SimpleType type;
  /// Symmetric form (alpha_i, alpha_j), scaled to integers.
  IntMatrix bilinear;
  /// cartan[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  IntMatrix cartan;
  /// Simple-root coordinates, sorted by height then lexicographically.
  std::vector<std::vector<std::int64_t>> positive_roots;
  DominantWeight rho;
  CenterPresentation center;

  std::vector<std::int64_t> const& highest_root() const { return positive_roots.back(); }
  /// The highest root in fundamental-weight coordinates.
  DominantWeight adjoint_weight() const;
};

/// Throws CapExceeded above rank 64.
RootSystem build_root_system(SimpleType type);
/// Memoized build_root_system; thread-safe.
std::shared_ptr<RootSystem const> root_system(SimpleType type);

BigInt weyl_dim(RootSystem const& rs, DominantWeight const& lambda);
BigInt weyl_dim(SimpleType type, DominantWeight const& lambda);

/// Reduced fraction in [0, 1).
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(Fraction const&, Fraction const&) = default;
};

/// The scalar by which the center acts on V_lambda, as a map Z -> Q/Z.
class CentralCharacter {
 public:
  CentralCharacter(FiniteAbelianGroup center, std::vector<std::uint64_t> numerators);

  FiniteAbelianGroup const& center() const noexcept { return center_; }
  /// Value on the k-th invariant-factor generator is numerators()[k] / d_k.
  std::vector<std::uint64_t> const& numerators() const noexcept { return numerators_; }
  Fraction value(Element const& z) const;
  bool is_trivial() const;
  /// The character as an element of the dual group, identified with the center.
  Element as_element() const;

 private:
  FiniteAbelianGroup center_;
  std::vector<std::uint64_t> numerators_;
};

CentralCharacter central_character(SimpleType type, DominantWeight const& lambda);

/// lambda . C^{-1} v mod 1 for an arbitrary coweight representative v.
Fraction character_on_coweight(RootSystem const& rs, DominantWeight const& lambda, std::vector<std::int64_t> const& v);

struct CentralSubgroup {
  Subgroup subgroup;  // inside center().as_product()
  FiniteAbelianGroup structure;
};

/// { z in Z : chi_lambda(z) = 0 }. Rejects lambda = 0.
CentralSubgroup irrep_kernel_on_center(SimpleType type, DominantWeight const& lambda);

}  // namespace jordan::roots
