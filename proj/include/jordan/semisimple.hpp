#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/abelian_group.hpp"
#include "jordan/caps.hpp"
#include "jordan/root_system.hpp"

namespace jordan::semisimple {

/// A multiset of simple types, i.e. a simply connected semisimple group.
/// Factors are kept sorted; the empty multiset is the trivial group.
class SemisimpleType {
 public:
  SemisimpleType() = default;
  explicit SemisimpleType(std::vector<roots::SimpleType> factors);

  /// "A1xA1", "G2", or "1" for the trivial group.
  static SemisimpleType parse(std::string_view text);

  std::vector<roots::SimpleType> const& factors() const noexcept { return factors_; }
  std::int64_t dim() const;
  std::string name() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  /// Product of the factor centers, one component per invariant factor of
  /// each factor center, in factor order.
  CyclicProduct center() const;
  /// First center component of each factor, plus a final end offset.
  std::vector<std::size_t> component_offsets() const;

  friend auto operator<=>(SemisimpleType const&, SemisimpleType const&) = default;

 private:
  std::vector<roots::SimpleType> factors_;
};

/// The quotient of a simply connected group by a central subgroup K, with K
/// given by generators in base.center().
struct IsogenyClass {
  SemisimpleType base;
  std::vector<Element> kernel;

  static IsogenyClass simply_connected(SemisimpleType base);
  static IsogenyClass adjoint(SemisimpleType base);

  /// "A1xA1" when K is trivial, "A1xA1/center" when K is everything,
  /// otherwise "A1xA1/<(1,1)>".
  std::string name() const;
};

/// All multisets of admissible simple types with total dim <= n, the trivial
/// group first, ordered by (dim, factors).
std::vector<SemisimpleType> enumerate_semisimple(int n, Caps const& caps = {});

std::vector<Subgroup> enumerate_central_subgroups(FiniteAbelianGroup const& z, Caps const& caps = {});

/// Z(S~) / K in invariant-factor form.
FiniteAbelianGroup quotient_center(IsogenyClass const& cls);

/// One irreducible summand: a dominant weight per factor.
using Summand = std::vector<roots::DominantWeight>;

struct FaithfulRepresentation {
  std::int64_t dim = 0;
  std::vector<Summand> summands;
};

/// A smallest representation whose summands each act nontrivially on some
/// factor, cover every factor, and whose joint central kernel is exactly K.
/// Throws CapExceeded when nothing of dimension <= caps.search_dim works.
FaithfulRepresentation min_faithful_representation(IsogenyClass const& cls, Caps const& caps = {});
std::int64_t min_faithful_dim(IsogenyClass const& cls, Caps const& caps = {});

struct ClassRow {
  IsogenyClass cls;
  std::int64_t dim;
  FiniteAbelianGroup center;    // of the simply connected form
  FiniteAbelianGroup quotient;  // center of the class
  FaithfulRepresentation faithful;
};

/// Every isogeny class of every semisimple type of dim <= n. Memoized per
/// base type; thread-safe.
std::vector<ClassRow> enumeration_table(int n, Caps const& caps = {});

/// Smallest N such that every connected semisimple group of dim <= n embeds
/// in GL_N; 0 when only the trivial group exists.
std::int64_t n_of(int n, Caps const& caps = {});

/// Largest |Z(S)| over connected semisimple S of dim <= n.
std::uint64_t max_center_order(int n, Caps const& caps = {});

}  // namespace jordan::semisimple
