#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/bigint.hpp"
#include "jordan/caps.hpp"
#include "jordan/ext_nat.hpp"

namespace jordan {

/// Enclosure lo <= log10(x) <= hi, endpoints as decimal strings rounded
/// outward.
struct Log10Interval {
  std::string lo;
  std::string hi;
};

/// A positive integer kept as a product of powers prod b_i^e_i (b_i >= 2,
/// e_i >= 1, bases sorted and distinct), or infinity. Values of this kind
/// routinely have more digits than fit in memory, so arithmetic and
/// comparison never expand them.
class BoundValue {
 public:
  using Factor = std::pair<BigInt, BigInt>;  // base, exponent

  BoundValue() = default;  // 1
  /// Throws InvalidArgument for v < 1.
  explicit BoundValue(BigInt v);
  BoundValue(long v) : BoundValue(BigInt(v)) {}  // NOLINT
  /// base^exp with 0^0 = 1; throws for a zero base with positive exponent.
  static BoundValue power(BigInt base, BigInt exp);
  static BoundValue from_factors(std::vector<Factor> factors);
  static BoundValue infinity();
  /// Infinity maps to infinity.
  static BoundValue from(ExtNat const& v);

  bool is_infinite() const noexcept { return infinite_; }
  bool is_one() const noexcept { return !infinite_ && factors_.empty(); }
  std::vector<Factor> const& factors() const noexcept { return factors_; }

  friend BoundValue operator*(BoundValue const& a, BoundValue const& b);
  BoundValue pow(BigInt const& e) const;

  /// Certified enclosure computed with `bits` of working precision. Throws
  /// for infinity.
  Log10Interval log10(unsigned long bits = 128) const;
  /// Lower bound on the number of decimal digits.
  BigInt min_digits() const;
  /// The integer itself when it has at most caps.digit_cap digits.
  std::optional<BigInt> expand(Caps const& caps = {}) const;

  /// "1", "14", "74814184347878 * 27^324", "inf".
  std::string str() const;

  /// Exact: both sides are rewritten over a common coprime basis.
  friend bool operator==(BoundValue const& a, BoundValue const& b);
  /// Exact: equality first, then log10 enclosures at increasing precision.
  friend std::strong_ordering operator<=>(BoundValue const& a, BoundValue const& b);

 private:
  void normalize();

  std::vector<Factor> factors_;
  bool infinite_ = false;
};

BoundValue min(BoundValue const& a, BoundValue const& b);

}  // namespace jordan
