#pragma once

#include <compare>
#include <string>

#include "jordan/bigint.hpp"

namespace jordan {

/// A non-negative integer or infinity. Used for Rk_f and Bd, whose suprema may
/// be unbounded.
class ExtNat {
 public:
  ExtNat() = default;
  ExtNat(long long v);  // NOLINT: implicit from small literals is intended
  explicit ExtNat(BigInt v);

  static ExtNat infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Throws if infinite.
  BigInt const& value() const;

  std::string str() const;
  static ExtNat parse(std::string const& text);

  friend ExtNat operator+(ExtNat const& a, ExtNat const& b);
  /// x * inf = inf for x >= 1; 0 * inf = 0.
  friend ExtNat operator*(ExtNat const& a, ExtNat const& b);

  friend bool operator==(ExtNat const& a, ExtNat const& b);
  friend std::strong_ordering operator<=>(ExtNat const& a, ExtNat const& b);

 private:
  BigInt value_ = 0;
  bool infinite_ = false;
};

}  // namespace jordan
