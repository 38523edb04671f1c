#pragma once

#include <cstdint>
#include <vector>

namespace jordan {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(IntMatrix const& a, IntMatrix const& b);

/// left * input * right == diagonal, with left/right unimodular and the
/// diagonal entries non-negative and forming a divisibility chain.
struct SmithForm {
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix diagonal;
  IntMatrix right;

  /// The min(rows, cols) diagonal entries in order.
  std::vector<std::int64_t> invariants() const;
};

/// Throws jordan::Error on int64 overflow.
SmithForm smith_normal_form(IntMatrix const& a);

/// Integer determinant by fraction-free elimination (Bareiss).
std::int64_t determinant(IntMatrix const& a);

}  // namespace jordan
