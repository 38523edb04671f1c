#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jordan {

using BigInt = mpz_class;

inline std::string to_string(BigInt const& v) { return v.get_str(); }

BigInt parse_bigint(std::string_view text);

/// floor(sqrt(v)) for v >= 0.
BigInt isqrt(BigInt const& v);

BigInt pow(BigInt const& base, unsigned long exp);

/// Number of decimal digits of |v| (1 for zero).
std::size_t decimal_digits(BigInt const& v);

}  // namespace jordan
