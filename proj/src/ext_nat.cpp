#include "jordan/ext_nat.hpp"

#include "jordan/error.hpp"

namespace jordan {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty integer");
  for (char c : text)
    if (c < '0' || c > '9') throw InvalidArgument("not a non-negative integer: " + std::string(text));
  return BigInt(std::string(text), 10);
}

BigInt isqrt(BigInt const& v) {
  if (v < 0) throw InvalidArgument("isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

BigInt pow(BigInt const& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::size_t decimal_digits(BigInt const& v) {
  if (v == 0) return 1;
  BigInt a = abs(v);
  // mpz_sizeinbase may overshoot by one
  std::size_t d = mpz_sizeinbase(a.get_mpz_t(), 10);
  BigInt p = pow(BigInt(10), static_cast<unsigned long>(d - 1));
  return a < p ? d - 1 : d;
}

ExtNat::ExtNat(long long v) : value_(static_cast<long>(v)) {
  if (v < 0) throw InvalidArgument("ExtNat must be non-negative");
}

ExtNat::ExtNat(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) throw InvalidArgument("ExtNat must be non-negative");
}

ExtNat ExtNat::infinity() {
  ExtNat r;
  r.infinite_ = true;
  return r;
}

BigInt const& ExtNat::value() const {
  if (infinite_) throw Error("value() of infinite ExtNat");
  return value_;
}

std::string ExtNat::str() const { return infinite_ ? "inf" : value_.get_str(); }

ExtNat ExtNat::parse(std::string const& text) {
  if (text == "inf") return infinity();
  return ExtNat(parse_bigint(text));
}

ExtNat operator+(ExtNat const& a, ExtNat const& b) {
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(BigInt(a.value_ + b.value_));
}

ExtNat operator*(ExtNat const& a, ExtNat const& b) {
  if (a.is_finite() && a.value_ == 0) return ExtNat(0);
  if (b.is_finite() && b.value_ == 0) return ExtNat(0);
  if (a.infinite_ || b.infinite_) return ExtNat::infinity();
  return ExtNat(BigInt(a.value_ * b.value_));
}

bool operator==(ExtNat const& a, ExtNat const& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(ExtNat const& a, ExtNat const& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace jordan
