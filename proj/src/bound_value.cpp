#include "jordan/bound_value.hpp"

#include <algorithm>
#include <map>

#include <mpfr.h>

#include "jordan/error.hpp"

namespace jordan {

namespace {

// RAII wrapper; MPFR has no C++ binding in the standard packages.
struct Mpfr {
  mpfr_t v;
  explicit Mpfr(unsigned long bits) { mpfr_init2(v, static_cast<mpfr_prec_t>(bits)); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(Mpfr const&) = delete;
  Mpfr& operator=(Mpfr const&) = delete;
};

// Sum of e_i * log10(b_i) rounded in direction rnd.
void log10_bound(std::vector<BoundValue::Factor> const& fs, unsigned long bits, mpfr_rnd_t rnd, Mpfr& out) {
  Mpfr term(bits), base(bits), exp(bits);
  mpfr_set_zero(out.v, 1);
  for (auto const& [b, e] : fs) {
    mpfr_set_z(base.v, b.get_mpz_t(), rnd);
    mpfr_log10(term.v, base.v, rnd);
    mpfr_set_z(exp.v, e.get_mpz_t(), rnd);
    mpfr_mul(term.v, term.v, exp.v, rnd);  // both factors are >= 0
    mpfr_add(out.v, out.v, term.v, rnd);
  }
}

std::string format(Mpfr const& x, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, rnd == MPFR_RNDD ? "%.15RDf" : "%.15RUf", x.v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

// Pairwise-coprime integers >= 2 such that every input is a product of them.
std::vector<BigInt> coprime_basis(std::vector<BigInt> xs) {
  std::vector<BigInt> basis;
  while (!xs.empty()) {
    BigInt x = xs.back();
    xs.pop_back();
    if (x == 1) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      BigInt g = gcd(x, basis[i]);
      if (g == 1) continue;
      BigInt y = basis[i];
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      xs.push_back(g);
      xs.push_back(BigInt(x / g));
      xs.push_back(BigInt(y / g));
      split = true;
      break;
    }
    if (!split && std::find(basis.begin(), basis.end(), x) == basis.end()) basis.push_back(x);
  }
  return basis;
}

std::map<BigInt, BigInt> exponents_over(std::vector<BoundValue::Factor> const& fs, std::vector<BigInt> const& basis) {
  std::map<BigInt, BigInt> out;
  for (auto const& [b, e] : fs) {
    BigInt rest = b;
    for (auto const& q : basis) {
      unsigned long k = 0;
      while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
        rest /= q;
        ++k;
      }
      if (k) out[q] += e * k;
    }
    if (rest != 1) throw Error("coprime basis does not cover " + b.get_str());
  }
  return out;
}

}  // namespace

BoundValue::BoundValue(BigInt v) {
  if (v < 1) throw InvalidArgument("bound values must be positive, got " + v.get_str());
  factors_.emplace_back(std::move(v), 1);
  normalize();
}

BoundValue BoundValue::power(BigInt base, BigInt exp) {
  if (exp < 0) throw InvalidArgument("negative exponent");
  if (exp == 0) return {};
  BoundValue r;
  if (base < 1) throw InvalidArgument("bound values must be positive, got " + base.get_str() + "^" + exp.get_str());
  r.factors_.emplace_back(std::move(base), std::move(exp));
  r.normalize();
  return r;
}

BoundValue BoundValue::from_factors(std::vector<Factor> factors) {
  BoundValue r;
  for (auto& [b, e] : factors) r = r * power(std::move(b), std::move(e));
  return r;
}

BoundValue BoundValue::infinity() {
  BoundValue r;
  r.infinite_ = true;
  return r;
}

BoundValue BoundValue::from(ExtNat const& v) { return v.is_infinite() ? infinity() : BoundValue(v.value()); }

void BoundValue::normalize() {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (auto& f : factors_) {
    if (f.first == 1 || f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(std::move(f));
  }
  factors_ = std::move(merged);
}

BoundValue operator*(BoundValue const& a, BoundValue const& b) {
  if (a.infinite_ || b.infinite_) return BoundValue::infinity();
  BoundValue r;
  r.factors_ = a.factors_;
  r.factors_.insert(r.factors_.end(), b.factors_.begin(), b.factors_.end());
  r.normalize();
  return r;
}

BoundValue BoundValue::pow(BigInt const& e) const {
  if (e < 0) throw InvalidArgument("negative exponent");
  if (e == 0) return {};
  if (infinite_) return *this;
  BoundValue r = *this;
  for (auto& f : r.factors_) f.second *= e;
  return r;
}

Log10Interval BoundValue::log10(unsigned long bits) const {
  if (infinite_) throw InvalidArgument("log10 of an infinite bound");
  Mpfr lo(bits), hi(bits);
  log10_bound(factors_, bits, MPFR_RNDD, lo);
  log10_bound(factors_, bits, MPFR_RNDU, hi);
  return {format(lo, MPFR_RNDD), format(hi, MPFR_RNDU)};
}

BigInt BoundValue::min_digits() const {
  if (infinite_) throw InvalidArgument("digits of an infinite bound");
  Mpfr lo(128);
  log10_bound(factors_, 128, MPFR_RNDD, lo);
  mpfr_floor(lo.v, lo.v);
  BigInt d;
  mpfr_get_z(d.get_mpz_t(), lo.v, MPFR_RNDD);
  return d + 1;
}

std::optional<BigInt> BoundValue::expand(Caps const& caps) const {
  if (infinite_) return std::nullopt;
  if (min_digits() > caps.digit_cap) return std::nullopt;
  BigInt v = 1;
  for (auto const& [b, e] : factors_) {
    if (!e.fits_ulong_p()) return std::nullopt;
    v *= jordan::pow(b, e.get_ui());
    if (decimal_digits(v) > caps.digit_cap) return std::nullopt;
  }
  return v;
}

std::string BoundValue::str() const {
  if (infinite_) return "inf";
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " * ";
    s += factors_[i].first.get_str();
    if (factors_[i].second != 1) s += "^" + factors_[i].second.get_str();
  }
  return s;
}

bool operator==(BoundValue const& a, BoundValue const& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  if (a.factors_ == b.factors_) return true;
  std::vector<BigInt> bases;
  for (auto const& f : a.factors_) bases.push_back(f.first);
  for (auto const& f : b.factors_) bases.push_back(f.first);
  auto basis = coprime_basis(bases);
  return exponents_over(a.factors_, basis) == exponents_over(b.factors_, basis);
}

std::strong_ordering operator<=>(BoundValue const& a, BoundValue const& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a == b) return std::strong_ordering::equal;
  // Distinct integers, so some precision separates the enclosures.
  for (unsigned long bits = 64;; bits *= 2) {
    Mpfr alo(bits), ahi(bits), blo(bits), bhi(bits);
    log10_bound(a.factors_, bits, MPFR_RNDD, alo);
    log10_bound(a.factors_, bits, MPFR_RNDU, ahi);
    log10_bound(b.factors_, bits, MPFR_RNDD, blo);
    log10_bound(b.factors_, bits, MPFR_RNDU, bhi);
    if (mpfr_less_p(ahi.v, blo.v)) return std::strong_ordering::less;
    if (mpfr_less_p(bhi.v, alo.v)) return std::strong_ordering::greater;
    if (bits > (1ul << 22)) throw Error("could not separate " + a.str() + " and " + b.str());
  }
}

BoundValue min(BoundValue const& a, BoundValue const& b) { return b < a ? b : a; }

}  // namespace jordan
