#include "jordan/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "jordan/error.hpp"
#include "jordan/smith.hpp"

namespace jordan {

namespace {

std::uint64_t checked_product(std::span<const std::uint64_t> xs) {
  std::uint64_t r = 1;
  for (auto x : xs)
    if (__builtin_mul_overflow(r, x, &r)) throw Error("group order overflows 64 bits");
  return r;
}

FiniteAbelianGroup from_invariants(std::vector<std::int64_t> const& inv) {
  std::vector<std::uint64_t> f;
  for (auto d : inv)
    if (d > 1) f.push_back(static_cast<std::uint64_t>(d));
  return FiniteAbelianGroup(std::move(f));
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvalidArgument("invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw InvalidArgument("invariant factors must form a divisibility chain");
  }
  checked_product(factors_);
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(std::span<const std::uint64_t> orders) {
  IntMatrix diag(orders.size(), std::vector<std::int64_t>(orders.size(), 0));
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) throw InvalidArgument("cyclic order must be positive");
    diag[i][i] = static_cast<std::int64_t>(orders[i]);
  }
  return from_invariants(smith_normal_form(diag).invariants());
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cyclic order must be positive");
  return n == 1 ? FiniteAbelianGroup{} : FiniteAbelianGroup({n});
}

FiniteAbelianGroup FiniteAbelianGroup::from_element_orders(std::map<std::uint64_t, std::uint64_t> const& histogram) {
  std::uint64_t total = 0;
  for (auto const& [ord, count] : histogram) total += count;
  if (total == 0) throw InvalidArgument("empty element-order histogram");

  std::vector<std::uint64_t> primes;
  std::uint64_t rest = total;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);

  // For each prime p, #{x : x^(p^k) = 1} = p^(s_k); s_k - s_(k-1) cyclic
  // p-factors have exponent >= k.
  std::vector<std::uint64_t> primary;
  for (auto p : primes) {
    std::uint64_t p_part = 1;
    for (std::uint64_t t = total; t % p == 0; t /= p) p_part *= p;
    std::vector<std::uint64_t> s{0};
    for (std::uint64_t pk = p;; pk *= p) {
      std::uint64_t c = 0;
      for (auto const& [ord, count] : histogram)
        if (pk % ord == 0) c += count;
      std::uint64_t e = 0, v = 1;
      while (v < c) {
        v *= p;
        ++e;
      }
      if (v != c) throw InvalidArgument("element orders do not fit an abelian group");
      s.push_back(e);
      if (c == p_part) break;
      if (pk > total) throw InvalidArgument("element orders do not fit an abelian group");
    }
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::uint64_t at_least_k = s[k] - s[k - 1];
      std::uint64_t at_least_next = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= p;
      for (std::uint64_t i = at_least_next; i < at_least_k; ++i) primary.push_back(pk);
    }
  }
  auto g = from_cyclic_orders(primary);
  if (g.order() != total) throw InvalidArgument("element orders do not fit an abelian group");
  return g;
}

std::uint64_t FiniteAbelianGroup::order() const { return checked_product(factors_); }

std::string FiniteAbelianGroup::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "+";
    s += "Z_" + std::to_string(factors_[i]);
  }
  return s;
}

CyclicProduct FiniteAbelianGroup::as_product() const { return CyclicProduct(factors_); }

CyclicProduct::CyclicProduct(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_)
    if (m == 0) throw InvalidArgument("cyclic modulus must be positive");
  order_ = checked_product(moduli_);
}

std::uint64_t CyclicProduct::index(Element const& e) const {
  if (e.size() != moduli_.size()) throw InvalidArgument("element arity mismatch");
  std::uint64_t idx = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    auto m = static_cast<std::int64_t>(moduli_[i]);
    idx = idx * moduli_[i] + static_cast<std::uint64_t>(((e[i] % m) + m) % m);
  }
  return idx;
}

Element CyclicProduct::element(std::uint64_t index) const {
  Element e(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    e[i] = static_cast<std::int64_t>(index % moduli_[i]);
    index /= moduli_[i];
  }
  return e;
}

Element CyclicProduct::reduce(Element e) const {
  if (e.size() != moduli_.size()) throw InvalidArgument("element arity mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto m = static_cast<std::int64_t>(moduli_[i]);
    e[i] = ((e[i] % m) + m) % m;
  }
  return e;
}

Element CyclicProduct::add(Element const& a, Element const& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return reduce(std::move(r));
}

Element CyclicProduct::negate(Element const& a) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return reduce(std::move(r));
}

Element CyclicProduct::scale(Element const& a, std::int64_t k) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto m = static_cast<std::int64_t>(moduli_[i]);
    r[i] = static_cast<std::int64_t>((static_cast<__int128>(a[i] % m) * (k % m)) % m);
  }
  return reduce(std::move(r));
}

std::uint64_t CyclicProduct::element_order(Element const& a) const {
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto m = moduli_[i];
    auto x = static_cast<std::uint64_t>(((a[i] % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) %
                                        static_cast<std::int64_t>(m));
    ord = std::lcm(ord, m / std::gcd(m, x));
  }
  return ord;
}

Subgroup CyclicProduct::span(std::span<const Element> generators) const {
  Subgroup s;
  s.members.assign(order_, false);
  s.members[0] = true;
  for (auto const& g : generators) s = join(s, g);
  return s;
}

Subgroup CyclicProduct::join(Subgroup const& s, Element const& g) const {
  Subgroup r = s;
  Element red = reduce(g);
  r.generators.push_back(red);
  if (s.members[index(red)]) return r;

  // <S, g> = union of cosets S + k g, for k below the order of g modulo S.
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 0; i < order_; ++i)
    if (s.members[i]) base.push_back(i);
  Element step = red;
  while (!r.members[index(step)]) {
    for (auto i : base) r.members[index(add(element(i), step))] = true;
    step = add(step, red);
  }
  r.order = static_cast<std::uint64_t>(std::count(r.members.begin(), r.members.end(), true));
  return r;
}

FiniteAbelianGroup CyclicProduct::subgroup_structure(Subgroup const& s) const {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t i = 0; i < order_; ++i)
    if (s.members[i]) ++hist[element_order(element(i))];
  return FiniteAbelianGroup::from_element_orders(hist);
}

FiniteAbelianGroup CyclicProduct::structure() const { return FiniteAbelianGroup::from_cyclic_orders(moduli_); }

FiniteAbelianGroup CyclicProduct::quotient(std::span<const Element> generators) const {
  std::size_t k = moduli_.size();
  IntMatrix rel(k, std::vector<std::int64_t>(k + generators.size(), 0));
  for (std::size_t i = 0; i < k; ++i) rel[i][i] = static_cast<std::int64_t>(moduli_[i]);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    Element g = reduce(generators[j]);
    for (std::size_t i = 0; i < k; ++i) rel[i][k + j] = g[i];
  }
  if (k == 0) return {};
  return from_invariants(smith_normal_form(rel).invariants());
}

namespace {

BigInt gaussian_binomial(long n, long k, unsigned long p) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= jordan::pow(BigInt(p), static_cast<unsigned long>(n - i)) - 1;
    den *= jordan::pow(BigInt(p), static_cast<unsigned long>(i + 1)) - 1;
  }
  return num / den;
}

// Conjugate partition, padded with zeros to `len` entries (1-based).
std::vector<long> conjugate(std::vector<long> const& part, std::size_t len) {
  std::vector<long> c(len + 2, 0);
  for (std::size_t i = 1; i <= len; ++i)
    for (auto x : part)
      if (x >= static_cast<long>(i)) ++c[i];
  return c;
}

// Subgroups of the abelian p-group of type lambda (decreasing exponents).
BigInt p_group_subgroups(std::vector<long> const& lambda, unsigned long p) {
  if (lambda.empty()) return 1;
  auto len = static_cast<std::size_t>(lambda.front());
  auto lc = conjugate(lambda, len);
  BigInt total = 0;
  std::vector<long> mu;
  auto recurse = [&](auto&& self, std::size_t i, long cap) -> void {
    if (i == lambda.size()) {
      auto mc = conjugate(mu, len);
      BigInt term = 1;
      for (std::size_t k = 1; k <= len; ++k) {
        term *= jordan::pow(BigInt(p), static_cast<unsigned long>(mc[k + 1] * (lc[k] - mc[k])));
        term *= gaussian_binomial(lc[k] - mc[k + 1], mc[k] - mc[k + 1], p);
      }
      total += term;
      return;
    }
    for (long x = 0; x <= std::min(cap, lambda[i]); ++x) {
      mu.push_back(x);
      self(self, i + 1, x);
      mu.pop_back();
    }
  };
  recurse(recurse, 0, lambda.front());
  return total;
}

}  // namespace

BigInt FiniteAbelianGroup::subgroup_count() const {
  std::map<std::uint64_t, std::vector<long>> types;
  for (auto d : factors_) {
    for (std::uint64_t p = 2; p * p <= d; ++p) {
      long e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      if (e) types[p].push_back(e);
    }
    if (d > 1) types[d].push_back(1);
  }
  BigInt total = 1;
  for (auto& [p, lambda] : types) {
    std::sort(lambda.rbegin(), lambda.rend());
    total *= p_group_subgroups(lambda, static_cast<unsigned long>(p));
  }
  return total;
}

std::vector<Subgroup> CyclicProduct::subgroups(Caps const& caps) const {
  if (order_ > caps.center_order)
    throw CapExceeded("semisimple-enumeration",
                      "center order " + std::to_string(order_) + " exceeds " + std::to_string(caps.center_order));
  if (auto count = structure().subgroup_count(); count > caps.subgroup_count)
    throw CapExceeded("semisimple-enumeration",
                      "a group of order " + std::to_string(order_) + " has " + count.get_str() +
                          " subgroups, more than " + std::to_string(caps.subgroup_count),
                      count.get_str());

  std::vector<Subgroup> out;
  std::unordered_map<std::vector<bool>, std::size_t> seen;
  auto insert = [&](Subgroup s) {
    if (seen.contains(s.members)) return;
    if (out.size() >= caps.subgroup_count)
      throw CapExceeded("semisimple-enumeration",
                        "more than " + std::to_string(caps.subgroup_count) + " subgroups in a group of order " +
                            std::to_string(order_),
                        std::to_string(out.size()));
    seen.emplace(s.members, out.size());
    out.push_back(std::move(s));
  };

  insert(span({}));
  std::vector<Element> cyclic_gens;
  std::unordered_map<std::vector<bool>, bool> cyclic_seen;
  for (std::uint64_t i = 1; i < order_; ++i) {
    Element g = element(i);
    Element one[] = {g};
    Subgroup c = span(one);
    if (cyclic_seen.emplace(c.members, true).second) {
      cyclic_gens.push_back(g);
      insert(std::move(c));
    }
  }
  // Every subgroup is reached from a smaller one by joining a cyclic subgroup.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto const& g : cyclic_gens) {
      if (out[i].members[index(g)]) continue;
      insert(join(out[i], g));
    }
  return out;
}

std::string element_str(Element const& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

}  // namespace jordan
