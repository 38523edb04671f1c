#include "jordan/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "jordan/error.hpp"

namespace jordan::roots {

namespace {

constexpr int kMaxRootRank = 64;

char family_char(Family f) { return static_cast<char>(f); }

std::string inadmissible_reason(Family family, int rank) {
  std::string name = std::string(1, family_char(family)) + std::to_string(rank);
  switch (family) {
    case Family::A: return rank >= 1 ? "" : name + ": A requires rank >= 1";
    case Family::B: return rank >= 2 ? "" : name + ": B requires rank >= 2";
    case Family::C: return rank >= 3 ? "" : name + ": C requires rank >= 3 (C2 is B2)";
    case Family::D: return rank >= 4 ? "" : name + ": D requires rank >= 4 (D3 is A3, D2 is A1xA1)";
    case Family::E: return (rank >= 6 && rank <= 8) ? "" : name + ": E exists only in ranks 6, 7, 8";
    case Family::F: return rank == 4 ? "" : name + ": F exists only in rank 4";
    case Family::G: return rank == 2 ? "" : name + ": G exists only in rank 2";
  }
  return name + ": unknown family";
}

// (alpha_i, alpha_j), doubled where needed so every entry is an integer.
IntMatrix bilinear_form(SimpleType t) {
  auto n = static_cast<std::size_t>(t.rank());
  IntMatrix b(n, std::vector<std::int64_t>(n, 0));
  auto edge = [&](std::size_t i, std::size_t j, std::int64_t v) { b[i][j] = b[j][i] = v; };
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::B:  // alpha_n short
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 4;
      b[n - 1][n - 1] = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1, -2);
      break;
    case Family::C:  // alpha_n long
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
      b[n - 1][n - 1] = 4;
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 3, n - 1, -1);
      break;
    case Family::E:  // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
      for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
      edge(0, 2, -1);
      edge(1, 3, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      b[0][0] = b[1][1] = 4;
      b[2][2] = b[3][3] = 2;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case Family::G:  // alpha_1 short
      b[0][0] = 2;
      b[1][1] = 6;
      edge(0, 1, -3);
      break;
  }
  return b;
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InvalidArgument("weight must be a bracketed list like [1,0,0]: " + std::string(text));
  text = trim(text.substr(1, text.size() - 2));
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || p != item.data() + item.size() || item.empty())
      throw InvalidArgument("bad weight coordinate: '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CenterPresentation present_center(IntMatrix const& cartan) {
  CenterPresentation c;
  c.smith = smith_normal_form(cartan);
  auto inv = c.smith.invariants();
  std::vector<std::uint64_t> factors;
  for (std::size_t k = 0; k < inv.size(); ++k) {
    if (inv[k] == 0) throw Error("singular Cartan matrix");
    if (inv[k] == 1) continue;
    factors.push_back(static_cast<std::uint64_t>(inv[k]));
    c.smith_index.push_back(k);
    std::vector<std::int64_t> v(cartan.size());
    for (std::size_t i = 0; i < cartan.size(); ++i) v[i] = c.smith.left_inverse[i][k];
    c.generator_coweights.push_back(std::move(v));
  }
  c.group = FiniteAbelianGroup(std::move(factors));
  c.character_columns.assign(cartan.size(), std::vector<std::int64_t>(c.smith_index.size(), 0));
  for (std::size_t i = 0; i < cartan.size(); ++i)
    for (std::size_t k = 0; k < c.smith_index.size(); ++k) c.character_columns[i][k] = c.smith.right[i][c.smith_index[k]];
  return c;
}

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

Fraction reduce_fraction(std::int64_t num, std::int64_t den) {
  num = mod(num, den);
  std::int64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

}  // namespace

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  if (auto why = inadmissible_reason(family, rank); !why.empty()) throw InvalidArgument("inadmissible type " + why);
}

bool SimpleType::admissible(Family family, int rank) { return inadmissible_reason(family, rank).empty(); }

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("bad simple type: '" + std::string(text) + "'");
  char f = text[0];
  if (f < 'A' || f > 'G') throw InvalidArgument("unknown Dynkin family in '" + std::string(text) + "'");
  int rank = 0;
  auto [p, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
  if (ec != std::errc{} || p != text.data() + text.size())
    throw InvalidArgument("bad rank in simple type '" + std::string(text) + "'");
  return SimpleType(static_cast<Family>(f), rank);
}

std::int64_t SimpleType::dim() const {
  std::int64_t l = rank_;
  switch (family_) {
    case Family::A: return l * (l + 2);
    case Family::B:
    case Family::C: return l * (2 * l + 1);
    case Family::D: return l * (2 * l - 1);
    case Family::E: return l == 6 ? 78 : (l == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::string SimpleType::name() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

std::vector<SimpleType> admissible_types(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (SimpleType::admissible(f, r)) out.emplace_back(f, r);
  return out;
}

std::vector<SimpleType> types_up_to_dim(std::int64_t max_dim) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= 1 + static_cast<int>(std::max<std::int64_t>(max_dim, 0)); ++r) {
      if (!SimpleType::admissible(f, r)) {
        if (r > 8 && (f == Family::E || f == Family::F || f == Family::G)) break;
        continue;
      }
      SimpleType t(f, r);
      if (t.dim() > max_dim) break;
      out.push_back(t);
    }
  std::sort(out.begin(), out.end(), [](SimpleType const& a, SimpleType const& b) {
    return std::pair(a.dim(), a) < std::pair(b.dim(), b);
  });
  return out;
}

CatalogEntry catalog_entry(SimpleType type) {
  int l = type.rank();
  FiniteAbelianGroup center;
  switch (type.family()) {
    case Family::A: center = FiniteAbelianGroup::cyclic(static_cast<std::uint64_t>(l) + 1); break;
    case Family::B:
    case Family::C: center = FiniteAbelianGroup::cyclic(2); break;
    case Family::D: center = l % 2 == 0 ? FiniteAbelianGroup({2, 2}) : FiniteAbelianGroup::cyclic(4); break;
    case Family::E: center = l == 6 ? FiniteAbelianGroup::cyclic(3) : (l == 7 ? FiniteAbelianGroup::cyclic(2) : FiniteAbelianGroup{}); break;
    case Family::F:
    case Family::G: break;
  }
  return {type.dim(), l, center};
}

DominantWeight::DominantWeight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  for (auto c : coords_)
    if (c < 0) throw InvalidArgument("dominant weight coordinates must be non-negative");
}

DominantWeight DominantWeight::fundamental(std::size_t rank, std::size_t i) {
  if (i >= rank) throw InvalidArgument("fundamental weight index out of range");
  std::vector<std::int64_t> c(rank, 0);
  c[i] = 1;
  return DominantWeight(std::move(c));
}

DominantWeight DominantWeight::parse(std::string_view text) { return DominantWeight(parse_int_list(text)); }

bool DominantWeight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::string DominantWeight::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ']';
  return os.str();
}

DominantWeight RootSystem::adjoint_weight() const {
  auto const& theta = highest_root();
  std::size_t n = theta.size();
  std::vector<std::int64_t> w(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) w[j] += theta[i] * cartan[i][j];
  return DominantWeight(std::move(w));
}

RootSystem build_root_system(SimpleType type) {
  if (type.rank() > kMaxRootRank)
    throw CapExceeded("root-systems", "rank " + std::to_string(type.rank()) + " exceeds " + std::to_string(kMaxRootRank));
  auto n = static_cast<std::size_t>(type.rank());
  RootSystem rs{type, bilinear_form(type), {}, {}, DominantWeight(std::vector<std::int64_t>(n, 1)), {}};
  rs.cartan.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan[i][j] = 2 * rs.bilinear[i][j] / rs.bilinear[j][j];

  // s_i permutes the positive roots other than alpha_i, and every positive
  // root is reached from a simple root through such reflections.
  std::set<std::vector<std::int64_t>> found;
  std::vector<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> a(n, 0);
    a[i] = 1;
    found.insert(a);
    queue.push_back(std::move(a));
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto beta = queue[q];
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[j][i];
      if (pairing == 0) continue;
      auto image = beta;
      image[i] -= pairing;
      if (std::any_of(image.begin(), image.end(), [](auto c) { return c < 0; })) continue;
      if (found.insert(image).second) queue.push_back(std::move(image));
    }
  }
  rs.positive_roots.assign(found.begin(), found.end());
  auto height = [](auto const& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); };
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [&](auto const& a, auto const& b) {
    return std::pair(height(a), a) < std::pair(height(b), b);
  });

  std::size_t expected = static_cast<std::size_t>((type.dim() - type.rank()) / 2);
  if (rs.positive_roots.size() != expected)
    throw Error("root enumeration for " + type.name() + " found " + std::to_string(rs.positive_roots.size()) +
                " positive roots, expected " + std::to_string(expected));

  rs.center = present_center(rs.cartan);
  if (rs.center.group != catalog_entry(type).center)
    throw Error("center of " + type.name() + " from the Cartan matrix is " + rs.center.group.str() +
                ", the classification table says " + catalog_entry(type).center.str());
  return rs;
}

std::shared_ptr<RootSystem const> root_system(SimpleType type) {
  static std::mutex mutex;
  static std::map<SimpleType, std::shared_ptr<RootSystem const>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(type); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<RootSystem const>(build_root_system(type));
  std::lock_guard lock(mutex);
  return cache.emplace(type, std::move(built)).first->second;
}

BigInt weyl_dim(RootSystem const& rs, DominantWeight const& lambda) {
  std::size_t n = rs.cartan.size();
  if (lambda.size() != n)
    throw InvalidArgument("weight " + lambda.str() + " has the wrong length for " + rs.type.name());
  // <lambda + rho, alpha^vee> / <rho, alpha^vee> = sum c_i (l_i + 1) |a_i|^2 / sum c_i |a_i|^2
  BigInt num = 1, den = 1;
  for (auto const& root : rs.positive_roots) {
    std::int64_t a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a += root[i] * (lambda.coords()[i] + 1) * rs.bilinear[i][i];
      b += root[i] * rs.bilinear[i][i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw Error("Weyl dimension is not an integer for " + lambda.str());
  return num / den;
}

BigInt weyl_dim(SimpleType type, DominantWeight const& lambda) { return weyl_dim(*root_system(type), lambda); }

CentralCharacter::CentralCharacter(FiniteAbelianGroup center, std::vector<std::uint64_t> numerators)
    : center_(std::move(center)), numerators_(std::move(numerators)) {
  auto const& d = center_.invariant_factors();
  if (numerators_.size() != d.size()) throw InvalidArgument("character arity mismatch");
  for (std::size_t k = 0; k < d.size(); ++k) numerators_[k] %= d[k];
}

Fraction CentralCharacter::value(Element const& z) const {
  auto const& d = center_.invariant_factors();
  if (z.size() != d.size()) throw InvalidArgument("center element arity mismatch");
  if (d.empty()) return {};
  auto big = static_cast<std::int64_t>(d.back());
  std::int64_t num = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    auto dk = static_cast<std::int64_t>(d[k]);
    num = mod(num + mod(z[k], dk) * static_cast<std::int64_t>(numerators_[k]) * (big / dk), big);
  }
  return reduce_fraction(num, big);
}

bool CentralCharacter::is_trivial() const {
  return std::all_of(numerators_.begin(), numerators_.end(), [](auto v) { return v == 0; });
}

Element CentralCharacter::as_element() const {
  return Element(numerators_.begin(), numerators_.end());
}

CentralCharacter central_character(SimpleType type, DominantWeight const& lambda) {
  auto rs = root_system(type);
  if (lambda.size() != rs->cartan.size())
    throw InvalidArgument("weight " + lambda.str() + " has the wrong length for " + type.name());
  auto const& c = rs->center;
  auto const& d = c.group.invariant_factors();
  std::vector<std::uint64_t> nums(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda.coords()[i] * c.character_columns[i][k];
    nums[k] = static_cast<std::uint64_t>(mod(s, static_cast<std::int64_t>(d[k])));
  }
  return CentralCharacter(c.group, std::move(nums));
}

Fraction character_on_coweight(RootSystem const& rs, DominantWeight const& lambda, std::vector<std::int64_t> const& v) {
  // C^{-1} = R D^{-1} L, so lambda . C^{-1} v = sum_k (lambda . R_k)(L v)_k / d_k.
  auto const& s = rs.center.smith;
  std::size_t n = rs.cartan.size();
  auto inv = s.invariants();
  std::int64_t den = 1;
  for (auto d : inv) den = std::lcm(den, d);
  std::int64_t num = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t lr = 0, lv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      lr += lambda.coords()[i] * s.right[i][k];
      lv += s.left[k][i] * v[i];
    }
    num = mod(num + mod(lr * lv, den) * (den / inv[k]), den);
  }
  return reduce_fraction(num, den);
}

CentralSubgroup irrep_kernel_on_center(SimpleType type, DominantWeight const& lambda) {
  if (lambda.is_zero()) throw InvalidArgument("the zero weight has no central datum: its kernel is the whole center");
  auto chi = central_character(type, lambda);
  auto z = chi.center().as_product();
  Subgroup kernel = z.span({});
  for (std::uint64_t i = 1; i < z.order(); ++i) {
    Element e = z.element(i);
    if (chi.value(e).num == 0 && !kernel.members[i]) kernel = z.join(kernel, e);
  }
  auto structure = z.subgroup_structure(kernel);
  return {std::move(kernel), std::move(structure)};
}

}  // namespace jordan::roots
