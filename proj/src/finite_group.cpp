#include "jordan/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "jordan/bounds.hpp"
#include "jordan/error.hpp"

namespace jordan::finite {

namespace {

constexpr char const* kModule = "finite-groups";

// Fixed-size bit set over element indices.
struct Bits {
  std::vector<std::uint64_t> words;

  explicit Bits(std::size_t n = 0) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }
  bool subset_of(Bits const& o) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & ~o.words[i]) return false;
    return true;
  }
  Bits operator&(Bits const& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words.size(); ++i) r.words[i] &= o.words[i];
    return r;
  }
  template <class F>
  void each(F&& f) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      for (auto w = words[i]; w; w &= w - 1) f(i * 64 + std::countr_zero(w));
  }
  friend bool operator==(Bits const&, Bits const&) = default;
};

struct BitsHash {
  std::size_t operator()(Bits const& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b.words) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

bool commute(Permutation const& a, Permutation const& b) {
  for (std::uint32_t p = 0; p < a.degree(); ++p)
    if (a(b(p)) != b(a(p))) return false;
  return true;
}

// Centralizer refinement over a materialized element list.
class AbelianSearch {
 public:
  explicit AbelianSearch(std::vector<Permutation> const& elems) : elems_(elems), cent_(elems.size()) {}

  std::uint64_t run() {
    Bits all(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) all.set(i);
    visit(all);
    return best_;
  }

 private:
  Bits const& centralizer(std::size_t i) {
    if (!cent_[i]) {
      Bits c(elems_.size());
      for (std::size_t j = 0; j < elems_.size(); ++j)
        if (commute(elems_[i], elems_[j])) c.set(j);
      cent_[i] = std::move(c);
    }
    return *cent_[i];
  }

  void visit(Bits const& c) {
    auto size = c.count();
    if (size <= best_ || !seen_.insert(c).second) return;
    std::vector<std::size_t> branch;
    c.each([&](std::size_t x) {
      if (!c.subset_of(centralizer(x))) branch.push_back(x);
    });
    if (branch.empty()) {
      best_ = size;  // c is abelian
      return;
    }
    for (auto x : branch) visit(c & centralizer(x));
  }

  std::vector<Permutation> const& elems_;
  std::vector<std::optional<Bits>> cent_;
  std::unordered_set<Bits, BitsHash> seen_;
  std::uint64_t best_ = 0;
};

// Multiplication table and subgroup lattice for a small group.
class Lattice {
 public:
  struct Sub {
    Bits members;
    std::vector<std::uint32_t> gens;
    std::size_t order;
  };

  Lattice(std::vector<Permutation> const& elems, Caps const& caps) : n_(elems.size()) {
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
    for (std::uint32_t i = 0; i < n_; ++i) index.emplace(elems[i], i);
    mul_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) mul_[i * n_ + j] = index.at(elems[i] * elems[j]);

    std::unordered_set<Bits, BitsHash> seen;
    auto add = [&](Sub s) {
      if (!seen.insert(s.members).second) return;
      if (subs_.size() >= caps.subgroup_count)
        throw CapExceeded(kModule, "more than " + std::to_string(caps.subgroup_count) + " subgroups",
                          std::to_string(subs_.size()));
      subs_.push_back(std::move(s));
    };
    for (std::uint32_t g = 0; g < n_; ++g) add(generate({g}));
    // close under pairwise joins; each pair is met once as the list grows
    for (std::size_t i = 1; i < subs_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        auto const& a = subs_[i];
        auto const& b = subs_[j];
        if (a.members.subset_of(b.members) || b.members.subset_of(a.members)) continue;
        auto gens = a.gens;
        gens.insert(gens.end(), b.gens.begin(), b.gens.end());
        add(generate(std::move(gens)));
      }
    }
  }

  std::vector<Sub> const& subgroups() const { return subs_; }

  bool abelian(Sub const& s) const {
    for (auto a : s.gens)
      for (auto b : s.gens)
        if (mul_[a * n_ + b] != mul_[b * n_ + a]) return false;
    return true;
  }

 private:
  Sub generate(std::vector<std::uint32_t> gens) const {
    Bits members(n_);
    members.set(0);
    std::vector<std::uint32_t> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (auto g : gens) {
        auto h = mul_[queue[k] * n_ + g];
        if (!members.test(h)) {
          members.set(h);
          queue.push_back(h);
        }
      }
    return {std::move(members), std::move(gens), queue.size()};
  }

  std::size_t n_;
  std::vector<std::uint32_t> mul_;
  std::vector<Sub> subs_;
};

Lattice lattice(PermGroup const& g, Caps const& caps) {
  auto const& elems = g.elements(caps);
  if (elems.size() > caps.subgroup_enum_order)
    throw CapExceeded(kModule,
                      "group of order " + std::to_string(elems.size()) + " exceeds the subgroup enumeration cap " +
                          std::to_string(caps.subgroup_enum_order),
                      std::to_string(jordan_index(g, caps)));
  return Lattice(elems, caps);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> hit(images.size());
  for (auto x : images) {
    if (x >= images.size() || hit[x]) throw InvalidArgument("not a permutation");
    hit[x] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse(std::string_view cycles, std::size_t degree) {
  auto p = identity(degree);
  std::vector<bool> used(degree);
  std::vector<std::uint32_t> cycle;
  bool open = false;
  for (std::size_t i = 0; i < cycles.size();) {
    char c = cycles[i];
    if (c == ' ' || c == '\t' || c == ',') {
      ++i;
    } else if (c == '(') {
      if (open) throw InvalidArgument("nested '(' in cycle notation");
      open = true;
      cycle.clear();
      ++i;
    } else if (c == ')') {
      if (!open) throw InvalidArgument("unmatched ')' in cycle notation");
      open = false;
      for (std::size_t k = 0; k < cycle.size(); ++k) p.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!open) throw InvalidArgument("point outside a cycle");
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(cycles.data() + i, cycles.data() + cycles.size(), v);
      if (ec != std::errc()) throw InvalidArgument("bad point in cycle notation");
      i = static_cast<std::size_t>(ptr - cycles.data());
      if (v < 1 || v > degree) throw InvalidArgument("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (used[v - 1]) throw InvalidArgument("point " + std::to_string(v) + " repeated; cycles must be disjoint");
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
    } else {
      throw InvalidArgument(std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  if (open) throw InvalidArgument("unclosed cycle");
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation operator*(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("permutations of different degree");
  Permutation r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::extended(std::size_t degree, std::size_t shift) const {
  if (shift + this->degree() > degree) throw InvalidArgument("extension degree too small");
  auto r = identity(degree);
  for (std::size_t i = 0; i < this->degree(); ++i) r.images_[i + shift] = static_cast<std::uint32_t>(images_[i] + shift);
  return r;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> done(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += '(';
    for (auto j = i; !done[j]; j = images_[j]) {
      done[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 1) throw InvalidArgument("degree must be >= 1");
  for (auto const& g : generators_)
    if (g.degree() != degree_) throw InvalidArgument("generator degree differs from the group degree");
}

std::vector<Permutation> const& PermGroup::elements(Caps const& caps) const {
  if (elements_) return *elements_;
  std::vector<Permutation> elems{Permutation::identity(degree_)};
  std::unordered_set<Permutation, PermutationHash> seen(elems.begin(), elems.end());
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (auto const& g : generators_) {
      auto h = elems[k] * g;
      if (seen.insert(h).second) {
        if (elems.size() >= caps.closure_order)
          throw CapExceeded(kModule, "group order exceeds the closure cap " + std::to_string(caps.closure_order),
                            std::to_string(elems.size() + 1));
        elems.push_back(std::move(h));
      }
    }
  elements_ = std::move(elems);
  return *elements_;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!commute(generators_[i], generators_[j])) return false;
  return true;
}

PermGroup closure(std::vector<Permutation> gens, Caps const& caps) {
  if (gens.empty()) throw InvalidArgument("closure needs at least one generator to fix the degree");
  auto degree = gens.front().degree();
  PermGroup g(degree, std::move(gens));
  g.elements(caps);
  return g;
}

PermGroup direct_product(PermGroup const& a, PermGroup const& b) {
  auto degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (auto const& g : a.generators()) gens.push_back(g.extended(degree));
  for (auto const& g : b.generators()) gens.push_back(g.extended(degree, a.degree()));
  return PermGroup(degree, std::move(gens));
}

std::uint64_t max_abelian_order(PermGroup const& g, Caps const& caps) {
  if (g.is_abelian()) return g.order(caps);
  return AbelianSearch(g.elements(caps)).run();
}

std::uint64_t jordan_index(PermGroup const& g, Caps const& caps) { return g.order(caps) / max_abelian_order(g, caps); }

std::uint64_t jordan_constant_exact(PermGroup const& g, Caps const& caps) {
  if (g.is_abelian()) return 1;
  auto lat = lattice(g, caps);
  auto const& subs = lat.subgroups();
  std::vector<std::size_t> abelian;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (lat.abelian(subs[i])) abelian.push_back(i);
  std::ranges::sort(abelian, [&](auto x, auto y) { return subs[x].order > subs[y].order; });

  std::uint64_t best = 1;
  for (auto const& h : subs) {
    for (auto a : abelian) {
      if (!subs[a].members.subset_of(h.members)) continue;
      best = std::max<std::uint64_t>(best, h.order / subs[a].order);
      break;
    }
  }
  return best;
}

std::size_t subgroup_count(PermGroup const& g, Caps const& caps) { return lattice(g, caps).subgroups().size(); }

FiniteAbelianGroup abelian_invariants(PermGroup const& g, Caps const& caps) {
  if (!g.is_abelian()) throw InvalidArgument("group is not abelian");
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (auto const& x : g.elements(caps)) {
    std::uint64_t order = 1;
    for (auto y = x; !y.is_identity(); y = y * x) ++order;
    ++histogram[order];
  }
  return FiniteAbelianGroup::from_element_orders(histogram);
}

std::uint64_t rkf_abelian(PermGroup const& g, Caps const& caps) { return abelian_invariants(g, caps).rank(); }

BoundContext BoundContext::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("context must look like gl:N, connected:N or aut0:N");
  auto name = text.substr(0, colon);
  auto num = text.substr(colon + 1);
  BoundContext c;
  if (name == "gl") c.kind = Kind::gl;
  else if (name == "connected") c.kind = Kind::connected;
  else if (name == "aut0") c.kind = Kind::aut0;
  else throw InvalidArgument("unknown context '" + std::string(name) + "'");
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), c.n);
  if (ec != std::errc() || ptr != num.data() + num.size() || c.n < 0)
    throw InvalidArgument("context dimension must be a non-negative integer");
  if (c.kind == Kind::aut0 && c.n < 1) throw InvalidArgument("aut0 context needs n >= 1");
  return c;
}

std::string BoundContext::str() const {
  switch (kind) {
    case Kind::gl: return "gl:" + std::to_string(n);
    case Kind::connected: return "connected:" + std::to_string(n);
    case Kind::aut0: return "aut0:" + std::to_string(n);
  }
  return {};
}

BoundValue BoundContext::bound(Caps const& caps) const {
  switch (kind) {
    case Kind::gl: return BoundValue(bounds::cn_bound(static_cast<std::uint64_t>(n)));
    case Kind::connected: return bounds::j_connected(n, caps).triple.j;
    case Kind::aut0: return bounds::j_aut0(n, caps).triple.j;
  }
  return BoundValue::infinity();
}

std::uint64_t VerifyReport::observed() const { return constant ? std::max(index, *constant) : index; }

std::string VerifyReport::str() const {
  return std::to_string(observed()) + " <= " + bound.str() + (pass ? " PASS" : " FAIL");
}

VerifyReport verify_bound(PermGroup const& g, BoundContext const& context, Caps const& caps) {
  VerifyReport r;
  r.context = context;
  r.order = g.order(caps);
  r.index = jordan_index(g, caps);
  if (r.order <= caps.subgroup_enum_order) r.constant = jordan_constant_exact(g, caps);
  r.bound = context.bound(caps);
  r.pass = BoundValue(BigInt(static_cast<unsigned long>(r.observed()))) <= r.bound;
  return r;
}

PermGroup parse_perm_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      if (!degree) {
        std::istringstream head(line);
        std::string word;
        long long n = 0;
        std::string rest;
        if (!(head >> word >> n) || word != "degree" || (head >> rest) || n < 1)
          throw InvalidArgument("expected 'degree N' with N >= 1");
        degree = static_cast<std::size_t>(n);
      } else {
        gens.push_back(Permutation::parse(line, *degree));
      }
    } catch (InvalidArgument const& e) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!degree) throw InvalidArgument("missing 'degree N' line");
  return PermGroup(*degree, std::move(gens));
}

PermGroup load_perm_group(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_perm_group(buf.str());
}

}  // namespace jordan::finite
