#include "jordan/semisimple.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "jordan/error.hpp"

namespace jordan::semisimple {

using roots::DominantWeight;
using roots::SimpleType;

namespace {

constexpr char kModule[] = "semisimple-enumeration";

struct WeightEntry {
  DominantWeight weight;
  std::int64_t dim;
};

// Nonzero dominant weights with Weyl dimension <= cap. The dimension is
// strictly increasing in each coordinate, so each coordinate is raised only
// while the partial weight stays within the cap.
std::vector<WeightEntry> small_weights(SimpleType type, std::int64_t cap) {
  static std::mutex mutex;
  static std::map<std::pair<SimpleType, std::int64_t>, std::vector<WeightEntry>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({type, cap}); it != cache.end()) return it->second;
  }
  auto rs = roots::root_system(type);
  auto n = static_cast<std::size_t>(type.rank());
  std::vector<WeightEntry> out;
  std::vector<std::int64_t> w(n, 0);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      DominantWeight dw(w);
      if (!dw.is_zero()) out.push_back({dw, roots::weyl_dim(*rs, dw).get_si()});
      return;
    }
    for (w[i] = 0;; ++w[i]) {
      if (roots::weyl_dim(*rs, DominantWeight(w)) > cap) break;
      self(self, i + 1);
    }
    w[i] = 0;
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    return std::pair(a.dim, a.weight) < std::pair(b.dim, b.weight);
  });
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair(type, cap), std::move(out)).first->second;
}

// Pairing of a character and a center element: sum_c chi_c z_c / m_c mod 1.
bool pairs_to_zero(CyclicProduct const& z, Element const& chi, Element const& elem) {
  auto const& m = z.moduli();
  std::uint64_t big = 1;
  for (auto mi : m) big = std::lcm(big, mi);
  std::uint64_t s = 0;
  for (std::size_t c = 0; c < m.size(); ++c)
    s = (s + static_cast<std::uint64_t>(chi[c] * elem[c]) % m[c] * (big / m[c])) % big;
  return s == 0;
}

struct Candidate {
  std::uint64_t character;  // index in the dual group
  std::uint32_t support;    // bitmask of factors with nonzero weight
  std::int64_t dim;
  Summand summand;
};

std::vector<ClassRow> rows_for_base(SemisimpleType const& base, Caps const& caps) {
  std::vector<ClassRow> rows;
  auto z = base.center();
  auto center = z.structure();
  for (auto const& s : z.subgroups(caps)) {
    IsogenyClass cls{base, s.generators};
    rows.push_back({cls, base.dim(), center, z.quotient(s.generators), min_faithful_representation(cls, caps)});
  }
  return rows;
}

struct CapsKey {
  std::uint64_t center_order, subgroup_count;
  int search_dim;
  auto operator<=>(CapsKey const&) const = default;
};

std::vector<ClassRow> const& memo_rows(SemisimpleType const& base, Caps const& caps) {
  static std::mutex mutex;
  static std::map<std::pair<SemisimpleType, CapsKey>, std::vector<ClassRow>> cache;
  std::pair key(base, CapsKey{caps.center_order, caps.subgroup_count, caps.search_dim});
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rows = rows_for_base(base, caps);
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(rows)).first->second;
}

}  // namespace

SemisimpleType::SemisimpleType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

SemisimpleType SemisimpleType::parse(std::string_view text) {
  if (text == "1" || text == "trivial") return {};
  std::vector<SimpleType> factors;
  std::size_t start = 0;
  for (;;) {
    auto x = text.find('x', start);
    factors.push_back(SimpleType::parse(text.substr(start, x == text.npos ? text.npos : x - start)));
    if (x == text.npos) break;
    start = x + 1;
  }
  return SemisimpleType(std::move(factors));
}

std::int64_t SemisimpleType::dim() const {
  std::int64_t d = 0;
  for (auto const& f : factors_) d += f.dim();
  return d;
}

std::string SemisimpleType::name() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "x" : "") + factors_[i].name();
  return s;
}

CyclicProduct SemisimpleType::center() const {
  std::vector<std::uint64_t> moduli;
  for (auto const& f : factors_) {
    auto entry = roots::catalog_entry(f);
    for (auto d : entry.center.invariant_factors()) moduli.push_back(d);
  }
  return CyclicProduct(std::move(moduli));
}

std::vector<std::size_t> SemisimpleType::component_offsets() const {
  std::vector<std::size_t> off{0};
  for (auto const& f : factors_) off.push_back(off.back() + roots::catalog_entry(f).center.rank());
  return off;
}

IsogenyClass IsogenyClass::simply_connected(SemisimpleType base) { return {std::move(base), {}}; }

IsogenyClass IsogenyClass::adjoint(SemisimpleType base) {
  auto z = base.center();
  std::vector<Element> gens;
  for (std::size_t c = 0; c < z.components(); ++c) {
    Element e = z.zero();
    e[c] = 1;
    gens.push_back(std::move(e));
  }
  return {std::move(base), std::move(gens)};
}

std::string IsogenyClass::name() const {
  auto z = base.center();
  auto k = z.span(kernel);
  if (k.order == 1) return base.name();
  if (k.order == z.order()) return base.name() + "/center";
  std::string s = base.name() + "/<";
  bool first = true;
  for (auto const& g : kernel) {
    if (std::all_of(g.begin(), g.end(), [](auto v) { return v == 0; })) continue;
    s += (first ? "" : ",") + element_str(z.reduce(g));
    first = false;
  }
  return s + ">";
}

std::vector<SemisimpleType> enumerate_semisimple(int n, Caps const& caps) {
  if (n < 0) throw InvalidArgument("dimension must be non-negative");
  if (n > caps.enumeration_dim)
    throw CapExceeded(kModule, "dimension " + std::to_string(n) + " exceeds " + std::to_string(caps.enumeration_dim));
  auto simple = roots::types_up_to_dim(n);
  std::vector<SemisimpleType> out;
  std::vector<SimpleType> current;
  auto recurse = [&](auto&& self, std::size_t from, std::int64_t budget) -> void {
    out.emplace_back(current);
    for (std::size_t i = from; i < simple.size(); ++i) {
      if (simple[i].dim() > budget) continue;
      current.push_back(simple[i]);
      self(self, i, budget - simple[i].dim());
      current.pop_back();
    }
  };
  recurse(recurse, 0, n);
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return std::pair(a.dim(), a) < std::pair(b.dim(), b); });
  return out;
}

std::vector<Subgroup> enumerate_central_subgroups(FiniteAbelianGroup const& z, Caps const& caps) {
  return z.as_product().subgroups(caps);
}

FiniteAbelianGroup quotient_center(IsogenyClass const& cls) { return cls.base.center().quotient(cls.kernel); }

FaithfulRepresentation min_faithful_representation(IsogenyClass const& cls, Caps const& caps) {
  auto const& factors = cls.base.factors();
  if (factors.empty()) return {};
  if (factors.size() > 31) throw CapExceeded(kModule, "more than 31 simple factors");
  auto z = cls.base.center();
  for (auto const& g : cls.kernel)
    if (g.size() != z.components()) throw InvalidArgument("kernel generator arity does not match the center");
  auto offsets = cls.base.component_offsets();
  std::int64_t cap = caps.search_dim;

  // Characters (as dual-group indices) that vanish on K.
  std::vector<bool> annihilates(z.order(), false);
  std::uint64_t annihilator_order = 0;
  for (std::uint64_t i = 0; i < z.order(); ++i) {
    Element chi = z.element(i);
    annihilates[i] = std::all_of(cls.kernel.begin(), cls.kernel.end(),
                                 [&](Element const& g) { return pairs_to_zero(z, chi, z.reduce(g)); });
    annihilator_order += annihilates[i];
  }

  // Cheapest weight per (factor, central character value).
  struct PerFactor {
    std::map<Element, WeightEntry> by_character;
  };
  std::vector<PerFactor> per_factor(factors.size());
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (auto const& w : small_weights(factors[f], cap)) {
      auto chi = roots::central_character(factors[f], w.weight).as_element();
      per_factor[f].by_character.try_emplace(chi, w);  // weights arrive sorted by dim
    }

  // Cheapest summand per (character, support).
  std::map<std::pair<std::uint64_t, std::uint32_t>, Candidate> best;
  std::uint32_t full = (std::uint32_t{1} << factors.size()) - 1;
  for (std::uint32_t support = 1; support <= full; ++support) {
    std::vector<std::size_t> in;
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (support >> f & 1) in.push_back(f);
    if (std::any_of(in.begin(), in.end(), [&](auto f) { return per_factor[f].by_character.empty(); })) continue;
    std::vector<std::map<Element, WeightEntry>::const_iterator> pick;
    for (auto f : in) pick.push_back(per_factor[f].by_character.begin());
    for (;;) {
      std::int64_t dim = 1;
      Element chi = z.zero();
      Summand summand;
      for (std::size_t f = 0; f < factors.size(); ++f) summand.push_back(DominantWeight::zero(static_cast<std::size_t>(factors[f].rank())));
      for (std::size_t j = 0; j < in.size(); ++j) {
        dim = dim > cap ? dim : dim * pick[j]->second.dim;
        for (std::size_t c = 0; c < pick[j]->first.size(); ++c) chi[offsets[in[j]] + c] = pick[j]->first[c];
        summand[in[j]] = pick[j]->second.weight;
      }
      auto ci = z.index(chi);
      if (dim <= cap && annihilates[ci]) {
        auto [it, fresh] = best.try_emplace({ci, support}, Candidate{ci, support, dim, summand});
        if (!fresh && dim < it->second.dim) it->second = Candidate{ci, support, dim, summand};
      }
      std::size_t j = 0;
      while (j < in.size() && ++pick[j] == per_factor[in[j]].by_character.end()) {
        pick[j] = per_factor[in[j]].by_character.begin();
        ++j;
      }
      if (j == in.size()) break;
    }
  }
  std::vector<Candidate> candidates;
  for (auto& [key, c] : best) candidates.push_back(std::move(c));
  std::sort(candidates.begin(), candidates.end(), [](auto const& a, auto const& b) {
    return std::tuple(a.dim, a.support, a.character) < std::tuple(b.dim, b.support, b.character);
  });

  // A* over (subgroup generated by the chosen characters, covered factors).
  // Both heuristic terms are consistent: a summand over factors F costs
  // prod_F dim >= sum_F (smallest nontrivial dim), since every nontrivial
  // irreducible has dim >= 2; and each summand adds at most one generator.
  std::vector<std::int64_t> smallest(factors.size(), cap + 1);
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (auto const& [chi, w] : per_factor[f].by_character) smallest[f] = std::min(smallest[f], w.dim);
  std::int64_t cheapest = candidates.empty() ? cap + 1 : candidates.front().dim;
  auto target_rank = static_cast<std::int64_t>(z.quotient(cls.kernel).rank());  // K^perp is dual to Z/K

  std::vector<Subgroup> subgroups;
  std::vector<std::int64_t> ranks;
  std::unordered_map<std::vector<bool>, std::size_t> subgroup_id;
  auto intern = [&](Subgroup s) {
    auto [it, fresh] = subgroup_id.try_emplace(s.members, subgroups.size());
    if (fresh) {
      ranks.push_back(static_cast<std::int64_t>(z.subgroup_structure(s).rank()));
      subgroups.push_back(std::move(s));
    }
    return it->second;
  };
  intern(z.span({}));
  auto heuristic = [&](std::size_t sid, std::uint32_t mask) {
    std::int64_t cover = 0;
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (!(mask >> f & 1)) cover += smallest[f];
    return std::max(cover, std::max<std::int64_t>(0, target_rank - ranks[sid]) * cheapest);
  };

  using State = std::pair<std::size_t, std::uint32_t>;
  struct Visit {
    std::int64_t dist;
    State prev;
    std::size_t via;
  };
  std::map<State, Visit> visits;
  // (estimate, -dist, subgroup, mask): deeper states first among equal estimates.
  using Entry = std::tuple<std::int64_t, std::int64_t, std::size_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  visits[{0, 0}] = {0, {0, 0}, 0};
  queue.emplace(heuristic(0, 0), 0, 0, 0);
  while (!queue.empty()) {
    auto [estimate, neg_dist, sid, mask] = queue.top();
    auto dist = -neg_dist;
    queue.pop();
    if (visits.at({sid, mask}).dist < dist) continue;
    if (mask == full && subgroups[sid].order == annihilator_order) {
      FaithfulRepresentation rep{dist, {}};
      for (State s{sid, mask}; s != State{0, 0};) {
        auto const& v = visits.at(s);
        rep.summands.push_back(candidates[v.via].summand);
        s = v.prev;
      }
      std::reverse(rep.summands.begin(), rep.summands.end());
      return rep;
    }
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      auto const& c = candidates[ci];
      std::int64_t nd = dist + c.dim;
      if (nd > cap) break;  // sorted by dim
      bool adds_character = !subgroups[sid].members[c.character];
      if (!adds_character && (c.support & ~mask) == 0) continue;
      std::size_t nsid = adds_character ? intern(z.join(subgroups[sid], z.element(c.character))) : sid;
      State next{nsid, mask | c.support};
      auto h = heuristic(next.first, next.second);
      if (nd + h > cap) continue;
      auto it = visits.find(next);
      if (it != visits.end() && it->second.dist <= nd) continue;
      visits[next] = {nd, {sid, mask}, ci};
      queue.emplace(nd + h, -nd, next.first, next.second);
    }
  }
  throw CapExceeded(kModule, "no faithful representation of " + cls.name() + " with dimension <= " + std::to_string(cap));
}

std::int64_t min_faithful_dim(IsogenyClass const& cls, Caps const& caps) {
  return min_faithful_representation(cls, caps).dim;
}

namespace {

// Fails fast on the first base type whose center breaches a cap, before any
// search work is spent on the others.
std::vector<SemisimpleType> checked_bases(int n, Caps const& caps) {
  auto bases = enumerate_semisimple(n, caps);
  for (auto const& base : bases) {
    auto z = base.center();
    if (z.order() > caps.center_order)
      throw CapExceeded(kModule, "center order " + std::to_string(z.order()) + " of " + base.name() + " exceeds " +
                                     std::to_string(caps.center_order));
    if (auto count = z.structure().subgroup_count(); count > caps.subgroup_count)
      throw CapExceeded(kModule,
                        "the center of " + base.name() + " has " + count.get_str() + " subgroups, more than " +
                            std::to_string(caps.subgroup_count),
                        count.get_str());
  }
  return bases;
}

}  // namespace

std::vector<ClassRow> enumeration_table(int n, Caps const& caps) {
  std::vector<ClassRow> out;
  for (auto const& base : checked_bases(n, caps)) {
    auto const& rows = memo_rows(base, caps);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::int64_t n_of(int n, Caps const& caps) {
  std::int64_t best = 0;
  for (auto const& base : checked_bases(n, caps))
    for (auto const& row : memo_rows(base, caps)) best = std::max(best, row.faithful.dim);
  return best;
}

std::uint64_t max_center_order(int n, Caps const& caps) {
  // |Z(S~/K)| <= |Z(S~)|, so the simply connected forms attain the maximum.
  std::uint64_t best = 1;
  for (auto const& base : enumerate_semisimple(n, caps)) {
    auto z = base.center();
    if (z.order() > caps.center_order)
      throw CapExceeded(kModule, "center order " + std::to_string(z.order()) + " of " + base.name() + " exceeds " +
                                     std::to_string(caps.center_order));
    best = std::max(best, z.quotient({}).order());
  }
  return best;
}

}  // namespace jordan::semisimple
