#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

std::uint64_t count_subgroups_by_subsets(std::vector<std::uint64_t> const& moduli) {
  std::uint64_t order = 1;
  for (auto m : moduli) order *= m;
  if (order > 16) throw std::invalid_argument("subset oracle limited to order 16");
  auto decode = [&](std::uint64_t i) {
    std::vector<std::uint64_t> e;
    for (auto m : moduli) {
      e.push_back(i % m);
      i /= m;
    }
    return e;
  };
  auto encode = [&](std::vector<std::uint64_t> const& e) {
    std::uint64_t i = 0;
    for (std::size_t k = moduli.size(); k-- > 0;) i = i * moduli[k] + e[k];
    return i;
  };
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << order); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    bool closed = true;
    for (std::uint64_t a = 0; a < order && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::uint64_t b = 0; b < order; ++b) {
        if (!(mask >> b & 1)) continue;
        auto x = decode(a), y = decode(b);
        for (std::size_t k = 0; k < moduli.size(); ++k) x[k] = (x[k] + y[k]) % moduli[k];
        if (!(mask >> encode(x) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

std::vector<std::vector<mpq_class>> rational_inverse(jordan::IntMatrix const& m) {
  std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular matrix");
    std::swap(a[p], a[c]);
    mpq_class piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace oracle

namespace oracle {

using jordan::Element;
using jordan::roots::DominantWeight;

std::optional<std::int64_t> brute_force_min_faithful(jordan::semisimple::IsogenyClass const& cls, std::int64_t budget) {
  auto const& factors = cls.base.factors();
  if (factors.empty()) return 0;
  auto z = cls.base.center();
  auto offsets = cls.base.component_offsets();

  // Kernel K as a set, by closing the generators under addition.
  std::set<Element> k{z.zero()};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto const& a : std::vector<Element>(k.begin(), k.end()))
      for (auto const& g : cls.kernel)
        if (k.insert(z.add(a, z.reduce(g))).second) grew = true;
  }

  // Per factor: every dominant weight in the box [0, budget)^rank with its dim.
  struct W {
    DominantWeight w;
    std::int64_t dim;
    jordan::roots::CentralCharacter chi;
  };
  std::vector<std::vector<W>> per_factor;
  for (auto const& f : factors) {
    auto rs = jordan::roots::root_system(f);
    std::vector<W> ws;
    std::vector<std::int64_t> c(static_cast<std::size_t>(f.rank()), 0);
    for (;;) {
      DominantWeight dw(c);
      auto d = jordan::roots::weyl_dim(*rs, dw);
      if (d <= budget) ws.push_back({dw, d.get_si(), jordan::roots::central_character(f, dw)});
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == budget) c[i++] = 0;
      if (i == c.size()) break;
    }
    per_factor.push_back(std::move(ws));
  }

  // Every summand: a weight per factor, not all zero.
  struct S {
    std::int64_t dim;
    std::vector<std::size_t> pick;
  };
  std::vector<S> summands;
  std::vector<std::size_t> pick(factors.size(), 0);
  for (;;) {
    std::int64_t d = 1;
    bool nonzero = false;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      d *= per_factor[f][pick[f]].dim;
      nonzero = nonzero || !per_factor[f][pick[f]].w.is_zero();
    }
    if (nonzero && d <= budget) summands.push_back({d, pick});
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == per_factor[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }

  auto acts_trivially = [&](S const& s, Element const& elem) {
    mpq_class total = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      Element part(elem.begin() + static_cast<std::ptrdiff_t>(offsets[f]),
                   elem.begin() + static_cast<std::ptrdiff_t>(offsets[f + 1]));
      auto v = per_factor[f][s.pick[f]].chi.value(part);
      total += mpq_class(static_cast<long>(v.num), static_cast<long>(v.den));
    }
    total.canonicalize();
    return total.get_den() == 1;
  };

  std::optional<std::int64_t> best;
  std::vector<std::size_t> chosen;
  auto check = [&](std::int64_t total) {
    for (std::size_t f = 0; f < factors.size(); ++f) {
      bool covered = std::any_of(chosen.begin(), chosen.end(),
                                 [&](auto si) { return !per_factor[f][summands[si].pick[f]].w.is_zero(); });
      if (!covered) return;
    }
    for (std::uint64_t i = 0; i < z.order(); ++i) {
      auto elem = z.element(i);
      bool in_kernel = std::all_of(chosen.begin(), chosen.end(), [&](auto si) { return acts_trivially(summands[si], elem); });
      if (in_kernel != k.contains(elem)) return;
    }
    if (!best || total < *best) best = total;
  };
  auto recurse = [&](auto&& self, std::size_t from, std::int64_t total) -> void {
    if (best && total >= *best) return;
    if (!chosen.empty()) check(total);
    for (std::size_t i = from; i < summands.size(); ++i) {
      if (total + summands[i].dim > budget) continue;
      chosen.push_back(i);
      self(self, i, total + summands[i].dim);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

}  // namespace oracle

namespace oracle {

namespace {

RawPerm compose(RawPerm const& a, RawPerm const& b) {
  RawPerm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

void bron_kerbosch(std::vector<std::vector<bool>> const& adj, std::vector<std::size_t> r,
                   std::vector<std::size_t> p, std::vector<std::size_t> x, std::uint64_t& best) {
  if (p.empty() && x.empty()) {
    best = std::max<std::uint64_t>(best, r.size());
    return;
  }
  if (r.size() + p.size() <= best) return;
  auto pivot = p.empty() ? x.front() : p.front();
  auto candidates = p;
  for (auto v : candidates) {
    if (adj[pivot][v] && v != pivot) continue;
    std::vector<std::size_t> p2, x2;
    for (auto w : p)
      if (w != v && adj[v][w]) p2.push_back(w);
    for (auto w : x)
      if (adj[v][w]) x2.push_back(w);
    auto r2 = r;
    r2.push_back(v);
    bron_kerbosch(adj, r2, p2, x2, best);
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<RawPerm> raw_closure(std::vector<RawPerm> const& gens) {
  std::size_t n = gens.empty() ? 1 : gens.front().size();
  RawPerm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<RawPerm> all{id};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RawPerm> snapshot(all.begin(), all.end());
    for (auto const& a : snapshot)
      for (auto const& g : gens)
        if (all.insert(compose(a, g)).second) grew = true;
  }
  return {all.begin(), all.end()};
}

std::uint64_t max_commuting_set(std::vector<RawPerm> const& elements) {
  auto n = elements.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = compose(elements[i], elements[j]) == compose(elements[j], elements[i]);
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::uint64_t best = 0;
  bron_kerbosch(adj, {}, p, {}, best);
  return best;
}

TwoGenerated two_generated_scan(std::vector<RawPerm> const& gens) {
  auto elems = raw_closure(gens);
  std::set<std::vector<RawPerm>> seen;
  TwoGenerated out;
  for (auto const& a : elems)
    for (auto const& b : elems) {
      auto h = raw_closure({a, b});
      if (!seen.insert(h).second) continue;
      out.jordan_constant = std::max<std::uint64_t>(out.jordan_constant, h.size() / max_commuting_set(h));
    }
  out.subgroups = seen.size();
  return out;
}

}  // namespace oracle

namespace oracle {

jordan::dsl::GroupExpr random_expr(std::mt19937& rng, int depth, bool cheap) {
  using namespace jordan;
  using namespace jordan::dsl;
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 11 : 9);
  GroupExpr e;
  std::vector<roots::SimpleType> types{{roots::Family::A, 1}, {roots::Family::B, 2}, {roots::Family::G, 2},
                                       {roots::Family::D, 4}, {roots::Family::E, 6}, {roots::Family::A, 3}};
  switch (pick(rng)) {
    case 0: e.kind = NodeKind::torus; e.param = rng() % 50; break;
    case 1: e.kind = NodeKind::unipotent; e.param = rng() % 50; break;
    case 2: e.kind = NodeKind::abelian_variety; e.param = rng() % 50; break;
    case 3: e.kind = NodeKind::finite; e.param = 1 + rng() % 100000; break;
    case 4: e.kind = NodeKind::gl; e.param = rng() % 129; break;
    case 5: e.kind = NodeKind::gl_q; e.param = 1 + rng() % 128; break;
    case 6: e.kind = NodeKind::connected; e.param = rng() % (cheap ? 17 : 65); break;
    case 7: e.kind = NodeKind::aut0; e.param = 1 + rng() % (cheap ? 2 : 4); break;
    case 8: e.kind = NodeKind::bir_connected; e.param = 1 + rng() % (cheap ? 2 : 4); break;
    case 9: {
      e.kind = NodeKind::semisimple;
      e.param = 0;
      // the leaf needs N(dim), so cheap trees stay at dim <= 16
      auto k = 1 + rng() % (cheap ? 2 : 3);
      bool uniform = rng() % 2;
      auto iso = rng() % 2 ? Isogeny::sc : Isogeny::adjoint;
      for (std::size_t i = 0; i < k; ++i) {
        e.types.push_back(types[rng() % (cheap ? 3 : types.size())]);
        e.isogeny.push_back(uniform ? iso : (rng() % 2 ? Isogeny::sc : Isogeny::adjoint));
      }
      if (cheap && e.types.size() == 2 && e.types[0].dim() + e.types[1].dim() > 16) {
        e.types.pop_back();
        e.isogeny.pop_back();
      }
      break;
    }
    case 10: {
      e.kind = NodeKind::product;
      e.param = 0;
      auto k = 2 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i) e.children.push_back(random_expr(rng, depth - 1, cheap));
      break;
    }
    default:
      e.kind = NodeKind::extension;
      e.param = 0;
      e.children.push_back(random_expr(rng, depth - 1, cheap));
      e.children.push_back(random_expr(rng, depth - 1, cheap));
  }
  return e;
}

}  // namespace oracle
