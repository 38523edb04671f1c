#include "jordan/bounds.hpp"

#include <map>

#include "jordan/error.hpp"

namespace jordan::bounds {

namespace {

std::map<std::string, std::string, std::less<>> const& statements() {
  static std::map<std::string, std::string, std::less<>> const table{
      {"leaf.trivial", "the trivial group: J = 1, Rk_f = 0, Bd = 1"},
      {"leaf.torus", "a torus T is commutative with Rk_f(T) = dim T"},
      {"leaf.unipotent", "nontrivial unipotent elements have infinite order in characteristic 0, so Bd = 1"},
      {"leaf.abelian_variety", "an abelian variety A is commutative with Rk_f(A) = 2 dim A"},
      {"leaf.finite", "J(G) <= |G| via the trivial subgroup; Rk_f(G) <= floor(log2 |G|); Bd(G) = |G|"},
      {"leaf.gl_field", "J(GL_n) = C_n < (sqrt(8n) + 1)^(2n^2); Rk_f(GL_n) = n"},
      {"leaf.gl_rational", "J(GL_n(Q)) <= C_n; Rk_f = n; finite subgroup orders divide M(n)"},
      {"leaf.semisimple", "J(S) <= S(d) <= C_N(d) and S embeds in GL_N(d), so Rk_f(S) <= N(d)"},
      {"leaf.commutator", "H_1^(1) is central of order <= l^l, hence abelian: J = 1, Rk_f <= floor(log2 l^l), Bd <= l^l"},
      {"leaf.abelian_modulo_commutator", "H_1/H_1^(1) is finite abelian: J = 1, Rk_f <= 2m + l + N(l)"},
      {"leaf.levi_index", "some H_1 <= H has [H:H_1] <= S(l) <= C_N(l)"},
      {"extension", "J(G) <= min of Bd(G2) J(G1) [Bd(G2) finite], J(G2) [Bd(G1) = 1], "
                    "J(G2) Bd(G1)^(Rk_f(G2) Bd(G1)) [finite, Rk_f(G2) >= 1]; Rk_f(G) <= Rk_f(G1) + Rk_f(G2); "
                    "Bd(G) <= Bd(G1) Bd(G2)"},
      {"product", "J(G1 x G2) <= J(G1) J(G2); Rk_f and Bd as for extensions"},
      {"assemble.index", "[H:A] <= [H:H_1] [H_1:A]; Rk_f(G) <= 2m + l + N(l)"},
  };
  return table;
}

std::string const& statement(std::string_view rule) {
  auto it = statements().find(rule);
  if (it == statements().end()) throw Error("unknown derivation rule " + std::string(rule));
  return it->second;
}

ExtNat ext(std::int64_t v) { return ExtNat(static_cast<long long>(v)); }

int small_int(BigInt const& v, char const* what) {
  if (v < 0 || v > 1000000) throw InvalidArgument(std::string(what) + " out of range: " + v.get_str());
  return static_cast<int>(v.get_si());
}

BigInt floor_log2(BigInt const& v) { return BigInt(static_cast<unsigned long>(mpz_sizeinbase(v.get_mpz_t(), 2) - 1)); }

BigInt self_power(int l) { return jordan::pow(BigInt(l), static_cast<unsigned long>(l)); }  // 0^0 = 1

// J <= Bd whenever Bd is finite: every finite subgroup is its own bound.
std::string clamp(BoundTriple& t) {
  if (t.bd.is_infinite()) return {};
  auto bd = BoundValue::from(t.bd);
  if (bd < t.j) {
    t.j = bd;
    return "J clamped to Bd";
  }
  return {};
}

using Params = std::vector<std::pair<std::string, std::string>>;

// The single place where each rule is evaluated; building and replaying a
// trace both go through here.
std::pair<BoundTriple, std::string> apply(std::string const& rule, TraceStep const& step,
                                          std::vector<BoundTriple const*> const& in, Caps const& caps) {
  auto need = [&](std::size_t k) {
    if (in.size() != k) throw Error("rule " + rule + " takes " + std::to_string(k) + " inputs");
  };
  auto param = [&](char const* key) { return parse_bigint(step.param(key)); };
  BoundTriple t;
  std::string note;
  if (rule == "leaf.trivial") {
    need(0);
    t = {BoundValue(), 0, 1};
  } else if (rule == "leaf.torus") {
    need(0);
    t = {BoundValue(), ExtNat(param("r")), ExtNat::infinity()};
  } else if (rule == "leaf.unipotent") {
    need(0);
    param("d");
    t = {BoundValue(), 0, 1};
  } else if (rule == "leaf.abelian_variety") {
    need(0);
    t = {BoundValue(), ExtNat(BigInt(2 * param("g"))), ExtNat::infinity()};
  } else if (rule == "leaf.finite") {
    need(0);
    auto n = param("order");
    if (n < 1) throw InvalidArgument("finite group order must be >= 1");
    t = {BoundValue(n), ExtNat(floor_log2(n)), ExtNat(n)};
  } else if (rule == "leaf.gl_field") {
    need(0);
    auto n = param("n");
    if (!n.fits_ulong_p()) throw InvalidArgument("matrix size out of range");
    t = {BoundValue(cn_bound(n.get_ui())), ExtNat(n), ExtNat::infinity()};
  } else if (rule == "leaf.gl_rational") {
    need(0);
    auto n = param("n");
    if (n < 1 || !n.fits_ulong_p()) throw InvalidArgument("rational matrix size must be >= 1");
    t = {BoundValue(cn_bound(n.get_ui())), ExtNat(n), ExtNat(minkowski_bound(n.get_ui()))};
  } else if (rule == "leaf.semisimple") {
    need(0);
    int d = small_int(param("dim"), "semisimple dimension");
    t = {s_bound(d, caps), ext(semisimple::n_of(d, caps)), ExtNat::infinity()};
  } else if (rule == "leaf.commutator") {
    need(0);
    auto order = self_power(small_int(param("l"), "Levi dimension"));
    t = {BoundValue(), ExtNat(floor_log2(order)), ExtNat(order)};
  } else if (rule == "leaf.abelian_modulo_commutator") {
    need(0);
    t = {BoundValue(),
         rkf_mod_commutator(small_int(param("l"), "Levi dimension"), small_int(param("m"), "anti-affine dimension"), caps),
         ExtNat::infinity()};
  } else if (rule == "leaf.levi_index") {
    need(0);
    int l = small_int(param("l"), "Levi dimension");
    t = {s_bound(l, caps), ext(semisimple::n_of(l, caps)), ExtNat::infinity()};
  } else if (rule == "extension") {
    need(2);
    auto const& g1 = *in[0];
    auto const& g2 = *in[1];
    std::vector<std::pair<char const*, BoundValue>> candidates;
    if (g2.bd.is_finite()) candidates.emplace_back("bounded_quotient", BoundValue::from(g2.bd) * g1.j);
    if (g1.bd == ExtNat(1)) candidates.emplace_back("torsion_free_normal", g2.j);
    // With Rk_f(G2) = 0 the formula would claim J(G) <= J(G2) for any finite
    // G1 (take G = G1 = S_3), so the rule is only used from rank 1 up.
    if (g1.bd.is_finite() && g2.rkf.is_finite() && g2.rkf >= ExtNat(1)) {
      BigInt b = g1.bd.value();
      candidates.emplace_back("rank_of_quotient", g2.j * BoundValue::power(b, g2.rkf.value() * b));
    }
    t.j = BoundValue::infinity();
    note = "no J rule applies";
    for (auto const& [name, value] : candidates)
      if (note == "no J rule applies" || value < t.j) {
        t.j = value;
        note = std::string("J from ") + name;
      }
    t.rkf = g1.rkf + g2.rkf;
    t.bd = g1.bd * g2.bd;
  } else if (rule == "product") {
    need(2);
    t = {in[0]->j * in[1]->j, in[0]->rkf + in[1]->rkf, in[0]->bd * in[1]->bd};
  } else if (rule == "assemble.index") {
    need(3);
    t = {in[0]->j * in[1]->j, in[2]->rkf, ExtNat::infinity()};
  } else {
    throw Error("unknown derivation rule " + rule);
  }
  if (auto c = clamp(t); !c.empty()) note += note.empty() ? c : "; " + c;
  t.validate();
  return {t, note};
}

std::size_t add_step(DerivationTrace& trace, std::string rule, Params params, std::vector<std::size_t> inputs,
                     Caps const& caps) {
  TraceStep step{rule, statement(rule), std::move(inputs), std::move(params), {}, {}};
  std::vector<BoundTriple const*> in;
  for (auto i : step.inputs) in.push_back(&trace.steps().at(i).output);
  std::tie(step.output, step.note) = apply(rule, step, in, caps);
  return trace.append(std::move(step));
}

Derivation finish(DerivationTrace trace) {
  auto t = trace.result();
  return {t, std::move(trace)};
}

}  // namespace

BigInt cn_bound(std::uint64_t n) {
  if (n == 0) return 1;
  BigInt d = BigInt(8) * BigInt(static_cast<unsigned long>(n));
  // (1 + sqrt d)^k = a + b sqrt d in Z[sqrt d], by repeated squaring.
  BigInt a = 1, b = 0, x = 1, y = 1;
  BigInt k = BigInt(2) * BigInt(static_cast<unsigned long>(n)) * BigInt(static_cast<unsigned long>(n));
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) {
      BigInt na = a * x + b * y * d, nb = a * y + b * x;
      a = na;
      b = nb;
    }
    BigInt nx = x * x + y * y * d, ny = 2 * x * y;
    x = nx;
    y = ny;
    k /= 2;
  }
  BigInt bsq = b * b * d;
  BigInt floor = a + isqrt(bsq);
  if (mpz_perfect_square_p(d.get_mpz_t())) floor -= 1;  // the bound is strict
  return floor;
}

BigInt minkowski_bound(std::uint64_t n) {
  if (n < 1) throw InvalidArgument("Minkowski bound needs n >= 1");
  if (n > 100000) throw InvalidArgument("Minkowski bound size out of range");
  std::vector<bool> composite(n + 2, false);
  BigInt m = 1;
  for (std::uint64_t p = 2; p <= n + 1; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= n + 1; q += p) composite[q] = true;
    std::uint64_t e = 0;
    for (std::uint64_t den = p - 1; den <= n; den *= p) e += n / den;
    m *= jordan::pow(BigInt(static_cast<unsigned long>(p)), e);
  }
  return m;
}

BoundValue s_bound(int n, Caps const& caps) {
  return BoundValue(cn_bound(static_cast<std::uint64_t>(semisimple::n_of(n, caps))));
}

Derivation leaf_triple(LeafKind kind, BigInt const& param, Caps const& caps) {
  if (param < 0) throw InvalidArgument("leaf parameter must be non-negative");
  DerivationTrace trace;
  auto p = param.get_str();
  switch (kind) {
    case LeafKind::trivial: add_step(trace, "leaf.trivial", {}, {}, caps); break;
    case LeafKind::torus: add_step(trace, "leaf.torus", {{"r", p}}, {}, caps); break;
    case LeafKind::unipotent: add_step(trace, "leaf.unipotent", {{"d", p}}, {}, caps); break;
    case LeafKind::abelian_variety: add_step(trace, "leaf.abelian_variety", {{"g", p}}, {}, caps); break;
    case LeafKind::finite: add_step(trace, "leaf.finite", {{"order", p}}, {}, caps); break;
    case LeafKind::gl_field: add_step(trace, "leaf.gl_field", {{"n", p}}, {}, caps); break;
    case LeafKind::gl_rational: add_step(trace, "leaf.gl_rational", {{"n", p}}, {}, caps); break;
    case LeafKind::semisimple: add_step(trace, "leaf.semisimple", {{"dim", p}}, {}, caps); break;
  }
  return finish(std::move(trace));
}

Derivation leaf_semisimple(semisimple::IsogenyClass const& cls, Caps const& caps) {
  DerivationTrace trace;
  add_step(trace, "leaf.semisimple", {{"class", cls.name()}, {"dim", std::to_string(cls.base.dim())}}, {}, caps);
  return finish(std::move(trace));
}

Derivation combine_extension(Derivation const& normal, Derivation const& quotient) {
  DerivationTrace trace;
  auto a = trace.splice(normal.trace);
  auto b = trace.splice(quotient.trace);
  add_step(trace, "extension", {}, {a, b}, {});
  return finish(std::move(trace));
}

Derivation combine_product(Derivation const& x, Derivation const& y) {
  DerivationTrace trace;
  auto a = trace.splice(x.trace);
  auto b = trace.splice(y.trace);
  add_step(trace, "product", {}, {a, b}, {});
  return finish(std::move(trace));
}

ExtNat rkf_reductive(int n, Caps const& caps) { return ext(n) + ext(semisimple::n_of(n, caps)); }

BoundValue j_semisimple_derived(int n, Caps const& caps) { return s_bound(n, caps); }

ExtNat rkf_mod_commutator(int n, int m, Caps const& caps) {
  if (m < 0) throw InvalidArgument("anti-affine dimension must be non-negative");
  return ext(2 * static_cast<std::int64_t>(m)) + ext(n) + ext(semisimple::n_of(n, caps));
}

Derivation connected_pipeline(int l, int m, Caps const& caps) {
  if (l < 0 || m < 0) throw InvalidArgument("dimensions must be non-negative");
  DerivationTrace trace;
  auto ls = std::to_string(l), ms = std::to_string(m);
  auto commutator = add_step(trace, "leaf.commutator", {{"l", ls}}, {}, caps);
  auto quotient = add_step(trace, "leaf.abelian_modulo_commutator", {{"l", ls}, {"m", ms}}, {}, caps);
  auto ext_step = add_step(trace, "extension", {}, {commutator, quotient}, caps);
  auto index = add_step(trace, "leaf.levi_index", {{"l", ls}}, {}, caps);
  add_step(trace, "assemble.index", {}, {index, ext_step, quotient}, caps);
  return finish(std::move(trace));
}

BoundValue connected_closed_form(int l, int m, Caps const& caps) {
  auto ll = self_power(l);
  auto r = rkf_mod_commutator(l, m, caps).value();
  return s_bound(l, caps) * BoundValue::power(ll, r * ll);
}

namespace {

Derivation checked_pipeline(int l, int m, Caps const& caps) {
  auto d = connected_pipeline(l, m, caps);
  auto closed = connected_closed_form(l, m, caps);
  if (!(d.triple.j == closed))
    throw Error("derivation gives " + d.triple.j.str() + " but the closed form is " + closed.str());
  return d;
}

}  // namespace

Derivation j_connected(int n, Caps const& caps) {
  if (n < 0) throw InvalidArgument("dimension must be non-negative");
  return checked_pipeline(n, n, caps);
}

ExtNat rkf_connected(int n, Caps const& caps) {
  if (n < 0) throw InvalidArgument("dimension must be non-negative");
  return ext(3 * static_cast<std::int64_t>(n)) + ext(semisimple::n_of(n, caps));
}

namespace {

int aut0_t(int n, Caps const& caps) {
  if (n < 1) throw InvalidArgument("variety dimension must be >= 1");
  if (n > 1000) throw CapExceeded("bound-calculus", "variety dimension " + std::to_string(n));
  auto t = 4 * n * n;
  if (t > caps.enumeration_dim)
    throw CapExceeded("bound-calculus", "t = 4n^2 = " + std::to_string(t) + " exceeds the enumeration cap " +
                                            std::to_string(caps.enumeration_dim));
  return t;
}

}  // namespace

Derivation j_aut0(int n, Caps const& caps) {
  auto t = aut0_t(n, caps);
  return checked_pipeline(t, 2 * n, caps);
}

ExtNat rkf_aut0(int n, Caps const& caps) {
  auto t = aut0_t(n, caps);
  return ext(4 * static_cast<std::int64_t>(n)) + ext(t) + ext(semisimple::n_of(t, caps));
}

BoundTriple replay(DerivationTrace const& trace, Caps const& caps) {
  std::vector<BoundTriple> outputs;
  for (std::size_t i = 0; i < trace.steps().size(); ++i) {
    auto const& step = trace.steps()[i];
    std::vector<BoundTriple const*> in;
    for (auto k : step.inputs) {
      if (k >= i) throw Error("step " + std::to_string(i) + " refers forward");
      in.push_back(&outputs[k]);
    }
    auto [t, note] = apply(step.rule, step, in, caps);
    if (!(t == step.output))
      throw Error("step " + std::to_string(i) + " (" + step.rule + ") recomputes to " + t.str() + ", recorded " +
                  step.output.str());
    if (step.statement != statement(step.rule)) throw Error("step " + std::to_string(i) + " has a foreign statement");
    outputs.push_back(std::move(t));
  }
  if (outputs.empty()) throw Error("empty derivation trace");
  return outputs.back();
}

}  // namespace jordan::bounds
