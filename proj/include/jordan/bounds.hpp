#pragma once

#include <cstdint>

#include "jordan/bigint.hpp"
#include "jordan/bound_value.hpp"
#include "jordan/caps.hpp"
#include "jordan/ext_nat.hpp"
#include "jordan/semisimple.hpp"
#include "jordan/trace.hpp"

namespace jordan::bounds {

/// Largest integer strictly below (sqrt(8n) + 1)^(2n^2); 1 for n = 0.
BigInt cn_bound(std::uint64_t n);

/// Product over primes p <= n+1 of p^(sum_i floor(n / (p^i (p-1)))). Orders of
/// finite subgroups of GL_n(Q) divide it. n >= 1.
BigInt minkowski_bound(std::uint64_t n);

/// C_{N(n)}, the computable stand-in for the supremum S(n).
BoundValue s_bound(int n, Caps const& caps = {});

enum class LeafKind { trivial, torus, unipotent, abelian_variety, finite, gl_field, gl_rational, semisimple };

/// Triple for a basic group; `param` is the rank, dimension, genus, order or
/// matrix size, and for `semisimple` the dimension of the group.
Derivation leaf_triple(LeafKind kind, BigInt const& param, Caps const& caps = {});
Derivation leaf_semisimple(semisimple::IsogenyClass const& cls, Caps const& caps = {});

/// 1 -> G1 -> G -> G2 -> 1 with `normal` bounding G1 and `quotient` bounding
/// G2. The J bound is the least of the applicable candidates.
Derivation combine_extension(Derivation const& normal, Derivation const& quotient);
Derivation combine_product(Derivation const& a, Derivation const& b);

ExtNat rkf_reductive(int n, Caps const& caps = {});
BoundValue j_semisimple_derived(int n, Caps const& caps = {});
ExtNat rkf_mod_commutator(int n, int m, Caps const& caps = {});

/// Closed form s(n) * (n^n)^((3n + N(n)) n^n), with the trace of the
/// argument that produces it.
Derivation j_connected(int n, Caps const& caps = {});
ExtNat rkf_connected(int n, Caps const& caps = {});

/// Same shape with t = 4n^2 in place of n and 4n + t + N(t) as the rank
/// bound; also bounds connected groups inside Bir(X).
Derivation j_aut0(int n, Caps const& caps = {});
ExtNat rkf_aut0(int n, Caps const& caps = {});

/// The argument for a connected group whose Levi subgroup has dimension <= l
/// and whose anti-affine part has dimension <= m: index of an abelian
/// subgroup with small commutator, rank bound modulo it, then the extension
/// bound.
Derivation connected_pipeline(int l, int m, Caps const& caps = {});

/// s(l) * (l^l)^(r * l^l) with r = 2m + l + N(l), computed directly.
BoundValue connected_closed_form(int l, int m, Caps const& caps = {});

/// Recomputes every step from its rule, parameters and inputs. Throws Error
/// at the first step whose recorded output differs.
BoundTriple replay(DerivationTrace const& trace, Caps const& caps = {});

}  // namespace jordan::bounds
