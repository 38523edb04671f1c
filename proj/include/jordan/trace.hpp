#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jordan/bound_value.hpp"
#include "jordan/ext_nat.hpp"

namespace jordan {

/// Upper bounds for J(G) (Jordan constant), Rk_f(G) (largest rank of a finite
/// abelian subgroup) and Bd(G) (largest order of a finite subgroup).
struct BoundTriple {
  BoundValue j;
  ExtNat rkf;
  ExtNat bd = ExtNat::infinity();

  /// j >= 1, bd >= 1 and j <= bd when bd is finite; throws Error otherwise.
  void validate() const;
  std::string str() const;

  friend bool operator==(BoundTriple const&, BoundTriple const&) = default;
};

struct TraceStep {
  std::string rule;       // e.g. "leaf.torus", "extension", "product"
  std::string statement;  // the inequality the rule applies
  std::vector<std::size_t> inputs;  // indices of earlier steps
  std::vector<std::pair<std::string, std::string>> params;
  std::string note;       // which candidate won, clamps, and so on
  BoundTriple output;

  std::string param(std::string const& key) const;
};

/// Steps in dependency order; the last one carries the result.
class DerivationTrace {
 public:
  std::vector<TraceStep> const& steps() const noexcept { return steps_; }
  bool empty() const noexcept { return steps_.empty(); }
  BoundTriple const& result() const;

  std::size_t append(TraceStep step);
  /// Appends another trace, shifting its internal indices. Returns the index
  /// of its final step.
  std::size_t splice(DerivationTrace const& other);

  std::string str() const;

 private:
  std::vector<TraceStep> steps_;
};

struct Derivation {
  BoundTriple triple;
  DerivationTrace trace;
};

}  // namespace jordan
