#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/caps.hpp"
#include "jordan/error.hpp"
#include "jordan/root_system.hpp"
#include "jordan/semisimple.hpp"
#include "jordan/trace.hpp"

namespace jordan::dsl {

enum class NodeKind {
  torus,
  unipotent,
  abelian_variety,
  finite,
  gl,
  gl_q,
  semisimple,
  connected,
  aut0,
  bir_connected,
  product,
  extension,
};

enum class Isogeny { sc, adjoint };

/// A structured group. Leaves carry `param` (or, for semisimple, the type list
/// with one isogeny per factor); product has >= 2 children; extension has
/// (normal, quotient).
struct GroupExpr {
  NodeKind kind = NodeKind::finite;
  std::uint64_t param = 1;
  std::vector<roots::SimpleType> types;
  std::vector<Isogeny> isogeny;
  std::vector<GroupExpr> children;

  friend bool operator==(GroupExpr const&, GroupExpr const&) = default;
};

class ParseError : public InvalidArgument {
 public:
  ParseError(std::string const& message, std::size_t offset, std::size_t line, std::size_t column);
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_, line_, column_;
};

/// One expression; "#" starts a comment running to the end of the line.
GroupExpr parse(std::string_view text, Caps const& caps = {});

/// Canonical text; parse(print(e)) == e.
std::string print(GroupExpr const& e);

std::string_view kind_name(NodeKind kind);

/// The class described by a semisimple leaf.
semisimple::IsogenyClass isogeny_class(GroupExpr const& leaf);

/// Bottom-up fold through the bound rules. Cap breaches are rethrown with the
/// path of the offending node.
Derivation evaluate(GroupExpr const& e, Caps const& caps = {});

}  // namespace jordan::dsl
