#pragma once

#include <json.hpp>

#include "jordan/bound_value.hpp"
#include "jordan/caps.hpp"
#include "jordan/ext_nat.hpp"
#include "jordan/finite_group.hpp"
#include "jordan/root_system.hpp"
#include "jordan/semisimple.hpp"
#include "jordan/trace.hpp"

// JSON encodings. Every number is a decimal string so that consumers never
// lose precision.
namespace jordan::json {

using Json = nlohmann::json;

/// {"factors": [["b", "e"], ...], "log10": ["lo", "hi"], "decimal": "..."};
/// "decimal" only when the value fits caps.digit_cap. Infinity is
/// {"infinite": true}.
Json bound_value(BoundValue const& v, Caps const& caps = {});
/// Reads the "factors" or "infinite" member back.
BoundValue parse_bound_value(Json const& j);

/// "12" or "inf".
Json ext_nat(ExtNat const& v);
Json triple(BoundTriple const& t, Caps const& caps = {});
/// Ordered step list; each step has its rule, statement, inputs, params,
/// note and output.
Json trace(DerivationTrace const& t, Caps const& caps = {});

Json abelian_group(FiniteAbelianGroup const& g);
Json catalog_row(roots::SimpleType type);
Json class_row(semisimple::ClassRow const& row);
Json verify_report(finite::VerifyReport const& r, Caps const& caps = {});

}  // namespace jordan::json
