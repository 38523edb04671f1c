#include "jordan/json_io.hpp"

#include "jordan/error.hpp"

namespace jordan::json {

namespace {

std::string dec(BigInt const& v) { return v.get_str(); }

Json element(Element const& e) {
  Json out = Json::array();
  for (auto x : e) out.push_back(std::to_string(x));
  return out;
}

}  // namespace

Json bound_value(BoundValue const& v, Caps const& caps) {
  if (v.is_infinite()) return {{"infinite", true}};
  Json factors = Json::array();
  for (auto const& [b, e] : v.factors()) factors.push_back({dec(b), dec(e)});
  auto l = v.log10();
  Json out{{"factors", factors}, {"log10", {l.lo, l.hi}}};
  if (auto d = v.expand(caps)) out["decimal"] = dec(*d);
  return out;
}

BoundValue parse_bound_value(Json const& j) {
  try {
    if (j.value("infinite", false)) return BoundValue::infinity();
    std::vector<BoundValue::Factor> factors;
    for (auto const& f : j.at("factors"))
      factors.emplace_back(parse_bigint(f.at(0).get<std::string>()), parse_bigint(f.at(1).get<std::string>()));
    return BoundValue::from_factors(std::move(factors));
  } catch (Json::exception const& e) {
    throw InvalidArgument(std::string("malformed bound value: ") + e.what());
  }
}

Json ext_nat(ExtNat const& v) { return v.str(); }

Json triple(BoundTriple const& t, Caps const& caps) {
  return {{"j", bound_value(t.j, caps)}, {"rkf", ext_nat(t.rkf)}, {"bd", ext_nat(t.bd)}};
}

Json trace(DerivationTrace const& t, Caps const& caps) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.steps().size(); ++i) {
    auto const& s = t.steps()[i];
    Json params = Json::array();
    for (auto const& [k, v] : s.params) params.push_back({k, v});
    Json inputs = Json::array();
    for (auto in : s.inputs) inputs.push_back(std::to_string(in));
    Json step{{"index", std::to_string(i)}, {"rule", s.rule},     {"statement", s.statement},
              {"inputs", inputs},           {"params", params},   {"output", triple(s.output, caps)}};
    if (!s.note.empty()) step["note"] = s.note;
    out.push_back(std::move(step));
  }
  return out;
}

Json abelian_group(FiniteAbelianGroup const& g) {
  Json out = Json::array();
  for (auto d : g.invariant_factors()) out.push_back(std::to_string(d));
  return out;
}

Json catalog_row(roots::SimpleType type) {
  auto e = roots::catalog_entry(type);
  return {{"type", type.name()},
          {"family", std::string(1, static_cast<char>(type.family()))},
          {"rank", std::to_string(e.rank)},
          {"dim", std::to_string(e.dim)},
          {"center", abelian_group(e.center)}};
}

Json class_row(semisimple::ClassRow const& row) {
  Json kernel = Json::array();
  for (auto const& g : row.cls.kernel) kernel.push_back(element(g));
  Json summands = Json::array();
  for (auto const& s : row.faithful.summands) {
    Json weights = Json::array();
    for (auto const& w : s) weights.push_back(w.str());
    summands.push_back(std::move(weights));
  }
  return {{"class", row.cls.name()},
          {"type", row.cls.base.name()},
          {"kernel", kernel},
          {"dim", std::to_string(row.dim)},
          {"center", abelian_group(row.center)},
          {"quotient_center", abelian_group(row.quotient)},
          {"faithful_dim", std::to_string(row.faithful.dim)},
          {"summands", summands}};
}

Json verify_report(finite::VerifyReport const& r, Caps const& caps) {
  Json out{{"context", r.context.str()},
           {"order", std::to_string(r.order)},
           {"index", std::to_string(r.index)},
           {"bound", bound_value(r.bound, caps)},
           {"pass", r.pass}};
  if (r.constant) out["constant"] = std::to_string(*r.constant);
  return out;
}

}  // namespace jordan::json
