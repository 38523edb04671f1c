#include "jordan/caps.hpp"

#include <fstream>

#include <json.hpp>

#include "jordan/error.hpp"

namespace jordan {

Caps load_caps(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open caps file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const& e) {
    throw InvalidArgument("caps file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw InvalidArgument("caps file must hold a JSON object");

  Caps caps;
  for (auto const& [key, value] : j.items()) {
    if (!value.is_number_unsigned()) throw InvalidArgument("cap '" + key + "' must be a non-negative integer");
    auto v = value.get<std::uint64_t>();
    if (key == "root_rank") caps.root_rank = static_cast<int>(v);
    else if (key == "enumeration_dim") caps.enumeration_dim = static_cast<int>(v);
    else if (key == "center_order") caps.center_order = v;
    else if (key == "subgroup_count") caps.subgroup_count = v;
    else if (key == "search_dim") caps.search_dim = static_cast<int>(v);
    else if (key == "closure_order") caps.closure_order = v;
    else if (key == "subgroup_enum_order") caps.subgroup_enum_order = v;
    else if (key == "digit_cap") caps.digit_cap = v;
    else throw InvalidArgument("unknown cap: " + key);
  }
  return caps;
}

}  // namespace jordan
