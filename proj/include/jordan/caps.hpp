#pragma once

#include <cstdint>
#include <filesystem>

namespace jordan {

/// Resource caps shared by every module. Breaching one raises CapExceeded.
struct Caps {
  int root_rank = 64;                        // largest rank for root enumeration
  int enumeration_dim = 64;                  // semisimple enumeration
  std::uint64_t center_order = 4096;         // central subgroup enumeration
  std::uint64_t subgroup_count = 100000;     // subgroups per center
  int search_dim = 512;                      // minimal faithful representation search
  std::size_t closure_order = 10000;         // permutation group closure
  std::size_t subgroup_enum_order = 2000;    // exact Jordan constant
  std::uint64_t digit_cap = 1000000;         // decimal expansion of bounds

  friend bool operator==(Caps const&, Caps const&) = default;
};

/// Reads a JSON object whose keys override the defaults; unknown keys are rejected.
Caps load_caps(std::filesystem::path const& path);

}  // namespace jordan
