#pragma once

#include <cstddef>

namespace cosetmg {

// Size limits for the exhaustive algorithms. All values are configuration;
// exceeding one raises CapExceeded.
struct Caps {
  std::size_t closure_max = 10'000;           // generated-group enumeration
  std::size_t subgroup_enum_max_order = 64;   // |G| for subgroup enumeration
  std::size_t automorphism_max_order = 24;    // |G| for the automorphism oracle
  int normalizer_max_omega = 8;               // |Omega| for exhaustive normalizers
  int centralizer_max_omega = 16;             // |Omega| for centralizer backtracking
};

}  // namespace cosetmg
