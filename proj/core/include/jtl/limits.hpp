#pragma once

namespace jtl {

// Hard caps for the enumeration-heavy operations. Exceeding a cap raises
// BudgetExceeded rather than silently truncating a result.
struct Limits {
  int max_ring_size = 32;          // ideal-lattice enumeration cap
  int max_module_size = 64;        // submodule / hom enumeration cap
  int max_ideals = 4096;
  int max_submodules = 4096;
  long max_hom_candidates = 65536;  // |N|^k candidate tuples per Hom-set
  int max_generators = 3;           // generator count k per Hom-set source
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace jtl
