#pragma once

#include <string>
#include <vector>

#include "jtl/module.hpp"

namespace jtl {

struct CatalogCaps {
  int max_ring_size = 16;
  int max_module_size = 64;
};

struct CatalogEntry {
  RingPtr ring;
  std::vector<ModulePtr> family;  // deterministic order, value-deduplicated
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<std::string> skips;  // constructions dropped by the caps
};

std::vector<RingPtr> builtin_rings(const CatalogCaps& caps = {});

// Z_n (2..12), F4, Z2xZ2, Z2xZ4, M2(F2), T2(F2) within the ring cap; per
// ring: _RR, R/I for every left ideal, the simple modules, _RR (+) R/mu0 for
// the first maximal ideal, and _RR (+) _RR where the module cap permits.
Catalog catalog_builtin(const CatalogCaps& caps = {},
                        const Limits& limits = default_limits());

// Rings and modules from every .json file in a directory (sorted by file
// name); module "ring" fields must resolve among the directory's rings.
Catalog catalog_from_dir(const std::string& path,
                         const Limits& limits = default_limits());

}  // namespace jtl
