#pragma once

#include <string>

#include "jtl/module.hpp"
#include "jtl/reject.hpp"
#include "jtl/ring.hpp"

namespace jtl {

// Ring file: {"kind":"ring","name":...,"size":n,"one":...,"add":[[...]],
// "mul":[[...]]}. Tables row-major; element 0 must be the zero element.
RingData parse_ring_json(const std::string& text);
std::string ring_to_json(const FiniteRing& r);

// Module file: {"kind":"module","name":...,"ring":<ring name>,"size":m,
// "add":[[...]],"act":[[...]]}, act indexed ring-element-first.
ModuleData parse_module_json(const std::string& text);
std::string module_to_json(const FiniteModule& m);

// "ring" or "module", from the "kind" field.
std::string json_kind(const std::string& text);

// {"kind":...,"module":...,"class":[...] or "ring","members":[...]}
// (plus "is_submodule" for nilrej).
std::string reject_to_json(const RejectResult& result);

std::string read_file(const std::string& path);

}  // namespace jtl
