#include "jtl/hom.hpp"
#include "jtl/module.hpp"
#include "jtl/ring.hpp"

namespace jtl {

bool RingProfile::flag(std::string_view flag_name) const {
  if (flag_name == "semiprimitive") return semiprimitive;
  if (flag_name == "semiprime") return semiprime;
  if (flag_name == "reduced") return reduced;
  if (flag_name == "domain") return domain;
  if (flag_name == "division") return division;
  if (flag_name == "von_neumann_regular") return von_neumann_regular;
  if (flag_name == "fully_idempotent") return fully_idempotent;
  if (flag_name == "la" || flag_name == "LA") return la;
  if (flag_name == "self_injective") return self_injective;
  if (flag_name == "semisimple") return semisimple;
  throw UnknownFlag("unknown ring flag: " + std::string(flag_name));
}

const std::vector<std::string>& RingProfile::flag_names() {
  static const std::vector<std::string> names = {
      "semiprimitive", "semiprime",           "reduced",
      "domain",        "division",            "von_neumann_regular",
      "fully_idempotent", "la",               "self_injective",
      "semisimple"};
  return names;
}

namespace {

ElementSet cyclic_left_ideal(const FiniteRing& r, Elem a) {
  ElementSet out(r.size());
  for (Elem x = 0; x < r.size(); ++x) out.insert(r.mul(x, a));
  return out;
}

// (Ra)^2: additive closure of the pairwise products of Ra.
ElementSet square_of_cyclic(const FiniteRing& r, const ElementSet& ra) {
  ElementSet out(r.size());
  out.insert(0);
  auto elems = ra.elements();
  for (int x : elems)
    for (int y : elems) out.insert(r.mul(x, y));
  bool changed = true;
  while (changed) {
    changed = false;
    auto cur = out.elements();
    for (int x : cur)
      for (int y : cur) {
        Elem z = r.add(x, y);
        if (!out.contains(z)) {
          out.insert(z);
          changed = true;
        }
      }
  }
  return out;
}

}  // namespace

RingProfile classify_ring(const RingPtr& ring, const Limits& limits) {
  const FiniteRing& r = *ring;
  const int n = r.size();
  RingProfile p;

  const ElementSet jrad = jacobson_radical(r);
  p.semiprimitive = jrad.only_zero();
  if (!p.semiprimitive) p.witness["semiprimitive"] = "J=" + jrad.to_string();

  p.semiprime = true;
  for (Elem a = 1; a < n && p.semiprime; ++a) {
    bool ara_zero = true;
    for (Elem x = 0; x < n; ++x)
      if (r.mul(r.mul(a, x), a) != 0) {
        ara_zero = false;
        break;
      }
    if (ara_zero) {
      p.semiprime = false;
      p.witness["semiprime"] = "a=" + std::to_string(a);
    }
  }

  const ElementClasses classes = element_classes(r);
  p.reduced = classes.nilpotents.only_zero();
  if (!p.reduced)
    for (int a : classes.nilpotents.elements())
      if (a != 0) {
        p.witness["reduced"] = "a=" + std::to_string(a);
        break;
      }

  p.domain = true;
  for (Elem a = 1; a < n && p.domain; ++a)
    for (Elem b = 1; b < n; ++b)
      if (r.mul(a, b) == 0) {
        p.domain = false;
        p.witness["domain"] =
            "a=" + std::to_string(a) + ",b=" + std::to_string(b);
        break;
      }

  p.division = n == 1 || classes.units.count() == n - 1;
  if (!p.division)
    for (Elem a = 1; a < n; ++a)
      if (!classes.units.contains(a)) {
        p.witness["division"] = "a=" + std::to_string(a);
        break;
      }

  p.von_neumann_regular = true;
  for (Elem a = 0; a < n && p.von_neumann_regular; ++a) {
    bool found = false;
    for (Elem x = 0; x < n; ++x)
      if (r.mul(r.mul(a, x), a) == a) {
        found = true;
        break;
      }
    if (!found) {
      p.von_neumann_regular = false;
      p.witness["von_neumann_regular"] = "a=" + std::to_string(a);
    }
  }

  p.fully_idempotent = true;
  for (Elem a = 0; a < n && p.fully_idempotent; ++a) {
    ElementSet ra = cyclic_left_ideal(r, a);
    if (square_of_cyclic(r, ra) != ra) {
      p.fully_idempotent = false;
      p.witness["fully_idempotent"] = "a=" + std::to_string(a);
    }
  }

  const std::vector<ElementSet> ideals = left_ideals(r, limits);
  p.la = true;
  for (const ElementSet& ideal : ideals)
    if (left_annihilator(r, right_annihilator(r, ideal)) != ideal) {
      p.la = false;
      p.witness["la"] = "I=" + ideal.to_string();
      break;
    }

  // Baer criterion over every left ideal.
  const ModulePtr regular = regular_module(ring);
  p.self_injective = true;
  for (const ElementSet& ideal : ideals) {
    if (!p.self_injective) break;
    const ModulePtr ideal_mod = submodule_as_module(regular, ideal);
    for (const ModuleHom& f : hom_set(ideal_mod, regular, limits))
      if (!baer_extension_exists(r, ideal, f)) {
        p.self_injective = false;
        p.witness["self_injective"] = "I=" + ideal.to_string();
        break;
      }
  }

  p.semisimple = classify_module_basic(*regular, limits).semisimple;
  if (!p.semisimple) p.witness["semisimple"] = "socle proper";

  if (p.division && !p.domain)
    throw InternalCheck("classify_ring: division ring that is not a domain");
  if (p.semisimple && !p.semiprimitive)
    throw InternalCheck("classify_ring: semisimple but not semiprimitive");
  if (p.von_neumann_regular && !p.fully_idempotent)
    throw InternalCheck("classify_ring: regular but not fully idempotent");
  return p;
}

}  // namespace jtl
