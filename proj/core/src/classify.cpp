#include "jtl/classify.hpp"

#include <algorithm>

namespace jtl {

ElementCheck is_regular_module(const ModulePtr& m, const Limits& limits) {
  const std::vector<ModuleHom> duals = dual(m, limits);
  for (Elem x = 0; x < m->size(); ++x) {
    bool found = false;
    for (const ModuleHom& q : duals)
      if (m->act(q(x), x) == x) {
        found = true;
        break;
      }
    if (!found) return {false, x};
  }
  return {true, std::nullopt};
}

ElementCheck is_anti_regular(const ModulePtr& m, const Limits& limits) {
  const std::vector<ModuleHom> duals = dual(m, limits);
  const FiniteRing& ring = *m->ring();
  for (Elem x = 1; x < m->size(); ++x) {
    bool found = false;
    for (const ModuleHom& q : duals) {
      if (q.is_zero()) continue;
      Elem e = q(x);  // mq
      // reduced form: a(mq) = a for every a in the image of q
      bool reduced = true;
      for (Elem y = 0; y < m->size(); ++y)
        if (ring.mul(q(y), e) != q(y)) {
          reduced = false;
          break;
        }
      // composite form: y -> ((yq)m)q equals q pointwise
      bool composite = true;
      for (Elem y = 0; y < m->size(); ++y)
        if (q(m->act(q(y), x)) != q(y)) {
          composite = false;
          break;
        }
      if (reduced != composite)
        throw InternalCheck("is_anti_regular: reduced and composite forms disagree");
      if (reduced) {
        found = true;
        break;
      }
    }
    if (!found) return {false, x};
  }
  return {true, std::nullopt};
}

WRegularCheck is_w_regular(const ModulePtr& m, const Limits& limits) {
  if (!is_projective(m, limits).projective) return {false, "not projective"};
  for (Elem x = 0; x < m->size(); ++x) {
    ElementSet rm = cyclic_submodule(*m, x);
    if (!is_direct_summand(*m, rm, limits).is_summand)
      return {false, "Rm=" + rm.to_string() + " (m=" + std::to_string(x) + ")"};
  }
  return {true, ""};
}

ElementSet trace_ideal(const ModulePtr& m, Elem x, const Limits& limits) {
  const std::vector<ModuleHom> duals = dual(m, limits);
  const FiniteRing& ring = *m->ring();
  ElementSet gen(ring.size());
  gen.insert(0);
  for (const ModuleHom& q : duals)
    for (Elem r = 0; r < ring.size(); ++r) gen.insert(ring.mul(r, q(x)));
  // additive closure
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = gen.elements();
    for (int a : elems)
      for (int b : elems) {
        Elem c = ring.add(a, b);
        if (!gen.contains(c)) {
          gen.insert(c);
          changed = true;
        }
      }
  }
  if (!is_left_ideal(ring, gen))
    throw InternalCheck("trace_ideal: result is not a left ideal");
  return gen;
}

ElementCheck is_fully_idempotent_module(const ModulePtr& m,
                                        const Limits& limits) {
  for (Elem x = 0; x < m->size(); ++x) {
    ElementSet trace = trace_ideal(m, x, limits);
    ElementSet tm(m->size());
    for (int t : trace.elements()) tm.insert(m->act(t, x));
    if (tm != cyclic_submodule(*m, x)) return {false, x};
  }
  return {true, std::nullopt};
}

RegularEquivalence regular_equivalence_check(const ModulePtr& m,
                                             const Limits& limits) {
  const std::vector<ModuleHom> duals = dual(m, limits);
  const FiniteRing& ring = *m->ring();
  const ElementSet idem = element_classes(ring).idempotents;
  const TorsionProfile torsion = torsion_profile(m, limits);

  bool idem_cond = true;
  for (Elem x = 0; x < m->size() && idem_cond; ++x) {
    ElementSet mdual(ring.size());
    for (const ModuleHom& q : duals) mdual.insert(q(x));
    bool found = false;
    for (int e : idem.elements()) {
      ElementSet er(ring.size());
      for (Elem r = 0; r < ring.size(); ++r) er.insert(ring.mul(e, r));
      if (er == mdual) {
        found = true;
        break;
      }
    }
    if (!found) idem_cond = false;
  }

  RegularEquivalence out;
  out.regular = is_regular_module(m, limits).holds;
  out.jtl_and_idem = torsion.j_torsionless && idem_cond;
  out.tl_and_idem = torsion.torsionless && idem_cond;
  out.consistent =
      out.regular == out.jtl_and_idem && out.jtl_and_idem == out.tl_and_idem;
  if (!out.consistent)
    out.detail = std::string("regular=") + (out.regular ? "1" : "0") +
                 " jtl+idem=" + (out.jtl_and_idem ? "1" : "0") +
                 " tl+idem=" + (out.tl_and_idem ? "1" : "0");
  return out;
}

bool ModuleProfile::flag(std::string_view flag_name) const {
  if (flag_name == "regular") return regular;
  if (flag_name == "anti_regular") return anti_regular;
  if (flag_name == "w_regular") return w_regular;
  if (flag_name == "fully_idempotent") return fully_idempotent;
  if (flag_name == "torsionless") return torsionless;
  if (flag_name == "j_torsionless") return j_torsionless;
  throw UnknownFlag("unknown module flag: " + std::string(flag_name));
}

const std::vector<std::string>& ModuleProfile::flag_names() {
  static const std::vector<std::string> names = {
      "regular",          "anti_regular", "w_regular",
      "fully_idempotent", "torsionless",  "j_torsionless"};
  return names;
}

ModuleProfile module_profile(const ModulePtr& m, const Limits& limits) {
  ModuleProfile out;
  const ElementCheck reg = is_regular_module(m, limits);
  out.regular = reg.holds;
  if (!reg.holds && reg.witness)
    out.witness["regular"] = "m=" + std::to_string(*reg.witness);

  const ElementCheck anti = is_anti_regular(m, limits);
  out.anti_regular = anti.holds;
  if (!anti.holds && anti.witness)
    out.witness["anti_regular"] = "m=" + std::to_string(*anti.witness);

  const WRegularCheck wreg = is_w_regular(m, limits);
  out.w_regular = wreg.holds;
  if (!wreg.holds) out.witness["w_regular"] = wreg.witness;

  const ElementCheck fi = is_fully_idempotent_module(m, limits);
  out.fully_idempotent = fi.holds;
  if (!fi.holds && fi.witness)
    out.witness["fully_idempotent"] = "m=" + std::to_string(*fi.witness);

  const TorsionProfile torsion = torsion_profile(m, limits);
  out.torsionless = torsion.torsionless;
  out.j_torsionless = torsion.j_torsionless;
  if (torsion.witness) {
    const std::string w = "m=" + std::to_string(*torsion.witness);
    if (!torsion.torsionless) out.witness["torsionless"] = w;
    if (!torsion.j_torsionless) out.witness["j_torsionless"] = w;
  }
  return out;
}

}  // namespace jtl
