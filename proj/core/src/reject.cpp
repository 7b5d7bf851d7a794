#include "jtl/reject.hpp"

#include <algorithm>

namespace jtl {

std::string to_string(RejectKind kind) {
  switch (kind) {
    case RejectKind::rej: return "rej";
    case RejectKind::jrej: return "jrej";
    case RejectKind::nilrej: return "nilrej";
  }
  return "?";
}

namespace {

struct RejPair {
  ElementSet rej_members;
  ElementSet jrej_members;
};

// One pass over all homomorphisms computes both intersections.
RejPair reject_pair(const ModulePtr& m, const ModuleClass& cls,
                    const Limits& limits) {
  RejPair out{ElementSet::full(m->size()), ElementSet::full(m->size())};
  for (const ModulePtr& u : cls) {
    if (!u->ring()->same_structure(*m->ring()))
      throw ShapeError("reject: class member over a different ring");
    const ElementSet rad_u = radical(*u, limits);
    for (const ModuleHom& f : hom_set(m, u, limits)) {
      for (Elem x = 0; x < m->size(); ++x) {
        if (f(x) != 0) out.rej_members.erase(x);
        if (!rad_u.contains(f(x))) out.jrej_members.erase(x);
      }
    }
  }
  return out;
}

}  // namespace

RejectResult rej(const ModulePtr& m, const ModuleClass& cls,
                 const Limits& limits) {
  RejectResult out;
  out.kind = RejectKind::rej;
  out.module = m;
  out.class_used = cls;
  out.members = reject_pair(m, cls, limits).rej_members;
  if (!is_submodule_set(*m, out.members))
    throw InternalCheck("rej: result is not a submodule");
  return out;
}

RejectResult jrej(const ModulePtr& m, const ModuleClass& cls,
                  const Limits& limits) {
  RejPair pair = reject_pair(m, cls, limits);
  RejectResult out;
  out.kind = RejectKind::jrej;
  out.module = m;
  out.class_used = cls;
  out.members = pair.jrej_members;
  if (!is_submodule_set(*m, out.members))
    throw InternalCheck("jrej: result is not a submodule");
  if (!pair.rej_members.is_subset_of(out.members))
    throw InternalCheck("jrej: does not contain rej");
  return out;
}

RejectResult jrej_ring(const ModulePtr& m, const Limits& limits) {
  const ElementSet jrad = jacobson_radical(*m->ring());
  RejectResult out;
  out.kind = RejectKind::jrej;
  out.module = m;
  out.class_is_ring = true;
  out.members = ElementSet::full(m->size());
  for (const ModuleHom& q : dual(m, limits))
    for (Elem x = 0; x < m->size(); ++x)
      if (!jrad.contains(q(x))) out.members.erase(x);
  if (!is_submodule_set(*m, out.members))
    throw InternalCheck("jrej_ring: result is not a submodule");
  return out;
}

RejectResult nilrej(const ModulePtr& m, const Limits& limits) {
  const ElementSet nil = element_classes(*m->ring()).nilpotents;
  RejectResult out;
  out.kind = RejectKind::nilrej;
  out.module = m;
  out.class_is_ring = true;
  out.members = ElementSet::full(m->size());
  for (const ModuleHom& q : dual(m, limits))
    for (Elem x = 0; x < m->size(); ++x)
      if (!nil.contains(q(x))) out.members.erase(x);
  out.is_submodule = is_submodule_set(*m, out.members);
  if (out.is_submodule &&
      !out.members.is_subset_of(jrej_ring(m, limits).members))
    throw InternalCheck("nilrej: submodule not contained in jrej_ring");
  return out;
}

TorsionProfile torsion_profile(const ModulePtr& m, const Limits& limits) {
  const ElementSet jrad = jacobson_radical(*m->ring());
  ElementSet rej_members = ElementSet::full(m->size());
  ElementSet jrej_members = ElementSet::full(m->size());
  for (const ModuleHom& q : dual(m, limits))
    for (Elem x = 0; x < m->size(); ++x) {
      if (q(x) != 0) rej_members.erase(x);
      if (!jrad.contains(q(x))) jrej_members.erase(x);
    }
  TorsionProfile out;
  out.torsionless = rej_members.only_zero();
  out.j_torsionless = jrej_members.only_zero();
  if (out.j_torsionless && !out.torsionless)
    throw InternalCheck("torsion_profile: J-torsionless but not torsionless");
  if (!out.torsionless) {
    for (int e : rej_members.elements())
      if (e != 0) {
        out.witness = e;
        break;
      }
  } else if (!out.j_torsionless) {
    for (int e : jrej_members.elements())
      if (e != 0) {
        out.witness = e;
        break;
      }
  }
  return out;
}

ModuleClass radical_quotient_class(const ModuleClass& cls,
                                   const Limits& limits) {
  ModuleClass out;
  out.reserve(cls.size());
  for (const ModulePtr& u : cls)
    out.push_back(module_quotient(u, radical(*u, limits)));
  return out;
}

bool cogenerates(const ModuleClass& cls, const ModulePtr& m,
                 const Limits& limits) {
  return rej(m, cls, limits).members.only_zero();
}

SmallestCogenCheck smallest_cogen_submodule(const ModulePtr& m,
                                            const ModuleClass& cls,
                                            const Limits& limits) {
  const ModuleClass derived = radical_quotient_class(cls, limits);
  SmallestCogenCheck out;
  out.jrej_members = jrej(m, cls, limits).members;

  std::vector<ElementSet> admissible;
  for (const ElementSet& sub : all_submodules(*m, limits)) {
    ModulePtr q = module_quotient(m, sub);
    if (cogenerates(derived, q, limits)) admissible.push_back(sub);
  }
  out.admissible_count = static_cast<int>(admissible.size());

  bool jrej_admissible = false;
  ElementSet inter = ElementSet::full(m->size());
  for (const ElementSet& sub : admissible) {
    if (sub == out.jrej_members) jrej_admissible = true;
    inter = inter.intersect(sub);
  }
  // M/JRej is always cogenerated by U' (through the induced maps), and the
  // admissible family is closed under intersection.
  if (!jrej_admissible)
    throw InternalCheck("smallest_cogen: M/JRej not cogenerated by U'");
  if (std::find(admissible.begin(), admissible.end(), inter) ==
      admissible.end())
    throw InternalCheck("smallest_cogen: admissible family not intersection-closed");
  if (!inter.is_subset_of(out.jrej_members))
    throw InternalCheck("smallest_cogen: minimum not below jrej");

  out.minimum = inter;
  out.matches = inter == out.jrej_members;
  return out;
}

std::optional<ProductEmbedding> embedding_into_product(const ModulePtr& m,
                                                       const Limits& limits) {
  const RingPtr& ring = m->ring();
  const ElementSet jrad = jacobson_radical(*ring);
  QuotientRing quo = ring_quotient_full(*ring, jrad);

  ProductEmbedding out;
  out.quotient_ring = quo.ring;
  out.duals = dual(m, limits);
  out.rows.assign(static_cast<std::size_t>(m->size()), {});
  bool injective = true;
  for (Elem x = 0; x < m->size(); ++x) {
    bool all_in_radical = true;
    auto& row = out.rows[static_cast<std::size_t>(x)];
    row.reserve(out.duals.size());
    for (const ModuleHom& q : out.duals) {
      row.push_back(quo.class_of[static_cast<std::size_t>(q(x))]);
      if (!jrad.contains(q(x))) all_in_radical = false;
    }
    if (x != 0 && all_in_radical) injective = false;
  }
  if (!injective) return std::nullopt;
  return out;
}

}  // namespace jtl
