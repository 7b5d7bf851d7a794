#pragma once

#include <optional>
#include <string>

#include "jtl/hom.hpp"

namespace jtl {

enum class RejectKind { rej, jrej, nilrej };

std::string to_string(RejectKind kind);

struct RejectResult {
  RejectKind kind = RejectKind::rej;
  ModulePtr module;
  ModuleClass class_used;      // empty when class_is_ring
  bool class_is_ring = false;  // the "ring" marker: computed against R itself
  ElementSet members;
  // Always true for rej/jrej; reported (not assumed) for nilrej.
  bool is_submodule = true;
};

// Rej_M(U): intersection of the kernels of every homomorphism from M into a
// member of U. Equals M when only zero maps exist (intersection over the
// empty family).
RejectResult rej(const ModulePtr& m, const ModuleClass& cls,
                 const Limits& limits = default_limits());

// JRej_M(U): elements sent into Rad(U) by every homomorphism into every
// U in the class. Verified to be a submodule containing Rej_M(U).
RejectResult jrej(const ModulePtr& m, const ModuleClass& cls,
                  const Limits& limits = default_limits());

// JRej_M(R) = {m : m M* is contained in J(R)}; the fast path of
// jrej(M, {_RR}).
RejectResult jrej_ring(const ModulePtr& m,
                       const Limits& limits = default_limits());

// {m : mq is nilpotent for every dual q}. Whether the result is a submodule
// is reported; when it is, the inclusion in JRej_M(R) is asserted.
RejectResult nilrej(const ModulePtr& m, const Limits& limits = default_limits());

struct TorsionProfile {
  bool torsionless = false;     // Rej_M(R) = 0
  bool j_torsionless = false;   // JRej_M(R) = 0
  std::optional<Elem> witness;  // least nonzero member of the violated reject
};
TorsionProfile torsion_profile(const ModulePtr& m,
                               const Limits& limits = default_limits());

// {U/Rad(U) : U in cls}.
ModuleClass radical_quotient_class(const ModuleClass& cls,
                                   const Limits& limits = default_limits());

// M embeds into a product of members of cls, i.e. Rej_M(cls) = 0.
bool cogenerates(const ModuleClass& cls, const ModulePtr& m,
                 const Limits& limits = default_limits());

struct SmallestCogenCheck {
  ElementSet minimum;       // least L with M/L cogenerated by U'
  ElementSet jrej_members;  // JRej_M(U)
  bool matches = false;     // minimum == jrej_members
  int admissible_count = 0;
};
// Scans the submodule lattice for every L with M/L cogenerated by the
// radical-quotient subclass U', and compares the least such L with
// JRej_M(U). A mismatch is a genuine counterexample record, not an error.
SmallestCogenCheck smallest_cogen_submodule(
    const ModulePtr& m, const ModuleClass& cls,
    const Limits& limits = default_limits());

struct ProductEmbedding {
  RingPtr quotient_ring;  // R/J(R)
  std::vector<ModuleHom> duals;
  // rows[x][i]: image of x under dual i, as an element of R/J(R)
  std::vector<std::vector<Elem>> rows;
};
// The componentwise map m -> (m theta + J(R))_theta over all duals; returned
// iff injective, which happens exactly when M is J-torsionless.
std::optional<ProductEmbedding> embedding_into_product(
    const ModulePtr& m, const Limits& limits = default_limits());

}  // namespace jtl
