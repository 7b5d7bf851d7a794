#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "jtl/reject.hpp"

namespace jtl {

struct ElementCheck {
  bool holds = false;
  std::optional<Elem> witness;  // least failing element
};

// Zelmanowitz regularity: every m satisfies m = (mq)m for some dual q.
ElementCheck is_regular_module(const ModulePtr& m,
                               const Limits& limits = default_limits());

// Every nonzero m admits a nonzero dual q with qmq = q. The right-operator
// composite x -> ((xq)m)q reduces to a(mq) = a on the image of q; both forms
// are computed and must agree.
ElementCheck is_anti_regular(const ModulePtr& m,
                             const Limits& limits = default_limits());

struct WRegularCheck {
  bool holds = false;
  std::string witness;  // failing cyclic submodule, or "not projective"
};
// Projective with every cyclic submodule a direct summand.
WRegularCheck is_w_regular(const ModulePtr& m,
                           const Limits& limits = default_limits());

// The left ideal generated by the dual images of m: additive closure of
// {r(mq) : r in R, q in M*}.
ElementSet trace_ideal(const ModulePtr& m, Elem x,
                       const Limits& limits = default_limits());

// Rm = (RmM*)m for every m.
ElementCheck is_fully_idempotent_module(const ModulePtr& m,
                                        const Limits& limits = default_limits());

struct RegularEquivalence {
  bool regular = false;        // condition (1)
  bool jtl_and_idem = false;   // (2): J-torsionless and mM* = eR
  bool tl_and_idem = false;    // (3): torsionless and mM* = eR
  bool consistent = false;     // the three agree on this instance
  std::string detail;          // mismatch description when inconsistent
};
RegularEquivalence regular_equivalence_check(
    const ModulePtr& m, const Limits& limits = default_limits());

struct ModuleProfile {
  bool regular = false;
  bool anti_regular = false;
  bool w_regular = false;
  bool fully_idempotent = false;
  bool torsionless = false;
  bool j_torsionless = false;
  std::map<std::string, std::string> witness;  // per false flag

  bool flag(std::string_view flag_name) const;  // throws UnknownFlag
  static const std::vector<std::string>& flag_names();
};

ModuleProfile module_profile(const ModulePtr& m,
                             const Limits& limits = default_limits());

}  // namespace jtl
