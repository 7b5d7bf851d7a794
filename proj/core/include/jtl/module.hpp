#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jtl/ring.hpp"

namespace jtl {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;
// Ordered, finite class of modules over a common ring.
using ModuleClass = std::vector<ModulePtr>;

// Raw, unchecked module presentation.
struct ModuleData {
  std::string name;
  std::string ring;  // ring name, informational; checked when non-empty
  int size = 0;
  std::vector<std::vector<Elem>> add;  // m x m
  std::vector<std::vector<Elem>> act;  // n x m, act[r][x] = r.x
};

// Finite left module over a FiniteRing, presented by its addition table and
// the left-action table. Element 0 is the additive identity. Immutable after
// validation.
class FiniteModule {
 public:
  const RingPtr& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  int size() const { return size_; }

  Elem add(Elem x, Elem y) const {
    return add_[static_cast<std::size_t>(x) * size_ + y];
  }
  Elem act(Elem r, Elem x) const {
    return act_[static_cast<std::size_t>(r) * size_ + x];
  }
  Elem neg(Elem x) const { return neg_[static_cast<std::size_t>(x)]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& act_table() const { return act_; }

  // Structural equality including the underlying ring; names are labels and
  // do not participate.
  bool same_structure(const FiniteModule& other) const {
    return size_ == other.size_ && add_ == other.add_ && act_ == other.act_ &&
           ring_->same_structure(*other.ring_);
  }

 private:
  FiniteModule() = default;
  friend ModulePtr validate_module(const RingPtr& ring, const ModuleData& data);

  RingPtr ring_;
  std::string name_;
  int size_ = 0;
  std::vector<Elem> add_, act_, neg_;
};

// Validates all module axioms exhaustively; throws ShapeError or
// AxiomViolation.
ModulePtr validate_module(const RingPtr& ring, const ModuleData& data);

// A submodule given as a member set of its parent.
struct Submodule {
  ModulePtr parent;
  ElementSet members;
};

// --- constructors ------------------------------------------------------------

// The ring as a left module over itself; named "_<ring name>".
ModulePtr regular_module(const RingPtr& ring);

struct QuotientModule {
  ModulePtr module;
  std::vector<Elem> class_of;  // parent element -> quotient element
  std::vector<Elem> rep_of;    // quotient element -> least representative
};
// Quotient by a verified submodule; cosets ordered by least representative.
QuotientModule module_quotient_full(const ModulePtr& m,
                                    const ElementSet& submodule);
ModulePtr module_quotient(const ModulePtr& m, const ElementSet& submodule);

// Direct sum; tuples are encoded in mixed radix with component 0 least
// significant: index = x0 + |M0|*(x1 + |M1|*(...)).
ModulePtr direct_sum(const std::vector<ModulePtr>& mods);
Elem direct_sum_encode(const std::vector<int>& sizes,
                       const std::vector<Elem>& tuple);
std::vector<Elem> direct_sum_decode(const std::vector<int>& sizes, Elem index);

// The submodule with the given member set, reindexed as a module of its own
// (members in increasing order).
ModulePtr submodule_as_module(const ModulePtr& m, const ElementSet& members,
                              const std::string& name = "");

// --- submodule structure -------------------------------------------------------

bool is_submodule_set(const FiniteModule& m, const ElementSet& s);

// Closure of `gens` under addition, negation and the ring action.
ElementSet submodule_generated(const FiniteModule& m,
                               const std::vector<Elem>& gens);
// Rm = {r.m : r in R}.
ElementSet cyclic_submodule(const FiniteModule& m, Elem x);

// All submodules: sum-closure of the cyclic submodules, plus {0}. Sorted by
// (popcount, elements lexicographic).
std::vector<ElementSet> all_submodules(const FiniteModule& m,
                                       const Limits& limits = default_limits());
std::vector<ElementSet> maximal_submodules(
    const FiniteModule& m, const Limits& limits = default_limits());
std::vector<ElementSet> minimal_submodules(
    const FiniteModule& m, const Limits& limits = default_limits());

// Rad(M): intersection of the maximal submodules; M itself when none exist.
ElementSet radical(const FiniteModule& m,
                   const Limits& limits = default_limits());

// {R/mu : mu maximal left ideal}, de-duplicated up to isomorphism.
ModuleClass simple_modules(const RingPtr& ring,
                           const Limits& limits = default_limits());

// --- annihilators and generators ------------------------------------------------

// l_R(S) = {r : r.s = 0 for all s in S}.
ElementSet left_annihilator_of(const FiniteModule& m, const ElementSet& s);
// l_R(M) = 0 (the intersection form).
bool is_faithful(const FiniteModule& m);
// l_R(x) = 0 for every x != 0 (elementwise; torsion-freeness).
bool is_torsionfree_elementwise(const FiniteModule& m);

// Greedy generating set: repeatedly add the least-index element outside the
// span. Deterministic; not guaranteed minimum cardinality over all orderings.
std::vector<Elem> minimal_generators(const FiniteModule& m);

struct ModuleBasic {
  bool simple = false;             // exactly two submodules
  bool semisimple = false;         // sum of the minimal submodules is M
  bool cyclic = false;             // M = Rm for some m
  bool finitely_generated = true;  // always, at this scale
};
ModuleBasic classify_module_basic(const FiniteModule& m,
                                  const Limits& limits = default_limits());

struct SummandCheck {
  bool is_summand = false;
  std::optional<ElementSet> complement;  // least complement when present
};
SummandCheck is_direct_summand(const FiniteModule& m, const ElementSet& n,
                               const Limits& limits = default_limits());

}  // namespace jtl
