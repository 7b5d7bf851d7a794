#pragma once

#include <optional>
#include <vector>

#include "jtl/module.hpp"

namespace jtl {

// A left-module homomorphism between two finite modules over a common ring,
// stored as its full image table. Maps are written on the side opposite to
// scalars; compose(f, g) applies f first, then g.
class ModuleHom {
 public:
  // Verifies additivity and R-linearity over all of the source; throws
  // AxiomViolation otherwise.
  ModuleHom(ModulePtr source, ModulePtr target, std::vector<Elem> image);

  Elem operator()(Elem x) const { return image_[static_cast<std::size_t>(x)]; }
  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  const std::vector<Elem>& image_table() const { return image_; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  friend bool operator==(const ModuleHom& a, const ModuleHom& b) {
    return a.image_ == b.image_ && a.source_->same_structure(*b.source_) &&
           a.target_->same_structure(*b.target_);
  }
  // Order within a Hom-set: image-table lexicographic.
  friend bool operator<(const ModuleHom& a, const ModuleHom& b) {
    return a.image_ < b.image_;
  }

 private:
  struct unchecked_t {};
  ModuleHom(unchecked_t, ModulePtr source, ModulePtr target,
            std::vector<Elem> image);
  friend std::vector<ModuleHom> hom_set(const ModulePtr&, const ModulePtr&,
                                        const Limits&);

  ModulePtr source_, target_;
  std::vector<Elem> image_;
};

// The complete set Hom_R(M, N), ordered by image-table lexicographic order.
//
// Algorithm: take the greedy generators g1..gk of M together with an
// R-combination expression for every element, enumerate candidate generator
// images (t1..tk) in N^k pruned by the requirement l_R(gi).ti = 0, materialize
// each induced map through the expressions, and accept it iff the full
// additivity/linearity check over all of M passes.
std::vector<ModuleHom> hom_set(const ModulePtr& m, const ModulePtr& n,
                               const Limits& limits = default_limits());

// M* = Hom_R(M, _RR).
std::vector<ModuleHom> dual(const ModulePtr& m,
                            const Limits& limits = default_limits());

// Verified submodules of the source / target.
ElementSet kernel(const ModuleHom& f);
ElementSet image(const ModuleHom& f);

// f then g; requires target(f) = source(g) structurally.
ModuleHom compose(const ModuleHom& f, const ModuleHom& g);

bool is_isomorphic(const ModulePtr& m, const ModulePtr& n,
                   const Limits& limits = default_limits());

struct ProjectivityCheck {
  bool projective = false;
  std::vector<Elem> generators;
  // dual basis q1..qk with sum (m qi) gi = m for all m, when projective
  std::vector<ModuleHom> dual_basis;
};
// Dual-basis search against the greedy generators.
ProjectivityCheck is_projective(const ModulePtr& m,
                                const Limits& limits = default_limits());

// Least c with f(x) = xc for all x in the left ideal I (viewed as a module
// via submodule_as_module of _RR), or nullopt. The Baer test behind the
// self-injectivity flag.
std::optional<Elem> baer_extension_exists(const FiniteRing& r,
                                          const ElementSet& left_ideal,
                                          const ModuleHom& f);

}  // namespace jtl
