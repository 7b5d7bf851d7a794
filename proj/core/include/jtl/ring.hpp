#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jtl/element_set.hpp"
#include "jtl/errors.hpp"
#include "jtl/limits.hpp"

namespace jtl {

// Element index into a ring or module carrier set.
using Elem = int;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// Raw, unchecked ring presentation as read from a file or built by hand.
struct RingData {
  std::string name;
  int size = 0;
  Elem one = 0;
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
};

// Finite unital associative ring presented by its Cayley tables. Element 0
// is the additive identity. Instances are immutable after validation and
// safe to share between threads.
class FiniteRing {
 public:
  const std::string& name() const { return name_; }
  int size() const { return size_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const {
    return add_[static_cast<std::size_t>(a) * size_ + b];
  }
  Elem mul(Elem a, Elem b) const {
    return mul_[static_cast<std::size_t>(a) * size_ + b];
  }
  Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  bool is_zero_ring() const { return size_ == 1; }

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  // Structural equality; names are labels and do not participate.
  bool same_structure(const FiniteRing& other) const {
    return size_ == other.size_ && one_ == other.one_ &&
           add_ == other.add_ && mul_ == other.mul_;
  }

 private:
  FiniteRing() = default;
  friend RingPtr validate_ring(const RingData& data);

  std::string name_;
  int size_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_, mul_, neg_;
};

// Validates every ring axiom exhaustively over all element pairs/triples and
// returns the ring on success. Throws ShapeError for malformed tables and
// AxiomViolation (with a witness) for a failed axiom.
RingPtr validate_ring(const RingData& data);

// --- constructors -----------------------------------------------------------
// Every constructor runs the full validator on the tables it produces.

// Z_n with the usual modular arithmetic; one = 1 (or 0 for n = 1).
RingPtr ring_zmod(int n);

// Direct product; the pair (a, b) is encoded as a + |A|*b (first component
// least significant).
RingPtr ring_product(const FiniteRing& a, const FiniteRing& b);

// k-by-k matrices over `base`, entries encoded row-major in mixed radix with
// entry (0,0) least significant.
RingPtr ring_matrix(const FiniteRing& base, int k);

// Upper-triangular k-by-k matrices over `base`; entries (i,j), i <= j, in
// row-major order of the upper triangle, first entry least significant.
RingPtr ring_upper_triangular(const FiniteRing& base, int k);

// GF(p^k) presented as F_p[x]/(f) where f is the monic irreducible polynomial
// with coefficient vector `irreducible` = [c0, c1, ..., c_{k-1}, 1] (degree-k,
// constant term first). Throws ReduciblePolynomial when f splits.
RingPtr ring_gf(int p, int k, const std::vector<int>& irreducible);

// Quotient by a verified two-sided ideal; elements are cosets ordered by
// their least-index representatives.
RingPtr ring_quotient(const FiniteRing& r, const ElementSet& ideal);

struct QuotientRing {
  RingPtr ring;
  std::vector<Elem> class_of;  // original element -> quotient element
  std::vector<Elem> rep_of;    // quotient element -> least representative
};
QuotientRing ring_quotient_full(const FiniteRing& r, const ElementSet& ideal);

// --- element-level structure -------------------------------------------------

struct ElementClasses {
  ElementSet units;
  ElementSet idempotents;
  ElementSet nilpotents;
};

// Units (one-sided inverses suffice in a finite ring), idempotents, and
// nilpotents of R.
ElementClasses element_classes(const FiniteRing& r);

// J(R) = {x : 1 - rx is a unit for all r}; verified to be a two-sided ideal.
ElementSet jacobson_radical(const FiniteRing& r);

// --- ideal structure ----------------------------------------------------------

bool is_left_ideal(const FiniteRing& r, const ElementSet& s);
bool is_right_ideal(const FiniteRing& r, const ElementSet& s);
bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s);

// All left ideals: the closure of the cyclic left ideals Ra under pairwise
// sum. Sorted by (popcount, elements lexicographic); includes {0} and R.
std::vector<ElementSet> left_ideals(const FiniteRing& r,
                                    const Limits& limits = default_limits());
std::vector<ElementSet> maximal_left_ideals(
    const FiniteRing& r, const Limits& limits = default_limits());
std::vector<ElementSet> minimal_left_ideals(
    const FiniteRing& r, const Limits& limits = default_limits());

// r_R(S) = {x : sx = 0 for all s in S}; always a right ideal.
ElementSet right_annihilator(const FiniteRing& r, const ElementSet& s);
// l_R(S) = {x : xs = 0 for all s in S}; always a left ideal.
ElementSet left_annihilator(const FiniteRing& r, const ElementSet& s);
// (A : B)_l = {t : tb in A for all b in B}; a left ideal when A is one.
ElementSet left_quotient_set(const FiniteRing& r, const ElementSet& a,
                             const ElementSet& b);

// --- ring classification -------------------------------------------------------

struct RingProfile {
  bool semiprimitive = false;       // J(R) = 0
  bool semiprime = false;           // aRa = 0 implies a = 0
  bool reduced = false;             // Nil(R) = 0
  bool domain = false;              // no nonzero zero-divisors
  bool division = false;            // every nonzero element is a unit
  bool von_neumann_regular = false; // for all a there is x with axa = a
  bool fully_idempotent = false;    // (Ra)^2 = Ra for all a
  bool la = false;                  // every left ideal is a left annihilator
  bool self_injective = false;      // Baer criterion on _RR
  bool semisimple = false;          // _RR is a sum of simple submodules

  // One short witness per false flag, keyed by the flag name.
  std::map<std::string, std::string> witness;

  bool flag(std::string_view flag_name) const;  // throws UnknownFlag
  static const std::vector<std::string>& flag_names();
};

RingProfile classify_ring(const RingPtr& r,
                          const Limits& limits = default_limits());

// Primitive central idempotents e1..ek with sum 1 and every factor eiR a
// division ring, when R is a finite direct product of division rings;
// nullopt otherwise.
std::optional<std::vector<Elem>> division_product_idempotents(
    const FiniteRing& r);

}  // namespace jtl
