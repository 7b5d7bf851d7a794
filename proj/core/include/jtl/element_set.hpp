#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace jtl {

// Subset of {0, ..., universe-1} stored as a bitset. Represents ideals,
// submodules, rejects and radicals. The ordering is (popcount, elements
// lexicographic) so that enumerations are deterministic.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe);

  static ElementSet full(int universe);
  static ElementSet of(int universe, std::initializer_list<int> elems);
  static ElementSet from_elements(int universe, const std::vector<int>& elems);

  int universe() const { return universe_; }
  int count() const;
  bool empty() const { return count() == 0; }
  // True iff the set is exactly {0}.
  bool only_zero() const { return count() == 1 && contains(0); }

  bool contains(int e) const;
  void insert(int e);
  void erase(int e);

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  ElementSet unite(const ElementSet& other) const;

  std::vector<int> elements() const;
  std::string to_string() const;  // e.g. "{0,2}"

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) {
    return !(a == b);
  }
  // (popcount, elements lexicographic); sets over smaller universes first.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace jtl
