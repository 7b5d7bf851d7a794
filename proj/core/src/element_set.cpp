#include "jtl/element_set.hpp"

#include <bit>
#include <stdexcept>

namespace jtl {

namespace {
std::size_t word_count(int universe) {
  return (static_cast<std::size_t>(universe) + 63) / 64;
}
}  // namespace

ElementSet::ElementSet(int universe)
    : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw std::invalid_argument("negative universe");
}

ElementSet ElementSet::full(int universe) {
  ElementSet s(universe);
  for (int e = 0; e < universe; ++e) s.insert(e);
  return s;
}

ElementSet ElementSet::of(int universe, std::initializer_list<int> elems) {
  ElementSet s(universe);
  for (int e : elems) s.insert(e);
  return s;
}

ElementSet ElementSet::from_elements(int universe,
                                     const std::vector<int>& elems) {
  ElementSet s(universe);
  for (int e : elems) s.insert(e);
  return s;
}

int ElementSet::count() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool ElementSet::contains(int e) const {
  if (e < 0 || e >= universe_) return false;
  return (words_[static_cast<std::size_t>(e) / 64] >> (e % 64)) & 1u;
}

void ElementSet::insert(int e) {
  if (e < 0 || e >= universe_)
    throw std::out_of_range("ElementSet::insert: element out of range");
  words_[static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (e % 64);
}

void ElementSet::erase(int e) {
  if (e < 0 || e >= universe_) return;
  words_[static_cast<std::size_t>(e) / 64] &= ~(std::uint64_t{1} << (e % 64));
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  return out;
}

ElementSet ElementSet::unite(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] | other.words_[i];
  return out;
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int e = 0; e < universe_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.elements() < b.elements();
}

}  // namespace jtl
