#include "fundament/element_set.hpp"

#include <bit>

namespace fundament {

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (Elem x = 0; x < universe; ++x) s.insert(x);
  return s;
}

ElementSet ElementSet::of(std::size_t universe, const std::vector<Elem>& elems) {
  ElementSet s(universe);
  for (Elem x : elems) s.insert(x);
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

// Sets are ordered by size first and then by their sorted element lists, which
// is the canonical order used for subgroup listings.
std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  auto ea = a.elements();
  auto eb = b.elements();
  return ea <=> eb;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace fundament
