#pragma once

#include <vector>

#include "fundament/group.hpp"

namespace fundament {

// A subgroup of a parent group.  The constructor trusts its input; use
// Subgroup::generated or Subgroup::checked when closure is not known.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, ElementSet members);

  static Subgroup trivial(const GroupPtr& g);
  static Subgroup whole(const GroupPtr& g);
  static Subgroup generated(const GroupPtr& g, const std::vector<Elem>& gens);
  // Validates closure; throws InvalidArgument otherwise.
  static Subgroup checked(const GroupPtr& g, const std::vector<Elem>& elements);

  const GroupPtr& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Elem x) const noexcept { return members_.contains(x); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return parent_ && elements_.size() == parent_->order(); }
  bool is_subset_of(const Subgroup& other) const noexcept { return members_.is_subset_of(other.members_); }
  bool is_normal() const;
  bool is_abelian() const;
  std::vector<Elem> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) { return a.members_ <=> b.members_; }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Elem> elements_;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);
// Subgroup generated by both; equals the product set when one is normal.
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const GroupPtr& g, const std::vector<Elem>& elements);
// Throws NotNormal unless s is normal in its parent.
void require_normal(const Subgroup& s, const char* what);

bool is_elementary_abelian(const Subgroup& s, int* prime = nullptr);
// Centralizer-style check: every element of s commutes with every element of t.
bool commutes_elementwise(const Subgroup& s, const Subgroup& t);

}  // namespace fundament
