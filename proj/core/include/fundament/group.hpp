#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "fundament/element_set.hpp"

namespace fundament {

inline constexpr std::size_t kDefaultOrderCap = 5000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A permutation of {0..n-1} given by its image list.
using Permutation = std::vector<std::uint32_t>;

// Parses "(1 2 3)(4 5)" style cycle notation with 1-based points.  "()" is
// the identity.  The result has at least `degree` points.
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);
std::string format_cycles(const Permutation& p);

// Finite group stored as a full multiplication table.  Element 0 is always
// the identity.  Objects are immutable once built and shared by pointer.
class FiniteGroup {
 public:
  static GroupPtr from_table(std::size_t order, std::vector<Elem> table, std::vector<Elem> generators = {},
                             std::vector<std::string> labels = {}, std::string name = {});

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inverse_[g]); }
  Elem pow(Elem a, long long k) const;
  std::size_t element_order(Elem a) const noexcept { return element_order_[a]; }

  const std::vector<Elem>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& generator_labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  bool is_abelian() const noexcept { return abelian_; }
  const std::vector<Elem>& table() const noexcept { return table_; }

  // Exhaustive associativity check; cubic in the order.
  bool is_associative() const;

  // Per-group memo slots for the lattice code (thread safe, computed once).
  enum class Memo { AllSubgroups, NormalSubgroups, Count };
  const std::vector<ElementSet>& memo(Memo slot, const std::function<std::vector<ElementSet>()>& compute) const;

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
  std::string name_;
  bool abelian_ = false;

  mutable std::once_flag memo_once_[static_cast<int>(Memo::Count)];
  mutable std::vector<ElementSet> memo_[static_cast<int>(Memo::Count)];
};

// Group generated by permutations, elements numbered in breadth-first order
// from the identity with generators tried in input order.  The product
// convention applies the left factor first: (ab)(i) = b(a(i)).
GroupPtr build_group(const std::vector<Permutation>& generators, std::size_t cap = kDefaultOrderCap,
                     std::vector<std::string> labels = {}, std::string name = {});

GroupPtr trivial_group();
GroupPtr cyclic_group(std::size_t n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, std::size_t cap = kDefaultOrderCap);

// Greedy generating set preferring elements of large order.
std::vector<Elem> small_generating_set(const FiniteGroup& g, const std::vector<Elem>& elements);

bool same_group(const GroupPtr& a, const GroupPtr& b) noexcept;

}  // namespace fundament

namespace fundament {

// Subgroup generated by `gens` as a membership set.
ElementSet generated_set(const FiniteGroup& g, const std::vector<Elem>& gens);

// Grows the subgroup `set` (with generating list `gens`) by one element.
void extend_closure(const FiniteGroup& g, ElementSet& set, std::vector<Elem>& gens, Elem x);

}  // namespace fundament
