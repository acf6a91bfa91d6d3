#include "fundament/subgroup.hpp"

#include "fundament/error.hpp"

namespace fundament {

Subgroup::Subgroup(GroupPtr parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), elements_(members_.elements()) {}

Subgroup Subgroup::trivial(const GroupPtr& g) { return Subgroup(g, ElementSet::of(g->order(), {0})); }

Subgroup Subgroup::whole(const GroupPtr& g) { return Subgroup(g, ElementSet::full(g->order())); }

Subgroup Subgroup::generated(const GroupPtr& g, const std::vector<Elem>& gens) {
  for (Elem x : gens)
    if (x >= g->order()) fail(ErrorKind::InvalidArgument, "generator index out of range");
  return Subgroup(g, generated_set(*g, gens));
}

Subgroup Subgroup::checked(const GroupPtr& g, const std::vector<Elem>& elements) {
  ElementSet s(g->order());
  for (Elem x : elements) {
    if (x >= g->order()) fail(ErrorKind::InvalidArgument, "element index out of range");
    s.insert(x);
  }
  if (!s.contains(0)) fail(ErrorKind::InvalidArgument, "subset does not contain the identity");
  auto el = s.elements();
  for (Elem a : el)
    for (Elem b : el)
      if (!s.contains(g->mul(a, b))) fail(ErrorKind::InvalidArgument, "subset is not closed under products");
  return Subgroup(g, std::move(s));
}

bool Subgroup::is_normal() const {
  for (Elem g : parent_->generators())
    for (Elem x : elements_)
      if (!members_.contains(parent_->conj(g, x))) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i + 1; j < elements_.size(); ++j)
      if (parent_->mul(elements_[i], elements_[j]) != parent_->mul(elements_[j], elements_[i])) return false;
  return true;
}

std::vector<Elem> Subgroup::generators() const { return small_generating_set(*parent_, elements_); }

Subgroup intersect(const Subgroup& a, const Subgroup& b) { return Subgroup(a.parent(), a.members() & b.members()); }

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  ElementSet set = a.members();
  std::vector<Elem> gens = a.generators();
  for (Elem x : b.generators()) extend_closure(*a.parent(), set, gens, x);
  return Subgroup(a.parent(), std::move(set));
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<Elem>& elements) {
  ElementSet set(g->order());
  set.insert(0);
  std::vector<Elem> gens;
  std::vector<Elem> pending(elements);
  while (!pending.empty()) {
    Elem x = pending.back();
    pending.pop_back();
    if (set.contains(x)) continue;
    std::size_t before = gens.size();
    extend_closure(*g, set, gens, x);
    // New generators may have conjugates outside the closure so far.
    for (std::size_t i = before; i < gens.size(); ++i)
      for (Elem c : g->generators()) pending.push_back(g->conj(c, gens[i]));
  }
  // Conjugates of the earliest generators were all queued, so the loop ends
  // with a set closed under conjugation by the generators of g.
  return Subgroup(g, std::move(set));
}

void require_normal(const Subgroup& s, const char* what) {
  if (!s.is_normal()) fail(ErrorKind::NotNormal, std::string(what) + " is not normal");
}

bool is_elementary_abelian(const Subgroup& s, int* prime) {
  if (!s.is_abelian()) return false;
  if (s.is_trivial()) {
    if (prime) *prime = 0;
    return true;
  }
  std::size_t p = 0;
  for (Elem x : s.elements()) {
    if (x == 0) continue;
    std::size_t o = s.parent()->element_order(x);
    if (p == 0) p = o;
    if (o != p) return false;
  }
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  if (prime) *prime = static_cast<int>(p);
  return true;
}

bool commutes_elementwise(const Subgroup& s, const Subgroup& t) {
  const auto& g = *s.parent();
  for (Elem a : s.elements())
    for (Elem b : t.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

}  // namespace fundament
