#include "fundament/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "fundament/error.hpp"

namespace fundament {

namespace {

using SetTable = std::unordered_set<ElementSet, ElementSetHash>;

std::vector<Subgroup> wrap(const GroupPtr& g, const std::vector<ElementSet>& sets) {
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.emplace_back(g, s);
  return out;
}

// Cyclic-extension closure: start from the cyclic subgroups and keep joining
// one more cyclic subgroup until nothing new appears.
std::vector<ElementSet> enumerate_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> cyclic_gens;  // one generator per cyclic subgroup
  SetTable seen;
  struct Entry {
    ElementSet set;
    std::vector<Elem> gens;
  };
  std::vector<Entry> found;
  {
    ElementSet one(n);
    one.insert(0);
    seen.insert(one);
    found.push_back({one, {}});
  }
  for (Elem x = 1; x < n; ++x) {
    ElementSet s(n);
    s.insert(0);
    std::vector<Elem> gens;
    extend_closure(g, s, gens, x);
    if (seen.insert(s).second) {
      cyclic_gens.push_back(x);
      found.push_back({std::move(s), std::move(gens)});
    }
  }
  for (std::size_t head = 1; head < found.size(); ++head) {
    for (Elem x : cyclic_gens) {
      if (found[head].set.contains(x)) continue;
      ElementSet s = found[head].set;
      std::vector<Elem> gens = found[head].gens;
      extend_closure(g, s, gens, x);
      if (seen.insert(s).second) found.push_back({std::move(s), std::move(gens)});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.set));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> enumerate_normal(const GroupPtr& gp) {
  const auto& g = *gp;
  SetTable seen;
  std::vector<ElementSet> found;
  std::vector<ElementSet> closures;
  ElementSet one(g.order());
  one.insert(0);
  seen.insert(one);
  found.push_back(one);
  // Conjugate elements have the same normal closure, so one per class.
  std::vector<char> done(g.order(), 0);
  for (Elem x = 1; x < g.order(); ++x) {
    if (done[x]) continue;
    for (Elem y = 0; y < g.order(); ++y) done[g.conj(y, x)] = 1;
    auto s = normal_closure(gp, {x}).members();
    if (seen.insert(s).second) {
      closures.push_back(s);
      found.push_back(s);
    }
  }
  // Products of normal subgroups are normal; close under products with the
  // normal closures of single elements.
  for (std::size_t head = 1; head < found.size(); ++head) {
    for (const auto& c : closures) {
      if (c.is_subset_of(found[head])) continue;
      Subgroup a(gp, found[head]);
      Subgroup b(gp, c);
      auto s = join(a, b).members();
      if (seen.insert(s).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  const auto& sets = g->memo(FiniteGroup::Memo::AllSubgroups, [&] { return enumerate_subgroups(*g); });
  return wrap(g, sets);
}

std::vector<Subgroup> maximal_subgroups(const GroupPtr& g) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < subs.size() && maximal; ++j)
      if (subs[j].size() > subs[i].size() && subs[i].is_subset_of(subs[j])) maximal = false;
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
  const auto& sets = g->memo(FiniteGroup::Memo::NormalSubgroups, [&] { return enumerate_normal(g); });
  return wrap(g, sets);
}

std::vector<Subgroup> normal_subgroups_inside(const GroupPtr& g, const Subgroup& m) {
  std::vector<Subgroup> out;
  for (auto& n : normal_subgroups(g))
    if (n.is_subset_of(m)) out.push_back(std::move(n));
  return out;
}

std::vector<Subgroup> maximal_normal_in(const GroupPtr& h, const Subgroup& m) {
  require_normal(m, "M");
  auto inside = normal_subgroups_inside(h, m);
  std::vector<Subgroup> out;
  for (const auto& n : inside) {
    if (n.size() == m.size()) continue;
    bool maximal = true;
    for (const auto& l : inside) {
      if (l.size() > n.size() && l.size() < m.size() && n.is_subset_of(l)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(n);
  }
  return out;
}

bool is_minimal_normal(const GroupPtr& h, const Subgroup& m) {
  require_normal(m, "M");
  if (m.is_trivial()) return false;
  for (const auto& l : normal_subgroups_inside(h, m))
    if (!l.is_trivial() && l.size() < m.size()) return false;
  return true;
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g) {
  std::vector<Subgroup> out;
  for (const auto& n : normal_subgroups(g))
    if (!n.is_trivial() && is_minimal_normal(g, n)) out.push_back(n);
  return out;
}

bool is_indecomposable(const Cover& pi) { return is_minimal_normal(pi.source(), pi.kernel()); }

}  // namespace fundament
