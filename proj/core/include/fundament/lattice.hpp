#pragma once

#include <vector>

#include "fundament/hom.hpp"

namespace fundament {

// Every subgroup, canonically sorted (by size, then element list).  Memoized
// per group.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
// Maximal proper subgroups.
std::vector<Subgroup> maximal_subgroups(const GroupPtr& g);

std::vector<Subgroup> normal_subgroups(const GroupPtr& g);
// Normal subgroups of h strictly inside m and maximal with that property.
std::vector<Subgroup> maximal_normal_in(const GroupPtr& h, const Subgroup& m);
bool is_minimal_normal(const GroupPtr& h, const Subgroup& m);
std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g);
// Normal subgroups of g contained in m.
std::vector<Subgroup> normal_subgroups_inside(const GroupPtr& g, const Subgroup& m);

bool is_indecomposable(const Cover& pi);

}  // namespace fundament
