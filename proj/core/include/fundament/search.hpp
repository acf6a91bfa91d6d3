#pragma once

#include <functional>
#include <optional>

#include "fundament/hom.hpp"

namespace fundament {

enum class HomKind { Any, Surjective, Isomorphism };

// Enumerates θ: src.source → tgt.source with tgt ∘ θ = src, by backtracking
// over images of a fixed generating set in index order.  The visitor returns
// false to stop.  Returns the number of maps visited.
std::size_t for_each_hom_over(const GroupHom& src, const GroupHom& tgt, HomKind kind,
                              const std::function<bool(const GroupHom&)>& visit);

std::optional<GroupHom> find_hom_over(const GroupHom& src, const GroupHom& tgt, HomKind kind,
                                      const std::function<bool(const GroupHom&)>& accept = {});

// θ: H → H' an isomorphism with π' ∘ θ = π.
std::optional<GroupHom> find_isomorphism_over(const Cover& pi, const Cover& pi_prime);
// θ: H ↠ H' with π' ∘ θ = π.
std::optional<GroupHom> find_epimorphism_over(const Cover& pi, const Cover& pi_prime);
std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b);

}  // namespace fundament
