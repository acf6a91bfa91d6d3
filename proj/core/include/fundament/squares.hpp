#pragma once

#include <optional>

#include "fundament/hom.hpp"

namespace fundament {

//        η
//    H ────▶ G
//  β │       │ φ
//    ▼       ▼
//    B ────▶ A
//        α
struct CommSquare {
  Cover top;     // η: H ↠ G
  Cover left;    // β: H ↠ B
  Cover bottom;  // α: B ↠ A
  Cover right;   // φ: G ↠ A

  const GroupPtr& h() const { return top.source(); }
  const GroupPtr& g() const { return top.target(); }
  const GroupPtr& b() const { return left.target(); }
  const GroupPtr& a() const { return bottom.target(); }
};

// Throws SourceTargetMismatch or NotCommutative.
CommSquare make_square(Cover top, Cover left, Cover bottom, Cover right);

bool is_cartesian(const CommSquare& sq);
bool is_semi_cartesian(const CommSquare& sq);
// Exhaustive over the subgroup lattice of H; throws NotCartesian.
bool is_compact_cartesian(const CommSquare& sq);
bool is_compact_cartesian_exhaustive(const CommSquare& sq);
// Only answers when α is indecomposable: compact iff no γ: G ↠ B with α∘γ = φ.
std::optional<bool> compact_by_indecomposable_bottom(const CommSquare& sq);

// The right edge of `left_sq` must be the left edge of `right_sq`.
CommSquare compose_horizontal(const CommSquare& left_sq, const CommSquare& right_sq);

// Equivalent formulations, kept as cross-checks.
namespace criteria {
// K = K1 × K2 with K = Ker(α∘β), K1 = Ker β, K2 = Ker η.
bool cartesian_by_kernel_product(const CommSquare& sq);
// every (b, g) with α(b) = φ(g) has exactly one h.
bool cartesian_by_elements(const CommSquare& sq);
// K = K1·K2
bool semi_by_kernel_product(const CommSquare& sq);
// η(Ker β) = Ker φ
bool semi_by_top_image(const CommSquare& sq);
// every (b, g) with α(b) = φ(g) has at least one h.
bool semi_by_elements(const CommSquare& sq);
}  // namespace criteria

}  // namespace fundament
