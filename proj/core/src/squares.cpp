#include "fundament/squares.hpp"

#include "fundament/error.hpp"
#include "fundament/lattice.hpp"
#include "fundament/search.hpp"

namespace fundament {

CommSquare make_square(Cover top, Cover left, Cover bottom, Cover right) {
  if (!same_group(top.source(), left.source()) || !same_group(left.target(), bottom.source()) ||
      !same_group(top.target(), right.source()) || !same_group(bottom.target(), right.target()))
    fail(ErrorKind::SourceTargetMismatch, "square edges do not line up");
  for (Elem x = 0; x < top.source()->order(); ++x)
    if (bottom(left(x)) != right(top(x))) fail(ErrorKind::NotCommutative, "square does not commute");
  return {std::move(top), std::move(left), std::move(bottom), std::move(right)};
}

bool is_cartesian(const CommSquare& sq) {
  // β restricted to Ker η is injective iff Ker η ∩ Ker β = 1, and then it is
  // onto Ker α iff the sizes agree.
  const auto& k2 = sq.top.kernel();
  if (!intersect(k2, sq.left.kernel()).is_trivial()) return false;
  return sq.left.hom().image_of(k2.members()).count() == sq.bottom.kernel().size() &&
         k2.size() == sq.bottom.kernel().size();
}

bool is_semi_cartesian(const CommSquare& sq) {
  return sq.left.hom().image_of(sq.top.kernel().members()) == sq.bottom.kernel().members();
}

bool is_compact_cartesian_exhaustive(const CommSquare& sq) {
  for (const auto& e : all_subgroups(sq.h())) {
    if (e.is_whole()) continue;
    if (sq.left.hom().image_of(e.members()).count() == sq.b()->order() &&
        sq.top.hom().image_of(e.members()).count() == sq.g()->order())
      return false;
  }
  return true;
}

std::optional<bool> compact_by_indecomposable_bottom(const CommSquare& sq) {
  if (!is_indecomposable(sq.bottom)) return std::nullopt;
  // γ: G ↠ B with α∘γ = φ, i.e. an epimorphism from φ to α over A.
  return !find_epimorphism_over(sq.right, sq.bottom).has_value();
}

bool is_compact_cartesian(const CommSquare& sq) {
  if (!is_cartesian(sq)) fail(ErrorKind::NotCartesian, "compactness is defined for cartesian squares");
  if (auto fast = compact_by_indecomposable_bottom(sq)) return *fast;
  return is_compact_cartesian_exhaustive(sq);
}

CommSquare compose_horizontal(const CommSquare& left_sq, const CommSquare& right_sq) {
  if (!(left_sq.right == right_sq.left))
    fail(ErrorKind::Mismatch, "right edge of the first square differs from the left edge of the second");
  return make_square(compose(right_sq.top, left_sq.top), left_sq.left, compose(right_sq.bottom, left_sq.bottom),
                     right_sq.right);
}

namespace criteria {

bool cartesian_by_kernel_product(const CommSquare& sq) {
  const auto& k1 = sq.left.kernel();
  const auto& k2 = sq.top.kernel();
  auto k = compose(sq.bottom, sq.left).kernel();
  return intersect(k1, k2).is_trivial() && k1.size() * k2.size() == k.size();
}

bool cartesian_by_elements(const CommSquare& sq) {
  const std::size_t nb = sq.b()->order(), ng = sq.g()->order();
  std::vector<int> hits(nb * ng, 0);
  for (Elem x = 0; x < sq.h()->order(); ++x) ++hits[sq.left(x) * ng + sq.top(x)];
  for (Elem b = 0; b < nb; ++b)
    for (Elem g = 0; g < ng; ++g) {
      bool compatible = sq.bottom(b) == sq.right(g);
      if (hits[b * ng + g] != (compatible ? 1 : 0)) return false;
    }
  return true;
}

bool semi_by_kernel_product(const CommSquare& sq) {
  auto k = compose(sq.bottom, sq.left).kernel();
  return join(sq.left.kernel(), sq.top.kernel()) == k;
}

bool semi_by_top_image(const CommSquare& sq) {
  return sq.top.hom().image_of(sq.left.kernel().members()) == sq.right.kernel().members();
}

bool semi_by_elements(const CommSquare& sq) {
  const std::size_t nb = sq.b()->order(), ng = sq.g()->order();
  std::vector<char> hit(nb * ng, 0);
  for (Elem x = 0; x < sq.h()->order(); ++x) hit[sq.left(x) * ng + sq.top(x)] = 1;
  for (Elem b = 0; b < nb; ++b)
    for (Elem g = 0; g < ng; ++g)
      if (sq.bottom(b) == sq.right(g) && !hit[b * ng + g]) return false;
  return true;
}

}  // namespace criteria

}  // namespace fundament
