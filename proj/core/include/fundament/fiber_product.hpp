#pragma once

#include <optional>
#include <vector>

#include "fundament/hom.hpp"
#include "fundament/squares.hpp"

namespace fundament {

// The fiber product of covers η_i: H_i ↠ G, realized as the set of tuples
// (h_i) with all η_i(h_i) equal, ordered lexicographically by coordinates.
class FiberProduct {
 public:
  const GroupPtr& base() const noexcept { return base_; }
  const std::vector<Cover>& factors() const noexcept { return factors_; }
  const GroupPtr& carrier() const noexcept { return carrier_; }
  const std::vector<Cover>& projections() const noexcept { return projections_; }
  const Cover& structure_map() const noexcept { return structure_; }
  const std::vector<Subgroup>& axis_kernels() const noexcept { return axis_kernels_; }
  std::size_t size() const noexcept { return factors_.size(); }

  const std::vector<Elem>& coordinates(Elem x) const { return coords_[x]; }
  std::optional<Elem> index_of(const std::vector<Elem>& tuple) const;
  // K_J: product of the axis kernels over J.
  Subgroup axis_product(const std::vector<std::size_t>& indices) const;

 private:
  friend FiberProduct fiber_product(const GroupPtr&, std::vector<Cover>, std::size_t);

  GroupPtr base_;
  std::vector<Cover> factors_;
  GroupPtr carrier_;
  std::vector<std::vector<Elem>> coords_;
  // Dense code of a tuple: base element, then the position of each
  // coordinate inside its fiber (all fibers of η_i have size |Ker η_i|).
  std::vector<std::vector<std::size_t>> fiber_pos_;
  std::vector<Elem> code_to_index_;
  std::size_t code(const std::vector<Elem>& tuple) const;
  std::vector<Cover> projections_;
  Cover structure_;
  std::vector<Subgroup> axis_kernels_;
};

FiberProduct fiber_product(const GroupPtr& base, std::vector<Cover> factors, std::size_t cap = kDefaultOrderCap);

struct Restriction {
  FiberProduct product;
  Cover projection;  // pr_{I,I'}
};
Restriction restrict(const FiberProduct& fp, const std::vector<std::size_t>& subset);

// The cartesian square splitting off index j: pr_{I,I∖{j}} on top, pr_{I,j}
// on the left, η_j at the bottom and η_{I∖{j}} on the right.
CommSquare split_square(const FiberProduct& fp, std::size_t j);

// p_i: H ↠ H_i with η_i ∘ p_i independent of i.  Decides whether the
// induced map into the fiber product is an isomorphism.
bool is_fiber_presentation(const std::vector<Cover>& projections, const std::vector<Cover>& structure_maps);
// The induced map H → fprod H_i (not necessarily onto).
GroupHom induced_map(const std::vector<Cover>& projections, const FiberProduct& target);

bool is_compact_fiber_product(const FiberProduct& fp);
bool is_compact_fiber_product_exhaustive(const FiberProduct& fp);
// For indecomposable factors: compact iff for every I' and j outside it there
// is no γ: fprod_{I'} ↠ H_j over G.  Empty when a factor is decomposable.
std::optional<bool> compact_by_characterization(const FiberProduct& fp);

}  // namespace fundament
