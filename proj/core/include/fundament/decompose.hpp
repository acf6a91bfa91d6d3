#pragma once

#include <optional>
#include <vector>

#include "fundament/fundament.hpp"

namespace fundament {

// π ≅_G η_I for indecomposable factors.  Non-abelian factors are the
// quotients H/N for the members N of each class.  Abelian factors of a class
// A are the extensions of the canonical representatives of an echelon basis
// of Img S_A, followed by split extensions for a basis of Ker S_A.
struct Decomposition {
  std::vector<Cover> factors;
  FiberProduct product;
  GroupHom iso;  // H → product carrier, with η_I ∘ iso = π
};
Decomposition decompose_fundamental(const Cover& pi);

// The pieces of a normal subgroup L ≤ Ker η_I of a fiber product of
// indecomposables.
struct KernelNormalDecomposition {
  struct AbBlock {
    EndoFieldPtr module;
    std::vector<std::size_t> indices;  // I_A
    Subgroup component;                // L ∩ K_{I_A}
  };
  Subgroup l;
  std::vector<std::size_t> na_indices;  // I_na
  std::vector<std::size_t> na_inside;   // I_{na,L} = {i ∈ I_na : K_i ≤ L}
  std::vector<AbBlock> ab_blocks;
  Subgroup reconstruction;              // ∏_{I_{na,L}} K_i × ∏_A (L ∩ K_{I_A})

  bool matches() const { return reconstruction == l; }
};
// Throws NotNormal, NotInsideKernel, InvalidArgument (a factor is not
// indecomposable).
KernelNormalDecomposition kernel_normal_decomposition(const FiberProduct& fp, const Subgroup& l);

struct Alignment {
  FiberProduct product;
  GroupHom omega;                     // carrier → new carrier, over G
  std::vector<std::size_t> indices;   // Ī with ω(L) = ∏_{Ī} K̄_i
};
Alignment align_normal_to_axes(const FiberProduct& fp, const Subgroup& l);

// Compactness of a fiber product of indecomposables from the classes of its
// factors: two factors isomorphic over G rule it out; pairwise
// non-isomorphic factors whose non-split classes are independent over the
// endomorphism fields make it compact.  Empty when neither applies or some
// factor is not indecomposable.
std::optional<bool> compact_by_linear_independence(const FiberProduct& fp);

}  // namespace fundament
