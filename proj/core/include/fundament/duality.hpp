#pragma once

#include <vector>

#include "fundament/module.hpp"

namespace fundament {

// K* = Hom_G(K, A) as an F-vector space, F = End_G(A).  A map φ is stored by
// the F-coordinates of φ(e_j) for the standard basis e_j of K (an m × n
// matrix over F) and also as an F_p matrix.
class DualSpace {
 public:
  const ModulePtr& source() const noexcept { return k_; }
  const EndoFieldPtr& target() const noexcept { return a_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<ModuleHom>& basis() const noexcept { return basis_; }
  const std::vector<Matrix>& basis_f() const noexcept { return basis_f_; }

  // F-coordinates of φ_i(x).
  Vector apply_f(std::size_t i, const Vector& x) const;
  // Coordinates of an F-described map (m × n over F) in the basis.
  std::optional<Vector> coordinates(const Matrix& phi_f) const;
  // The F_p map Σ c_i φ_i.
  ModuleHom combination(const Vector& c) const;
  Matrix combination_f(const Vector& c) const;

 private:
  friend DualSpace hom_space(const ModulePtr& k, const EndoFieldPtr& a);
  ModulePtr k_;
  EndoFieldPtr a_;
  std::vector<ModuleHom> basis_;
  std::vector<Matrix> basis_f_;
};

// Throws CharacteristicMismatch.
DualSpace hom_space(const ModulePtr& k, const EndoFieldPtr& a);
bool is_A_generated(const ModulePtr& k, const EndoFieldPtr& a);
// Θ: K → A^n, b ↦ (φ_i(b)); throws NotAGenerated.
ModuleHom decompose_isotypic(const ModulePtr& k, const EndoFieldPtr& a);
// Same map without the bijectivity requirement.
ModuleHom joint_map(const DualSpace& dual);
// An invariant complement of the submodule spanned by the rows of `l`.
// Throws NotSubmodule / NotAGenerated.
Matrix complement(const ModulePtr& k, const EndoFieldPtr& a, const Matrix& l);

// Λ_V for V = F^n: the n' × n matrix of v ↦ (ψ ↦ Σ v_i ψ(e_i)) in the basis
// of Hom_G(A^n, A).  Bijective exactly when it is square and invertible.
Matrix lambda_matrix(const EndoFieldPtr& a, std::size_t n);

// Dual map α*: L* → K* of α: K → L, as a matrix over F (dim K* × dim L*).
Matrix dual_map(const ModuleHom& alpha, const DualSpace& k_dual, const DualSpace& l_dual);

}  // namespace fundament
