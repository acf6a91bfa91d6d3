#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "fundament/hom.hpp"
#include "fundament/matrix.hpp"

namespace fundament {

class GModule;
using ModulePtr = std::shared_ptr<const GModule>;

// F_p^d with a left action of a finite group, one matrix per element.
class GModule {
 public:
  static ModulePtr make(GroupPtr group, int p, std::size_t dim, std::vector<Matrix> action);
  // Action given on group->generators() in order; extended and validated.
  static ModulePtr from_generators(GroupPtr group, int p, std::size_t dim, const std::vector<Matrix>& gen_action);
  static ModulePtr trivial(GroupPtr group, int p, std::size_t dim);

  const GroupPtr& group() const noexcept { return group_; }
  int characteristic() const noexcept { return field_->characteristic(); }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& action(Elem g) const { return action_[g]; }
  Vector act(Elem g, const Vector& v) const { return action_[g].apply(v); }

  friend bool same_module(const GModule& a, const GModule& b) {
    return same_group(a.group_, b.group_) && a.dim_ == b.dim_ && *a.field_ == *b.field_ && a.action_ == b.action_;
  }

 private:
  GModule() = default;
  GroupPtr group_;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b);
ModulePtr power(const ModulePtr& a, std::size_t n);
// Inf_π A' for π: G ↠ G'.
ModulePtr inflate(const Cover& pi, const ModulePtr& a);

// G-equivariant F_p-linear map; matrix is target.dim × source.dim.
class ModuleHom {
 public:
  ModuleHom() = default;
  // Validates equivariance; throws InvalidArgument.
  ModuleHom(ModulePtr source, ModulePtr target, Matrix matrix);
  static ModuleHom identity(const ModulePtr& m);

  const ModulePtr& source() const noexcept { return source_; }
  const ModulePtr& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Vector operator()(const Vector& v) const { return matrix_.apply(v); }
  std::size_t rank() const { return fundament::rank(matrix_); }
  bool is_injective() const { return rank() == source_->dim(); }
  bool is_surjective() const { return rank() == target_->dim(); }
  // Basis (rows) of the kernel.
  Matrix kernel() const { return nullspace(matrix_); }

 private:
  ModulePtr source_, target_;
  Matrix matrix_;
};

ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner);

// Rows of `basis` span an invariant subspace.
bool is_submodule(const GModule& m, const Matrix& basis);
bool is_simple_module(const GModule& m);
// Smallest submodule containing v.
Matrix cyclic_submodule(const GModule& m, const Vector& v);

// An elementary abelian normal subgroup L of H, central in Ker π, read as a
// G-module for π: H ↠ G.  Element x of L has coordinates
// vector_of(x) ∈ F_p^d and code Σ a_i p^i.
struct KernelModule {
  Cover cover;
  Subgroup subgroup;
  ModulePtr module;
  std::vector<std::int64_t> code_of;  // per element of H, -1 outside L
  std::vector<Elem> element_of;       // per code

  Vector vector_of(Elem x) const;
  Elem element(const Vector& v) const;
};

// Throws NotNormal, NotCentralInKernel, NotElementaryAbelian.  A trivial L
// gives the zero module over F_{p_if_trivial}.
KernelModule kernel_module(const Cover& pi, const Subgroup& l, int p_if_trivial = 2);
ModulePtr module_from_cover(const Cover& pi, const Subgroup& l, int p_if_trivial = 2);
std::size_t code_of_vector(const Vector& v, int p);
Vector vector_of_code(std::size_t code, int p, std::size_t dim);

class EndoField;
using EndoFieldPtr = std::shared_ptr<const EndoField>;

// F = End_G(A) for a simple module A, with A viewed as F^m.
class EndoField {
 public:
  static EndoFieldPtr make(const ModulePtr& a);  // throws NotSimple

  const ModulePtr& module() const noexcept { return module_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t order() const noexcept { return field_->order(); }
  // m = dim_F A
  std::size_t f_dim() const noexcept { return f_basis_.size(); }

  const Matrix& matrix_of(FieldElem c) const { return elements_[c]; }
  std::optional<FieldElem> label_of(const Matrix& endo) const;
  const std::vector<Vector>& f_basis() const noexcept { return f_basis_; }
  // F_p coordinates of A to F coordinates and back.
  Vector to_f(const Vector& a) const;
  Vector from_f(const Vector& c) const;
  // G-action in F coordinates (m × m over F).
  const Matrix& f_action(Elem g) const { return f_action_[g]; }

 private:
  EndoField() = default;
  ModulePtr module_;
  FieldPtr field_;
  std::vector<Matrix> elements_;        // index = label; scalars first
  std::map<std::vector<FieldElem>, FieldElem> labels_;
  std::vector<FieldElem> fp_basis_;     // labels spanning F over F_p
  std::vector<Vector> f_basis_;         // a_1..a_m in F_p coordinates
  Matrix to_fp_inverse_;                // inverse of [E_s a_t] columns
  std::vector<Matrix> f_action_;
};

// A module isomorphism a → b where b is simple, if one exists.
std::optional<ModuleHom> find_module_isomorphism(const ModulePtr& a, const EndoFieldPtr& b);

}  // namespace fundament
