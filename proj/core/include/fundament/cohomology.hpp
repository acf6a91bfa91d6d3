#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fundament/duality.hpp"
#include "fundament/fiber_product.hpp"
#include "fundament/module.hpp"

namespace fundament {

// Normalized A-valued function on G × G, values in F_p coordinates.
class TwoCochain {
 public:
  TwoCochain() = default;
  TwoCochain(GroupPtr g, ModulePtr a);  // zero cochain

  const GroupPtr& group() const noexcept { return g_; }
  const ModulePtr& module() const noexcept { return a_; }
  Vector at(Elem s, Elem t) const;
  void set(Elem s, Elem t, const Vector& v);

  bool is_normalized() const;
  bool is_cocycle() const;
  bool is_zero() const;

  // φ ∘ f
  TwoCochain pushforward(const ModuleHom& phi) const;
  // (σ, τ) ↦ f(π σ, π τ) with values in `inflated` (= Inf_π A).
  TwoCochain pullback(const Cover& pi, const ModulePtr& inflated) const;

  friend TwoCochain operator+(const TwoCochain& a, const TwoCochain& b);
  friend TwoCochain operator-(const TwoCochain& a, const TwoCochain& b);
  friend bool operator==(const TwoCochain& a, const TwoCochain& b) {
    return a.values_ == b.values_ && same_group(a.g_, b.g_) && a.a_->dim() == b.a_->dim();
  }

 private:
  GroupPtr g_;
  ModulePtr a_;
  std::vector<FieldElem> values_;
};

// ∂t(σ, τ) = σ·t(τ) − t(στ) + t(σ); t given per element with t(1) = 0.
TwoCochain coboundary(const GroupPtr& g, const ModulePtr& a, const std::vector<Vector>& t);
// Componentwise assembly into A^n.
TwoCochain fiber_cocycle(const std::vector<TwoCochain>& fs);

class CohomSpace;
using CohomSpacePtr = std::shared_ptr<const CohomSpace>;

// H²(G, A) over F = End_G(A).  Internally a cocycle is recorded by its
// "generator data": the F-coordinates of f(x, s) for x ≠ 1 and s running
// over the generators of G.  These values determine f, because the cocycle
// identity with σ3 = s propagates them along a breadth-first tree.
class CohomSpace {
 public:
  static CohomSpacePtr make(const EndoFieldPtr& a, std::size_t cap = 200000);

  const GroupPtr& group() const noexcept { return g_; }
  const EndoFieldPtr& endo() const noexcept { return a_; }
  const ModulePtr& module() const noexcept { return a_->module(); }
  const FieldPtr& field() const noexcept { return a_->field(); }

  std::size_t dim() const noexcept { return h_basis_.size(); }
  std::size_t dim_cocycles() const noexcept { return z_basis_.size(); }
  std::size_t dim_coboundaries() const noexcept { return dim_b_; }
  std::size_t data_dim() const noexcept { return data_dim_; }

  Vector data_of(const TwoCochain& f) const;
  TwoCochain expand(const Vector& data) const;
  // Throws NotCocycle / Mismatch.
  Vector coordinates(const TwoCochain& f) const;
  TwoCochain representative(const Vector& coords) const;
  // t with ∂t = b, if b is a coboundary (t per element, F_p coordinates).
  std::optional<std::vector<Vector>> coboundary_preimage(const TwoCochain& b) const;
  // Scalar multiple c·f in A (F acting through its matrices).
  TwoCochain scaled(FieldElem c, const TwoCochain& f) const;

  const std::vector<Vector>& z_basis() const noexcept { return z_basis_; }
  const std::vector<Vector>& h_basis() const noexcept { return h_basis_; }

 private:
  CohomSpace() = default;
  std::size_t var(Elem x, std::size_t k, std::size_t t) const;

  GroupPtr g_;
  EndoFieldPtr a_;
  std::vector<Elem> gens_;
  std::vector<Elem> tree_parent_;
  std::vector<std::size_t> tree_gen_;
  std::vector<Elem> bfs_order_;
  std::size_t data_dim_ = 0;
  std::vector<Vector> z_basis_;
  std::vector<Vector> h_basis_;
  std::size_t dim_b_ = 0;
  // B² generators first, then the H² basis; coordinates are read off here.
  std::unique_ptr<SpanBasis> span_;
  std::vector<std::pair<Elem, std::size_t>> b_source_;  // unit (τ, u) per accepted B² generator
};

struct CohomClass {
  CohomSpacePtr space;
  Vector coords;

  bool is_zero() const { return fundament::is_zero(coords); }
  TwoCochain representative() const { return space->representative(coords); }
};

CohomClass class_of(const CohomSpacePtr& space, const TwoCochain& cocycle);
bool are_congruent(const CohomClass& a, const CohomClass& b);
bool are_isomorphic_extensions(const CohomClass& a, const CohomClass& b);

struct Extension {
  Cover cover;
  KernelModule kernel;
};
// Pairs (a, g) with index g·|A| + code(a); (a1,g1)(a2,g2) = (a1 + g1·a2 + f(g1,g2), g1 g2).
Extension extension_from_cocycle(const TwoCochain& f, std::size_t cap = kDefaultOrderCap);
// f(σ, τ) = u(σ) u(τ) u(στ)^-1 for the least-index section u; values in km.module.
TwoCochain extension_cocycle(const KernelModule& km);
// ident: kernel module of π (as produced by kernel_module) → space->module().
CohomClass cocycle_from_extension(const Cover& pi, const ModuleHom& ident, const CohomSpacePtr& space);
// Picks the first module isomorphism found.
CohomClass cocycle_from_extension(const Cover& pi, const CohomSpacePtr& space);

CohomClass inflate(const Cover& pi, const CohomClass& c);
// Inf as a matrix (dim `to` × dim `from`); `to` must be the space of Inf_π A.
Matrix inflation_matrix(const Cover& pi, const CohomSpacePtr& from, const CohomSpacePtr& to);

// (K*, S) for π with A-generated kernel K.
struct DualPairS {
  KernelModule kernel;
  DualSpace dual;
  CohomSpacePtr target;
  TwoCochain representative;  // K-valued cocycle of π
  Matrix s_matrix;            // dim H² × dim K*

  // S applied to a K* element given in dual coordinates.
  Vector apply(const Vector& dual_coords) const { return s_matrix.apply(dual_coords); }
};
DualPairS x2(const Cover& pi, const EndoFieldPtr& a, CohomSpacePtr space = nullptr);
// Fiber product of extensions realizing the representatives of `values`.
FiberProduct y2(const CohomSpacePtr& space, const std::vector<CohomClass>& values);

}  // namespace fundament
