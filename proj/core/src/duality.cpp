#include "fundament/duality.hpp"

#include "fundament/error.hpp"

namespace fundament {

Vector DualSpace::apply_f(std::size_t i, const Vector& x) const {
  const auto& f = a_->field();
  const auto& m = basis_f_[i];
  Vector out(m.rows(), 0);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!x[j]) continue;
    FieldElem c = f->from_int(x[j]);
    for (std::size_t t = 0; t < m.rows(); ++t) out[t] = f->add(out[t], f->mul(c, m.at(t, j)));
  }
  return out;
}

std::optional<Vector> DualSpace::coordinates(const Matrix& phi_f) const {
  const auto& f = a_->field();
  const std::size_t len = phi_f.rows() * phi_f.cols();
  std::vector<Vector> cols;
  for (const auto& b : basis_f_) cols.push_back(b.data());
  return solve(Matrix::from_columns(f, len, cols), phi_f.data());
}

Matrix DualSpace::combination_f(const Vector& c) const {
  const auto& f = a_->field();
  Matrix out(f, a_->f_dim(), k_->dim());
  for (std::size_t i = 0; i < basis_f_.size(); ++i)
    if (c[i]) out = out + basis_f_[i].scaled(c[i]);
  return out;
}

ModuleHom DualSpace::combination(const Vector& c) const {
  Matrix phi = combination_f(c);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < k_->dim(); ++j) cols.push_back(a_->from_f(phi.column(j)));
  return ModuleHom(k_, a_->module(), Matrix::from_columns(k_->field(), a_->module()->dim(), cols));
}

DualSpace hom_space(const ModulePtr& k, const EndoFieldPtr& a) {
  if (k->characteristic() != a->module()->characteristic())
    fail(ErrorKind::CharacteristicMismatch, "modules have different characteristic");
  if (!same_group(k->group(), a->module()->group())) fail(ErrorKind::Mismatch, "modules live on different groups");
  const auto& f = a->field();
  const std::size_t n = k->dim(), m = a->f_dim();
  // Unknowns Φ_j = φ(e_j) ∈ F^m at offset j*m.  For each generator g and j:
  //   Σ_l ρ_K(g)_{lj} Φ_l − ρ_A(g) Φ_j = 0.
  const auto& gens = k->group()->generators();
  std::vector<Vector> rows;
  for (Elem g : gens) {
    const auto& rk = k->action(g);
    const auto& ra = a->f_action(g);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < m; ++t) {
        Vector r(n * m, 0);
        for (std::size_t l = 0; l < n; ++l)
          if (rk.at(l, j)) r[l * m + t] = f->add(r[l * m + t], f->from_int(rk.at(l, j)));
        for (std::size_t u = 0; u < m; ++u) r[j * m + u] = f->sub(r[j * m + u], ra.at(t, u));
        rows.push_back(std::move(r));
      }
  }
  // With no generators (trivial group) every F-linear map is equivariant.
  Matrix sol = rows.empty() ? Matrix::identity(f, n * m) : nullspace(Matrix::from_rows(f, n * m, rows));
  DualSpace ds;
  ds.k_ = k;
  ds.a_ = a;
  for (std::size_t i = 0; i < sol.rows(); ++i) {
    Matrix phi(f, m, n);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) {
      Vector c(m);
      for (std::size_t t = 0; t < m; ++t) c[t] = phi.at(t, j) = sol.at(i, j * m + t);
      cols.push_back(a->from_f(c));
    }
    ds.basis_f_.push_back(std::move(phi));
    ds.basis_.emplace_back(k, a->module(), Matrix::from_columns(k->field(), a->module()->dim(), cols));
  }
  return ds;
}

ModuleHom joint_map(const DualSpace& dual) {
  const auto& k = dual.source();
  const auto& a = dual.target()->module();
  const std::size_t n = dual.dim(), d = a->dim();
  auto target = power(a, n);
  Matrix m(k->field(), n * d, k->dim());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = dual.basis()[i].matrix();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < k->dim(); ++c) m.at(i * d + r, c) = b.at(r, c);
  }
  return ModuleHom(k, target, std::move(m));
}

bool is_A_generated(const ModulePtr& k, const EndoFieldPtr& a) {
  if (k->dim() == 0) return true;
  auto dual = hom_space(k, a);
  if (dual.dim() == 0) return false;
  return joint_map(dual).is_injective();
}

ModuleHom decompose_isotypic(const ModulePtr& k, const EndoFieldPtr& a) {
  auto dual = hom_space(k, a);
  auto theta = joint_map(dual);
  if (!theta.is_injective() || !theta.is_surjective()) fail(ErrorKind::NotAGenerated, "module is not A-generated");
  return theta;
}

Matrix complement(const ModulePtr& k, const EndoFieldPtr& a, const Matrix& l) {
  if (l.rows() > 0 && l.cols() != k->dim()) fail(ErrorKind::InvalidArgument, "submodule basis has the wrong width");
  Matrix lb = l.rows() == 0 ? Matrix(k->field(), 0, k->dim()) : row_space(l);
  if (!is_submodule(*k, lb)) fail(ErrorKind::NotSubmodule, "L is not invariant");
  auto dual = hom_space(k, a);
  if (!(k->dim() == 0 || joint_map(dual).is_injective())) fail(ErrorKind::NotAGenerated, "K is not A-generated");
  const auto& f = a->field();
  const std::size_t r = dual.dim(), m = a->f_dim();

  // W = {Σ c_i φ_i : vanishing on L}: for every basis vector of L and every
  // F-coordinate, Σ_i c_i φ_i(l)_t = 0.
  std::vector<Vector> eqs;
  for (std::size_t row = 0; row < lb.rows(); ++row) {
    std::vector<Vector> vals;
    for (std::size_t i = 0; i < r; ++i) vals.push_back(dual.apply_f(i, lb.row(row)));
    for (std::size_t t = 0; t < m; ++t) {
      Vector e(r);
      for (std::size_t i = 0; i < r; ++i) e[i] = vals[i][t];
      eqs.push_back(std::move(e));
    }
  }
  SpanBasis w(f, r);
  if (eqs.empty()) {
    for (std::size_t i = 0; i < r; ++i) {
      Vector e(r, 0);
      e[i] = f->one();
      w.add(e);
    }
  } else {
    Matrix ns = nullspace(Matrix::from_rows(f, r, eqs));
    for (std::size_t i = 0; i < ns.rows(); ++i) w.add(ns.row(i));
  }
  // Complete W by unit vectors; M is the common kernel of the chosen φ_i.
  auto units = w.completing_units();
  if (units.empty()) return Matrix::identity(k->field(), k->dim());  // L = 0
  Matrix stacked(k->field(), units.size() * a->module()->dim(), k->dim());
  for (std::size_t u = 0; u < units.size(); ++u) {
    const auto& b = dual.basis()[units[u]].matrix();
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) stacked.at(u * b.rows() + i, j) = b.at(i, j);
  }
  return row_space(nullspace(stacked));
}

Matrix lambda_matrix(const EndoFieldPtr& a, std::size_t n) {
  auto an = power(a->module(), n);
  auto dual = hom_space(an, a);
  const auto& f = a->field();
  const std::size_t m = a->f_dim(), d = a->module()->dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    // Λ(e_i): x ↦ x_i, i.e. the i-th projection A^n → A, in F-coordinates.
    Matrix phi(f, m, n * d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector e(d, 0);
      e[j] = 1;
      auto c = a->to_f(e);
      for (std::size_t t = 0; t < m; ++t) phi.at(t, i * d + j) = c[t];
    }
    auto coords = dual.coordinates(phi);
    if (!coords) fail(ErrorKind::InvalidArgument, "projection is not in the dual space");
    cols.push_back(*coords);
  }
  return Matrix::from_columns(f, dual.dim(), cols);
}

Matrix dual_map(const ModuleHom& alpha, const DualSpace& k_dual, const DualSpace& l_dual) {
  const auto& f = k_dual.target()->field();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < l_dual.dim(); ++i) {
    // ψ_i ∘ α in F coordinates: column j is ψ_i(α e_j)
    const auto& k = alpha.source();
    Matrix phi(f, k_dual.target()->f_dim(), k->dim());
    for (std::size_t j = 0; j < k->dim(); ++j) {
      Vector e(k->dim(), 0);
      e[j] = 1;
      auto c = l_dual.apply_f(i, alpha(e));
      for (std::size_t t = 0; t < c.size(); ++t) phi.at(t, j) = c[t];
    }
    auto coords = k_dual.coordinates(phi);
    if (!coords) fail(ErrorKind::InvalidArgument, "composite is not in the dual space");
    cols.push_back(*coords);
  }
  return Matrix::from_columns(f, k_dual.dim(), cols);
}

}  // namespace fundament
