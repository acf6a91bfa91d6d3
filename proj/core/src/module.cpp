#include "fundament/module.hpp"

#include <map>

#include "fundament/duality.hpp"
#include "fundament/error.hpp"

namespace fundament {

namespace {

void validate_action(const GModule& m, const std::vector<Matrix>& action) {
  const auto& g = *m.group();
  if (action.size() != g.order()) fail(ErrorKind::InvalidArgument, "need one matrix per group element");
  for (const auto& a : action)
    if (a.rows() != m.dim() || a.cols() != m.dim()) fail(ErrorKind::InvalidArgument, "action matrix has the wrong shape");
  if (!(action[0] == Matrix::identity(m.field(), m.dim())))
    fail(ErrorKind::InvalidArgument, "identity does not act trivially");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem s : g.generators())
      if (!(action[g.mul(x, s)] == action[x] * action[s]))
        fail(ErrorKind::InvalidArgument, "matrices do not define an action");
}

}  // namespace

ModulePtr GModule::make(GroupPtr group, int p, std::size_t dim, std::vector<Matrix> action) {
  std::shared_ptr<GModule> m(new GModule());
  m->group_ = std::move(group);
  m->field_ = Field::prime(p);
  m->dim_ = dim;
  for (auto& a : action)
    if (!a.field() || a.field()->characteristic() != p) a = Matrix::from_rows(m->field_, a.cols(), [&] {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
      return rows;
    }());
  validate_action(*m, action);
  m->action_ = std::move(action);
  return m;
}

ModulePtr GModule::from_generators(GroupPtr group, int p, std::size_t dim, const std::vector<Matrix>& gen_action) {
  const auto& gens = group->generators();
  if (gen_action.size() != gens.size()) fail(ErrorKind::InvalidArgument, "need one matrix per generator");
  auto f = Field::prime(p);
  std::vector<Matrix> action(group->order());
  std::vector<char> done(group->order(), 0);
  action[0] = Matrix::identity(f, dim);
  done[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = group->mul(x, gens[k]);
      if (done[y]) continue;
      done[y] = 1;
      action[y] = action[x] * gen_action[k];
      queue.push_back(y);
    }
  }
  return make(std::move(group), p, dim, std::move(action));
}

ModulePtr GModule::trivial(GroupPtr group, int p, std::size_t dim) {
  auto f = Field::prime(p);
  std::vector<Matrix> action(group->order(), Matrix::identity(f, dim));
  return make(std::move(group), p, dim, std::move(action));
}

ModulePtr direct_sum(const ModulePtr& a, const ModulePtr& b) {
  if (!same_group(a->group(), b->group()) || a->characteristic() != b->characteristic())
    fail(ErrorKind::Mismatch, "direct sum needs the same group and characteristic");
  const std::size_t d = a->dim() + b->dim();
  std::vector<Matrix> action;
  for (Elem g = 0; g < a->group()->order(); ++g) {
    Matrix m(a->field(), d, d);
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) m.at(i, j) = a->action(g).at(i, j);
    for (std::size_t i = 0; i < b->dim(); ++i)
      for (std::size_t j = 0; j < b->dim(); ++j) m.at(a->dim() + i, a->dim() + j) = b->action(g).at(i, j);
    action.push_back(std::move(m));
  }
  return GModule::make(a->group(), a->characteristic(), d, std::move(action));
}

ModulePtr power(const ModulePtr& a, std::size_t n) {
  const std::size_t d = a->dim() * n;
  std::vector<Matrix> action;
  for (Elem g = 0; g < a->group()->order(); ++g) {
    Matrix m(a->field(), d, d);
    for (std::size_t blk = 0; blk < n; ++blk)
      for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j) m.at(blk * a->dim() + i, blk * a->dim() + j) = a->action(g).at(i, j);
    action.push_back(std::move(m));
  }
  return GModule::make(a->group(), a->characteristic(), d, std::move(action));
}

ModulePtr inflate(const Cover& pi, const ModulePtr& a) {
  if (!same_group(pi.target(), a->group())) fail(ErrorKind::Mismatch, "module lives on a different group");
  std::vector<Matrix> action;
  for (Elem g = 0; g < pi.source()->order(); ++g) action.push_back(a->action(pi(g)));
  return GModule::make(pi.source(), a->characteristic(), a->dim(), std::move(action));
}

ModuleHom::ModuleHom(ModulePtr source, ModulePtr target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!same_group(source_->group(), target_->group()) || source_->characteristic() != target_->characteristic())
    fail(ErrorKind::Mismatch, "module map between different groups or characteristics");
  if (matrix_.rows() != target_->dim() || matrix_.cols() != source_->dim())
    fail(ErrorKind::InvalidArgument, "module map matrix has the wrong shape");
  for (Elem g : source_->group()->generators())
    if (!(matrix_ * source_->action(g) == target_->action(g) * matrix_))
      fail(ErrorKind::InvalidArgument, "linear map is not G-equivariant");
}

ModuleHom ModuleHom::identity(const ModulePtr& m) {
  return ModuleHom(m, m, Matrix::identity(m->field(), m->dim()));
}

ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner) {
  if (!same_module(*outer.source(), *inner.target())) fail(ErrorKind::Mismatch, "module maps do not compose");
  return ModuleHom(inner.source(), outer.target(), outer.matrix() * inner.matrix());
}

bool is_submodule(const GModule& m, const Matrix& basis) {
  SpanBasis span(m.field(), m.dim());
  for (std::size_t i = 0; i < basis.rows(); ++i) span.add(basis.row(i));
  for (Elem g : m.group()->generators())
    for (std::size_t i = 0; i < basis.rows(); ++i)
      if (!span.contains(m.act(g, basis.row(i)))) return false;
  return true;
}

Matrix cyclic_submodule(const GModule& m, const Vector& v) {
  SpanBasis span(m.field(), m.dim());
  std::vector<Vector> queue;
  if (span.add(v)) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Elem g : m.group()->generators()) {
      auto w = m.act(g, queue[head]);
      if (span.add(w)) queue.push_back(std::move(w));
    }
  return row_space(Matrix::from_rows(m.field(), m.dim(), queue));
}

bool is_simple_module(const GModule& m) {
  if (m.dim() == 0) return false;
  const int p = m.characteristic();
  // Every nonzero submodule contains a cyclic one; it suffices to look at
  // one vector per line (leading nonzero coordinate equal to 1).
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 1; code < total; ++code) {
    Vector v = vector_of_code(code, p, m.dim());
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    if (cyclic_submodule(m, v).rows() < m.dim()) return false;
  }
  return true;
}

std::size_t code_of_vector(const Vector& v, int p) {
  std::size_t code = 0, place = 1;
  for (auto x : v) {
    code += x * place;
    place *= static_cast<std::size_t>(p);
  }
  return code;
}

Vector vector_of_code(std::size_t code, int p, std::size_t dim) {
  Vector v(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<FieldElem>(code % static_cast<std::size_t>(p));
    code /= static_cast<std::size_t>(p);
  }
  return v;
}

Vector KernelModule::vector_of(Elem x) const {
  if (code_of[x] < 0) fail(ErrorKind::InvalidArgument, "element is not in the module subgroup");
  return vector_of_code(static_cast<std::size_t>(code_of[x]), module->characteristic(), module->dim());
}

Elem KernelModule::element(const Vector& v) const { return element_of[code_of_vector(v, module->characteristic())]; }

KernelModule kernel_module(const Cover& pi, const Subgroup& l, int p_if_trivial) {
  const auto& h = pi.source();
  require_normal(l, "L");
  if (!l.is_subset_of(pi.kernel())) fail(ErrorKind::NotCentralInKernel, "L is not inside the kernel");
  if (!commutes_elementwise(l, pi.kernel())) fail(ErrorKind::NotCentralInKernel, "L is not central in the kernel");
  int p = 0;
  if (!is_elementary_abelian(l, &p)) fail(ErrorKind::NotElementaryAbelian, "L is not elementary abelian");
  if (p == 0) p = p_if_trivial;

  KernelModule km;
  km.cover = pi;
  km.subgroup = l;
  km.code_of.assign(h->order(), -1);
  km.code_of[0] = 0;
  km.element_of = {0};
  std::vector<Elem> basis;
  // Grow the span one basis element at a time; code = Σ a_i p^i.
  for (Elem x : l.elements()) {
    if (km.code_of[x] >= 0) continue;
    std::size_t place = km.element_of.size();
    basis.push_back(x);
    std::vector<Elem> grown(km.element_of);
    Elem power = 0;
    for (int c = 1; c < p; ++c) {
      power = h->mul(power, x);
      for (std::size_t s = 0; s < place; ++s) {
        Elem y = h->mul(km.element_of[s], power);
        km.code_of[y] = static_cast<std::int64_t>(c * place + s);
        grown.push_back(y);
      }
    }
    km.element_of = std::move(grown);
  }

  const auto& g = pi.target();
  const std::size_t d = basis.size();
  auto f = Field::prime(p);
  std::vector<Elem> section(g->order(), static_cast<Elem>(-1));
  for (Elem x = 0; x < h->order(); ++x)
    if (section[pi(x)] == static_cast<Elem>(-1)) section[pi(x)] = x;
  std::vector<Matrix> action;
  for (Elem s = 0; s < g->order(); ++s) {
    Matrix m(f, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto col = vector_of_code(static_cast<std::size_t>(km.code_of[h->conj(section[s], basis[j])]), p, d);
      for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col[i];
    }
    action.push_back(std::move(m));
  }
  km.module = GModule::make(g, p, d, std::move(action));
  return km;
}

ModulePtr module_from_cover(const Cover& pi, const Subgroup& l, int p_if_trivial) {
  return kernel_module(pi, l, p_if_trivial).module;
}

EndoFieldPtr EndoField::make(const ModulePtr& a) {
  if (!is_simple_module(*a)) fail(ErrorKind::NotSimple, "module is not simple");
  const std::size_t d = a->dim();
  const auto& fp = a->field();
  const int p = a->characteristic();

  // X ρ(g) = ρ(g) X for the generators of G; unknown X_{ab} has index a*d+b.
  const auto& gens = a->group()->generators();
  Matrix eq(fp, std::max<std::size_t>(1, gens.size() * d * d), d * d);
  std::size_t row = 0;
  for (Elem g : gens) {
    const auto& r = a->action(g);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row) {
        for (std::size_t k = 0; k < d; ++k) {
          eq.at(row, i * d + k) = fp->add(eq.at(row, i * d + k), r.at(k, j));
          eq.at(row, k * d + j) = fp->sub(eq.at(row, k * d + j), r.at(i, k));
        }
      }
  }
  Matrix sol = nullspace(eq);
  const std::size_t k = sol.rows();
  std::size_t q = 1;
  for (std::size_t i = 0; i < k; ++i) {
    q *= static_cast<std::size_t>(p);
    if (q > 4096) fail(ErrorKind::InvalidArgument, "endomorphism field too large");
  }
  auto as_matrix = [&](const Vector& v) {
    Matrix m(fp, d, d);
    for (std::size_t i = 0; i < d * d; ++i) m.at(i / d, i % d) = v[i];
    return m;
  };
  std::vector<Matrix> elems;
  for (std::size_t code = 0; code < q; ++code) {
    Vector digits = vector_of_code(code, p, k);
    Vector v(d * d, 0);
    for (std::size_t s = 0; s < k; ++s)
      if (digits[s]) v = add(fp, v, scale(fp, digits[s], sol.row(s)));
    elems.push_back(as_matrix(v));
  }
  // Labels 0..p-1 are the scalars c·1, so F_p sits inside F by residue.
  std::sort(elems.begin(), elems.end());
  std::vector<Matrix> ordered;
  for (int c = 0; c < p; ++c) ordered.push_back(Matrix::identity(fp, d).scaled(static_cast<FieldElem>(c)));
  for (auto& e : elems)
    if (std::find(ordered.begin(), ordered.begin() + p, e) == ordered.begin() + p) ordered.push_back(std::move(e));
  elems = std::move(ordered);
  std::map<std::vector<FieldElem>, FieldElem> label;
  for (std::size_t i = 0; i < q; ++i) label[elems[i].data()] = static_cast<FieldElem>(i);

  std::shared_ptr<EndoField> ef(new EndoField());
  ef->module_ = a;
  if (k == 1) {
    ef->field_ = Field::prime(p);
  } else {
    std::vector<FieldElem> addt(q * q), mult(q * q);
    for (std::size_t x = 0; x < q; ++x)
      for (std::size_t y = 0; y < q; ++y) {
        addt[x * q + y] = label.at((elems[x] + elems[y]).data());
        auto it = label.find((elems[x] * elems[y]).data());
        if (it == label.end()) fail(ErrorKind::NotSimple, "commutant is not closed under composition");
        mult[x * q + y] = it->second;
      }
    FieldElem one = label.at(Matrix::identity(fp, d).data());
    ef->field_ = Field::from_tables(p, static_cast<int>(k), std::move(addt), std::move(mult), one);
  }
  ef->elements_ = std::move(elems);
  for (std::size_t s = 0; s < k; ++s) ef->fp_basis_.push_back(label.at(as_matrix(sol.row(s)).data()));
  ef->labels_ = std::move(label);

  // Greedy F-basis of A from the standard basis.
  SpanBasis span(fp, d);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d && span.size() < d; ++i) {
    Vector e(d, 0);
    e[i] = 1;
    if (span.contains(e)) continue;
    ef->f_basis_.push_back(e);
    for (FieldElem s : ef->fp_basis_) {
      auto v = ef->elements_[s].apply(e);
      span.add(v);
      cols.push_back(v);
    }
  }
  auto conv = Matrix::from_columns(fp, d, cols);
  auto inv = inverse(conv);
  if (!inv) fail(ErrorKind::NotSimple, "could not build an F-basis");
  ef->to_fp_inverse_ = *inv;

  const std::size_t m = ef->f_basis_.size();
  for (Elem g = 0; g < a->group()->order(); ++g) {
    std::vector<Vector> fcols;
    for (std::size_t t = 0; t < m; ++t) fcols.push_back(ef->to_f(a->act(g, ef->f_basis_[t])));
    ef->f_action_.push_back(Matrix::from_columns(ef->field_, m, fcols));
  }
  return ef;
}

std::optional<FieldElem> EndoField::label_of(const Matrix& endo) const {
  auto it = labels_.find(endo.data());
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

Vector EndoField::to_f(const Vector& a) const {
  const auto& f = *field_;
  const std::size_t k = fp_basis_.size();
  Vector lambda = to_fp_inverse_.apply(a);
  Vector c(f_basis_.size(), 0);
  for (std::size_t t = 0; t < f_basis_.size(); ++t)
    for (std::size_t s = 0; s < k; ++s)
      if (lambda[t * k + s]) c[t] = f.add(c[t], f.mul(f.from_int(lambda[t * k + s]), fp_basis_[s]));
  return c;
}

Vector EndoField::from_f(const Vector& c) const {
  const auto& fp = module_->field();
  Vector x(module_->dim(), 0);
  for (std::size_t t = 0; t < f_basis_.size(); ++t)
    if (c[t]) x = add(fp, x, elements_[c[t]].apply(f_basis_[t]));
  return x;
}

std::optional<ModuleHom> find_module_isomorphism(const ModulePtr& a, const EndoFieldPtr& b) {
  const auto& bm = b->module();
  if (!same_group(a->group(), bm->group()) || a->characteristic() != bm->characteristic() || a->dim() != bm->dim())
    return std::nullopt;
  auto dual = hom_space(a, b);
  for (std::size_t i = 0; i < dual.dim(); ++i) {
    const auto& phi = dual.basis()[i];
    if (phi.is_injective()) return phi;
  }
  return std::nullopt;
}

}  // namespace fundament
