#include "fundament/cohomology.hpp"

#include <algorithm>

#include "fundament/error.hpp"

namespace fundament {

// ---------------------------------------------------------------- cochains

TwoCochain::TwoCochain(GroupPtr g, ModulePtr a) : g_(std::move(g)), a_(std::move(a)) {
  values_.assign(g_->order() * g_->order() * a_->dim(), 0);
}

Vector TwoCochain::at(Elem s, Elem t) const {
  const std::size_t d = a_->dim();
  auto it = values_.begin() + static_cast<std::ptrdiff_t>((s * g_->order() + t) * d);
  return Vector(it, it + static_cast<std::ptrdiff_t>(d));
}

void TwoCochain::set(Elem s, Elem t, const Vector& v) {
  const std::size_t d = a_->dim();
  std::copy(v.begin(), v.end(), values_.begin() + static_cast<std::ptrdiff_t>((s * g_->order() + t) * d));
}

bool TwoCochain::is_normalized() const {
  for (Elem x = 0; x < g_->order(); ++x)
    if (!fundament::is_zero(at(0, x)) || !fundament::is_zero(at(x, 0))) return false;
  return true;
}

bool TwoCochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](FieldElem v) { return v == 0; });
}

bool TwoCochain::is_cocycle() const {
  if (!is_normalized()) return false;
  const auto& f = a_->field();
  const std::size_t n = g_->order();
  // Identities with σ3 a generator imply the rest (the set of good σ3 is
  // closed under products).
  for (Elem s3 : g_->generators())
    for (Elem s1 = 1; s1 < n; ++s1)
      for (Elem s2 = 1; s2 < n; ++s2) {
        Vector lhs = a_->act(s1, at(s2, s3));
        lhs = add(f, lhs, at(s1, g_->mul(s2, s3)));
        Vector rhs = add(f, at(g_->mul(s1, s2), s3), at(s1, s2));
        if (lhs != rhs) return false;
      }
  return true;
}

TwoCochain TwoCochain::pushforward(const ModuleHom& phi) const {
  if (phi.source()->dim() != a_->dim()) fail(ErrorKind::Mismatch, "map source does not match cochain values");
  TwoCochain out(g_, phi.target());
  const std::size_t n = g_->order();
  for (Elem s = 1; s < n; ++s)
    for (Elem t = 1; t < n; ++t) out.set(s, t, phi(at(s, t)));
  return out;
}

TwoCochain TwoCochain::pullback(const Cover& pi, const ModulePtr& inflated) const {
  if (!same_group(pi.target(), g_)) fail(ErrorKind::Mismatch, "cover target is not the cochain group");
  TwoCochain out(pi.source(), inflated);
  const std::size_t n = pi.source()->order();
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t) out.set(s, t, at(pi(s), pi(t)));
  return out;
}

namespace {

void require_compatible(const TwoCochain& a, const TwoCochain& b) {
  if (!same_group(a.group(), b.group()) || a.module()->dim() != b.module()->dim() ||
      a.module()->characteristic() != b.module()->characteristic())
    fail(ErrorKind::Mismatch, "cochains live on different data");
}

}  // namespace

TwoCochain operator+(const TwoCochain& a, const TwoCochain& b) {
  require_compatible(a, b);
  TwoCochain out = a;
  const auto& f = a.a_->field();
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] = f->add(a.values_[i], b.values_[i]);
  return out;
}

TwoCochain operator-(const TwoCochain& a, const TwoCochain& b) {
  require_compatible(a, b);
  TwoCochain out = a;
  const auto& f = a.a_->field();
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] = f->sub(a.values_[i], b.values_[i]);
  return out;
}

TwoCochain coboundary(const GroupPtr& g, const ModulePtr& a, const std::vector<Vector>& t) {
  if (t.size() != g->order()) fail(ErrorKind::InvalidArgument, "one value per element expected");
  const auto& f = a->field();
  TwoCochain out(g, a);
  for (Elem s = 1; s < g->order(); ++s)
    for (Elem u = 1; u < g->order(); ++u) {
      Vector v = a->act(s, t[u]);
      v = add(f, v, t[s]);
      v = add(f, v, scale(f, f->neg(1), t[g->mul(s, u)]));
      out.set(s, u, v);
    }
  return out;
}

TwoCochain fiber_cocycle(const std::vector<TwoCochain>& fs) {
  if (fs.empty()) fail(ErrorKind::EmptyFactorList, "no cocycles");
  const auto& a = fs.front().module();
  for (const auto& c : fs)
    if (!same_group(c.group(), fs.front().group()) || !same_module(*c.module(), *a))
      fail(ErrorKind::Mismatch, "cocycles must share group and module");
  const auto& g = fs.front().group();
  TwoCochain out(g, power(a, fs.size()));
  for (Elem s = 0; s < g->order(); ++s)
    for (Elem t = 0; t < g->order(); ++t) {
      Vector v;
      for (const auto& c : fs) {
        Vector part = c.at(s, t);
        v.insert(v.end(), part.begin(), part.end());
      }
      out.set(s, t, v);
    }
  return out;
}

// ---------------------------------------------------------------- H²

namespace {

using Term = std::pair<std::uint32_t, FieldElem>;
using Form = std::vector<Term>;  // sorted by variable, no zero coefficients

// Accumulates sparse linear forms through a dense scratch row.
class Accumulator {
 public:
  Accumulator(const FieldPtr& f, std::size_t n) : f_(f), dense_(n, 0), seen_(n, 0) {}

  void add(std::uint32_t var, FieldElem c) {
    if (c == 0) return;
    if (!seen_[var]) {
      seen_[var] = 1;
      touched_.push_back(var);
    }
    dense_[var] = f_->add(dense_[var], c);
  }
  void add(const Form& form, FieldElem c = 1) {
    for (const auto& [v, x] : form) add(v, f_->mul(c, x));
  }
  Form take() {
    std::sort(touched_.begin(), touched_.end());
    Form out;
    for (auto v : touched_) {
      if (dense_[v] != 0) out.emplace_back(v, dense_[v]);
      dense_[v] = 0;
      seen_[v] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  FieldPtr f_;
  std::vector<FieldElem> dense_;
  std::vector<char> seen_;
  std::vector<std::uint32_t> touched_;
};

// Solution space of a stream of homogeneous equations, kept as an explicit
// basis.  An equation that is not identically zero on the basis removes one
// dimension; everything else costs one sparse evaluation per basis vector.
class NullspaceTracker {
 public:
  NullspaceTracker(const FieldPtr& f, std::size_t n) : f_(f), n_(n) {
    basis_.assign(n, Vector(n, 0));
    for (std::size_t i = 0; i < n; ++i) basis_[i][i] = 1;
  }

  void impose(const Form& eq) {
    if (eq.empty() || basis_.empty()) return;
    std::vector<FieldElem> val(basis_.size(), 0);
    std::ptrdiff_t pivot = -1;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      FieldElem s = 0;
      for (const auto& [v, c] : eq) s = f_->add(s, f_->mul(c, basis_[j][v]));
      val[j] = s;
      if (s != 0) pivot = static_cast<std::ptrdiff_t>(j);
    }
    if (pivot < 0) return;
    const auto pj = static_cast<std::size_t>(pivot);
    const FieldElem inv = f_->inv(val[pj]);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (j == pj || val[j] == 0) continue;
      const FieldElem m = f_->neg(f_->mul(val[j], inv));
      auto& row = basis_[j];
      const auto& prow = basis_[pj];
      for (std::size_t k = 0; k < n_; ++k)
        if (prow[k] != 0) row[k] = f_->add(row[k], f_->mul(m, prow[k]));
    }
    basis_.erase(basis_.begin() + pivot);
  }

  bool exhausted() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }

 private:
  FieldPtr f_;
  std::size_t n_;
  std::vector<Vector> basis_;
};

}  // namespace

std::size_t CohomSpace::var(Elem x, std::size_t k, std::size_t t) const {
  return ((static_cast<std::size_t>(x) - 1) * gens_.size() + k) * a_->f_dim() + t;
}

CohomSpacePtr CohomSpace::make(const EndoFieldPtr& a, std::size_t cap) {
  auto sp = std::shared_ptr<CohomSpace>(new CohomSpace());
  sp->a_ = a;
  sp->g_ = a->module()->group();
  const auto& g = *sp->g_;
  const auto& f = a->field();
  const std::size_t n = g.order();
  const std::size_t m = a->f_dim();
  sp->gens_ = g.generators();
  const std::size_t r = sp->gens_.size();
  sp->data_dim_ = (n - 1) * r * m;
  const std::size_t dd = sp->data_dim_;
  if (dd > cap) fail(ErrorKind::OrderCapExceeded, "cohomology system too large");

  sp->tree_parent_.assign(n, 0);
  sp->tree_gen_.assign(n, 0);
  {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    sp->bfs_order_.push_back(0);
    for (std::size_t i = 0; i < sp->bfs_order_.size(); ++i) {
      Elem y = sp->bfs_order_[i];
      for (std::size_t k = 0; k < r; ++k) {
        Elem z = g.mul(y, sp->gens_[k]);
        if (seen[z]) continue;
        seen[z] = 1;
        sp->tree_parent_[z] = y;
        sp->tree_gen_[z] = k;
        sp->bfs_order_.push_back(z);
      }
    }
  }

  // Cocycle constraints.  For each σ1, f(σ1, ·) is a linear form in the
  // generator data along the tree; every non-tree edge y → y s gives m
  // equations.
  NullspaceTracker tracker(f, dd);
  Accumulator acc(f, std::max<std::size_t>(dd, 1));
  auto add_data = [&](Elem z, std::size_t k, const Vector& coeff_col) {
    // Adds Σ_u coeff_col[u]·F(z, s_k)_u; F(1, ·) = 0.
    if (z == 0) return;
    for (std::size_t u = 0; u < m; ++u) acc.add(static_cast<std::uint32_t>(sp->var(z, k, u)), coeff_col[u]);
  };
  std::vector<std::vector<Form>> expr(n, std::vector<Form>(m));
  for (Elem s1 = 1; s1 < n && !tracker.exhausted(); ++s1) {
    const Matrix& act = a->f_action(s1);
    auto edge_form = [&](Elem y, std::size_t k, std::size_t t) {
      // f(σ1, y) + F(σ1 y, s_k) − σ1·F(y, s_k), component t
      acc.add(expr[y][t]);
      Vector unit(m, 0);
      unit[t] = 1;
      add_data(g.mul(s1, y), k, unit);
      Vector row(m);
      for (std::size_t u = 0; u < m; ++u) row[u] = f->neg(act.at(t, u));
      add_data(y, k, row);
    };
    for (auto& e : expr[0]) e.clear();
    for (std::size_t i = 1; i < sp->bfs_order_.size(); ++i) {
      Elem z = sp->bfs_order_[i];
      for (std::size_t t = 0; t < m; ++t) {
        edge_form(sp->tree_parent_[z], sp->tree_gen_[z], t);
        expr[z][t] = acc.take();
      }
    }
    for (Elem y = 0; y < n && !tracker.exhausted(); ++y)
      for (std::size_t k = 0; k < r; ++k) {
        Elem z = g.mul(y, sp->gens_[k]);
        if (z != 0 && sp->tree_parent_[z] == y && sp->tree_gen_[z] == k) continue;
        for (std::size_t t = 0; t < m; ++t) {
          edge_form(y, k, t);
          acc.add(expr[z][t], f->neg(1));
          tracker.impose(acc.take());
        }
      }
  }
  if (!tracker.basis().empty()) {
    Matrix z = row_space(Matrix::from_rows(f, dd, tracker.basis()));
    for (std::size_t i = 0; i < z.rows(); ++i) sp->z_basis_.push_back(z.row(i));
  }

  // Coboundaries of the unit 1-cochains e_{τ,u}.
  sp->span_ = std::make_unique<SpanBasis>(f, dd);
  for (Elem tau = 1; tau < n; ++tau)
    for (std::size_t u = 0; u < m; ++u) {
      Vector v(dd, 0);
      for (Elem x = 1; x < n; ++x)
        for (std::size_t k = 0; k < r; ++k) {
          if (sp->gens_[k] == tau)
            for (std::size_t t = 0; t < m; ++t) {
              auto& e = v[sp->var(x, k, t)];
              e = f->add(e, a->f_action(x).at(t, u));
            }
          if (g.mul(x, sp->gens_[k]) == tau) {
            auto& e = v[sp->var(x, k, u)];
            e = f->sub(e, 1);
          }
          if (x == tau) {
            auto& e = v[sp->var(x, k, u)];
            e = f->add(e, 1);
          }
        }
      if (sp->span_->add(v)) sp->b_source_.emplace_back(tau, u);
    }
  sp->dim_b_ = sp->span_->size();
  for (const auto& z : sp->z_basis_)
    if (sp->span_->add(z)) sp->h_basis_.push_back(z);
  return sp;
}

Vector CohomSpace::data_of(const TwoCochain& f) const {
  Vector d(data_dim_, 0);
  for (Elem x = 1; x < g_->order(); ++x)
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      Vector c = a_->to_f(f.at(x, gens_[k]));
      for (std::size_t t = 0; t < c.size(); ++t) d[var(x, k, t)] = c[t];
    }
  return d;
}

TwoCochain CohomSpace::expand(const Vector& data) const {
  const auto& f = field();
  const std::size_t n = g_->order();
  const std::size_t m = a_->f_dim();
  auto data_at = [&](Elem z, std::size_t k) {
    Vector c(m, 0);
    if (z == 0) return c;
    for (std::size_t t = 0; t < m; ++t) c[t] = data[var(z, k, t)];
    return c;
  };
  TwoCochain out(g_, module());
  std::vector<Vector> row(n);
  for (Elem s1 = 1; s1 < n; ++s1) {
    row[0].assign(m, 0);
    for (std::size_t i = 1; i < bfs_order_.size(); ++i) {
      Elem z = bfs_order_[i];
      Elem y = tree_parent_[z];
      std::size_t k = tree_gen_[z];
      Vector v = add(f, row[y], data_at(g_->mul(s1, y), k));
      v = add(f, v, scale(f, f->neg(1), a_->f_action(s1).apply(data_at(y, k))));
      row[z] = v;
      out.set(s1, z, a_->from_f(v));
    }
  }
  return out;
}

Vector CohomSpace::coordinates(const TwoCochain& f) const {
  if (!same_group(f.group(), g_) || !same_module(*f.module(), *module()))
    fail(ErrorKind::Mismatch, "cochain does not belong to this space");
  if (!f.is_cocycle()) fail(ErrorKind::NotCocycle, "not a normalized 2-cocycle");
  auto c = span_->coordinates(data_of(f));
  if (!c) fail(ErrorKind::NotCocycle, "cocycle outside the computed solution space");
  return Vector(c->begin() + static_cast<std::ptrdiff_t>(dim_b_), c->end());
}

TwoCochain CohomSpace::representative(const Vector& coords) const {
  if (coords.size() != dim()) fail(ErrorKind::InvalidArgument, "coordinate length mismatch");
  const auto& f = field();
  Vector d(data_dim_, 0);
  for (std::size_t i = 0; i < coords.size(); ++i) d = add(f, d, scale(f, coords[i], h_basis_[i]));
  return expand(d);
}

std::optional<std::vector<Vector>> CohomSpace::coboundary_preimage(const TwoCochain& b) const {
  if (!same_group(b.group(), g_) || !b.is_cocycle()) return std::nullopt;
  auto c = span_->coordinates(data_of(b));
  if (!c) return std::nullopt;
  for (std::size_t i = dim_b_; i < c->size(); ++i)
    if ((*c)[i] != 0) return std::nullopt;
  const std::size_t m = a_->f_dim();
  std::vector<Vector> tf(g_->order(), Vector(m, 0));
  for (std::size_t i = 0; i < dim_b_; ++i) {
    auto [tau, u] = b_source_[i];
    tf[tau][u] = field()->add(tf[tau][u], (*c)[i]);
  }
  std::vector<Vector> t;
  t.reserve(tf.size());
  for (const auto& v : tf) t.push_back(a_->from_f(v));
  return t;
}

TwoCochain CohomSpace::scaled(FieldElem c, const TwoCochain& f) const {
  return f.pushforward(ModuleHom(module(), module(), a_->matrix_of(c)));
}

// ---------------------------------------------------------------- classes

CohomClass class_of(const CohomSpacePtr& space, const TwoCochain& cocycle) {
  return CohomClass{space, space->coordinates(cocycle)};
}

bool are_congruent(const CohomClass& a, const CohomClass& b) {
  if (a.space != b.space) fail(ErrorKind::SpaceMismatch, "classes live in different spaces");
  return a.coords == b.coords;
}

bool are_isomorphic_extensions(const CohomClass& a, const CohomClass& b) {
  if (a.space != b.space) fail(ErrorKind::SpaceMismatch, "classes live in different spaces");
  const auto& f = a.space->field();
  for (std::size_t c = 1; c < f->order(); ++c)
    if (scale(f, static_cast<FieldElem>(c), a.coords) == b.coords) return true;
  return false;
}

Extension extension_from_cocycle(const TwoCochain& f, std::size_t cap) {
  if (!f.is_cocycle()) fail(ErrorKind::NotCocycle, "not a normalized 2-cocycle");
  const auto& g = *f.group();
  const auto& a = *f.module();
  const int p = a.characteristic();
  const std::size_t d = a.dim();
  std::size_t asize = 1;
  for (std::size_t i = 0; i < d; ++i) {
    asize *= static_cast<std::size_t>(p);
    if (asize * g.order() > cap) fail(ErrorKind::OrderCapExceeded, "extension exceeds the order cap");
  }
  const std::size_t n = g.order();
  const std::size_t total = asize * n;
  if (total > cap) fail(ErrorKind::OrderCapExceeded, "extension exceeds the order cap");

  std::vector<std::size_t> act(n * asize);
  for (Elem x = 0; x < n; ++x)
    for (std::size_t c = 0; c < asize; ++c) act[x * asize + c] = code_of_vector(a.act(x, vector_of_code(c, p, d)), p);
  std::vector<std::size_t> fc(n * n);
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t) fc[s * n + t] = code_of_vector(f.at(s, t), p);
  auto add_codes = [&](std::size_t x, std::size_t y) {
    std::size_t out = 0, place = 1;
    for (std::size_t i = 0; i < d; ++i) {
      out += ((x % static_cast<std::size_t>(p) + y % static_cast<std::size_t>(p)) % static_cast<std::size_t>(p)) * place;
      x /= static_cast<std::size_t>(p);
      y /= static_cast<std::size_t>(p);
      place *= static_cast<std::size_t>(p);
    }
    return out;
  };

  std::vector<Elem> table(total * total);
  for (std::size_t i = 0; i < total; ++i) {
    const Elem g1 = static_cast<Elem>(i / asize);
    const std::size_t a1 = i % asize;
    for (std::size_t j = 0; j < total; ++j) {
      const Elem g2 = static_cast<Elem>(j / asize);
      const std::size_t a2 = j % asize;
      std::size_t code = add_codes(add_codes(a1, act[g1 * asize + a2]), fc[g1 * n + g2]);
      table[i * total + j] = static_cast<Elem>(g.mul(g1, g2) * asize + code);
    }
  }
  auto e = FiniteGroup::from_table(total, std::move(table), {}, {}, "E");
  std::vector<Elem> image(total);
  for (std::size_t i = 0; i < total; ++i) image[i] = static_cast<Elem>(i / asize);
  Cover cover(GroupHom::unchecked(e, f.group(), std::move(image)));

  KernelModule km;
  km.cover = cover;
  km.subgroup = cover.kernel();
  km.module = f.module();
  km.code_of.assign(total, -1);
  km.element_of.resize(asize);
  for (std::size_t c = 0; c < asize; ++c) {
    km.code_of[c] = static_cast<std::int64_t>(c);
    km.element_of[c] = static_cast<Elem>(c);
  }
  return Extension{std::move(cover), std::move(km)};
}

TwoCochain extension_cocycle(const KernelModule& km) {
  const auto& pi = km.cover;
  const auto& h = *pi.source();
  const auto& g = pi.target();
  std::vector<Elem> section(g->order(), 0);
  std::vector<char> seen(g->order(), 0);
  for (Elem x = 0; x < h.order(); ++x)
    if (!seen[pi(x)]) {
      seen[pi(x)] = 1;
      section[pi(x)] = x;
    }
  TwoCochain out(g, km.module);
  for (Elem s = 1; s < g->order(); ++s)
    for (Elem t = 1; t < g->order(); ++t) {
      Elem x = h.mul(h.mul(section[s], section[t]), h.inv(section[g->mul(s, t)]));
      out.set(s, t, km.vector_of(x));
    }
  return out;
}

namespace {

KernelModule abelian_kernel(const Cover& pi, int p) {
  if (!pi.kernel().is_abelian()) fail(ErrorKind::KernelNotAbelian, "kernel is not abelian");
  return kernel_module(pi, pi.kernel(), p);
}

}  // namespace

CohomClass cocycle_from_extension(const Cover& pi, const ModuleHom& ident, const CohomSpacePtr& space) {
  if (!same_group(pi.target(), space->group())) fail(ErrorKind::Mismatch, "cover target is not the space group");
  KernelModule km = abelian_kernel(pi, space->module()->characteristic());
  if (!same_module(*ident.source(), *km.module) || !same_module(*ident.target(), *space->module()))
    fail(ErrorKind::Mismatch, "identification has the wrong source or target");
  if (ident.source()->dim() != ident.target()->dim() || !ident.is_injective())
    fail(ErrorKind::NotIsomorphism, "identification is not bijective");
  return class_of(space, extension_cocycle(km).pushforward(ident));
}

CohomClass cocycle_from_extension(const Cover& pi, const CohomSpacePtr& space) {
  if (!same_group(pi.target(), space->group())) fail(ErrorKind::Mismatch, "cover target is not the space group");
  KernelModule km = abelian_kernel(pi, space->module()->characteristic());
  auto iso = find_module_isomorphism(km.module, space->endo());
  if (!iso) fail(ErrorKind::NotIsomorphism, "kernel is not isomorphic to the module");
  return class_of(space, extension_cocycle(km).pushforward(*iso));
}

CohomClass inflate(const Cover& pi, const CohomClass& c) {
  if (!same_group(pi.target(), c.space->group())) fail(ErrorKind::Mismatch, "cover target is not the space group");
  ModulePtr inf = inflate(pi, c.space->module());
  auto space = CohomSpace::make(EndoField::make(inf));
  return class_of(space, c.representative().pullback(pi, inf));
}

Matrix inflation_matrix(const Cover& pi, const CohomSpacePtr& from, const CohomSpacePtr& to) {
  if (!same_group(pi.target(), from->group()) || !same_group(pi.source(), to->group()))
    fail(ErrorKind::Mismatch, "cover does not connect the two spaces");
  ModulePtr inf = inflate(pi, from->module());
  if (!same_module(*inf, *to->module())) fail(ErrorKind::Mismatch, "target space is not over the inflated module");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < from->dim(); ++i) {
    Vector e(from->dim(), 0);
    e[i] = 1;
    cols.push_back(to->coordinates(from->representative(e).pullback(pi, to->module())));
  }
  return Matrix::from_columns(to->field(), to->dim(), cols);
}

DualPairS x2(const Cover& pi, const EndoFieldPtr& a, CohomSpacePtr space) {
  if (!same_group(pi.target(), a->module()->group())) fail(ErrorKind::Mismatch, "module is over another group");
  KernelModule km = abelian_kernel(pi, a->module()->characteristic());
  if (!is_A_generated(km.module, a)) fail(ErrorKind::NotAGenerated, "kernel is not A-generated");
  if (!space) space = CohomSpace::make(a);
  if (!same_module(*space->module(), *a->module())) fail(ErrorKind::Mismatch, "space is over another module");
  DualSpace dual = hom_space(km.module, a);
  TwoCochain rep = extension_cocycle(km);
  std::vector<Vector> cols;
  for (const auto& phi : dual.basis()) cols.push_back(space->coordinates(rep.pushforward(phi)));
  Matrix s = Matrix::from_columns(space->field(), space->dim(), cols);
  return DualPairS{std::move(km), std::move(dual), std::move(space), std::move(rep), std::move(s)};
}

FiberProduct y2(const CohomSpacePtr& space, const std::vector<CohomClass>& values) {
  std::vector<Cover> covers;
  for (const auto& v : values) {
    if (v.space != space) fail(ErrorKind::SpaceMismatch, "class lives in another space");
    covers.push_back(extension_from_cocycle(v.representative()).cover);
  }
  return fiber_product(space->group(), std::move(covers));
}

}  // namespace fundament
