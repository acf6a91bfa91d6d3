#include "fundament/fundament.hpp"

#include <algorithm>

#include "fundament/error.hpp"
#include "fundament/lattice.hpp"
#include "fundament/search.hpp"
#include "fundament/squares.hpp"

namespace fundament {

Subgroup fundament_kernel(const Cover& pi) {
  const auto& k = pi.kernel();
  if (k.is_trivial()) return k;
  auto family = maximal_normal_in(pi.source(), k);
  Subgroup m = k;
  for (const auto& n : family) m = intersect(m, n);
  return m;
}

bool is_fundamental(const Cover& pi) { return fundament_kernel(pi).is_trivial(); }

Fundament fundament(const Cover& pi) {
  Subgroup m = fundament_kernel(pi);
  if (m.is_trivial()) return Fundament{pi, identity_cover(pi.source())};
  Quotient q = quotient(pi.source(), m);
  return Fundament{factor_through(q.map, pi), q.map};
}

FundamentSeries fundament_series(const Cover& pi) {
  FundamentSeries s;
  s.cover = pi;
  s.kernels.push_back(pi.kernel());
  s.quotients.push_back(pi);
  while (!s.kernels.back().is_trivial()) {
    // M_k is the fundament kernel of ρ_{k-1}: H ↠ G_{k-1}.
    Subgroup m = fundament_kernel(s.quotients.back());
    Cover rho = m.is_trivial() ? identity_cover(pi.source()) : quotient(pi.source(), m).map;
    s.stages.push_back(factor_through(rho, s.quotients.back()));
    s.kernels.push_back(m);
    s.quotients.push_back(rho);
  }
  return s;
}

// ---------------------------------------------------------------- invariants

namespace {

Subgroup intersect_all(const Subgroup& start, const std::vector<Subgroup>& list) {
  Subgroup m = start;
  for (const auto& n : list) m = intersect(m, n);
  return m;
}

// Column space of s as reduced echelon rows.
Matrix image_rows(const Matrix& s) {
  if (s.cols() == 0) return Matrix(s.field(), 0, s.rows());
  return row_space(s.transpose());
}

bool row_span_contains(const Matrix& big, const std::vector<Vector>& vecs) {
  if (vecs.empty()) return true;
  SpanBasis span(big.field(), big.cols());
  for (std::size_t i = 0; i < big.rows(); ++i) span.add(big.row(i));
  return std::all_of(vecs.begin(), vecs.end(), [&](const Vector& v) { return span.contains(v); });
}

std::size_t rank_of(const FieldPtr& f, std::size_t cols, const std::vector<Vector>& vecs) {
  if (vecs.empty()) return 0;
  return rank(Matrix::from_rows(f, cols, vecs));
}

// H² coordinates of the cochains ψ ∘ rep(v), v running over `vecs` of `from`.
std::vector<Vector> transport(const CohomSpacePtr& from, const std::vector<Vector>& vecs, const ModuleHom& psi,
                              const CohomSpacePtr& to) {
  std::vector<Vector> out;
  for (const auto& v : vecs) out.push_back(to->coordinates(from->representative(v).pushforward(psi)));
  return out;
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

void require_fundamental(const Cover& pi, const char* what) {
  if (!is_fundamental(pi)) fail(ErrorKind::NotFundamental, std::string(what) + " is not fundamental");
}

}  // namespace

Characteristic characteristic(const Cover& pi) {
  require_fundamental(pi, "cover");
  Characteristic c;
  c.cover = pi;
  const auto& h = pi.source();
  if (pi.kernel().is_trivial()) return c;

  for (const auto& n : maximal_normal_in(h, pi.kernel())) {
    Quotient q = quotient(h, n);
    Cover zeta = factor_through(q.map, pi);
    if (!zeta.kernel().is_abelian()) {
      bool placed = false;
      for (auto& cls : c.na)
        if (find_isomorphism_over(zeta, cls.representative)) {
          cls.members.push_back(n);
          placed = true;
          break;
        }
      if (!placed) c.na.push_back(NaCharacteristic{zeta, {n}});
      continue;
    }
    ModulePtr a = module_from_cover(zeta, zeta.kernel());
    bool placed = false;
    for (auto& cls : c.ab)
      if (find_module_isomorphism(a, cls.module)) {
        cls.members.push_back(n);
        placed = true;
        break;
      }
    if (!placed) {
      AbCharacteristic cls;
      cls.module = EndoField::make(a);
      cls.members.push_back(n);
      c.ab.push_back(std::move(cls));
    }
  }

  for (auto& cls : c.ab) {
    cls.space = CohomSpace::make(cls.module);
    cls.n_a = intersect_all(pi.kernel(), cls.members);
    if (cls.n_a.is_trivial()) {
      cls.quotient = identity_cover(h);
      cls.cover = pi;
    } else {
      cls.quotient = quotient(h, cls.n_a).map;
      cls.cover = factor_through(cls.quotient, pi);
    }
    cls.s = x2(cls.cover, cls.module, cls.space);
  }
  return c;
}

CoverInvariants invariants(const Characteristic& c) {
  CoverInvariants inv;
  inv.base = c.cover.target();
  for (const auto& cls : c.na) inv.na.push_back(NaInvariant{cls.representative, cls.members.size()});
  for (const auto& cls : c.ab) {
    AbInvariant a;
    a.module = cls.module;
    a.space = cls.space;
    a.supp = image_rows(cls.s.s_matrix);
    a.mult = cls.s.dual.dim() - a.supp.rows();
    inv.ab.push_back(std::move(a));
  }
  return inv;
}

CoverInvariants invariants(const Cover& pi) { return invariants(characteristic(pi)); }

namespace {

// Per class of `small`, whether its data is bounded by the matching class of
// `big` (absent classes count as multiplicity 0 and support 0).
bool bounded_by(const CoverInvariants& small, const CoverInvariants& big) {
  for (const auto& z : small.na) {
    std::size_t other = 0;
    for (const auto& w : big.na)
      if (find_isomorphism_over(z.representative, w.representative)) {
        other = w.mult;
        break;
      }
    if (z.mult > other) return false;
  }
  for (const auto& a : small.ab) {
    const AbInvariant* match = nullptr;
    std::optional<ModuleHom> iso;
    for (const auto& b : big.ab)
      if ((iso = find_module_isomorphism(a.module->module(), b.module))) {
        match = &b;
        break;
      }
    if (!match) {
      if (a.mult > 0 || a.supp.rows() > 0) return false;
      continue;
    }
    if (a.mult > match->mult) return false;
    if (!row_span_contains(match->supp, transport(a.space, rows_of(a.supp), *iso, match->space))) return false;
  }
  return true;
}

bool same_counts(const CoverInvariants& a, const CoverInvariants& b) {
  return a.na.size() == b.na.size() && a.ab.size() == b.ab.size();
}

}  // namespace

bool dominates(const CoverInvariants& dominated, const CoverInvariants& dominating) {
  if (!same_group(dominated.base, dominating.base)) fail(ErrorKind::BaseMismatch, "covers have different bases");
  return bounded_by(dominated, dominating);
}

bool dominates(const Cover& dominated, const Cover& dominating) {
  if (!same_group(dominated.target(), dominating.target()))
    fail(ErrorKind::BaseMismatch, "covers have different bases");
  return dominates(invariants(dominated), invariants(dominating));
}

bool isomorphic_fundamental(const CoverInvariants& a, const CoverInvariants& b) {
  if (!same_group(a.base, b.base)) fail(ErrorKind::BaseMismatch, "covers have different bases");
  // Both inclusions with equal class counts give equality of every
  // multiplicity and support.
  return same_counts(a, b) && bounded_by(a, b) && bounded_by(b, a);
}

bool isomorphic_fundamental(const Cover& a, const Cover& b) {
  if (!same_group(a.target(), b.target())) fail(ErrorKind::BaseMismatch, "covers have different bases");
  return isomorphic_fundamental(invariants(a), invariants(b));
}

// ---------------------------------------------------------------- lifting

bool exists_semicartesian_lift(const Cover& pi, const Cover& tau, const Cover& tau_prime) {
  if (!same_group(tau.target(), pi.source()) || !same_group(tau_prime.target(), pi.target()))
    fail(ErrorKind::BaseMismatch, "covers do not sit over the ends of π");
  const CoverInvariants inv = invariants(tau);
  const CoverInvariants inv_p = invariants(tau_prime);

  for (const auto& z : inv_p.na) {
    // Inf_π ζ' is the pullback of ζ' along π.
    FiberProduct pb = fiber_product(pi.target(), {pi, z.representative});
    const Cover& inflated = pb.projections()[0];
    std::size_t other = 0;
    for (const auto& w : inv.na)
      if (find_isomorphism_over(inflated, w.representative)) {
        other = w.mult;
        break;
      }
    if (z.mult > other) return false;
  }

  for (const auto& a : inv_p.ab) {
    ModulePtr inf = inflate(pi, a.module->module());
    const AbInvariant* match = nullptr;
    std::optional<ModuleHom> iso;
    for (const auto& b : inv.ab)
      if ((iso = find_module_isomorphism(inf, b.module))) {
        match = &b;
        break;
      }
    const std::size_t supp_dim = a.supp.rows();
    std::vector<Vector> images;
    std::size_t image_rank = 0;
    if (match) {
      for (const auto& v : rows_of(a.supp))
        images.push_back(match->space->coordinates(a.space->representative(v).pullback(pi, inf).pushforward(*iso)));
      image_rank = rank_of(match->space->field(), match->space->dim(), images);
      if (!row_span_contains(match->supp, images)) return false;
    } else {
      // No class of τ: the inflated support must vanish.
      auto space = CohomSpace::make(EndoField::make(inf));
      for (const auto& v : rows_of(a.supp)) images.push_back(space->coordinates(a.space->representative(v).pullback(pi, inf)));
      image_rank = rank_of(space->field(), space->dim(), images);
      if (image_rank > 0) return false;
    }
    const std::size_t nu = supp_dim - image_rank;
    const std::size_t target_mult = match ? match->mult : 0;
    if (nu + a.mult > target_mult) return false;
  }
  return true;
}

std::optional<GroupHom> find_semicartesian_lift(const Cover& pi, const Cover& tau, const Cover& tau_prime) {
  if (!same_group(tau.target(), pi.source()) || !same_group(tau_prime.target(), pi.target()))
    fail(ErrorKind::BaseMismatch, "covers do not sit over the ends of π");
  GroupHom down = compose(pi.hom(), tau.hom());
  const auto& ker = tau.kernel();
  const auto& ker_p = tau_prime.kernel();
  return find_hom_over(down, tau_prime.hom(), HomKind::Surjective, [&](const GroupHom& theta) {
    return theta.image_of(ker.members()) == ker_p.members();
  });
}

// ---------------------------------------------------------------- fundament checks

namespace {

void require_chainable(const Cover& rho, const Cover& pi_bar) {
  if (!same_group(rho.target(), pi_bar.source())) fail(ErrorKind::Mismatch, "ρ does not land in the source of π̄");
}

}  // namespace

bool is_fundament_of(const Cover& rho, const Cover& pi_bar) {
  require_chainable(rho, pi_bar);
  require_fundamental(pi_bar, "π̄");
  return rho.kernel() == fundament_kernel(compose(pi_bar, rho));
}

bool is_fundament_of_by_squares(const Cover& rho, const Cover& pi_bar) {
  require_chainable(rho, pi_bar);
  require_fundamental(pi_bar, "π̄");
  Cover pi = compose(pi_bar, rho);
  if (pi.kernel().is_trivial()) return true;
  // Any γ in such a square has Ker γ maximal normal inside Ker π, so the
  // quotient maps by those subgroups exhaust the candidates.
  for (const auto& n : maximal_normal_in(pi.source(), pi.kernel())) {
    Cover gamma = quotient(pi.source(), n).map;
    Cover eta0 = factor_through(gamma, pi);
    if (!is_indecomposable(eta0)) continue;
    CommSquare sq = make_square(rho, gamma, eta0, pi_bar);
    if (is_semi_cartesian(sq)) return false;
  }
  return true;
}

namespace {

void require_chain(const std::vector<Cover>& chain) {
  if (chain.empty()) fail(ErrorKind::InvalidArgument, "empty chain");
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (!is_fundamental(chain[k]))
      fail(ErrorKind::NotFundamentalStage, "stage " + std::to_string(k + 1) + " is not fundamental");
    if (k + 1 < chain.size() && !same_group(chain[k + 1].target(), chain[k].source()))
      fail(ErrorKind::Mismatch, "stage " + std::to_string(k + 2) + " does not land in the source of stage " +
                                    std::to_string(k + 1));
  }
}

}  // namespace

bool is_fundament_series(const std::vector<Cover>& chain) {
  require_chain(chain);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (!is_fundament_of_by_squares(chain[k + 1], chain[k])) return false;
  return true;
}

bool is_fundament_series_by_kernels(const std::vector<Cover>& chain) {
  require_chain(chain);
  const std::size_t t = chain.size();
  // to_stage[k]: H = G_t ↠ G_k
  std::vector<Cover> to_stage(t + 1);
  to_stage[t] = identity_cover(chain.back().source());
  for (std::size_t k = t; k-- > 0;) to_stage[k] = compose(chain[k], to_stage[k + 1]);
  FundamentSeries s = fundament_series(to_stage[0]);
  for (std::size_t k = 0; k <= t; ++k) {
    const Subgroup& expected = k < s.kernels.size() ? s.kernels[k] : s.kernels.back();
    if (!(to_stage[k].kernel() == expected)) return false;
  }
  return true;
}

}  // namespace fundament
