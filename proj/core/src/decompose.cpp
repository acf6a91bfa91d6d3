#include "fundament/decompose.hpp"

#include <map>
#include <stdexcept>

#include "fundament/error.hpp"
#include "fundament/lattice.hpp"
#include "fundament/search.hpp"

namespace fundament {

namespace {

// Builds extensions E(ψ∘f) for an extension π_B: H_B ↠ G with
// A-generated kernel B, together with the maps H_B → E, x = k·u(g) ↦ (ψ(k), g).
class AbelianFactors {
 public:
  explicit AbelianFactors(KernelModule km) : km_(std::move(km)), f_(extension_cocycle(km_)) {
    const auto& pi = km_.cover;
    section_.assign(pi.target()->order(), 0);
    std::vector<char> seen(pi.target()->order(), 0);
    for (Elem x = 0; x < pi.source()->order(); ++x)
      if (!seen[pi(x)]) {
        seen[pi(x)] = 1;
        section_[pi(x)] = x;
      }
  }

  const KernelModule& kernel() const { return km_; }
  const TwoCochain& cocycle() const { return f_; }

  struct Built {
    Cover factor;
    std::vector<Elem> map;  // per element of H_B
  };

  // With a space, the factor is the extension of the canonical representative
  // of [ψ∘f], reached through the coboundary between the two.
  Built build(const ModuleHom& psi, const CohomSpacePtr& canonical = nullptr) {
    TwoCochain c = f_.pushforward(psi);
    const ModulePtr& a = psi.target();
    std::vector<Vector> t(km_.cover.target()->order(), Vector(a->dim(), 0));
    Cover factor;
    if (canonical) {
      Vector coords = canonical->coordinates(c);
      TwoCochain rep = canonical->representative(coords);
      auto pre = canonical->coboundary_preimage(c - rep);
      if (!pre) throw std::logic_error("cohomologous cocycles without a coboundary between them");
      t = std::move(*pre);
      auto it = cache_.find(coords);
      if (it == cache_.end()) it = cache_.emplace(coords, extension_from_cocycle(rep).cover).first;
      factor = it->second;
    } else {
      factor = extension_from_cocycle(c).cover;
    }
    const auto& pi = km_.cover;
    const auto& h = *pi.source();
    const int p = a->characteristic();
    std::size_t asize = 1;
    for (std::size_t i = 0; i < a->dim(); ++i) asize *= static_cast<std::size_t>(p);
    std::vector<Elem> map(h.order());
    const auto& fld = a->field();
    for (Elem x = 0; x < h.order(); ++x) {
      Elem g = pi(x);
      Elem k = h.mul(x, h.inv(section_[g]));
      Vector v = add(fld, psi(km_.vector_of(k)), t[g]);
      map[x] = static_cast<Elem>(g * asize + code_of_vector(v, p));
    }
    return Built{factor, std::move(map)};
  }

 private:
  KernelModule km_;
  TwoCochain f_;
  std::vector<Elem> section_;
  std::map<Vector, Cover> cache_;
};

GroupHom assemble_iso(const GroupPtr& h, const FiberProduct& fp, const std::vector<std::vector<Elem>>& coords) {
  std::vector<Elem> image(h->order());
  std::vector<Elem> tuple(coords.size());
  for (Elem x = 0; x < h->order(); ++x) {
    for (std::size_t i = 0; i < coords.size(); ++i) tuple[i] = coords[i][x];
    auto idx = fp.index_of(tuple);
    if (!idx) throw std::logic_error("assembled tuple is outside the fiber product");
    image[x] = *idx;
  }
  GroupHom iso(h, fp.carrier(), std::move(image));
  if (!iso.is_bijective()) throw std::logic_error("assembled map is not bijective");
  return iso;
}

std::vector<Elem> compose_tables(const std::vector<Elem>& outer, const std::vector<Elem>& inner) {
  std::vector<Elem> out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

}  // namespace

Decomposition decompose_fundamental(const Cover& pi) {
  Characteristic ch = characteristic(pi);
  const auto& h = pi.source();
  const auto& g = pi.target();
  std::vector<Cover> factors;
  std::vector<std::vector<Elem>> coords;

  for (const auto& cls : ch.na)
    for (const auto& n : cls.members) {
      if (n.is_trivial()) {
        factors.push_back(pi);
        coords.push_back(GroupHom::identity(h).table());
        continue;
      }
      Cover q = quotient(h, n).map;
      factors.push_back(factor_through(q, pi));
      coords.push_back(q.hom().table());
    }

  for (const auto& cls : ch.ab) {
    const Matrix& s = cls.s.s_matrix;
    const auto& fld = cls.space->field();
    std::vector<Vector> psis;
    Matrix img = s.cols() == 0 ? Matrix(fld, 0, s.rows()) : row_space(s.transpose());
    for (std::size_t i = 0; i < img.rows(); ++i) {
      auto sol = solve(s, img.row(i));
      if (!sol) throw std::logic_error("echelon vector of the image has no preimage");
      psis.push_back(*sol);
    }
    Matrix ker = nullspace(s);
    for (std::size_t i = 0; i < ker.rows(); ++i) psis.push_back(ker.row(i));

    AbelianFactors builder(cls.s.kernel);
    for (const auto& c : psis) {
      auto built = builder.build(cls.s.dual.combination(c), cls.space);
      factors.push_back(built.factor);
      coords.push_back(compose_tables(built.map, cls.quotient.hom().table()));
    }
  }

  FiberProduct fp = fiber_product(g, factors);
  if (factors.empty()) return Decomposition{factors, fp, pi.hom()};
  GroupHom iso = assemble_iso(h, fp, coords);
  return Decomposition{std::move(factors), std::move(fp), std::move(iso)};
}

// ---------------------------------------------------------------- normal subgroups

namespace {

struct FactorClasses {
  std::vector<std::size_t> na;
  std::vector<EndoFieldPtr> modules;
  std::vector<std::vector<std::size_t>> blocks;
};

FactorClasses classify_factors(const FiberProduct& fp) {
  FactorClasses out;
  for (std::size_t i = 0; i < fp.size(); ++i) {
    const Cover& eta = fp.factors()[i];
    if (!is_indecomposable(eta))
      fail(ErrorKind::InvalidArgument, "factor " + std::to_string(i) + " is not indecomposable");
    if (!eta.kernel().is_abelian()) {
      out.na.push_back(i);
      continue;
    }
    ModulePtr a = module_from_cover(eta, eta.kernel());
    bool placed = false;
    for (std::size_t b = 0; b < out.modules.size(); ++b)
      if (find_module_isomorphism(a, out.modules[b])) {
        out.blocks[b].push_back(i);
        placed = true;
        break;
      }
    if (!placed) {
      out.modules.push_back(EndoField::make(a));
      out.blocks.push_back({i});
    }
  }
  return out;
}

}  // namespace

KernelNormalDecomposition kernel_normal_decomposition(const FiberProduct& fp, const Subgroup& l) {
  if (!same_group(l.parent(), fp.carrier())) fail(ErrorKind::Mismatch, "L is not a subgroup of the carrier");
  require_normal(l, "L");
  if (!l.is_subset_of(fp.structure_map().kernel()))
    fail(ErrorKind::NotInsideKernel, "L is not inside the kernel of the structure map");
  FactorClasses cls = classify_factors(fp);

  KernelNormalDecomposition d;
  d.l = l;
  d.na_indices = cls.na;
  Subgroup rec = Subgroup::trivial(fp.carrier());
  for (std::size_t i : cls.na)
    if (fp.axis_kernels()[i].is_subset_of(l)) {
      d.na_inside.push_back(i);
      rec = join(rec, fp.axis_kernels()[i]);
    }
  for (std::size_t b = 0; b < cls.modules.size(); ++b) {
    Subgroup comp = intersect(l, fp.axis_product(cls.blocks[b]));
    rec = join(rec, comp);
    d.ab_blocks.push_back({cls.modules[b], cls.blocks[b], comp});
  }
  d.reconstruction = rec;
  return d;
}

Alignment align_normal_to_axes(const FiberProduct& fp, const Subgroup& l) {
  KernelNormalDecomposition d = kernel_normal_decomposition(fp, l);
  const auto& carrier = fp.carrier();

  {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < fp.size(); ++i)
      if (fp.axis_kernels()[i].is_subset_of(l)) inside.push_back(i);
    if (fp.axis_product(inside) == l) return Alignment{fp, GroupHom::identity(carrier), inside};
  }

  std::vector<Cover> factors = fp.factors();
  std::vector<std::vector<Elem>> coords;
  for (const auto& pr : fp.projections()) coords.push_back(pr.hom().table());
  std::vector<std::size_t> chosen = d.na_inside;

  for (const auto& block : d.ab_blocks) {
    const auto& endo = block.module;
    Restriction r = restrict(fp, block.indices);
    const Cover& pi_b = r.product.structure_map();
    KernelModule km = kernel_module(pi_b, pi_b.kernel(), endo->module()->characteristic());
    DualSpace dual = hom_space(km.module, endo);
    const auto& fld = endo->field();
    const std::size_t n = dual.dim();

    // Functionals vanishing on the image of L ∩ K_{I_A}.
    std::vector<Vector> eqs;
    block.component.members().for_each([&](Elem x) {
      Vector v = km.vector_of(r.projection(x));
      for (std::size_t t = 0; t < endo->f_dim(); ++t) {
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = dual.apply_f(j, v)[t];
        eqs.push_back(row);
      }
    });
    Matrix ann = eqs.empty() ? Matrix::identity(fld, n) : nullspace(Matrix::from_rows(fld, n, eqs));
    SpanBasis span(fld, n);
    for (std::size_t i = 0; i < ann.rows(); ++i) span.add(ann.row(i));
    std::vector<Vector> psis;
    for (std::size_t u : span.completing_units()) {
      Vector e(n, 0);
      e[u] = 1;
      psis.push_back(e);
    }
    const std::size_t free_count = psis.size();
    for (std::size_t i = 0; i < ann.rows(); ++i) psis.push_back(ann.row(i));

    AbelianFactors builder(km);
    for (std::size_t j = 0; j < psis.size(); ++j) {
      auto built = builder.build(dual.combination(psis[j]));
      const std::size_t pos = block.indices[j];
      factors[pos] = built.factor;
      coords[pos] = compose_tables(built.map, r.projection.hom().table());
      if (j < free_count) chosen.push_back(pos);
    }
  }
  std::sort(chosen.begin(), chosen.end());

  FiberProduct out = fiber_product(fp.base(), factors);
  GroupHom omega = assemble_iso(carrier, out, coords);
  if (!(Subgroup(out.carrier(), omega.image_of(l.members())) == out.axis_product(chosen)))
    throw std::logic_error("aligned subgroup is not a product of axis kernels");
  return Alignment{std::move(out), std::move(omega), std::move(chosen)};
}

// ---------------------------------------------------------------- compactness

std::optional<bool> compact_by_linear_independence(const FiberProduct& fp) {
  if (fp.size() == 0) fail(ErrorKind::EmptyFactorList, "compactness needs at least one factor");
  for (const auto& eta : fp.factors())
    if (!is_indecomposable(eta)) return std::nullopt;
  const auto& factors = fp.factors();

  std::vector<std::size_t> na;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].kernel().is_abelian()) na.push_back(i);
  for (std::size_t a = 0; a < na.size(); ++a)
    for (std::size_t b = a + 1; b < na.size(); ++b)
      if (find_isomorphism_over(factors[na[a]], factors[na[b]])) return false;

  struct Block {
    EndoFieldPtr module;
    CohomSpacePtr space;
    std::vector<CohomClass> classes;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Cover& eta = factors[i];
    if (!eta.kernel().is_abelian()) continue;
    KernelModule km = kernel_module(eta, eta.kernel());
    Block* home = nullptr;
    std::optional<ModuleHom> iso;
    for (auto& b : blocks)
      if ((iso = find_module_isomorphism(km.module, b.module))) {
        home = &b;
        break;
      }
    if (!home) {
      auto endo = EndoField::make(km.module);
      blocks.push_back(Block{endo, CohomSpace::make(endo), {}});
      home = &blocks.back();
      iso = ModuleHom::identity(km.module);
    }
    home->classes.push_back(class_of(home->space, extension_cocycle(km).pushforward(*iso)));
  }

  for (const auto& b : blocks) {
    for (std::size_t x = 0; x < b.classes.size(); ++x)
      for (std::size_t y = x + 1; y < b.classes.size(); ++y)
        if (are_isomorphic_extensions(b.classes[x], b.classes[y])) return false;
    std::vector<Vector> nonsplit;
    for (const auto& c : b.classes)
      if (!c.is_zero()) nonsplit.push_back(c.coords);
    if (!nonsplit.empty() && rank(Matrix::from_rows(b.space->field(), b.space->dim(), nonsplit)) < nonsplit.size())
      return std::nullopt;
  }
  return true;
}

}  // namespace fundament
