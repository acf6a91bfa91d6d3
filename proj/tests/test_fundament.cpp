#include <gtest/gtest.h>

#include <random>

#include "builders.hpp"
#include "fundament/decompose.hpp"
#include "fundament/error.hpp"
#include "fundament/fundament.hpp"
#include "fundament/lattice.hpp"
#include "fundament/search.hpp"
#include "oracles.hpp"

using namespace fundament;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

Cover fprod(const GroupPtr& base, const std::vector<Cover>& covers) {
  return fiber_product(base, covers).structure_map();
}

Cover power(const Cover& eta, std::size_t k) {
  return fprod(eta.target(), std::vector<Cover>(k, eta));
}

// Intersection of the maximal members of {N ⊲ H : N ⊊ Ker π}, from tables.
oracle::Members oracle_fundament_kernel(const Cover& pi) {
  const auto& h = *pi.source();
  const auto ker = oracle::kernel(pi);
  std::vector<oracle::Members> inside;
  for (const auto& n : oracle::normal_subgroups(h))
    if (oracle::subset(n, ker) && n != ker) inside.push_back(n);
  oracle::Members out = ker;
  for (const auto& n : inside) {
    bool maximal = true;
    for (const auto& m : inside)
      if (m != n && oracle::subset(n, m)) maximal = false;
    if (!maximal) continue;
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = out[x] && n[x];
  }
  return out;
}

oracle::Members members_of(const Subgroup& s) {
  oracle::Members m(s.parent()->order(), false);
  for (Elem x : s.elements()) m[x] = true;
  return m;
}

// All fprods of at most three factors drawn from `pool`, as multisets.
std::vector<Cover> family(const GroupPtr& base, const std::vector<Cover>& pool) {
  std::vector<Cover> out{identity_cover(base)};
  const std::size_t n = pool.size();
  for (std::size_t a = 0; a < n; ++a) {
    out.push_back(fprod(base, {pool[a]}));
    for (std::size_t b = a; b < n; ++b) {
      out.push_back(fprod(base, {pool[a], pool[b]}));
      for (std::size_t c = b; c < n; ++c) out.push_back(fprod(base, {pool[a], pool[b], pool[c]}));
    }
  }
  return out;
}

const AbInvariant* only_ab(const CoverInvariants& inv) {
  EXPECT_LE(inv.ab.size(), 1u);
  return inv.ab.empty() ? nullptr : &inv.ab.front();
}

GroupPtr s5() { return testkit::perms({"(1 2 3 4 5)", "(1 2)"}, "S5"); }
GroupPtr a5xc2() { return testkit::perms({"(1 2 3 4 5)", "(1 2 3)", "(6 7)"}, "A5xC2"); }

}  // namespace

TEST(FundamentKernel, Examples) {
  const auto& in = testkit::intro();
  auto c4 = in.c4;
  Subgroup m = fundament_kernel(trivial_cover(c4));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(fundament_kernel(in.eta0).is_trivial());
  EXPECT_TRUE(fundament_kernel(identity_cover(c4)).is_trivial());
  EXPECT_EQ(fundament_kernel(trivial_cover(testkit::s3())).size(), 3u);
}

TEST(FundamentKernel, MatchesTheLatticeOracle) {
  for (const auto& h : testkit::small_groups())
    for (const auto& n : normal_subgroups(h)) {
      Cover pi = quotient(h, n).map;
      EXPECT_EQ(members_of(fundament_kernel(pi)), oracle_fundament_kernel(pi)) << h->name() << " |N|=" << n.size();
      EXPECT_EQ(is_fundamental(pi), fundament_kernel(pi).is_trivial());
    }
}

TEST(Fundament, Examples) {
  const auto& in = testkit::intro();
  Fundament f = fundament::fundament(trivial_cover(in.c4));
  EXPECT_EQ(f.fundament.source()->order(), 2u);
  EXPECT_EQ(f.fundament.target()->order(), 1u);
  EXPECT_EQ(compose(f.fundament, f.rho), trivial_cover(in.c4));
  Fundament same = fundament::fundament(in.eta1);
  EXPECT_TRUE(same.rho.is_isomorphism());
  Fundament s3 = fundament::fundament(trivial_cover(testkit::s3()));
  EXPECT_EQ(s3.fundament.source()->order(), 2u);
  EXPECT_EQ(s3.rho.kernel().size(), 3u);
}

TEST(Fundament, QuotientIsFundamentalAndFactorsThePi) {
  for (const auto& h : testkit::small_groups())
    for (const auto& n : normal_subgroups(h)) {
      Cover pi = quotient(h, n).map;
      Fundament f = fundament::fundament(pi);
      EXPECT_TRUE(is_fundamental(f.fundament));
      EXPECT_EQ(compose(f.fundament, f.rho).hom().table(), pi.hom().table());
      EXPECT_EQ(f.rho.kernel(), fundament_kernel(pi));
    }
}

TEST(IsFundamental, Examples) {
  const auto& in = testkit::intro();
  EXPECT_TRUE(is_fundamental(identity_cover(in.c4)));
  EXPECT_FALSE(is_fundamental(trivial_cover(in.c4)));
  for (const auto& fam : std::vector<std::vector<Cover>>{{in.eta0, in.eta1}, {in.eta1, in.eta1, in.eta1}})
    EXPECT_TRUE(is_fundamental(fprod(in.c2, fam)));
  const auto& c3 = testkit::over_c3();
  EXPECT_TRUE(is_fundamental(fprod(c3.c3, {c3.split, c3.nonsplit, c3.nonsplit})));
}

TEST(Series, Examples) {
  auto sizes = [](const FundamentSeries& s) {
    std::vector<std::size_t> out;
    for (const auto& k : s.kernels) out.push_back(k.size());
    return out;
  };
  const auto& in = testkit::intro();
  FundamentSeries c4 = fundament_series(trivial_cover(in.c4));
  EXPECT_EQ(sizes(c4), (std::vector<std::size_t>{4, 2, 1}));
  ASSERT_EQ(c4.stages.size(), 2u);
  EXPECT_EQ(c4.stages[0].source()->order(), 2u);
  EXPECT_EQ(c4.stages[0].target()->order(), 1u);
  EXPECT_EQ(c4.stages[1].source()->order(), 4u);
  EXPECT_EQ(c4.stages[1].kernel().size(), 2u);
  EXPECT_EQ(oracle::element_orders(*c4.stages[1].source()), (std::vector<std::size_t>{1, 2, 4, 4}));
  FundamentSeries s3 = fundament_series(trivial_cover(testkit::s3()));
  EXPECT_EQ(sizes(s3), (std::vector<std::size_t>{6, 3, 1}));
  EXPECT_TRUE(s3.kernels[1].is_abelian());
  EXPECT_TRUE(s3.kernels[1].is_normal());
  FundamentSeries one = fundament_series(in.eta1);
  EXPECT_EQ(sizes(one), (std::vector<std::size_t>{2, 1}));
}

TEST(Series, StrictlyDecreasesToOneWithFundamentalStages) {
  for (const auto& h : testkit::small_groups())
    for (const auto& n : normal_subgroups(h)) {
      Cover pi = quotient(h, n).map;
      FundamentSeries s = fundament_series(pi);
      ASSERT_FALSE(s.kernels.empty());
      EXPECT_EQ(s.kernels.front(), pi.kernel());
      EXPECT_TRUE(s.kernels.back().is_trivial());
      for (std::size_t k = 1; k < s.kernels.size(); ++k) {
        EXPECT_TRUE(s.kernels[k].is_subset_of(s.kernels[k - 1]));
        EXPECT_LT(s.kernels[k].size(), s.kernels[k - 1].size());
        // M_k is the fundament kernel of H ↠ H/M_{k-1}.
        EXPECT_EQ(s.kernels[k], fundament_kernel(quotient(h, s.kernels[k - 1]).map));
      }
      ASSERT_EQ(s.stages.size() + 1, s.kernels.size());
      for (const auto& st : s.stages) EXPECT_TRUE(is_fundamental(st));
      if (!s.stages.empty()) EXPECT_TRUE(is_fundament_series(s.stages));
    }
}

TEST(Series, FundamentsImageUnderSquares) {
  // θ(M_k(π)) ≤ M_k(π'), with equality for semi-cartesian squares.
  std::mt19937_64 rng(testkit::test_seed(61));
  for (int trial = 0; trial < 120; ++trial) {
    CommSquare sq = testkit::random_square(rng);
    FundamentSeries top = fundament_series(sq.top);
    FundamentSeries bottom = fundament_series(sq.bottom);
    const bool semi = oracle::semi_cartesian(sq);
    for (std::size_t k = 0; k < top.kernels.size(); ++k) {
      Subgroup img(sq.b(), sq.left.hom().image_of(top.kernels[k].members()));
      Subgroup target = k < bottom.kernels.size() ? bottom.kernels[k] : Subgroup::trivial(sq.b());
      EXPECT_TRUE(img.is_subset_of(target));
      if (semi) EXPECT_EQ(img, target);
    }
    if (semi && is_fundamental(sq.top)) EXPECT_TRUE(is_fundamental(sq.bottom));
  }
}

TEST(Characteristic, RejectsNonFundamental) {
  auto c4 = testkit::intro().c4;
  EXPECT_EQ(kind_of([&] { characteristic(trivial_cover(c4)); }), ErrorKind::NotFundamental);
  EXPECT_EQ(kind_of([&] { invariants(trivial_cover(c4)); }), ErrorKind::NotFundamental);
  Cover to_one = trivial_cover(c4);
  EXPECT_EQ(kind_of([&] { dominates(to_one, to_one); }), ErrorKind::NotFundamental);
}

TEST(Invariants, Examples) {
  const auto& in = testkit::intro();
  auto s = CohomSpace::make(EndoField::make(GModule::trivial(in.c2, 2, 1)));
  Vector eta1_class = cocycle_from_extension(in.eta1, s).coords;

  CoverInvariants two = invariants(power(in.eta1, 2));
  ASSERT_EQ(two.ab.size(), 1u);
  EXPECT_TRUE(two.na.empty());
  EXPECT_EQ(two.ab[0].mult, 1u);
  ASSERT_EQ(two.ab[0].supp.rows(), 1u);
  EXPECT_EQ(two.ab[0].supp.row(0), eta1_class);

  CoverInvariants none = invariants(identity_cover(in.c2));
  EXPECT_TRUE(none.na.empty());
  EXPECT_TRUE(none.ab.empty());

  CoverInvariants split = invariants(in.eta0);
  ASSERT_EQ(split.ab.size(), 1u);
  EXPECT_EQ(split.ab[0].supp.rows(), 0u);
  EXPECT_EQ(split.ab[0].mult, 1u);

  CoverInvariants a5 = invariants(trivial_cover(testkit::a5()));
  ASSERT_EQ(a5.na.size(), 1u);
  EXPECT_EQ(a5.na[0].mult, 1u);
  EXPECT_TRUE(a5.ab.empty());
}

TEST(Invariants, MultipleOfOneTable) {
  const auto& in = testkit::intro();
  for (std::size_t kappa = 0; kappa <= 3; ++kappa) {
    const CoverInvariants split_inv = invariants(power(in.eta0, kappa));
    const CoverInvariants twisted_inv = invariants(power(in.eta1, kappa));
    const AbInvariant* split = only_ab(split_inv);
    const AbInvariant* twisted = only_ab(twisted_inv);
    if (kappa == 0) {
      EXPECT_EQ(split, nullptr);
      EXPECT_EQ(twisted, nullptr);
      continue;
    }
    ASSERT_NE(split, nullptr);
    ASSERT_NE(twisted, nullptr);
    EXPECT_EQ(split->mult, kappa);
    EXPECT_EQ(split->supp.rows(), 0u);
    EXPECT_EQ(twisted->mult, kappa - 1);
    EXPECT_EQ(twisted->supp.rows(), 1u);
  }
}

TEST(Invariants, NonAbelianClassesAreSeparated) {
  const auto& in = testkit::intro();
  Cover sym = testkit::cover_by_gens(s5(), in.c2, {0, in.c2->generators()[0]});
  Cover direct = testkit::cover_by_gens(a5xc2(), in.c2, {0, 0, in.c2->generators()[0]});
  CoverInvariants a = invariants(sym), b = invariants(direct);
  ASSERT_EQ(a.na.size(), 1u);
  ASSERT_EQ(b.na.size(), 1u);
  EXPECT_FALSE(isomorphic_fundamental(sym, direct));
  EXPECT_FALSE(dominates(sym, direct));
  EXPECT_TRUE(dominates(sym, sym));
  EXPECT_TRUE(dominates(identity_cover(in.c2), direct));
}

TEST(Dominates, Examples) {
  const auto& in = testkit::intro();
  EXPECT_TRUE(dominates(in.eta1, power(in.eta1, 2)));
  EXPECT_FALSE(dominates(in.eta1, in.eta0));
  for (const auto& t : {in.eta0, in.eta1, power(in.eta1, 3), identity_cover(in.c2)}) EXPECT_TRUE(dominates(t, t));
  EXPECT_EQ(kind_of([&] { dominates(in.eta1, testkit::over_c3().split); }), ErrorKind::BaseMismatch);
}

TEST(Isomorphic, Examples) {
  const auto& in = testkit::intro();
  EXPECT_TRUE(isomorphic_fundamental(power(in.eta1, 2), fprod(in.c2, {in.eta0, in.eta1})));
  EXPECT_FALSE(isomorphic_fundamental(in.eta0, in.eta1));
  EXPECT_TRUE(isomorphic_fundamental(in.eta1, in.eta1));
}

TEST(Dominates, AgreesWithEpimorphismSearch) {
  const auto& in = testkit::intro();
  const auto& c3 = testkit::over_c3();
  for (const auto& [base, pool] : std::vector<std::pair<GroupPtr, std::vector<Cover>>>{
           {in.c2, {in.eta0, in.eta1}}, {c3.c3, {c3.split, c3.nonsplit}}}) {
    auto fam = family(base, pool);
    std::vector<CoverInvariants> inv;
    for (const auto& t : fam) inv.push_back(invariants(t));
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j) {
        const bool dom = dominates(inv[j], inv[i]);
        EXPECT_EQ(dom, oracle::exists_epi_over(fam[i], fam[j])) << i << " " << j;
        EXPECT_EQ(dom, dominates(fam[j], fam[i]));
        const bool iso = isomorphic_fundamental(inv[i], inv[j]);
        if (fam[i].source()->order() == fam[j].source()->order())
          EXPECT_EQ(iso, find_isomorphism_over(fam[i], fam[j]).has_value()) << i << " " << j;
        else
          EXPECT_FALSE(iso);
        // Mutual domination forces an isomorphism.
        if (dom && dominates(inv[i], inv[j])) EXPECT_TRUE(iso);
      }
  }
}

TEST(Dominates, PowersDetectDominationOverC2) {
  // τ' ⪯ τ iff every power η^(κ) dominated by τ' is dominated by τ.
  const auto& in = testkit::intro();
  auto fam = family(in.c2, {in.eta0, in.eta1});
  std::vector<Cover> powers;
  for (const auto& eta : {in.eta0, in.eta1})
    for (std::size_t k = 0; k <= 3; ++k) powers.push_back(power(eta, k));
  std::vector<CoverInvariants> inv, pinv;
  for (const auto& t : fam) inv.push_back(invariants(t));
  for (const auto& p : powers) pinv.push_back(invariants(p));
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j) {
      bool through_powers = true;
      for (const auto& p : pinv)
        if (dominates(p, inv[j]) && !dominates(p, inv[i])) through_powers = false;
      EXPECT_EQ(dominates(inv[j], inv[i]), through_powers);
    }
}

TEST(Decomposition, InvariantsRebuildTheCover) {
  const auto& in = testkit::intro();
  const auto& c3 = testkit::over_c3();
  std::vector<Cover> covers = family(in.c2, {in.eta0, in.eta1});
  for (const auto& t : family(c3.c3, {c3.split, c3.nonsplit})) covers.push_back(t);
  covers.push_back(trivial_cover(testkit::a5()));
  for (const auto& pi : covers) {
    Decomposition d = decompose_fundamental(pi);
    CoverInvariants inv = invariants(pi);
    std::size_t expected = 0;
    for (const auto& z : inv.na) expected += z.mult;
    for (const auto& a : inv.ab) expected += a.mult + a.supp.rows();
    EXPECT_EQ(d.factors.size(), expected);
    for (const auto& f : d.factors) EXPECT_TRUE(oracle::indecomposable(f));
    EXPECT_TRUE(d.iso.is_bijective());
    for (Elem x = 0; x < pi.source()->order(); ++x) EXPECT_EQ(d.product.structure_map()(d.iso(x)), pi(x));
    // Rebuilding from the factors gives the same invariants.
    EXPECT_TRUE(isomorphic_fundamental(d.product.structure_map(), pi));
    if (pi.source()->order() <= 27)
      EXPECT_TRUE(find_isomorphism_over(d.product.structure_map(), pi).has_value());
  }
}

TEST(Lift, Examples) {
  const auto& in = testkit::intro();
  // π = η1 viewed as a map of bases C4 ↠ C2.
  const Cover& pi = in.eta1;
  EXPECT_FALSE(exists_semicartesian_lift(pi, identity_cover(in.c4), in.eta1));
  EXPECT_FALSE(find_semicartesian_lift(pi, identity_cover(in.c4), in.eta1).has_value());

  // Pullback configuration: τ contains Inf η'_i for each factor of τ'.
  Cover tau_prime = fprod(in.c2, {in.eta0, in.eta1});
  Cover inf0 = fiber_product(in.c2, {pi, in.eta0}).projections()[0];
  Cover inf1 = fiber_product(in.c2, {pi, in.eta1}).projections()[0];
  Cover tau = fprod(in.c4, {inf0, inf1});
  EXPECT_TRUE(exists_semicartesian_lift(pi, tau, tau_prime));
  EXPECT_TRUE(find_semicartesian_lift(pi, tau, tau_prime).has_value());

  // π = id reduces to domination.
  auto fam = family(in.c2, {in.eta0, in.eta1});
  Cover id = identity_cover(in.c2);
  for (const auto& a : fam)
    for (const auto& b : fam) EXPECT_EQ(exists_semicartesian_lift(id, a, b), dominates(b, a));
}

TEST(Lift, AgreesWithSearchOverC4) {
  const auto& in = testkit::intro();
  const Cover& pi = in.eta1;
  // Indecomposable covers of C4 of small order, transported onto in.c4.
  std::vector<Cover> pool;
  for (const auto& h : testkit::small_groups()) {
    if (h->order() % 4 != 0 || h->order() > 16) continue;
    for (const auto& n : normal_subgroups(h)) {
      if (n.is_trivial() || !is_minimal_normal(h, n)) continue;
      Quotient q = quotient(h, n);
      auto iso = find_isomorphism(q.group, in.c4);
      if (!iso) continue;
      pool.push_back(Cover(compose(*iso, q.map.hom())));
    }
  }
  ASSERT_GE(pool.size(), 3u);
  std::vector<Cover> taus{identity_cover(in.c4)};
  for (std::size_t a = 0; a < pool.size(); ++a) {
    taus.push_back(pool[a]);
    for (std::size_t b = a; b < pool.size(); ++b)
      if (pool[a].source()->order() * pool[b].source()->order() <= 16 * 8) taus.push_back(fprod(in.c4, {pool[a], pool[b]}));
  }
  std::vector<Cover> primes{identity_cover(in.c2), in.eta0, in.eta1, power(in.eta1, 2),
                            fprod(in.c2, {in.eta0, in.eta1})};
  std::size_t checked = 0, positive = 0;
  for (const auto& tau : taus)
    for (const auto& tp : primes) {
      const bool fast = exists_semicartesian_lift(pi, tau, tp);
      const auto& ker = tau.kernel();
      const auto& ker_p = tp.kernel();
      std::vector<Elem> down(tau.source()->order());
      for (Elem x = 0; x < down.size(); ++x) down[x] = pi(tau(x));
      const bool slow = oracle::exists_map_over(tau.source(), down, tp, [&](const std::vector<Elem>& t) {
        if (!oracle::surjective(t, tp.source()->order())) return false;
        std::vector<bool> hit(tp.source()->order(), false);
        std::size_t n = 0;
        for (Elem x : ker.elements())
          if (!hit[t[x]]) hit[t[x]] = true, ++n;
        return n == ker_p.size() && std::all_of(ker.elements().begin(), ker.elements().end(),
                                                [&](Elem x) { return ker_p.contains(t[x]); });
      });
      EXPECT_EQ(fast, slow) << tau.source()->name() << " over " << tp.source()->name();
      ++checked;
      positive += fast;
    }
  EXPECT_GT(positive, 0u);
  EXPECT_LT(positive, checked);
}

TEST(FundamentOf, Examples) {
  const auto& in = testkit::intro();
  Cover c4_to_1 = trivial_cover(in.c4);
  Fundament f = fundament::fundament(c4_to_1);
  EXPECT_TRUE(is_fundament_of(f.rho, f.fundament));
  EXPECT_TRUE(is_fundament_of_by_squares(f.rho, f.fundament));
  EXPECT_TRUE(is_fundament_of(identity_cover(in.c4), in.eta1));
  EXPECT_TRUE(is_fundament_of_by_squares(identity_cover(in.c4), in.eta1));
  // C8 ↠ C4 under η1: the composite C8 ↠ C2 has M = the order-2 subgroup.
  auto c8 = testkit::cyc(8);
  Cover rho = testkit::cover_by_gens(c8, in.c4, {in.c4->generators()[0]});
  EXPECT_EQ(is_fundament_of(rho, in.eta1), fundament_kernel(compose(in.eta1, rho)) == rho.kernel());
  EXPECT_TRUE(is_fundament_of(rho, in.eta1));
  EXPECT_EQ(kind_of([&] { is_fundament_of(identity_cover(in.c4), c4_to_1); }), ErrorKind::NotFundamental);
  EXPECT_EQ(kind_of([&] { is_fundament_of(identity_cover(in.c2), in.eta1); }), ErrorKind::Mismatch);
}

TEST(FundamentOf, BothRoutesAgree) {
  std::size_t yes = 0, no = 0;
  for (const auto& h : testkit::small_groups())
    for (const auto& n : normal_subgroups(h)) {
      Cover pi = quotient(h, n).map;
      for (const auto& l : normal_subgroups_inside(h, n)) {
        Quotient q = quotient(h, l);
        Cover pi_bar = factor_through(q.map, pi);
        if (!is_fundamental(pi_bar)) continue;
        const bool a = is_fundament_of(q.map, pi_bar);
        EXPECT_EQ(a, is_fundament_of_by_squares(q.map, pi_bar)) << h->name();
        EXPECT_EQ(a, members_of(l) == oracle_fundament_kernel(pi));
        (a ? yes : no)++;
      }
    }
  EXPECT_GT(yes, 0u);
  EXPECT_GT(no, 0u);
}

TEST(SeriesCheck, Examples) {
  const auto& in = testkit::intro();
  EXPECT_TRUE(is_fundament_series(fundament_series(trivial_cover(in.c4)).stages));
  EXPECT_TRUE(is_fundament_series({in.eta1}));
  EXPECT_TRUE(is_fundament_series_by_kernels({in.eta1}));

  // C2×C4 ↠ C2 by (a, b) ↦ b mod 2 has kernel C2×C2 and is fundamental,
  // but the series of C2×C4 ↠ 1 has M_1 of order 2, not 4.
  auto g = testkit::c2xc4();
  Cover top = testkit::cover_by_gens(g, in.c2, {0, in.c2->generators()[0]});
  ASSERT_TRUE(is_fundamental(top));
  std::vector<Cover> chain{trivial_cover(in.c2), top};
  EXPECT_FALSE(is_fundament_series(chain));
  EXPECT_FALSE(is_fundament_series_by_kernels(chain));

  EXPECT_EQ(kind_of([&] { is_fundament_series({trivial_cover(in.c4)}); }), ErrorKind::NotFundamentalStage);
  EXPECT_EQ(kind_of([&] { is_fundament_series({in.eta1, in.eta1}); }), ErrorKind::Mismatch);
}

TEST(SeriesCheck, BothRoutesAgreeOnTwoStageChains) {
  std::size_t yes = 0, no = 0;
  for (const auto& h : testkit::small_groups())
    for (const auto& m0 : normal_subgroups(h))
      for (const auto& m1 : normal_subgroups_inside(h, m0)) {
        if (m1 == m0) continue;
        Quotient g0 = quotient(h, m0), g1 = quotient(h, m1);
        Cover stage1 = factor_through(g1.map, g0.map);
        Cover stage2 = g1.map;
        if (!is_fundamental(stage1) || !is_fundamental(stage2)) continue;
        std::vector<Cover> chain{stage1, stage2};
        const bool a = is_fundament_series(chain);
        EXPECT_EQ(a, is_fundament_series_by_kernels(chain)) << h->name();
        (a ? yes : no)++;
      }
  EXPECT_GT(yes, 0u);
  EXPECT_GT(no, 0u);
}
