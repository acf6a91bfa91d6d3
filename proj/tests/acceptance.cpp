// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "builders.hpp"
#include "commands.hpp"
#include "fundament/cohomology.hpp"
#include "fundament/decompose.hpp"
#include "fundament/fundament.hpp"
#include "fundament/lattice.hpp"
#include "fundament/search.hpp"
#include "oracles.hpp"
#include "workspace.hpp"

using namespace fundament;

namespace {

// Wall-clock budgets, in seconds.
constexpr double kPairBudget = 1.0;
constexpr double kSeriesBudget = 1.0;
constexpr double kH2Budget = 5.0;
constexpr double kOracleBudget = 60.0;
constexpr double kCommandBudget = 10.0;
constexpr std::size_t kMinSquareInstances = 200;

struct Verdict {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Verdict()>& body,
               double budget = 0.0) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget > 0 && secs >= budget) v.check(false, "over budget");
  if (!v.ok) ++failures;
  std::printf("%s %d %s (%.3f s%s)%s%s\n", v.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
              budget > 0 ? (", limit " + std::to_string(static_cast<int>(budget)) + " s").c_str() : "",
              v.detail.empty() ? "" : ": ", v.detail.c_str());
}

Cover fprod(const GroupPtr& base, const std::vector<Cover>& covers) {
  return fiber_product(base, covers).structure_map();
}

std::vector<std::vector<Cover>> multisets(const std::vector<Cover>& pool, std::size_t max_len) {
  std::vector<std::vector<Cover>> out{{}};
  std::vector<std::vector<std::size_t>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& v : frontier)
      for (std::size_t i = v.empty() ? 0 : v.back(); i < pool.size(); ++i) {
        auto w = v;
        w.push_back(i);
        std::vector<Cover> fam;
        for (auto k : w) fam.push_back(pool[k]);
        out.push_back(fam);
        next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return out;
}

Verdict order8_pair() {
  Verdict v;
  const auto& in = testkit::intro();
  Cover a = fprod(in.c2, {in.eta1, in.eta1});
  Cover b = fprod(in.c2, {in.eta0, in.eta1});
  v.check(find_isomorphism_over(a, b).has_value(), "no isomorphism over C2");
  v.check(isomorphic_fundamental(a, b), "invariants differ");
  for (const auto& c : {a, b}) {
    auto orders = oracle::element_orders(*c.source());
    v.check(c.source()->order() == 8, "carrier order is not 8");
    v.check(orders.back() == 4, "no element of order 4");
  }
  return v;
}

Verdict series_example() {
  Verdict v;
  auto sizes = [](const Cover& pi) {
    std::vector<std::size_t> out;
    for (const auto& k : fundament_series(pi).kernels) out.push_back(k.size());
    return out;
  };
  v.check(sizes(trivial_cover(testkit::intro().c4)) == std::vector<std::size_t>{4, 2, 1}, "C4 chain");
  auto s3 = testkit::s3();
  FundamentSeries s = fundament_series(trivial_cover(s3));
  v.check(sizes(trivial_cover(s3)) == std::vector<std::size_t>{6, 3, 1}, "S3 chain");
  // A3: the unique subgroup of order 3.
  Subgroup a3 = Subgroup::trivial(s3);
  for (const auto& n : normal_subgroups(s3))
    if (n.size() == 3) a3 = n;
  v.check(s.kernels.size() == 3 && s.kernels[1] == a3, "M_1 is not A3");
  return v;
}

Verdict multiple_of_one() {
  Verdict v;
  const auto& in = testkit::intro();
  auto space = CohomSpace::make(EndoField::make(GModule::trivial(in.c2, 2, 1)));
  Vector eta1_class = cocycle_from_extension(in.eta1, space).coords;
  for (int twisted = 0; twisted <= 1; ++twisted)
    for (std::size_t kappa = 0; kappa <= 3; ++kappa) {
      const Cover& eta = twisted ? in.eta1 : in.eta0;
      CoverInvariants inv = invariants(fprod(in.c2, std::vector<Cover>(kappa, eta)));
      const std::string tag = std::string(twisted ? "eta1" : "eta0") + "^" + std::to_string(kappa);
      v.check(inv.na.empty(), tag + ": unexpected non-abelian class");
      if (kappa == 0) {
        v.check(inv.ab.empty(), tag + ": expected no classes");
        continue;
      }
      if (inv.ab.size() != 1) {
        v.check(false, tag + ": expected one abelian class");
        continue;
      }
      const AbInvariant& c = inv.ab[0];
      v.check(c.mult == (twisted ? kappa - 1 : kappa), tag + ": mult");
      if (twisted)
        v.check(c.supp.rows() == 1 && c.supp.row(0) == eta1_class, tag + ": supp is not Span(eta1)");
      else
        v.check(c.supp.rows() == 0, tag + ": supp is not zero");
    }
  return v;
}

Verdict h2_dimensions() {
  Verdict v;
  const auto& in = testkit::intro();
  struct Case {
    GroupPtr g;
    std::size_t expected;
  };
  for (const auto& [g, expected] : std::vector<Case>{{in.c2, 1}, {in.v4, 3}, {testkit::over_c3().c3, 0}}) {
    auto s = CohomSpace::make(EndoField::make(GModule::trivial(g, 2, 1)));
    std::size_t brute = oracle::h2_dim_fp(*g, 2, 1, [](Elem) { return std::vector<int>{1}; });
    v.check(s->dim() == expected, g->name() + ": library dimension");
    v.check(brute == expected, g->name() + ": oracle dimension");
  }
  return v;
}

Verdict decision_oracles() {
  Verdict v;
  const auto& in = testkit::intro();
  const auto& c3 = testkit::over_c3();
  std::size_t pairs = 0;
  for (const auto& [base, pool] : std::vector<std::pair<GroupPtr, std::vector<Cover>>>{
           {in.c2, {in.eta0, in.eta1}}, {c3.c3, {c3.split, c3.nonsplit}}}) {
    std::vector<Cover> covers;
    std::vector<CoverInvariants> inv;
    for (const auto& fam : multisets(pool, 3)) {
      covers.push_back(fprod(base, fam));
      inv.push_back(invariants(covers.back()));
    }
    for (std::size_t i = 0; i < covers.size(); ++i)
      for (std::size_t j = 0; j < covers.size(); ++j) {
        const bool same_order = covers[i].source()->order() == covers[j].source()->order();
        const bool iso_search = same_order && find_isomorphism_over(covers[i], covers[j]).has_value();
        v.check(isomorphic_fundamental(inv[i], inv[j]) == iso_search, "isomorphic_fundamental disagrees");
        v.check(dominates(inv[j], inv[i]) == oracle::exists_epi_over(covers[i], covers[j]),
                "dominates disagrees");
        ++pairs;
      }
  }
  v.detail = v.ok ? std::to_string(pairs) + " pairs" : v.detail;
  return v;
}

// Values v_i in H²(G, A) → y2 → x2 → the functionals reading coordinate i
// must be sent back to v_i by S.
bool x2_reproduces(const CohomSpacePtr& s, const std::vector<CohomClass>& values) {
  FiberProduct fp = y2(s, values);
  DualPairS pair = x2(fp.structure_map(), s->endo(), s);
  if (pair.dual.dim() != values.size()) return false;
  const auto& endo = s->endo();
  const auto& km = pair.kernel;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Extension e = extension_from_cocycle(values[i].representative());
    Matrix phi(s->field(), endo->f_dim(), km.module->dim());
    for (std::size_t j = 0; j < km.module->dim(); ++j) {
      Vector unit(km.module->dim(), 0);
      unit[j] = 1;
      Vector af = endo->to_f(e.kernel.vector_of(fp.coordinates(km.element(unit))[i]));
      for (std::size_t t = 0; t < af.size(); ++t) phi.at(t, j) = af[t];
    }
    auto coords = pair.dual.coordinates(phi);
    if (!coords || pair.apply(*coords) != values[i].coords) return false;
  }
  return true;
}

Verdict duality_round_trips() {
  Verdict v;
  std::mt19937_64 rng(testkit::test_seed(7));
  const auto& in = testkit::intro();
  std::vector<std::pair<std::string, EndoFieldPtr>> simples{
      {"F2/C2", EndoField::make(GModule::trivial(in.c2, 2, 1))},
      {"F3sign/C2", EndoField::make(testkit::scalar_module(in.c2, 3, {-1}))},
      {"F4/C3", EndoField::make(testkit::f4_module(testkit::over_c3().c3))}};
  for (const auto& [name, a] : simples) {
    auto space = CohomSpace::make(a);
    for (std::size_t n = 1; n <= 3; ++n) {
      const std::string tag = name + " n=" + std::to_string(n);
      ModuleHom theta = decompose_isotypic(power(a->module(), n), a);
      v.check(theta.is_injective() && theta.is_surjective(), tag + ": Theta");
      Matrix lambda = lambda_matrix(a, n);
      v.check(lambda.rows() == n && lambda.cols() == n && rank(lambda) == n, tag + ": Lambda");
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<CohomClass> values;
        for (std::size_t i = 0; i < n; ++i) {
          Vector c(space->dim());
          for (auto& x : c) x = static_cast<FieldElem>(rng() % space->field()->order());
          values.push_back({space, c});
        }
        v.check(x2_reproduces(space, values), tag + ": x2 o y2");
        // The kernel of the built cover is A^n, so Θ is bijective there too.
        FiberProduct fp = y2(space, values);
        KernelModule km = kernel_module(fp.structure_map(), fp.structure_map().kernel());
        ModuleHom t = decompose_isotypic(km.module, a);
        v.check(t.is_injective() && t.is_surjective(), tag + ": Theta on the kernel");
      }
    }
  }
  return v;
}

Verdict square_laws() {
  Verdict v;
  std::mt19937_64 rng(testkit::test_seed(2024));
  std::size_t instances = 0, fast_checked = 0;
  for (int t = 0; t < 150; ++t) {
    auto [left, right] = testkit::random_square_pair(rng);
    CommSquare outer = compose_horizontal(left, right);
    const bool l = is_cartesian(left), r = is_cartesian(right), o = is_cartesian(outer);
    v.check(l == oracle::cartesian(left) && r == oracle::cartesian(right) && o == oracle::cartesian(outer),
            "cartesian predicate");
    if (l + r + o >= 2) v.check(l && r && o, "two-of-three");
    const bool ls = is_semi_cartesian(left), rs = is_semi_cartesian(right), os = is_semi_cartesian(outer);
    if (os) v.check(rs, "outer semi without right semi");
    if (ls && rs) v.check(os, "semi composition");
    ++instances;
  }
  for (int t = 0; t < 150; ++t) {
    CommSquare sq = testkit::random_square(rng);
    ++instances;
    if (!oracle::cartesian(sq)) continue;
    const bool a_ind = oracle::indecomposable(sq.bottom);
    v.check(a_ind == oracle::indecomposable(sq.top), "cartesian indecomposable");
    if (auto quick = compact_by_indecomposable_bottom(sq)) {
      v.check(*quick == oracle::compact_square(sq), "fast path vs brute force");
      ++fast_checked;
    }
  }
  v.check(instances >= kMinSquareInstances, "too few instances");
  v.check(fast_checked > 0, "fast path never applied");
  if (v.ok) v.detail = std::to_string(instances) + " instances, " + std::to_string(fast_checked) + " fast-path";
  return v;
}

Verdict normal_decomposition() {
  Verdict v;
  const auto& in = testkit::intro();
  Cover sgn = testkit::cover_by_gens(testkit::s3(), in.c2, {in.c2->generators()[0], 0});
  std::vector<FiberProduct> products;
  for (const auto& fam : multisets({in.eta0, in.eta1, sgn}, 3))
    if (!fam.empty()) products.push_back(fiber_product(in.c2, fam));
  products.push_back(fiber_product(trivial_group(), {trivial_cover(testkit::a5())}));
  std::size_t checked = 0;
  for (const auto& fp : products)
    for (const auto& l : normal_subgroups_inside(fp.carrier(), fp.structure_map().kernel())) {
      KernelNormalDecomposition d = kernel_normal_decomposition(fp, l);
      v.check(d.reconstruction.elements() == l.elements(), "reconstruction differs");
      ++checked;
    }
  if (v.ok) v.detail = std::to_string(checked) + " normal subgroups";
  return v;
}

const char* kOrder64 = R"(group C2x6
gen a = (1 2)
gen b = (3 4)
gen c = (5 6)
gen d = (7 8)
gen e = (9 10)
gen f = (11 12)

group C4x3
gen a = (1 2 3 4)
gen b = (5 6 7 8)
gen c = (9 10 11 12)

group D8xD8
gen r = (1 2 3 4)
gen s = (1 3)
gen u = (5 6 7 8)
gen v = (5 7)

module F2on64 : C2x6 p=2 dim=1
a -> [1]
b -> [1]
c -> [1]
d -> [1]
e -> [1]
f -> [1]

module F2onD8xD8 : D8xD8 p=2 dim=1
r -> [1]
s -> [1]
u -> [1]
v -> [1]
)";

Verdict order_64_commands() {
  Verdict v;
  cli::Workspace ws;
  for (const char* f : {"/intro.grp", "/modules.grp", "/extra.grp"}) ws.parse_file(std::string(FIXTURE_DIR) + f);
  ws.parse_text(kOrder64, "<order-64>");
  const std::string p5 = "fprod(eta1,eta1,eta1,eta1,eta1)", q5 = "fprod(eta0,eta1,eta0,eta1,eta1)";
  const std::vector<std::vector<std::string>> runs{
      {"fprod", "eta1", "eta1", "eta1", "eta1", "eta1"},
      {"series", "C2x6->1"},
      {"series", "D8xD8->1"},
      {"fundament", "C4x3->1"},
      {"invariants", "C2x6->1"},
      {"invariants", p5},
      {"decompose", q5},
      {"dominates", p5, q5},
      {"isomorphic", p5, q5},
      {"lift", "id(C2)", p5, q5},
      {"h2", "C2x6", "F2on64"},
      {"h2", "D8xD8", "F2onD8xD8"},
      {"cocycle", "eta1", "F2triv"},
      {"check-square", "eta1", "id(C4)", "eta1", "id(C2)"},
  };
  double worst = 0;
  std::string worst_name;
  for (const auto& run : runs) {
    std::ostringstream out;
    auto start = std::chrono::steady_clock::now();
    cli::run_command(ws, run[0], std::vector<std::string>(run.begin() + 1, run.end()), {}, out);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > worst) worst = secs, worst_name = run[0] + " " + run[1];
    v.check(secs < kCommandBudget, run[0] + " " + run[1] + " took too long");
  }
  if (v.ok) {
    std::ostringstream d;
    d.precision(3);
    d << runs.size() << " commands, slowest " << worst_name << " at " << worst << " s";
    v.detail = d.str();
  }
  return v;
}

}  // namespace

int main() {
  criterion(1, "fprod(eta1,eta1) ~ fprod(eta0,eta1) over C2", order8_pair, kPairBudget);
  criterion(2, "fundament series of C4->1 and S3->1", series_example, kSeriesBudget);
  criterion(3, "multiplicities and supports of eta^(kappa), kappa = 0..3", multiple_of_one);
  criterion(4, "H2 dimensions against the cochain oracle", h2_dimensions, kH2Budget);
  criterion(5, "isomorphic/dominates agree with explicit search", decision_oracles, kOracleBudget);
  criterion(6, "duality round trips for A, A^2, A^3", duality_round_trips);
  criterion(7, "randomized square laws", square_laws);
  criterion(8, "normal subgroups of kernels rebuild from axis pieces", normal_decomposition);
  criterion(9, "single commands on groups of order <= 64", order_64_commands, kCommandBudget);
  return failures == 0 ? 0 : 1;
}
