#include <gtest/gtest.h>

#include "builders.hpp"
#include "fundament/error.hpp"
#include "fundament/fiber_product.hpp"
#include "fundament/lattice.hpp"
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

CommSquare fprod_square(const Cover& a, const Cover& b) {
  return split_square(fiber_product(a.target(), {a, b}), 1);
}

}  // namespace

TEST(MakeSquare, Examples) {
  const auto& in = testkit::intro();
  Cover id = identity_cover(in.c4);
  EXPECT_NO_THROW(make_square(id, id, in.eta1, in.eta1));
  EXPECT_NO_THROW(fprod_square(in.eta0, in.eta1));
  EXPECT_EQ(kind_of([&] { make_square(in.eta1, id, in.eta0, in.eta0); }), ErrorKind::SourceTargetMismatch);
}

TEST(MakeSquare, RejectsNonCommutingSquare) {
  auto c3 = testkit::cyc(3);
  auto c6 = testkit::cyc(6);
  Cover up = testkit::cover_by_gens(c6, c3, {c3->generators()[0]});
  Cover down = testkit::cover_by_gens(c6, c3, {c3->inv(c3->generators()[0])});
  EXPECT_NO_THROW(make_square(up, down, trivial_cover(c3), trivial_cover(c3)));
  EXPECT_EQ(kind_of([&] { make_square(up, down, identity_cover(c3), identity_cover(c3)); }),
            ErrorKind::NotCommutative);
}

TEST(Cartesian, Examples) {
  const auto& in = testkit::intro();
  EXPECT_TRUE(is_cartesian(fprod_square(in.eta0, in.eta1)));
  EXPECT_TRUE(is_cartesian(fprod_square(in.eta1, in.eta1)));

  Cover id2 = identity_cover(in.c2);
  CommSquare collapse = make_square(in.eta1, in.eta1, id2, id2);
  EXPECT_FALSE(is_cartesian(collapse));
  EXPECT_TRUE(is_semi_cartesian(collapse));

  // η and β isomorphisms: kernels trivial.
  auto c4 = in.c4;
  Cover inv = testkit::cover_by_gens(c4, c4, {c4->inv(c4->generators()[0])});
  Cover id4 = identity_cover(c4);
  CommSquare isos = make_square(id4, inv, identity_cover(c4), inv);
  EXPECT_TRUE(is_cartesian(isos));
  // With η, β isomorphisms the square is cartesian only if α is one too.
  CommSquare onto_c2 = make_square(id4, inv, compose(in.eta1, inv), in.eta1);
  EXPECT_FALSE(is_cartesian(onto_c2));
  EXPECT_FALSE(is_semi_cartesian(onto_c2));
}

TEST(SemiCartesian, Examples) {
  const auto& in = testkit::intro();
  Cover id4 = identity_cover(in.c4);
  Cover to1 = trivial_cover(in.c2);
  CommSquare bad = make_square(id4, in.eta1, to1, trivial_cover(in.c4));
  EXPECT_FALSE(is_semi_cartesian(bad));
  EXPECT_FALSE(is_cartesian(bad));

  // α an isomorphism.
  Cover id2 = identity_cover(in.c2);
  EXPECT_TRUE(is_semi_cartesian(make_square(in.eta1, in.eta1, id2, id2)));
}

TEST(Compact, Examples) {
  const auto& in = testkit::intro();
  EXPECT_FALSE(is_compact_cartesian(fprod_square(in.eta1, in.eta1)));
  EXPECT_TRUE(is_compact_cartesian(fprod_square(in.eta0, in.eta1)));
  Cover id4 = identity_cover(in.c4);
  EXPECT_TRUE(is_compact_cartesian(make_square(id4, in.eta1, identity_cover(in.c2), in.eta1)));
  Cover id2 = identity_cover(in.c2);
  EXPECT_EQ(kind_of([&] { is_compact_cartesian(make_square(in.eta1, in.eta1, id2, id2)); }),
            ErrorKind::NotCartesian);
}

TEST(Compose, Examples) {
  const auto& in = testkit::intro();
  CommSquare sq = fprod_square(in.eta0, in.eta1);
  CommSquare unit = make_square(identity_cover(sq.h()), sq.left, identity_cover(sq.b()), sq.left);
  CommSquare composed = compose_horizontal(unit, sq);
  EXPECT_EQ(composed.top, sq.top);
  EXPECT_EQ(composed.left, sq.left);
  EXPECT_EQ(composed.bottom, sq.bottom);
  EXPECT_EQ(composed.right, sq.right);

  EXPECT_EQ(kind_of([&] { compose_horizontal(sq, sq); }), ErrorKind::Mismatch);
}

TEST(Compose, FiberProductSquaresStackToCartesian) {
  // fprod(a,b,c) = fprod(a,b) ×_{H_b} fprod(b,c), and fprod(a,b) = H_a ×_G H_b.
  const auto& in = testkit::intro();
  FiberProduct fp3 = fiber_product(in.c2, {in.eta1, in.eta0, in.eta1});
  Restriction ab = restrict(fp3, {0, 1});
  Restriction bc = restrict(fp3, {1, 2});
  CommSquare left = make_square(ab.projection, bc.projection, bc.product.projections()[0],
                                ab.product.projections()[1]);
  CommSquare right =
      make_square(ab.product.projections()[0], ab.product.projections()[1], in.eta0, in.eta1);
  EXPECT_TRUE(is_cartesian(left));
  EXPECT_TRUE(is_cartesian(right));
  CommSquare outer = compose_horizontal(left, right);
  EXPECT_TRUE(is_cartesian(outer));
  EXPECT_TRUE(is_semi_cartesian(outer));
}

TEST(Criteria, AllFormulationsAgreeOnQuotientSquares) {
  for (const auto& h : testkit::small_groups()) {
    if (h->order() > 12) continue;
    auto normals = normal_subgroups(h);
    for (const auto& n1 : normals)
      for (const auto& n2 : normals)
        for (const auto& n : normals) {
          if (!join(n1, n2).is_subset_of(n)) continue;
          CommSquare sq = testkit::quotient_square(h, n1, n2, n);
          const bool cart = is_cartesian(sq);
          const bool semi = is_semi_cartesian(sq);
          EXPECT_EQ(cart, oracle::cartesian(sq));
          EXPECT_EQ(cart, criteria::cartesian_by_kernel_product(sq));
          EXPECT_EQ(cart, criteria::cartesian_by_elements(sq));
          EXPECT_EQ(semi, oracle::semi_cartesian(sq));
          EXPECT_EQ(semi, criteria::semi_by_kernel_product(sq));
          EXPECT_EQ(semi, criteria::semi_by_top_image(sq));
          EXPECT_EQ(semi, criteria::semi_by_elements(sq));
          if (cart) {
            EXPECT_TRUE(semi);
            const bool compact = is_compact_cartesian(sq);
            EXPECT_EQ(compact, oracle::compact_square(sq));
            EXPECT_EQ(compact, is_compact_cartesian_exhaustive(sq));
          }
        }
  }
}
