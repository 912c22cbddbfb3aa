#include <gtest/gtest.h>

#include "support.hpp"

using namespace noriq;
using support::rat;

namespace {

Triple edge_triple() {
  return Triple::from_labels(OrderedComplex::from_facets({"0", "1"}, {{"0", "1"}}), {{"0"}, {"1"}}, {{"0"}});
}

void expect_step(const RewriteResult& r) {
  EXPECT_TRUE(r.verified()) << r.step;
  EXPECT_TRUE(r.equivalent) << r.step;
  EXPECT_TRUE(r.lambdas_invertible) << r.step;
  EXPECT_EQ(r.commutant_dim_original, r.commutant_dim_reduced) << r.step;
  for (const auto& s : r.squares) EXPECT_TRUE(s.commutes) << r.step << ": " << s.label;
  for (const auto& [id, lam] : r.lambda) EXPECT_TRUE(lam.empty() || is_invertible(lam)) << id;
}

std::size_t commutant_dim(const QuiverRep& rep) { return commutant(rep).dim(); }

}  // namespace

TEST(CloneTwist, SingleTwistIsIdentity) {
  QuiverRep rep({QObject::abstract_object("a", 2, 0, 3)}, {});
  RewriteResult r = clone_twist(rep);
  EXPECT_TRUE(r.identity());
  EXPECT_TRUE(r.equivalent);
}

TEST(CloneTwist, TateEdgeRemovesLowerTwist) {
  SuspensionWitness w = SuspensionWitness::of(points_pair(1));
  QuiverRep rep({QObject::geometric_object("q", w.pair, 1, 0),
                 QObject::geometric_object("p", smash(w.pair, interval_pair()), 2, 1)},
                {QMorphism::tate("k", "p", "q")});
  RewriteResult r = clone_twist(rep);
  expect_step(r);
  EXPECT_EQ(r.reduced.distinct_twists(), std::vector<int>{1});
  EXPECT_EQ(commutant_dim(r.reduced), commutant_dim(rep));
}

TEST(CloneTwist, EndomorphismSquare) {
  SuspensionWitness w = SuspensionWitness::of(points_pair(2));
  QuiverRep rep({QObject::geometric_object("q", w.pair, 1, 0),
                 QObject::geometric_object("p", smash(w.pair, interval_pair()), 2, 1)},
                {QMorphism::with_zigzag("inv", "q", "q", inversion(w)), QMorphism::tate("k", "p", "q")});
  RewriteResult r = clone_twist(rep);
  expect_step(r);
  ASSERT_EQ(r.clones.size(), 1u);
  EXPECT_FALSE(r.squares.empty());
}

TEST(CloneTwist, AbstractLayers) {
  QuiverRep rep({QObject::abstract_object("a", 2, 1, 1), QObject::abstract_object("b", 2, 0, 0)},
                {QMorphism::with_matrix("c", MorphismKind::C, "a", "b", rat({{1, 1}, {0, 1}})),
                 QMorphism::with_matrix("e", MorphismKind::A, "b", "b", rat({{0, 1}, {0, 0}}))});
  RewriteResult r = clone_twist(rep);
  expect_step(r);
  EXPECT_EQ(r.reduced.distinct_twists(), std::vector<int>{1});
}

TEST(CloneDegree, SingleDegreeIsIdentity) {
  QuiverRep rep({QObject::abstract_object("a", 1, 2)}, {});
  EXPECT_TRUE(clone_degree(rep).identity());
}

TEST(CloneDegree, EdgeTriple) {
  Triple t = edge_triple();
  QuiverRep rep({QObject::geometric_object("yz", t.pair_yz(), 0), QObject::geometric_object("xy", t.pair_xy(), 1)},
                {QMorphism::with_triple("d", "yz", "xy", t)});
  RewriteResult r = clone_degree(rep);
  expect_step(r);
  EXPECT_EQ(r.reduced.distinct_degrees(), std::vector<int>{1});
  EXPECT_EQ(commutant_dim(r.reduced), commutant_dim(rep));
}

TEST(CloneDegree, AbstractIsoPayloads) {
  QuiverRep rep({QObject::abstract_object("a", 2, 0), QObject::abstract_object("b", 2, 1)},
                {QMorphism::with_matrix("f", MorphismKind::B, "a", "b", RatMatrix::identity(2)),
                 QMorphism::with_matrix("g", MorphismKind::A, "a", "a", rat({{1, 2}, {0, 1}}))});
  RewriteResult r = clone_degree(rep);
  expect_step(r);
}

TEST(CloneDegree, BridgesDegreeGap) {
  QuiverRep rep({QObject::abstract_object("a", 2, 0), QObject::abstract_object("b", 1, 2)},
                {QMorphism::with_matrix("n", MorphismKind::A, "a", "a", rat({{0, 1}, {0, 0}}))});
  RewriteResult r = clone_degree(rep);
  expect_step(r);
  EXPECT_EQ(r.reduced.distinct_degrees(), std::vector<int>{2});

  SuspensionWitness w = SuspensionWitness::of(points_pair(2));
  QuiverRep geo({QObject::geometric_object("q", w.pair, 1), QObject::abstract_object("b", 1, 3)},
                {QMorphism::with_zigzag("inv", "q", "q", inversion(w))});
  RewriteResult g = clone_degree(geo);
  expect_step(g);
  EXPECT_EQ(g.reduced.distinct_degrees(), std::vector<int>{3});
  EXPECT_EQ(commutant_dim(g.reduced), commutant_dim(geo));
}

TEST(CloneTwist, BridgesTwistGap) {
  QuiverRep rep({QObject::abstract_object("a", 2, 0, 0), QObject::abstract_object("b", 2, 2, 2)},
                {QMorphism::with_matrix("n", MorphismKind::A, "a", "a", rat({{1, 1}, {0, 1}}))});
  RewriteResult r = clone_twist(rep);
  expect_step(r);
  EXPECT_EQ(r.reduced.distinct_twists(), std::vector<int>{2});
  EXPECT_EQ(r.transport.rows(), commutant_dim(r.reduced));
}

TEST(CloneDegree, RequiresSingleTwist) {
  QuiverRep rep({QObject::abstract_object("a", 1, 0, 0), QObject::abstract_object("b", 1, 1, 1)}, {});
  EXPECT_THROW(clone_degree(rep), std::exception);
}

TEST(Reduce, SingleObjectUnchanged) {
  QuiverRep rep({QObject::abstract_object("a", 2)}, {QMorphism::with_matrix("n", MorphismKind::A, "a", "a", rat({{0, 1}, {0, 0}}))});
  RewriteResult r = reduce_to_single_object(rep);
  EXPECT_TRUE(r.identity());
  EXPECT_EQ(r.reduced.objects().size(), 1u);
}

TEST(Reduce, TwoAbstractObjects) {
  QuiverRep rep({QObject::abstract_object("a", 1), QObject::abstract_object("b", 2)},
                {QMorphism::with_matrix("f", MorphismKind::A, "a", "b", rat({{1}, {2}}))});
  RewriteResult r = reduce_to_single_object(rep);
  expect_step(r);
  ASSERT_EQ(r.reduced.objects().size(), 1u);
  EXPECT_EQ(r.reduced.total_dim(), 3u);
  std::size_t idempotents = 0, composites = 0;
  for (std::size_t f = 0; f < r.reduced.morphisms().size(); ++f) {
    const RatMatrix& m = r.reduced.rho(f);
    if (m * m == m && !m.is_zero() && m != RatMatrix::identity(3)) ++idempotents;
    if (r.reduced.morphisms()[f].id.rfind("comp(", 0) == 0) ++composites;
  }
  EXPECT_EQ(idempotents, 2u);
  EXPECT_EQ(composites, 1u);
}

TEST(Reduce, GeometricWedge) {
  SuspensionWitness c = SuspensionWitness::of(points_pair(1));
  SuspensionWitness s3 = SuspensionWitness::of(points_pair(2));
  QuiverRep rep({QObject::geometric_object("c", c.pair, 1), QObject::geometric_object("s", s3.pair, 1)},
                {QMorphism::with_zigzag("inv", "s", "s", inversion(s3))});
  RewriteResult r = reduce_to_single_object(rep);
  expect_step(r);
  ASSERT_EQ(r.reduced.objects().size(), 1u);
  EXPECT_TRUE(r.reduced.objects()[0].geometric());
  EXPECT_EQ(r.reduced.total_dim(), 1u + 2u);
}

TEST(Normalize, SingleObjectEmptyChain) {
  QuiverRep rep({QObject::abstract_object("a", 2)}, {});
  EXPECT_TRUE(normalize(rep).empty());
}

TEST(Normalize, TripleWithTateEdge) {
  Triple t = edge_triple();
  SuspensionWitness w = SuspensionWitness::of(points_pair(1));
  // (Y,Z) at (0, 0), (X,Y) at (1, 0), and a degree-2 twist-1 clone of the circle mapping down by kind c.
  QuiverRep rep({QObject::geometric_object("yz", t.pair_yz(), 0), QObject::geometric_object("xy", t.pair_xy(), 1),
                 QObject::geometric_object("tc", smash(t.pair_xy(), interval_pair()), 2, 1)},
                {QMorphism::with_triple("d", "yz", "xy", t), QMorphism::tate("k", "tc", "xy")});
  std::vector<RewriteResult> chain = normalize(rep);
  std::size_t twist_span = 1, degree_span = 2;
  EXPECT_LE(chain.size(), twist_span + degree_span + 1);
  for (const auto& r : chain) expect_step(r);
  ASSERT_FALSE(chain.empty());
  EXPECT_EQ(chain.back().reduced.objects().size(), 1u);
  EXPECT_EQ(commutant_dim(chain.back().reduced), commutant_dim(rep));
  (void)w;
}

TEST(Normalize, RandomAbstractMixed) {
  support::Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    QuiverRep rep = gen::random_abstract_quiver(rng, {4, 8, 5, 3, 2});
    std::vector<RewriteResult> chain = normalize(rep);
    std::size_t before_twists = rep.distinct_twists().size(), before_degrees = rep.distinct_degrees().size();
    for (const auto& r : chain) {
      expect_step(r);
      if (r.step == "clone_twist") EXPECT_LT(r.reduced.distinct_twists().size(), before_twists);
      if (r.step == "clone_degree") EXPECT_LT(r.reduced.distinct_degrees().size(), before_degrees);
      before_twists = r.reduced.distinct_twists().size();
      before_degrees = r.reduced.distinct_degrees().size();
    }
    const QuiverRep& last = chain.empty() ? rep : chain.back().reduced;
    EXPECT_EQ(last.objects().size(), 1u);
    EXPECT_EQ(commutant_dim(last), commutant_dim(rep));
  }
}

TEST(Normalize, RandomGeometric) {
  support::Rng rng(52);
  for (int t = 0; t < 6; ++t) {
    QuiverRep rep = gen::random_geometric_quiver(rng, {2, 2, t % 2 == 0, t % 3 == 0});
    for (const auto& r : normalize(rep)) expect_step(r);
  }
}

TEST(Normalize, TransportIsAlgebraIso) {
  support::Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    QuiverRep rep = gen::random_abstract_quiver(rng, {3, 6, 4, 2, 2});
    for (const auto& r : normalize(rep)) {
      Commutant a = commutant(r.original), b = commutant(r.reduced);
      ASSERT_EQ(r.transport.rows(), b.dim());
      ASSERT_EQ(r.transport.cols(), a.dim());
      EXPECT_TRUE(a.dim() == 0 || is_invertible(r.transport));
      EXPECT_EQ(r.transport.apply(a.identity_coordinates()), b.identity_coordinates());
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          BlockFamily prod = multiply(b.element(r.transport.col(i)), b.element(r.transport.col(j)));
          EXPECT_EQ(r.transport.apply(a.product_coordinates(i, j)), b.coordinates(prod));
        }
    }
  }
}
