#include <gtest/gtest.h>

#include "support.hpp"

using namespace noriq;
using support::rat;

namespace {

SuspensionWitness circle() { return SuspensionWitness::of(points_pair(1)); }

QuiverRep circle_inversion() {
  SuspensionWitness w = circle();
  return QuiverRep({QObject::geometric_object("q", w.pair, 1)}, {QMorphism::with_zigzag("inv", "q", "q", inversion(w))});
}

QuiverRep nilpotent() {
  return QuiverRep({QObject::abstract_object("a", 2)},
                   {QMorphism::with_matrix("n", MorphismKind::A, "a", "a", rat({{0, 1}, {0, 0}}))});
}

ModuleOverCommutant zero_module(const Commutant& c) {
  return ModuleOverCommutant{0, std::vector<RatMatrix>(c.dim(), RatMatrix(0, 0))};
}

// The 1-dim module on which the nilpotent element acts by zero.
ModuleOverCommutant nilpotent_quotient(const Commutant& c) {
  ModuleOverCommutant m{1, {}};
  for (std::size_t k = 0; k < c.dim(); ++k) m.action.push_back(RatMatrix({{c.basis()[k][0](0, 0)}}));
  return m;
}

}  // namespace

TEST(KernelImage, Examples) {
  SPair c = interval_pair();
  KernelImagePresentation empty = kernel_image_presentation({}, 1, c);
  EXPECT_EQ(empty.image, Subspace::full(1));
  EXPECT_TRUE(empty.exact());
  KernelImagePresentation id = kernel_image_presentation({Zigzag(c)}, 1);
  EXPECT_EQ(id.image.dim(), 0u);
  EXPECT_TRUE(id.exact());
  KernelImagePresentation collapse = kernel_image_presentation({Zigzag::from_map(PairMap::constant(point_pair(), c))}, 1);
  EXPECT_EQ(collapse.image, Subspace::full(1));
  EXPECT_TRUE(collapse.exact());
}

TEST(KernelImage, RandomFamilies) {
  support::Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    gen::MapFamily fam = gen::random_map_family(rng);
    KernelImagePresentation k = kernel_image_presentation(fam.maps, fam.degree, fam.target);
    std::vector<Subspace> kernels;
    for (const auto& f : fam.maps) kernels.push_back(kernel_basis(zz_induced(f, fam.degree)));
    std::size_t dim = cohomology_dim(fam.target, fam.degree);
    EXPECT_EQ(image_basis(zz_induced(k.map, fam.degree)), intersect(kernels, dim));
    EXPECT_TRUE(k.exact());
  }
}

TEST(Commutator, MatrixDefinition) {
  RatMatrix p = rat({{0, 1}, {1, 0}});
  EXPECT_EQ(commutator_matrix(p, p), kron(p, RatMatrix::identity(2)) - kron(RatMatrix::identity(2), p));
  EXPECT_TRUE(commutator_matrix(RatMatrix::identity(2), RatMatrix::identity(2)).is_zero());
}

TEST(Commutator, IdentityEndo) {
  SuspensionWitness w = circle();
  CommutatorSuspension cs = commutator_suspension(w.pair, 1, {Zigzag(w.pair)});
  EXPECT_TRUE(commutator_identity(cs, 0));
  EXPECT_TRUE(cs.plus_induced[0].is_zero());
}

TEST(Commutator, CircleInversion) {
  SuspensionWitness w = circle();
  CommutatorSuspension cs = commutator_suspension(w.pair, 1, {inversion(w)});
  EXPECT_EQ(cs.lower[0], (IntMatrix{{-1}}));
  EXPECT_EQ(cs.upper[0], RatMatrix({{Rational(-1)}}));
  EXPECT_TRUE(commutator_identity(cs, 0));
  EXPECT_TRUE(cs.plus_induced[0].is_zero());
}

TEST(Commutator, WedgeSwap) {
  SuspensionWitness w = SuspensionWitness::of(points_pair(2));
  PairMap swap = smash_maps(PairMap(points_pair(2), points_pair(2), {0, 2, 1}), PairMap::identity(interval_pair()));
  CommutatorSuspension cs = commutator_suspension(w.pair, 1, {Zigzag::from_map(swap)});
  EXPECT_TRUE(commutator_identity(cs, 0));
  EXPECT_EQ(rank(cs.plus_induced[0]), 2u);
  RatMatrix p = rat({{0, 1}, {1, 0}});
  EXPECT_EQ(commutator_matrix(cs.lower[0].to_rational(), cs.upper[0]).rows(), 4u);
  EXPECT_EQ(rank(commutator_matrix(p, p)), 2u);
}

TEST(Commutator, RandomEndos) {
  support::Rng rng(62);
  for (int t = 0; t < 8; ++t) {
    SuspensionWitness w = SuspensionWitness::of(points_pair(1 + gen::below(rng, 2)));
    std::vector<Zigzag> endos{gen::random_endo_zigzag(rng, w, 1)};
    CommutatorSuspension cs = commutator_suspension(w.pair, 1, endos);
    EXPECT_TRUE(commutator_identity(cs, 0));
  }
}

TEST(Quotient, CircleRegularModule) {
  QuiverRep rep = circle_inversion();
  Commutant c = commutant(rep);
  QuotientWitness w = quotient_presentation(rep, regular_module(c));
  EXPECT_TRUE(w.verified());
  EXPECT_FALSE(w.synthetic);
  for (const auto& cert : w.certificates) EXPECT_TRUE(cert.ok) << cert.label;
  EXPECT_EQ(rank(w.map), c.dim());
}

TEST(Quotient, ZeroModule) {
  QuiverRep rep = nilpotent();
  QuotientWitness w = quotient_presentation(rep, zero_module(commutant(rep)));
  EXPECT_TRUE(w.verified());
  EXPECT_EQ(w.copies, 0u);
  EXPECT_EQ(w.map.rows(), 0u);
}

TEST(Quotient, NilpotentOneDimModule) {
  QuiverRep rep = nilpotent();
  Commutant c = commutant(rep);
  ModuleOverCommutant m = nilpotent_quotient(c);
  ASSERT_EQ(module_violation(m, c), "");
  QuotientWitness w = quotient_presentation(rep, m);
  EXPECT_TRUE(w.verified());
  EXPECT_EQ(w.map.rows(), 1u);
  EXPECT_EQ(rank(w.map), 1u);
}

TEST(Sub, Examples) {
  QuiverRep rep = circle_inversion();
  Commutant c = commutant(rep);
  SubWitness s = sub_presentation(rep, regular_module(c));
  EXPECT_TRUE(s.verified());
  EXPECT_EQ(rank(s.map), c.dim());
  EXPECT_FALSE(s.carrier_constructed);
  // The sub map is the transpose of the dual quotient map.
  EXPECT_EQ(s.map, s.dual.map.transpose());

  QuiverRep n = nilpotent();
  Commutant cn = commutant(n);
  SubWitness z = sub_presentation(n, zero_module(cn));
  EXPECT_TRUE(z.verified());
  SubWitness one = sub_presentation(n, nilpotent_quotient(cn));
  EXPECT_TRUE(one.verified());
  EXPECT_EQ(rank(one.map), 1u);
}

TEST(Sub, DualityRoundTrip) {
  support::Rng rng(63);
  for (int t = 0; t < 8; ++t) {
    QuiverRep rep = gen::random_abstract_quiver(rng, {3, 6, 4, 1, 1});
    Commutant c = commutant(rep);
    ModuleOverCommutant m = module_from_object(c, rep.objects()[0].id);
    QuotientWitness q = quotient_presentation(rep, m);
    SubWitness s = sub_presentation(rep, m);
    EXPECT_TRUE(q.verified());
    EXPECT_TRUE(s.verified());
    EXPECT_EQ(rank(s.map.transpose().transpose()), rank(s.map));
    EXPECT_EQ(rank(s.map), m.dim);
    QuiverRep opop = opposite_quiver(opposite_quiver(rep));
    EXPECT_EQ(commutant(opop).dim(), c.dim());
  }
}

TEST(Quotient, RandomQuivers) {
  support::Rng rng(64);
  for (int t = 0; t < 10; ++t) {
    QuiverRep rep = t % 3 == 2 ? gen::random_geometric_quiver(rng, {1, 2, false, false})
                               : gen::random_abstract_quiver(rng, {4, 8, 5, 2, 2});
    Commutant c = commutant(rep);
    ModuleOverCommutant m = regular_module(c);
    QuotientWitness w = quotient_presentation(rep, m);
    EXPECT_TRUE(w.verified());
    for (const auto& cert : w.certificates) EXPECT_TRUE(cert.ok) << cert.label;
  }
}
