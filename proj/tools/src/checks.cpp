#include "noriq_cli/checks.hpp"

namespace noriq::cli {

bool check_cogroup_additivity(const SuspensionWitness& w, const Zigzag& f, const Zigzag& g) {
  Zigzag s = cogroup_sum(f, g, w);
  for (int n = 0; n <= top_degree(w.pair); ++n)
    if (zz_induced(s, n) != zz_induced(f, n) + zz_induced(g, n)) return false;
  return true;
}

bool check_suspension(const SPair& p) {
  SPair s = suspension(p);
  for (int n = 0; n <= top_degree(p); ++n) {
    if (cohomology_dim(s, n + 1) != cohomology_dim(p, n)) return false;
    RatMatrix iso = suspension_iso(p, n);
    if (!iso.empty() && !is_invertible(iso)) return false;
  }
  return cohomology_dim(s, 0) == 0;
}

bool check_realization(const IntMatrix& alpha) {
  WedgeRealization r = realize_matrix_on_wedge(alpha, alpha.rows());
  return r.phi * alpha.to_rational() == zz_induced(r.map, 1) * r.phi;
}

bool check_puppe(const Triple& t) {
  Zigzag c = puppe_connector(t);
  int top = std::max(top_degree(t.pair_xy()), top_degree(t.pair_yz()) + 1);
  for (int n = 1; n <= top; ++n)
    if (zz_induced(c, n) * suspension_iso(t.pair_yz(), n - 1) != connecting_map(t, n)) return false;
  return true;
}

bool check_long_exact(const Triple& t) { return long_exact_triple(t).exact; }

bool check_kernel_image(const gen::MapFamily& fam) {
  return kernel_image_presentation(fam.maps, fam.degree, fam.target).exact();
}

bool check_commutator(const SPair& p, int n, const std::vector<Zigzag>& endos) {
  CommutatorSuspension cs = commutator_suspension(p, n, endos);
  for (std::size_t j = 0; j < endos.size(); ++j)
    if (!commutator_identity(cs, j)) return false;
  return true;
}

bool check_commutant(const QuiverRep& rep) {
  Commutant c = commutant(rep);
  if (!c.contains(c.identity())) return false;
  for (const auto& x : c.basis())
    for (const auto& y : c.basis())
      if (!c.contains(multiply(x, y))) return false;
  for (std::size_t f = 0; f < rep.morphisms().size(); ++f) {
    const QMorphism& m = rep.morphisms()[f];
    std::size_t p = c.block(m.source), q = c.block(m.target);
    for (const auto& x : c.basis())
      if (x[q] * rep.rho(f) != rep.rho(f) * x[p]) return false;
  }
  return true;
}

bool check_rewrites(const QuiverRep& rep) {
  std::size_t dim = commutant(rep).dim();
  for (const auto& step : normalize(rep)) {
    if (!step.verified() || step.commutant_dim_original != dim || step.commutant_dim_reduced != dim) return false;
  }
  return true;
}

bool check_presentations(const QuiverRep& rep) {
  ModuleOverCommutant m = regular_module(commutant(rep));
  return quotient_presentation(rep, m).verified() && sub_presentation(rep, m).verified();
}

bool check_map(const PairMap& f) {
  const SPair& p = f.source();
  for (int n = 0; n <= std::max(top_degree(p), top_degree(f.target())); ++n) {
    if (induced_map(PairMap::identity(p), n) != RatMatrix::identity(cohomology_dim(p, n))) return false;
    if (induced_map(compose(f, PairMap::identity(p)), n) != induced_map(f, n)) return false;
  }
  return is_cohomology_equivalence(mapping_cylinder(f).retraction);
}

}  // namespace noriq::cli
