// Invariant checks run by selftest; each returns true when the property holds exactly.
#pragma once

#include "noriq_cli/generators.hpp"

namespace noriq::cli {

// zz_induced(f + g) = zz_induced(f) + zz_induced(g) in every degree up to the top one.
bool check_cogroup_additivity(const SuspensionWitness& w, const Zigzag& f, const Zigzag& g);
// dim H^{n+1}(suspension) = dim H^n and suspension_iso is invertible, every n.
bool check_suspension(const SPair& p);
// phi alpha = zz_induced(f, 1) phi for the realized map f.
bool check_realization(const IntMatrix& alpha);
// zz_induced(puppe_connector, n) suspension_iso(n - 1) = connecting_map(n), every n.
bool check_puppe(const Triple& t);
// Every degree of the long exact sequence is exact.
bool check_long_exact(const Triple& t);
bool check_kernel_image(const gen::MapFamily& fam);
bool check_commutator(const SPair& p, int n, const std::vector<Zigzag>& endos);
// Identity, closure under products, and containment of every basis family.
bool check_commutant(const QuiverRep& rep);
// Every normalize step verifies and the commutant dimension is preserved along the chain.
bool check_rewrites(const QuiverRep& rep);
// Quotient and sub presentations of the regular module both verify.
bool check_presentations(const QuiverRep& rep);
// induced_map of identity and of the mapping cylinder retraction.
bool check_map(const PairMap& f);

}  // namespace noriq::cli
