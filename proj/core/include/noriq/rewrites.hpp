// Quiver-equivalence rewrites: twist and degree elimination by cloning, and reduction to one object.
#pragma once

#include <map>

#include "noriq/noriquiver.hpp"

namespace noriq {

// The objects and morphisms added on behalf of one replaced object.
struct ObjectClone {
  std::string bad;
  std::vector<std::string> objects;
  std::vector<std::string> morphisms;
};

struct SquareCheck {
  std::string label;
  bool commutes = false;
};

struct RewriteResult {
  std::string step;  // "clone_twist", "clone_degree", "reduce"
  QuiverRep original;
  QuiverRep enlarged;
  QuiverRep reduced;
  // lambda(q'): rho(q) -> rho(q') for every clone object q'.
  std::map<std::string, RatMatrix> lambda;
  std::vector<ObjectClone> clones;
  std::vector<SquareCheck> squares;
  bool lambdas_invertible = false;
  bool equivalent = false;
  std::size_t commutant_dim_original = 0;
  std::size_t commutant_dim_reduced = 0;
  // commutant(original) coordinates -> commutant(reduced) coordinates
  RatMatrix transport;

  bool identity() const { return clones.empty(); }
  bool verified() const;
};

// Replaces the objects of minimal twist by clones one twist higher.
RewriteResult clone_twist(const QuiverRep& rep);
// Requires a single twist; replaces the objects of minimal degree by suspension clones.
RewriteResult clone_degree(const QuiverRep& rep);
// Requires a single degree and twist; folds every object into one wedge or direct sum.
RewriteResult reduce_to_single_object(const QuiverRep& rep);
// clone_twist until one twist, clone_degree until one degree, then reduce. Identity steps are omitted.
std::vector<RewriteResult> normalize(const QuiverRep& rep);

}  // namespace noriq
