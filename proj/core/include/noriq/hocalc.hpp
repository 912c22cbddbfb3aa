// Zigzag morphisms between pairs, cogroup operations on suspensions, and related isomorphisms.
#pragma once

#include <optional>

#include "noriq/pairtop.hpp"

namespace noriq {

enum class Direction { Forward, Backward };

// How a backward arrow earns its certificate.
enum class Certify {
  Check,    // verified as a cohomology equivalence on construction
  Trusted,  // equivalence by construction (smash or wedge of certified arrows)
  None,     // left uncertified; zz_induced rejects it
};

struct Arrow {
  PairMap map;
  Direction dir = Direction::Forward;
  bool certified = false;
};

// Alternating forward maps and inverted cohomology equivalences, read left to right.
class Zigzag {
 public:
  Zigzag() = default;
  explicit Zigzag(SPair source);
  static Zigzag from_map(const PairMap& f);

  const SPair& source() const { return source_; }
  const SPair& target() const { return target_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t length() const { return arrows_.size(); }

  Zigzag& forward(const PairMap& f);
  // s runs from the new end back to the current end.
  Zigzag& backward(const PairMap& s, Certify how = Certify::Check);
  Zigzag& append(const Zigzag& z);
  // Composes neighbouring arrows that point the same way.
  Zigzag compressed() const;

 private:
  SPair source_, target_;
  std::vector<Arrow> arrows_;
};

// H^n(target) -> H^n(source).
RatMatrix zz_induced(const Zigzag& z, int n);

// pair is identified with base smashed with the interval pair by a vertex bijection.
struct SuspensionWitness {
  SPair pair;
  SPair base;
  PairMap iso;  // pair -> smash(base, interval_pair())

  static SuspensionWitness of(const SPair& base);
  static SuspensionWitness with_iso(const SPair& base, const PairMap& iso);
};

PairMap inverse_bijection(const PairMap& f);

// f smashed with the identity of q on the right; non-monotone arrows go through subdivision.
Zigzag smash_right(const Zigzag& z, const SPair& q);
Zigzag smash_right(const PairMap& f, const SPair& q);

// Pair -> wedge(pair, pair).
Zigzag pinch(const SuspensionWitness& w);
// Componentwise zigzag between wedges of two copies.
Zigzag wedge_zigzags(const Zigzag& f, const Zigzag& g);
Zigzag cogroup_sum(const Zigzag& f, const Zigzag& g, const SuspensionWitness& w);
// Self-map of the suspension that reverses the interval coordinate.
Zigzag inversion(const SuspensionWitness& w);
Zigzag negate(const Zigzag& f, const SuspensionWitness& w);
// Needs target_hint when every coefficient is zero or the list is empty.
Zigzag int_combination(const std::vector<std::pair<long, Zigzag>>& terms, const SuspensionWitness& w,
                       const std::optional<SPair>& target_hint = std::nullopt);

// Columns run over a ascending, then basis pairs (i, k) at position i*dim H^b(q) + k.
RatMatrix kunneth_iso(const SPair& p, const SPair& q, int n);

// Roof (X,Y) -> W <- Sigma(Y,Z) whose induced map turns suspension_iso into the connecting map.
Zigzag puppe_connector(const Triple& t);

struct Lattice {
  SPair pair;
  int degree = 0;
  std::size_t rank = 0;
  // Integral cycles over the degree's cochain support, one per column.
  IntMatrix basis;
};
Lattice homology_lattice(const SPair& p, int n);
// Matrix of f_* on homology in the lattice basis; f must be an endomorphism of L.pair.
IntMatrix pushforward_on_lattice(const Zigzag& f, const Lattice& L);

struct WedgeRealization {
  SuspensionWitness witness;
  Zigzag map;
  RatMatrix phi;  // Q^d -> H^1 of the suspension
};
// Realizes alpha as the endomorphism sum of alpha_ij times the suspended e_ij.
WedgeRealization realize_matrix_on_wedge(const IntMatrix& alpha, std::size_t d);
// The map x_i -> x_j, every other point to x0, on points_pair(d).
PairMap elementary_point_map(std::size_t d, std::size_t i, std::size_t j);

}  // namespace noriq
