// Seeded random inputs shared by selftest, the tests and the benchmarks.
#pragma once

#include <random>

#include "noriq/presentation.hpp"

namespace noriq::gen {

using Rng = std::mt19937_64;

// Uniform in [0, n); the modulo keeps results identical across standard libraries.
std::size_t below(Rng& rng, std::size_t n);
long between(Rng& rng, long lo, long hi);
bool coin(Rng& rng, std::size_t num = 1, std::size_t den = 2);

// Every vertex is a 0-simplex; facets have at most max_dim + 1 vertices.
OrderedComplex random_complex(Rng& rng, std::size_t vertices, std::size_t facets, int max_dim);
// A random nonempty subcomplex, given by facet labels.
std::vector<std::vector<std::string>> random_subcomplex(Rng& rng, const OrderedComplex& c);
SPair random_pair(Rng& rng, std::size_t max_vertices = 6, int max_dim = 2);
Triple random_triple(Rng& rng, std::size_t max_vertices = 6, int max_dim = 2);
// A base whose suspension has at most max_simplices simplices.
SPair random_suspension_base(Rng& rng, std::size_t max_simplices = 150);

// Bounded random search for a simplicial self-map; falls back to the identity.
PairMap random_endomorphism(Rng& rng, const SPair& p, int attempts = 64);
// x0 -> x0, every other point anywhere.
PairMap random_pointed_map(Rng& rng, std::size_t from, std::size_t to);
// Identity, inversion, constant, a suspended self-map of the base, or a cogroup sum of two smaller ones.
Zigzag random_endo_zigzag(Rng& rng, const SuspensionWitness& w, int depth = 1);

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
// Zero, identity, nilpotent, rank one or dense small entries.
RatMatrix random_structured_matrix(Rng& rng, std::size_t rows, std::size_t cols);

struct AbstractQuiverOptions {
  std::size_t max_objects = 4;
  std::size_t max_total_dim = 8;
  std::size_t max_morphisms = 5;
  int degrees = 1;  // degrees drawn from [0, degrees)
  int twists = 1;   // twists drawn from [0, twists)
};
QuiverRep random_abstract_quiver(Rng& rng, const AbstractQuiverOptions& opt);
// Objects are suspended point sets in degree 1 with suspended maps between them, plus optional
// tate clones (twist) and a triple-backed morphism (degree).
struct GeometricQuiverOptions {
  std::size_t max_objects = 2;
  std::size_t max_points = 2;
  bool twist = false;
  bool triple = false;
};
QuiverRep random_geometric_quiver(Rng& rng, const GeometricQuiverOptions& opt);

struct MapFamily {
  SPair target;
  int degree = 0;
  std::vector<Zigzag> maps;
};
MapFamily random_map_family(Rng& rng);

}  // namespace noriq::gen
