// Kernels as images, the commutator suspension, and quotient/sub presentations of modules.
#pragma once

#include "noriq/rewrites.hpp"

namespace noriq {

// H^degree(pair)(twist)
struct ElementaryObject {
  SPair pair;
  int degree = 0;
  int twist = 0;
};

struct KernelImagePresentation {
  Zigzag map;       // (X,Y) -> (X1,Y1)
  SPair presented;  // (X1,Y1)
  int degree = 0;
  Subspace image;                // image of map^*
  Subspace kernel_intersection;  // intersection of the kernels of the f_alpha^*
  bool exact() const { return image == kernel_intersection; }
};

// Every map runs from its own pair into target. With an empty family the target must be given.
KernelImagePresentation kernel_image_presentation(const std::vector<Zigzag>& maps, int n,
                                                  const std::optional<SPair>& target = std::nullopt);

struct CommutatorSuspension {
  ElementaryObject plus;      // (X_+,Y_+) = Sigma(points) smash p, in degree n+1
  SuspensionWitness witness;  // cogroup structure on X_+
  Lattice lattice;            // integral homology of p in degree n
  RatMatrix pairing;          // cohomology basis against lattice basis
  RatMatrix phi;              // lattice coordinates -> H^1 of the suspended points
  RatMatrix beta;             // H^{n+1}(X_+) -> V (x) M, index i * dim M + k
  std::vector<IntMatrix> lower;      // f_* on V in the lattice basis
  std::vector<RatMatrix> upper;      // f^* on M
  std::vector<Zigzag> plus_maps;     // f_+
  std::vector<RatMatrix> plus_induced;
};

// kron(f_*, I) - kron(I, f^*)
RatMatrix commutator_matrix(const RatMatrix& lower, const RatMatrix& upper);
// Sends V (x) M to row-major End(M), where v_i (x) m_k is x -> <x, v_i> m_k.
RatMatrix endomorphism_embedding(const RatMatrix& pairing);

CommutatorSuspension commutator_suspension(const SPair& p, int n, const std::vector<Zigzag>& endos, int twist = 0);
// beta f_+^* = (kron(f_*, I) - kron(I, f^*)) beta for endo j.
bool commutator_identity(const CommutatorSuspension& cs, std::size_t j);

struct Certificate {
  std::string label;
  bool ok = false;
};

struct QuotientWitness {
  ElementaryObject source;
  bool synthetic = false;  // carrier chosen at the matrix level
  ElementaryObject carrier;  // (X1,Y1) before taking copies
  std::size_t copies = 0;
  ModuleOverCommutant target;
  RatMatrix onto_commutant;  // H(carrier) -> commutant coordinates of the normalized quiver
  RatMatrix map;             // H(source) -> target
  std::size_t rewrite_steps = 0;
  std::vector<Certificate> certificates;
  bool surjective = false;
  bool equivariant = false;
  bool verified() const;
};

struct SubWitness {
  QuotientWitness dual;  // quotient witness of the dual module over the opposite quiver
  RatMatrix map;         // target -> dual of H(dual.source)
  ModuleOverCommutant target;
  bool injective = false;
  bool equivariant = false;
  bool carrier_constructed = false;  // the dual pair itself is never built
  bool verified() const { return injective && equivariant && dual.verified(); }
};

QuotientWitness quotient_presentation(const QuiverRep& rep, const ModuleOverCommutant& m);
SubWitness sub_presentation(const QuiverRep& rep, const ModuleOverCommutant& m);

// Reversed arrows with transposed matrices; its commutant is the opposite algebra.
QuiverRep opposite_quiver(const QuiverRep& rep);
// Dual module over commutant(opposite_quiver(rep)).
ModuleOverCommutant dual_module(const QuiverRep& rep, const ModuleOverCommutant& m);

}  // namespace noriq
