// Finite ordered simplicial pairs, their constructions, and relative rational cohomology.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "noriq/exactlin.hpp"

namespace noriq {

struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strictly increasing vertex indices into the owning complex.
using Simplex = std::vector<int>;

namespace detail {
struct ComplexData;
struct PairData;
class CochainEngine;
}  // namespace detail

// Vertices are totally ordered by their position in vertices().
class OrderedComplex {
 public:
  OrderedComplex();

  // Closes the facets under faces; every listed vertex becomes a 0-simplex.
  static OrderedComplex from_facets(std::vector<std::string> vertices,
                                    const std::vector<std::vector<std::string>>& facets);
  static OrderedComplex from_index_facets(std::vector<std::string> vertices,
                                          const std::vector<Simplex>& facets);

  const std::vector<std::string>& vertices() const;
  std::size_t num_vertices() const;
  // Sorted by (dimension, lexicographic).
  const std::vector<Simplex>& simplices() const;
  std::size_t size() const;
  int dimension() const;
  long vertex_index(const std::string& label) const;
  long simplex_index(const Simplex& s) const;
  const std::vector<std::size_t>& simplices_of_dim(int k) const;
  std::vector<std::string> labels(const Simplex& s) const;

  // Subcomplex spanned by the masked simplices, vertex order inherited.
  OrderedComplex restrict_to(const std::vector<bool>& mask) const;
  // Mask of the simplices whose labels form a simplex of `sub`.
  std::vector<bool> mask_of(const OrderedComplex& sub) const;

  bool operator==(const OrderedComplex& o) const;
  bool operator!=(const OrderedComplex& o) const { return !(*this == o); }

 private:
  explicit OrderedComplex(std::shared_ptr<const detail::ComplexData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::ComplexData> d_;
  friend class SPair;
};

// Complex with a nonempty subcomplex; relative cochains live on simplices outside the sub.
class SPair {
 public:
  SPair();
  SPair(OrderedComplex total, std::vector<bool> sub_mask);
  static SPair from_labels(const OrderedComplex& total,
                           const std::vector<std::vector<std::string>>& sub_facets);

  const OrderedComplex& total() const;
  OrderedComplex sub() const;
  const std::vector<bool>& sub_mask() const;
  bool in_sub(std::size_t simplex) const;
  std::size_t relative_size() const;
  const std::string& fingerprint() const;
  bool operator==(const SPair& o) const;
  bool operator!=(const SPair& o) const { return !(*this == o); }

  const detail::CochainEngine& engine() const;

 private:
  std::shared_ptr<detail::PairData> d_;
};

// Simplicial map of pairs; may collapse simplices, must carry sub into sub.
class PairMap {
 public:
  PairMap() = default;
  PairMap(SPair source, SPair target, std::vector<int> vertex_map);
  static PairMap from_labels(const SPair& source, const SPair& target,
                             const std::map<std::string, std::string>& vertex_map);
  static PairMap identity(const SPair& p);
  // Sends everything to the first vertex of the target's sub.
  static PairMap constant(const SPair& source, const SPair& target);

  const SPair& source() const { return source_; }
  const SPair& target() const { return target_; }
  const std::vector<int>& vertex_map() const { return map_; }
  // Weakly order preserving on every simplex; such maps form products with the staircase.
  bool order_compatible() const;
  bool is_identity() const;
  bool injective() const;

 private:
  SPair source_, target_;
  std::vector<int> map_;
};

// g after f.
PairMap compose(const PairMap& g, const PairMap& f);

// Z in Y in X; Z nonempty.
class Triple {
 public:
  Triple(OrderedComplex outer, std::vector<bool> middle, std::vector<bool> inner);
  static Triple from_labels(const OrderedComplex& outer,
                            const std::vector<std::vector<std::string>>& middle_facets,
                            const std::vector<std::vector<std::string>>& inner_facets);

  const OrderedComplex& outer() const { return outer_; }
  const std::vector<bool>& middle() const { return middle_; }
  const std::vector<bool>& inner() const { return inner_; }
  SPair pair_xy() const;
  SPair pair_xz() const;
  SPair pair_yz() const;

 private:
  OrderedComplex outer_;
  std::vector<bool> middle_, inner_;
};

struct CohomologyBasis {
  SPair pair;
  int degree = 0;
  std::size_t dim = 0;
  // Total-complex indices of the relative simplices carrying degree-n cochains.
  std::vector<std::size_t> cochain_support;
  // Columns are cocycle representatives over cochain_support.
  RatMatrix basis;
};

CohomologyBasis relative_cohomology(const SPair& p, int n);
std::size_t cohomology_dim(const SPair& p, int n);
// Coordinates of cocycle columns (over cochain_support) in the stored basis.
RatMatrix cohomology_coordinates(const SPair& p, int n, const RatMatrix& cocycles);
// Largest degree in which any relative cochain exists.
int top_degree(const SPair& p);

// Matrix of f^*: H^n(target) -> H^n(source).
RatMatrix induced_map(const PairMap& f, int n);
// Isomorphism on H^n for every n up to the larger top degree.
bool is_cohomology_equivalence(const PairMap& f);

// Connecting map H^{n-1}(Y,Z) -> H^n(X,Y).
RatMatrix connecting_map(const Triple& t, int n);

struct LongExactReport {
  bool exact = true;
  std::string first_failure;
  int max_degree = 0;
  // Index n holds dim H^n of (Y,Z), (X,Z), (X,Y).
  std::vector<std::size_t> dims_yz, dims_xz, dims_xy;
  std::vector<RatMatrix> restrict_maps, inclusion_maps, connecting_maps;
  long euler_sum = 0;
};
LongExactReport long_exact_triple(const Triple& t);

// ---- constructions

SPair interval_pair();                 // (edge, both endpoints)
SPair point_pair();                    // (point, point)
SPair points_pair(std::size_t d);      // (d+1 points x0..xd, {x0})
SPair ray_pair();                      // (edge, {0}), contractible

struct WedgeResult {
  SPair pair;
  std::vector<PairMap> inclusions;
};
WedgeResult wedge(const std::vector<SPair>& ps);
// Componentwise map between the wedges of the sources and of the targets.
PairMap wedge_maps(const std::vector<PairMap>& fs);
// Identity on every summand into a single target.
PairMap fold_map(const SPair& target, std::size_t copies);

std::string product_label(const std::string& a, const std::string& b);
SPair smash(const SPair& p, const SPair& q);
// Product of order-compatible maps.
PairMap smash_maps(const PairMap& f, const PairMap& g);
SPair cone(const SPair& p);
SPair suspension(const SPair& p);

// H^n(p) -> H^{n+1}(suspension(p)).
RatMatrix suspension_iso(const SPair& p, int n);
// The triple (X x {0} u Y x I) in (X x {0,1} u Y x I) in X x I.
Triple cone_suspension_triple(const SPair& p);
// x -> (x,1) into the middle pair of cone_suspension_triple(p).
PairMap h_replacement(const SPair& p);

struct CylinderResult {
  PairMap inclusion;         // source -> cylinder
  PairMap retraction;        // cylinder -> target
  PairMap target_inclusion;  // target -> cylinder
};
CylinderResult mapping_cylinder(const PairMap& f);

struct PushoutResult {
  SPair pair;
  PairMap from_first;
  PairMap from_second;
};
PushoutResult glue_pushout(const PairMap& f1, const PairMap& f2);

struct HomotopySquare {
  SPair pair;
  PairMap f_tilde;  // from s.target()
  PairMap s_tilde;  // from f.target()
  bool s_tilde_equivalence = false;
};
HomotopySquare homotopy_pushout(const PairMap& f, const PairMap& s);

// Barycentric subdivision with vertices ordered by (dimension, index).
SPair barycentric_subdivision(const SPair& p);
// Each face goes to its largest vertex.
PairMap last_vertex_map(const SPair& p);
// Induced map of subdivisions; always order compatible.
PairMap subdivide_map(const PairMap& f);

}  // namespace noriq
