// Finite quiver representations with objects [pair, degree, twist] and their commutant algebras.
#pragma once

#include <optional>

#include "noriq/hocalc.hpp"

namespace noriq {

struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QObject {
  std::string id;
  int degree = 0;
  int twist = 0;
  std::optional<SPair> pair;  // geometric when set
  std::size_t abstract_dim = 0;

  bool geometric() const { return pair.has_value(); }
  static QObject geometric_object(std::string id, SPair pair, int degree, int twist = 0);
  static QObject abstract_object(std::string id, std::size_t dim, int degree = 0, int twist = 0);
};

enum class MorphismKind { A, B, C };
char kind_letter(MorphismKind k);

// rho runs from the source space to the target space. Geometric payloads are contravariant:
// a kind A zigzag goes from the target's pair to the source's pair.
struct QMorphism {
  std::string id;
  MorphismKind kind = MorphismKind::A;
  std::string source, target;
  std::optional<Zigzag> zigzag;   // kind A
  std::optional<Triple> triple;   // kind B: source (Y,Z), target (X,Y)
  std::optional<RatMatrix> matrix;  // explicit rho; takes precedence over geometry

  static QMorphism with_matrix(std::string id, MorphismKind kind, std::string source, std::string target,
                               RatMatrix m);
  static QMorphism with_zigzag(std::string id, std::string source, std::string target, Zigzag z);
  static QMorphism with_triple(std::string id, std::string source, std::string target, Triple t);
  // Kind C; the source pair must be the target pair smashed with the interval pair.
  static QMorphism tate(std::string id, std::string source, std::string target);
};

class QuiverRep {
 public:
  QuiverRep() = default;
  // Validates shapes and computes every rho eagerly.
  QuiverRep(std::vector<QObject> objects, std::vector<QMorphism> morphisms);

  const std::vector<QObject>& objects() const { return objects_; }
  const std::vector<QMorphism>& morphisms() const { return morphisms_; }
  std::size_t object_index(const std::string& id) const;
  bool has_object(const std::string& id) const;
  const QObject& object(const std::string& id) const { return objects_[object_index(id)]; }
  std::size_t dim(std::size_t object) const { return dims_[object]; }
  std::size_t dim(const std::string& id) const { return dims_[object_index(id)]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dim() const;
  const RatMatrix& rho(std::size_t morphism) const { return rho_[morphism]; }
  const RatMatrix& rho(const std::string& morphism_id) const;
  std::vector<int> distinct_twists() const;
  std::vector<int> distinct_degrees() const;

  // Objects with the given ids and every morphism between them.
  QuiverRep subquiver(const std::vector<std::string>& object_ids) const;
  bool is_subquiver_of(const QuiverRep& other) const;

 private:
  std::vector<QObject> objects_;
  std::vector<QMorphism> morphisms_;
  std::vector<std::size_t> dims_;
  std::vector<RatMatrix> rho_;
};

RatMatrix rho(const QMorphism& m, const QuiverRep& rep);

// Families (e_q) with e_q rho(f) = rho(f) e_p for every f: p -> q.
class Commutant {
 public:
  Commutant() = default;
  Commutant(std::vector<std::string> object_ids, std::vector<std::size_t> dims, std::vector<BlockFamily> basis);

  const std::vector<std::string>& object_ids() const { return ids_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<BlockFamily>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t block(const std::string& object_id) const;

  std::vector<Rational> flatten(const BlockFamily& x) const;
  bool contains(const BlockFamily& x) const;
  std::vector<Rational> coordinates(const BlockFamily& x) const;
  BlockFamily element(const std::vector<Rational>& coords) const;
  BlockFamily identity() const;
  std::vector<Rational> identity_coordinates() const;
  // Coordinates of basis[a] * basis[b].
  std::vector<Rational> product_coordinates(std::size_t a, std::size_t b) const;
  // table[a][b] = product_coordinates(a, b)
  std::vector<std::vector<std::vector<Rational>>> structure_constants() const;
  // Left multiplication by basis[a] in basis coordinates.
  RatMatrix regular_action(std::size_t a) const;

 private:
  std::vector<std::string> ids_;
  std::vector<std::size_t> dims_;
  std::vector<BlockFamily> basis_;
  Subspace span_;
  RatMatrix to_basis_;  // canonical span coordinates -> basis coordinates
};

BlockFamily multiply(const BlockFamily& x, const BlockFamily& y);
Commutant commutant(const QuiverRep& rep);

struct RestrictionReport {
  RatMatrix map;  // commutant(plus) coordinates -> commutant(sub) coordinates
  bool injective = false;
  bool surjective = false;
  bool iso() const { return injective && surjective; }
};
RestrictionReport restriction(const Commutant& c_plus, const QuiverRep& sub);
// Both restriction maps out of commutant(q_plus) are isomorphisms.
bool equivalent(const QuiverRep& q0, const QuiverRep& q1, const QuiverRep& q_plus);

struct ModuleOverCommutant {
  std::size_t dim = 0;
  std::vector<RatMatrix> action;  // one per commutant basis element
};
ModuleOverCommutant module_from_object(const Commutant& c, const std::string& object_id);
ModuleOverCommutant regular_module(const Commutant& c);
// Empty string when the module axioms hold, otherwise the first violation.
std::string module_violation(const ModuleOverCommutant& m, const Commutant& c);
RatMatrix act(const ModuleOverCommutant& m, const std::vector<Rational>& coords);

struct FreeCover {
  std::size_t copies = 0;
  RatMatrix map;  // dim m x (copies * dim E)
  bool surjective = false;
  bool equivariant = false;
};
FreeCover free_cover(const ModuleOverCommutant& m, const Commutant& c);

}  // namespace noriq
