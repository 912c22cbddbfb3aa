#include "noriq/noriquiver.hpp"

#include <algorithm>
#include <set>

namespace noriq {

QObject QObject::geometric_object(std::string id, SPair pair, int degree, int twist) {
  QObject o;
  o.id = std::move(id);
  o.degree = degree;
  o.twist = twist;
  o.pair = std::move(pair);
  return o;
}

QObject QObject::abstract_object(std::string id, std::size_t dim, int degree, int twist) {
  QObject o;
  o.id = std::move(id);
  o.degree = degree;
  o.twist = twist;
  o.abstract_dim = dim;
  return o;
}

char kind_letter(MorphismKind k) {
  switch (k) {
    case MorphismKind::A: return 'a';
    case MorphismKind::B: return 'b';
    case MorphismKind::C: return 'c';
  }
  return '?';
}

QMorphism QMorphism::with_matrix(std::string id, MorphismKind kind, std::string source, std::string target,
                                 RatMatrix m) {
  QMorphism f;
  f.id = std::move(id);
  f.kind = kind;
  f.source = std::move(source);
  f.target = std::move(target);
  f.matrix = std::move(m);
  return f;
}

QMorphism QMorphism::with_zigzag(std::string id, std::string source, std::string target, Zigzag z) {
  QMorphism f;
  f.id = std::move(id);
  f.kind = MorphismKind::A;
  f.source = std::move(source);
  f.target = std::move(target);
  f.zigzag = std::move(z);
  return f;
}

QMorphism QMorphism::with_triple(std::string id, std::string source, std::string target, Triple t) {
  QMorphism f;
  f.id = std::move(id);
  f.kind = MorphismKind::B;
  f.source = std::move(source);
  f.target = std::move(target);
  f.triple = std::move(t);
  return f;
}

QMorphism QMorphism::tate(std::string id, std::string source, std::string target) {
  QMorphism f;
  f.id = std::move(id);
  f.kind = MorphismKind::C;
  f.source = std::move(source);
  f.target = std::move(target);
  return f;
}

// ---------------------------------------------------------------- QuiverRep

namespace {

RatMatrix geometric_rho(const QMorphism& f, const QObject& p, const QObject& q) {
  const std::string where = "morphism '" + f.id + "': ";
  if (!p.geometric() || !q.geometric()) throw QuiverError(where + "abstract endpoints need a matrix payload");
  switch (f.kind) {
    case MorphismKind::A:
      if (!f.zigzag) throw QuiverError(where + "kind a needs a zigzag");
      if (f.zigzag->source() != *q.pair || f.zigzag->target() != *p.pair)
        throw QuiverError(where + "zigzag must run from the target pair to the source pair");
      return zz_induced(*f.zigzag, q.degree);
    case MorphismKind::B:
      if (!f.triple) throw QuiverError(where + "kind b needs a triple");
      if (f.triple->pair_yz() != *p.pair || f.triple->pair_xy() != *q.pair)
        throw QuiverError(where + "triple does not match the endpoint pairs");
      return connecting_map(*f.triple, q.degree);
    case MorphismKind::C:
      if (*p.pair != smash(*q.pair, interval_pair()))
        throw QuiverError(where + "kind c source must be the target smashed with the interval pair");
      {
        RatMatrix k = kunneth_iso(*q.pair, interval_pair(), p.degree);
        return k.rows() ? inverse(k) : k;
      }
  }
  throw QuiverError(where + "unknown kind");
}

}  // namespace

QuiverRep::QuiverRep(std::vector<QObject> objects, std::vector<QMorphism> morphisms)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
  std::set<std::string> ids;
  for (const QObject& o : objects_) {
    if (!ids.insert(o.id).second) throw QuiverError("duplicate object id '" + o.id + "'");
    if (o.geometric() && o.degree < 0) throw QuiverError("object '" + o.id + "': negative degree");
    dims_.push_back(o.geometric() ? cohomology_dim(*o.pair, o.degree) : o.abstract_dim);
  }
  std::set<std::string> mids;
  for (const QMorphism& f : morphisms_) {
    if (!mids.insert(f.id).second) throw QuiverError("duplicate morphism id '" + f.id + "'");
    const std::size_t pi = object_index(f.source), qi = object_index(f.target);
    const QObject& p = objects_[pi];
    const QObject& q = objects_[qi];
    const std::string where = "morphism '" + f.id + "': ";
    switch (f.kind) {
      case MorphismKind::A:
        if (p.degree != q.degree || p.twist != q.twist) throw QuiverError(where + "kind a keeps degree and twist");
        break;
      case MorphismKind::B:
        if (p.degree + 1 != q.degree || p.twist != q.twist)
          throw QuiverError(where + "kind b raises the degree by one at equal twist");
        break;
      case MorphismKind::C:
        if (p.degree != q.degree + 1 || p.twist != q.twist + 1)
          throw QuiverError(where + "kind c runs from (n+1, i+1) to (n, i)");
        break;
    }
    RatMatrix m = f.matrix ? *f.matrix : geometric_rho(f, p, q);
    if (m.rows() != dims_[qi] || m.cols() != dims_[pi])
      throw QuiverError(where + "matrix shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " does not match " + std::to_string(dims_[qi]) + "x" + std::to_string(dims_[pi]));
    rho_.push_back(std::move(m));
  }
}

std::size_t QuiverRep::object_index(const std::string& id) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].id == id) return i;
  throw QuiverError("unknown object '" + id + "'");
}

bool QuiverRep::has_object(const std::string& id) const {
  return std::any_of(objects_.begin(), objects_.end(), [&](const QObject& o) { return o.id == id; });
}

std::size_t QuiverRep::total_dim() const {
  std::size_t s = 0;
  for (std::size_t d : dims_) s += d;
  return s;
}

const RatMatrix& QuiverRep::rho(const std::string& morphism_id) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].id == morphism_id) return rho_[i];
  throw QuiverError("unknown morphism '" + morphism_id + "'");
}

std::vector<int> QuiverRep::distinct_twists() const {
  std::set<int> s;
  for (const auto& o : objects_) s.insert(o.twist);
  return {s.begin(), s.end()};
}

std::vector<int> QuiverRep::distinct_degrees() const {
  std::set<int> s;
  for (const auto& o : objects_) s.insert(o.degree);
  return {s.begin(), s.end()};
}

QuiverRep QuiverRep::subquiver(const std::vector<std::string>& object_ids) const {
  std::set<std::string> keep(object_ids.begin(), object_ids.end());
  QuiverRep sub;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!keep.count(objects_[i].id)) continue;
    sub.objects_.push_back(objects_[i]);
    sub.dims_.push_back(dims_[i]);
  }
  if (sub.objects_.size() != keep.size()) throw QuiverError("subquiver: unknown object id");
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    if (!keep.count(morphisms_[i].source) || !keep.count(morphisms_[i].target)) continue;
    sub.morphisms_.push_back(morphisms_[i]);
    sub.rho_.push_back(rho_[i]);
  }
  return sub;
}

bool QuiverRep::is_subquiver_of(const QuiverRep& other) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!other.has_object(objects_[i].id)) return false;
    const std::size_t j = other.object_index(objects_[i].id);
    const QObject& o = other.objects_[j];
    if (o.degree != objects_[i].degree || o.twist != objects_[i].twist || other.dims_[j] != dims_[i]) return false;
  }
  for (std::size_t i = 0; i < morphisms_.size(); ++i) {
    auto it = std::find_if(other.morphisms_.begin(), other.morphisms_.end(),
                           [&](const QMorphism& f) { return f.id == morphisms_[i].id; });
    if (it == other.morphisms_.end()) return false;
    if (it->source != morphisms_[i].source || it->target != morphisms_[i].target) return false;
    if (other.rho_[static_cast<std::size_t>(it - other.morphisms_.begin())] != rho_[i]) return false;
  }
  return true;
}

RatMatrix rho(const QMorphism& m, const QuiverRep& rep) { return rep.rho(m.id); }

// ---------------------------------------------------------------- Commutant

Commutant::Commutant(std::vector<std::string> object_ids, std::vector<std::size_t> dims,
                     std::vector<BlockFamily> basis)
    : ids_(std::move(object_ids)), dims_(std::move(dims)), basis_(std::move(basis)) {
  std::size_t ambient = 0;
  for (std::size_t d : dims_) ambient += d * d;
  RatMatrix cols(ambient, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    std::vector<Rational> v = flatten(basis_[j]);
    for (std::size_t i = 0; i < ambient; ++i) cols(i, j) = v[i];
  }
  span_ = Subspace(ambient, cols);
  if (span_.dim() != basis_.size()) throw QuiverError("commutant basis is not independent");
  if (span_.basis() == cols) {
    to_basis_ = RatMatrix::identity(basis_.size());
  } else {
    RatMatrix toc(span_.dim(), basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      std::vector<Rational> c = span_.coordinates(cols.col(j));
      for (std::size_t i = 0; i < c.size(); ++i) toc(i, j) = c[i];
    }
    to_basis_ = inverse(toc);
  }
}

std::size_t Commutant::block(const std::string& object_id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (ids_[i] == object_id) return i;
  throw QuiverError("commutant: unknown object '" + object_id + "'");
}

std::vector<Rational> Commutant::flatten(const BlockFamily& x) const {
  if (x.size() != dims_.size()) throw QuiverError("family has the wrong number of blocks");
  std::vector<Rational> v;
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b].rows() != dims_[b] || x[b].cols() != dims_[b]) throw QuiverError("family block has the wrong shape");
    v.insert(v.end(), x[b].entries().begin(), x[b].entries().end());
  }
  return v;
}

bool Commutant::contains(const BlockFamily& x) const { return span_.contains(flatten(x)); }

std::vector<Rational> Commutant::coordinates(const BlockFamily& x) const {
  std::vector<Rational> v = flatten(x);
  if (!span_.contains(v)) throw QuiverError("family does not lie in the commutant");
  return to_basis_.apply(span_.coordinates(v));
}

BlockFamily Commutant::element(const std::vector<Rational>& coords) const {
  BlockFamily x;
  for (std::size_t d : dims_) x.push_back(RatMatrix(d, d));
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    for (std::size_t b = 0; b < x.size(); ++b) x[b] = x[b] + basis_[k][b].scaled(coords[k]);
  }
  return x;
}

BlockFamily Commutant::identity() const {
  BlockFamily x;
  for (std::size_t d : dims_) x.push_back(RatMatrix::identity(d));
  return x;
}

std::vector<Rational> Commutant::identity_coordinates() const { return coordinates(identity()); }

std::vector<Rational> Commutant::product_coordinates(std::size_t a, std::size_t b) const {
  return coordinates(multiply(basis_[a], basis_[b]));
}

std::vector<std::vector<std::vector<Rational>>> Commutant::structure_constants() const {
  std::vector<std::vector<std::vector<Rational>>> t(dim(), std::vector<std::vector<Rational>>(dim()));
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) t[a][b] = product_coordinates(a, b);
  return t;
}

RatMatrix Commutant::regular_action(std::size_t a) const {
  RatMatrix m(dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b) {
    std::vector<Rational> c = product_coordinates(a, b);
    for (std::size_t i = 0; i < c.size(); ++i) m(i, b) = c[i];
  }
  return m;
}

BlockFamily multiply(const BlockFamily& x, const BlockFamily& y) {
  if (x.size() != y.size()) throw QuiverError("families of different shape");
  BlockFamily z;
  for (std::size_t b = 0; b < x.size(); ++b) z.push_back(x[b] * y[b]);
  return z;
}

Commutant commutant(const QuiverRep& rep) {
  const auto& dims = rep.dims();
  std::vector<std::size_t> start;
  std::size_t D = 0;
  for (std::size_t d : dims) {
    start.push_back(D);
    D += d;
  }
  std::vector<std::pair<RatMatrix, RatMatrix>> constraints;
  for (std::size_t k = 0; k < rep.morphisms().size(); ++k) {
    const RatMatrix& r = rep.rho(k);
    if (r.empty()) continue;
    const std::size_t p = rep.object_index(rep.morphisms()[k].source);
    const std::size_t q = rep.object_index(rep.morphisms()[k].target);
    RatMatrix F(D, D);
    F.set_block(start[q], start[p], r);
    constraints.emplace_back(F, F);
  }
  std::vector<std::string> ids;
  for (const auto& o : rep.objects()) ids.push_back(o.id);
  return Commutant(std::move(ids), dims, solve_linear_system(dims, constraints));
}

RestrictionReport restriction(const Commutant& c_plus, const QuiverRep& sub) {
  Commutant c_sub = commutant(sub);
  std::vector<std::size_t> blocks;
  for (const auto& o : sub.objects()) blocks.push_back(c_plus.block(o.id));
  RestrictionReport r;
  r.map = RatMatrix(c_sub.dim(), c_plus.dim());
  for (std::size_t j = 0; j < c_plus.dim(); ++j) {
    BlockFamily x;
    for (std::size_t b : blocks) x.push_back(c_plus.basis()[j][b]);
    std::vector<Rational> c = c_sub.coordinates(x);
    for (std::size_t i = 0; i < c.size(); ++i) r.map(i, j) = c[i];
  }
  const std::size_t rk = rank(r.map);
  r.injective = rk == c_plus.dim();
  r.surjective = rk == c_sub.dim();
  return r;
}

bool equivalent(const QuiverRep& q0, const QuiverRep& q1, const QuiverRep& q_plus) {
  if (!q0.is_subquiver_of(q_plus) || !q1.is_subquiver_of(q_plus))
    throw QuiverError("equivalent: not subquivers of the enlarged quiver");
  Commutant c = commutant(q_plus);
  return restriction(c, q0).iso() && restriction(c, q1).iso();
}

// ---------------------------------------------------------------- modules

ModuleOverCommutant module_from_object(const Commutant& c, const std::string& object_id) {
  const std::size_t b = c.block(object_id);
  ModuleOverCommutant m;
  m.dim = c.dims()[b];
  for (const auto& x : c.basis()) m.action.push_back(x[b]);
  return m;
}

ModuleOverCommutant regular_module(const Commutant& c) {
  ModuleOverCommutant m;
  m.dim = c.dim();
  for (std::size_t a = 0; a < c.dim(); ++a) m.action.push_back(c.regular_action(a));
  return m;
}

RatMatrix act(const ModuleOverCommutant& m, const std::vector<Rational>& coords) {
  RatMatrix out(m.dim, m.dim);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) out = out + m.action[k].scaled(coords[k]);
  return out;
}

std::string module_violation(const ModuleOverCommutant& m, const Commutant& c) {
  if (m.action.size() != c.dim()) return "action count differs from the commutant dimension";
  for (const auto& a : m.action)
    if (a.rows() != m.dim || a.cols() != m.dim) return "action matrix has the wrong shape";
  if (act(m, c.identity_coordinates()) != RatMatrix::identity(m.dim)) return "identity does not act as identity";
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < c.dim(); ++b)
      if (m.action[a] * m.action[b] != act(m, c.product_coordinates(a, b)))
        return "action does not respect the product of basis elements " + std::to_string(a) + " and " +
               std::to_string(b);
  return "";
}

FreeCover free_cover(const ModuleOverCommutant& m, const Commutant& c) {
  if (std::string v = module_violation(m, c); !v.empty()) throw QuiverError("free_cover: " + v);
  const std::size_t e = c.dim();
  FreeCover fc;
  fc.copies = m.dim;
  fc.map = RatMatrix(m.dim, m.dim * e);
  // copy k sends basis element a to a . b_k
  for (std::size_t k = 0; k < m.dim; ++k)
    for (std::size_t a = 0; a < e; ++a)
      for (std::size_t i = 0; i < m.dim; ++i) fc.map(i, k * e + a) = m.action[a](i, k);
  fc.surjective = rank(fc.map) == m.dim;
  fc.equivariant = true;
  for (std::size_t a = 0; a < e && fc.equivariant; ++a) {
    RatMatrix left = kron(RatMatrix::identity(m.dim), c.regular_action(a));
    fc.equivariant = fc.map * left == m.action[a] * fc.map;
  }
  return fc;
}

}  // namespace noriq
