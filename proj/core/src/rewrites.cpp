#include "noriq/rewrites.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace noriq {

bool RewriteResult::verified() const {
  if (!lambdas_invertible || !equivalent) return false;
  if (commutant_dim_original != commutant_dim_reduced) return false;
  return std::all_of(squares.begin(), squares.end(), [](const SquareCheck& s) { return s.commutes; });
}

namespace {

RatMatrix inverse0(const RatMatrix& m) { return m.rows() == 0 ? m : inverse(m); }

bool invertible0(const RatMatrix& m) { return m.rows() == m.cols() && (m.rows() == 0 || is_invertible(m)); }

// Accumulates Q+ on top of Q and records what each added arrow has to satisfy.
class Enlargement {
 public:
  Enlargement(const QuiverRep& rep, std::string step) : rep_(rep) {
    res_.step = std::move(step);
    res_.original = rep;
    objects_ = rep.objects();
    morphisms_ = rep.morphisms();
    for (const auto& o : objects_) taken_.insert(o.id);
    for (const auto& f : morphisms_) taken_.insert(f.id);
  }

  std::string fresh(const std::string& base) {
    std::string id = base;
    while (taken_.count(id)) id += "'";
    taken_.insert(id);
    return id;
  }

  const QObject& add_object(QObject o, ObjectClone& clone) {
    clone.objects.push_back(o.id);
    objects_.push_back(std::move(o));
    return objects_.back();
  }

  void add_morphism(QMorphism f, ObjectClone& clone) {
    clone.morphisms.push_back(f.id);
    morphisms_.push_back(std::move(f));
  }
  void add_morphism(QMorphism f) { morphisms_.push_back(std::move(f)); }

  void set_lambda(const std::string& id, RatMatrix m) { lambda_[id] = std::move(m); }
  const RatMatrix& lambda(const std::string& id) const { return lambda_.at(id); }
  bool has_lambda(const std::string& id) const { return lambda_.count(id) > 0; }

  // rho(g) lambda(g.source) = lambda(g.target) rho(f), with f empty meaning the identity.
  void expect_square(std::string label, std::string g, std::string f = {}) {
    checks_.push_back({std::move(label), [this, g, f](const QuiverRep& plus) {
                         const QMorphism& m = find(plus, g);
                         RatMatrix lhs = plus.rho(g) * lambda_of(plus, m.source);
                         RatMatrix rhs = lambda_of(plus, m.target);
                         if (!f.empty()) rhs = rhs * rep_.rho(f);
                         return lhs == rhs;
                       }});
  }
  void expect(std::string label, std::function<bool(const QuiverRep&)> check) {
    checks_.push_back({std::move(label), std::move(check)});
  }

  RewriteResult finish(std::vector<ObjectClone> clones, const std::set<std::string>& removed) {
    res_.clones = std::move(clones);
    res_.enlarged = QuiverRep(objects_, morphisms_);
    std::vector<std::string> keep;
    for (const auto& o : objects_)
      if (!removed.count(o.id)) keep.push_back(o.id);
    res_.reduced = res_.enlarged.subquiver(keep);
    res_.lambdas_invertible = true;
    for (const auto& [id, m] : lambda_) {
      if (rep_.has_object(id)) continue;
      res_.lambda[id] = m;
      res_.lambdas_invertible = res_.lambdas_invertible && invertible0(m);
    }
    for (const auto& [label, check] : checks_) res_.squares.push_back({label, check(res_.enlarged)});
    Commutant c = commutant(res_.enlarged);
    RestrictionReport r0 = restriction(c, res_.original);
    RestrictionReport r1 = restriction(c, res_.reduced);
    res_.equivalent = r0.iso() && r1.iso();
    res_.commutant_dim_original = r0.map.rows();
    res_.commutant_dim_reduced = r1.map.rows();
    if (r0.iso() && r1.iso()) res_.transport = r1.map * inverse0(r0.map);
    return std::move(res_);
  }

 private:
  static const QMorphism& find(const QuiverRep& q, const std::string& id) {
    for (const auto& m : q.morphisms())
      if (m.id == id) return m;
    throw QuiverError("unknown morphism '" + id + "'");
  }
  RatMatrix lambda_of(const QuiverRep& plus, const std::string& object) const {
    if (rep_.has_object(object)) return RatMatrix::identity(plus.dim(object));
    return lambda_.at(object);
  }

  const QuiverRep& rep_;
  RewriteResult res_;
  std::vector<QObject> objects_;
  std::vector<QMorphism> morphisms_;
  std::set<std::string> taken_;
  std::map<std::string, RatMatrix> lambda_;
  std::vector<std::pair<std::string, std::function<bool(const QuiverRep&)>>> checks_;
};

RewriteResult unchanged(const QuiverRep& rep, std::string step) {
  return Enlargement(rep, std::move(step)).finish({}, {});
}

bool geometric_payload(const QMorphism& f, const QObject& p, const QObject& q) {
  return !f.matrix && p.geometric() && q.geometric();
}

// The clone of f between clone objects a and b, realized at the matrix level.
QMorphism matrix_clone(const Enlargement& e, std::string id, MorphismKind kind, const std::string& a,
                       const std::string& b, const RatMatrix& rho_f) {
  return QMorphism::with_matrix(std::move(id), kind, a, b, e.lambda(b) * rho_f * inverse0(e.lambda(a)));
}

}  // namespace

// ---------------------------------------------------------------- twist

namespace {

// One twist step: the minimal layer moves up by exactly one twist.
RewriteResult clone_twist_once(const QuiverRep& rep) {
  const std::vector<int> twists = rep.distinct_twists();
  const int low = twists.front();
  const SPair I = interval_pair();

  Enlargement e(rep, "clone_twist");
  std::set<std::string> bad;
  std::map<std::string, std::string> clone_of;
  std::vector<ObjectClone> clones;

  // Step 1: q <- Tq along a kind c morphism.
  for (const QObject& q : rep.objects()) {
    if (q.twist != low) continue;
    bad.insert(q.id);
    ObjectClone c{q.id, {}, {}};
    const std::string tid = e.fresh("T(" + q.id + ")");
    const std::string kid = e.fresh("kappa(" + q.id + ")");
    if (q.geometric()) {
      e.add_object(QObject::geometric_object(tid, smash(*q.pair, I), q.degree + 1, q.twist + 1), c);
      e.add_morphism(QMorphism::tate(kid, tid, q.id), c);
      e.set_lambda(tid, kunneth_iso(*q.pair, I, q.degree + 1));
    } else {
      e.add_object(QObject::abstract_object(tid, q.abstract_dim, q.degree + 1, q.twist + 1), c);
      e.add_morphism(QMorphism::with_matrix(kid, MorphismKind::C, tid, q.id, RatMatrix::identity(q.abstract_dim)), c);
      e.set_lambda(tid, RatMatrix::identity(q.abstract_dim));
    }
    e.expect_square("L(" + q.id + "): " + kid, kid);
    clone_of[q.id] = tid;
    clones.push_back(std::move(c));
  }
  auto clone_index = [&](const std::string& id) {
    for (std::size_t i = 0; i < clones.size(); ++i)
      if (clones[i].bad == id) return i;
    return clones.size();
  };

  for (std::size_t k = 0; k < rep.morphisms().size(); ++k) {
    const QMorphism& f = rep.morphisms()[k];
    const bool sb = bad.count(f.source) > 0, tb = bad.count(f.target) > 0;
    if (!sb && !tb) continue;
    const QObject& p = rep.object(f.source);
    const QObject& q = rep.object(f.target);
    if (sb && tb) {
      // Step 2: Tf between the clones.
      const std::string gid = e.fresh("T(" + f.id + ")");
      const std::string& tp = clone_of[p.id];
      const std::string& tq = clone_of[q.id];
      ObjectClone& owner = clones[clone_index(p.id)];
      if (!geometric_payload(f, p, q)) {
        e.add_morphism(matrix_clone(e, gid, f.kind, tp, tq, rep.rho(k)));
      } else if (f.kind == MorphismKind::A) {
        e.add_morphism(QMorphism::with_zigzag(gid, tp, tq, smash_right(*f.zigzag, I)));
      } else {
        // The smashed triple has middle pair (Y x I u X x dI, Z x I u X x dI), an excision of T(Y,Z).
        const Triple& t = *f.triple;
        SPair sxy = smash(t.pair_xy(), I), sxz = smash(t.pair_xz(), I);
        Triple tt(sxy.total(), sxy.sub_mask(), sxz.sub_mask());
        SPair excised = tt.pair_yz();
        const QObject& tpo = e.add_object(
            QObject::geometric_object(e.fresh("T'(" + p.id + "," + f.id + ")"), excised, p.degree + 1, p.twist + 1),
            owner);
        const std::string xid = tpo.id;
        SPair tp_pair = smash(*p.pair, I);
        std::map<std::string, std::string> same;
        for (const auto& v : tp_pair.total().vertices()) same[v] = v;
        PairMap incl = PairMap::from_labels(tp_pair, excised, same);
        const std::string eid = e.fresh("exc(" + p.id + "," + f.id + ")");
        e.add_morphism(QMorphism::with_zigzag(eid, xid, tp, Zigzag::from_map(incl)), owner);
        e.set_lambda(xid, inverse0(induced_map(incl, p.degree + 1)) * e.lambda(tp));
        e.expect_square("L(" + p.id + "): " + eid, eid);
        e.add_morphism(QMorphism::with_triple(gid, xid, tq, tt));
        e.expect_square("step2: " + gid, gid, f.id);
        continue;
      }
      e.expect_square("step2: " + gid, gid, f.id);
      continue;
    }
    // Step 3: only kind c arrows p -> q reach the minimal twist from outside.
    if (sb) throw QuiverError("clone_twist: morphism '" + f.id + "' leaves the minimal twist layer");
    const std::string gid = e.fresh("id(" + f.id + ")");
    const std::string& tq = clone_of[q.id];
    if (geometric_payload(f, p, q)) {
      e.add_morphism(QMorphism::with_zigzag(gid, p.id, tq, Zigzag(*p.pair)));
    } else {
      e.add_morphism(QMorphism::with_matrix(gid, MorphismKind::A, p.id, tq, e.lambda(tq) * rep.rho(k)));
    }
    e.expect_square("step3: " + gid, gid, f.id);
  }
  return e.finish(std::move(clones), bad);
}

// Glues consecutive steps into one: Q+ is the union of the step enlargements.
RewriteResult compose(const QuiverRep& rep, std::vector<RewriteResult> steps) {
  RewriteResult res;
  res.step = steps.front().step;
  res.original = rep;
  res.reduced = steps.back().reduced;
  std::vector<QObject> objects;
  std::vector<QMorphism> morphisms;
  std::set<std::string> seen;
  res.lambdas_invertible = true;
  res.transport = RatMatrix::identity(commutant(rep).dim());
  for (std::size_t k = 0; k < steps.size(); ++k) {
    RewriteResult& s = steps[k];
    for (const auto& o : s.enlarged.objects())
      if (seen.insert("o:" + o.id).second) objects.push_back(o);
    for (const auto& f : s.enlarged.morphisms())
      if (seen.insert("m:" + f.id).second) morphisms.push_back(f);
    for (auto& [id, m] : s.lambda) res.lambda[id] = std::move(m);
    for (auto& c : s.clones) res.clones.push_back(std::move(c));
    for (auto& sq : s.squares) res.squares.push_back({"pass " + std::to_string(k + 1) + ": " + sq.label, sq.commutes});
    res.lambdas_invertible = res.lambdas_invertible && s.lambdas_invertible;
    res.transport = s.transport * res.transport;
  }
  res.enlarged = QuiverRep(objects, morphisms);
  Commutant c = commutant(res.enlarged);
  RestrictionReport r0 = restriction(c, res.original);
  RestrictionReport r1 = restriction(c, res.reduced);
  res.equivalent = r0.iso() && r1.iso();
  res.commutant_dim_original = r0.map.rows();
  res.commutant_dim_reduced = r1.map.rows();
  return res;
}

}  // namespace

RewriteResult clone_twist(const QuiverRep& rep) {
  const std::size_t count = rep.distinct_twists().size();
  if (count <= 1) return unchanged(rep, "clone_twist");
  std::vector<RewriteResult> steps{clone_twist_once(rep)};
  while (steps.back().reduced.distinct_twists().size() == count) steps.push_back(clone_twist_once(steps.back().reduced));
  if (steps.size() == 1) return std::move(steps.front());
  return compose(rep, std::move(steps));
}

// ---------------------------------------------------------------- degree

RewriteResult clone_degree(const QuiverRep& rep) {
  if (rep.distinct_twists().size() > 1) throw QuiverError("clone_degree: objects have different twists");
  const std::vector<int> degrees = rep.distinct_degrees();
  if (degrees.size() <= 1) return unchanged(rep, "clone_degree");
  const int low = degrees.front();
  const SPair I = interval_pair();

  Enlargement e(rep, "clone_degree");
  std::set<std::string> bad;
  std::map<std::string, std::vector<std::string>> h_of;
  std::map<std::string, std::string> s_of;
  std::vector<ObjectClone> clones;

  // Step 1: Sigma q <- Hq -> q, repeated until the clone reaches the next occupied degree.
  const int levels = degrees[1] - low;
  for (const QObject& q : rep.objects()) {
    if (q.degree != low) continue;
    bad.insert(q.id);
    ObjectClone c{q.id, {}, {}};
    std::string base = q.id;
    std::optional<SPair> pair = q.pair;
    for (int j = 0; j < levels; ++j) {
      const int degree = low + j;
      const std::string tag = levels == 1 ? q.id : q.id + "," + std::to_string(j + 1);
      const std::string hid = e.fresh("H(" + tag + ")");
      const std::string sid = e.fresh("S(" + tag + ")");
      const std::string iid = e.fresh("iota(" + tag + ")");
      const std::string did = e.fresh("delta(" + tag + ")");
      const RatMatrix base_lambda = base == q.id ? RatMatrix::identity(rep.dim(q.id)) : e.lambda(base);
      if (pair) {
        Triple t = cone_suspension_triple(*pair);
        PairMap h = h_replacement(*pair);
        e.add_object(QObject::geometric_object(hid, t.pair_yz(), degree, q.twist), c);
        e.add_object(QObject::geometric_object(sid, t.pair_xy(), degree + 1, q.twist), c);
        e.add_morphism(QMorphism::with_zigzag(iid, hid, base, Zigzag::from_map(h)), c);
        e.add_morphism(QMorphism::with_triple(did, hid, sid, t), c);
        e.set_lambda(hid, inverse0(induced_map(h, degree)) * base_lambda);
        e.set_lambda(sid, suspension_iso(*pair, degree) * base_lambda);
        pair = t.pair_xy();
      } else {
        const std::size_t d = q.abstract_dim;
        e.add_object(QObject::abstract_object(hid, d, degree, q.twist), c);
        e.add_object(QObject::abstract_object(sid, d, degree + 1, q.twist), c);
        e.add_morphism(QMorphism::with_matrix(iid, MorphismKind::A, hid, base, RatMatrix::identity(d)), c);
        e.add_morphism(QMorphism::with_matrix(did, MorphismKind::B, hid, sid, RatMatrix::identity(d)), c);
        e.set_lambda(hid, base_lambda);
        e.set_lambda(sid, base_lambda);
      }
      e.expect_square("L(" + tag + "): " + iid, iid);
      e.expect_square("L(" + tag + "): " + did, did);
      h_of[q.id].push_back(hid);
      if (j + 1 < levels) h_of[q.id].push_back(sid);
      base = sid;
    }
    s_of[q.id] = base;
    clones.push_back(std::move(c));
  }

  for (std::size_t k = 0; k < rep.morphisms().size(); ++k) {
    const QMorphism& f = rep.morphisms()[k];
    const bool sb = bad.count(f.source) > 0, tb = bad.count(f.target) > 0;
    if (!sb && !tb) continue;
    const QObject& p = rep.object(f.source);
    const QObject& q = rep.object(f.target);
    if (sb && tb) {
      // Step 2: Sigma f.
      const std::string gid = e.fresh("S(" + f.id + ")");
      const std::string& sp = s_of[p.id];
      const std::string& sq = s_of[q.id];
      if (geometric_payload(f, p, q)) {
        Zigzag z = *f.zigzag;
        for (int j = 0; j < levels; ++j) z = smash_right(z, I);
        e.add_morphism(QMorphism::with_zigzag(gid, sp, sq, z));
      } else e.add_morphism(matrix_clone(e, gid, MorphismKind::A, sp, sq, rep.rho(k)));
      e.expect_square("step2: " + gid, gid, f.id);
      continue;
    }
    // Step 3: only kind b arrows leave the minimal degree layer.
    if (tb) throw QuiverError("clone_degree: morphism '" + f.id + "' enters the minimal degree layer");
    const std::string gid = e.fresh("puppe(" + f.id + ")");
    const std::string& sp = s_of[p.id];
    if (geometric_payload(f, p, q)) {
      e.add_morphism(QMorphism::with_zigzag(gid, sp, q.id, puppe_connector(*f.triple)));
    } else {
      e.add_morphism(
          QMorphism::with_matrix(gid, MorphismKind::A, sp, q.id, rep.rho(k) * inverse0(e.lambda(sp))));
    }
    e.expect_square("step3: " + gid, gid, f.id);
  }
  for (const auto& [id, extra] : h_of) bad.insert(extra.begin(), extra.end());
  return e.finish(std::move(clones), bad);
}

// ---------------------------------------------------------------- single object

RewriteResult reduce_to_single_object(const QuiverRep& rep) {
  if (rep.distinct_twists().size() > 1 || rep.distinct_degrees().size() > 1)
    throw QuiverError("reduce_to_single_object: objects differ in degree or twist");
  if (rep.objects().size() <= 1) return unchanged(rep, "reduce");
  const auto& objs = rep.objects();
  const int degree = objs.front().degree, twist = objs.front().twist;
  const bool geometric =
      std::all_of(objs.begin(), objs.end(), [](const QObject& o) { return o.geometric(); });

  Enlargement e(rep, "reduce");
  ObjectClone c{"", {}, {}};
  const std::string qid = e.fresh("q0");
  std::vector<std::size_t> start;
  std::size_t total = 0;
  for (std::size_t a = 0; a < objs.size(); ++a) {
    start.push_back(total);
    total += rep.dim(a);
  }
  auto projection = [&](std::size_t a) {
    RatMatrix m(rep.dim(a), total);
    for (std::size_t i = 0; i < rep.dim(a); ++i) m(i, start[a] + i) = 1;
    return m;
  };

  std::optional<WedgeResult> w;
  std::vector<PairMap> collapse;
  if (geometric) {
    std::vector<SPair> pairs;
    for (const auto& o : objs) pairs.push_back(*o.pair);
    w = wedge(pairs);
    for (std::size_t a = 0; a < objs.size(); ++a) {
      // identity on summand a, everything else to a point of its sub
      const int base = PairMap::constant(w->pair, pairs[a]).vertex_map().front();
      std::vector<int> m(w->pair.total().num_vertices(), base);
      const auto& inc = w->inclusions[a].vertex_map();
      for (std::size_t v = 0; v < inc.size(); ++v) m[static_cast<std::size_t>(inc[v])] = static_cast<int>(v);
      collapse.emplace_back(w->pair, pairs[a], std::move(m));
    }
    e.add_object(QObject::geometric_object(qid, w->pair, degree, twist), c);
  } else {
    e.add_object(QObject::abstract_object(qid, total, degree, twist), c);
  }

  for (std::size_t a = 0; a < objs.size(); ++a) {
    const std::string& id = objs[a].id;
    const std::string iid = e.fresh("iota(" + id + ")");
    const std::string pid = e.fresh("pi(" + id + ")");
    const std::string eid = e.fresh("id(" + id + ")");
    if (geometric) {
      e.add_morphism(QMorphism::with_zigzag(iid, qid, id, Zigzag::from_map(w->inclusions[a])), c);
      e.add_morphism(QMorphism::with_zigzag(pid, id, qid, Zigzag::from_map(collapse[a])), c);
      Zigzag z = Zigzag::from_map(collapse[a]);
      z.forward(w->inclusions[a]);
      e.add_morphism(QMorphism::with_zigzag(eid, qid, qid, z), c);
    } else {
      RatMatrix pr = projection(a);
      e.add_morphism(QMorphism::with_matrix(iid, MorphismKind::A, qid, id, pr), c);
      e.add_morphism(QMorphism::with_matrix(pid, MorphismKind::A, id, qid, pr.transpose()), c);
      e.add_morphism(QMorphism::with_matrix(eid, MorphismKind::A, qid, qid, pr.transpose() * pr), c);
    }
    const RatMatrix pr = projection(a);
    e.expect("projection " + iid, [iid, pr](const QuiverRep& q) { return q.rho(iid) == pr; });
    e.expect("inclusion " + pid, [pid, pr](const QuiverRep& q) { return q.rho(pid) == pr.transpose(); });
  }
  for (std::size_t k = 0; k < rep.morphisms().size(); ++k) {
    const QMorphism& h = rep.morphisms()[k];
    const std::size_t a = rep.object_index(h.source), b = rep.object_index(h.target);
    const std::string gid = e.fresh("comp(" + h.id + ")");
    const RatMatrix expected = projection(b).transpose() * rep.rho(k) * projection(a);
    if (geometric && !h.matrix) {
      Zigzag z = Zigzag::from_map(collapse[b]);
      z.append(*h.zigzag);
      z.forward(w->inclusions[a]);
      e.add_morphism(QMorphism::with_zigzag(gid, qid, qid, z), c);
    } else {
      e.add_morphism(QMorphism::with_matrix(gid, MorphismKind::A, qid, qid, expected), c);
    }
    e.expect("composite " + gid, [gid, expected](const QuiverRep& q) { return q.rho(gid) == expected; });
  }
  std::set<std::string> removed;
  for (const auto& o : objs) removed.insert(o.id);
  return e.finish({std::move(c)}, removed);
}

std::vector<RewriteResult> normalize(const QuiverRep& rep) {
  std::vector<RewriteResult> chain;
  QuiverRep cur = rep;
  while (cur.distinct_twists().size() > 1) {
    chain.push_back(clone_twist(cur));
    cur = chain.back().reduced;
  }
  while (cur.distinct_degrees().size() > 1) {
    chain.push_back(clone_degree(cur));
    cur = chain.back().reduced;
  }
  if (cur.objects().size() > 1) chain.push_back(reduce_to_single_object(cur));
  return chain;
}

}  // namespace noriq
