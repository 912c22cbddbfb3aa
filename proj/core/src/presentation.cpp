#include "noriq/presentation.hpp"

#include <algorithm>

namespace noriq {

namespace {

RatMatrix inverse0(const RatMatrix& m) { return m.rows() == 0 ? m : inverse(m); }

struct Step {
  PairMap map;
  Direction dir;
};

// Arrows whose maps are not order compatible go through the subdivision, so every cylinder is a genuine one.
std::vector<Step> telescope_steps(const Zigzag& z) {
  std::vector<Step> out;
  auto push = [&out](const PairMap& f, Direction dir) {
    if (f.order_compatible()) {
      out.push_back({f, dir});
      return;
    }
    std::vector<Step> route = {{last_vertex_map(f.source()), Direction::Backward},
                               {subdivide_map(f), Direction::Forward},
                               {last_vertex_map(f.target()), Direction::Forward}};
    if (dir == Direction::Backward) {
      std::reverse(route.begin(), route.end());
      for (Step& s : route) s.dir = s.dir == Direction::Forward ? Direction::Backward : Direction::Forward;
    }
    out.insert(out.end(), route.begin(), route.end());
  };
  for (const Arrow& a : z.arrows()) push(a.map, a.dir);
  if (out.empty()) out.push_back({PairMap::identity(z.source()), Direction::Forward});
  return out;
}

struct Telescope {
  SPair pair;
  PairMap from_start;
  PairMap from_end;
};

// Mapping cylinders of the arrows glued end to end; both ends sit inside as subcomplexes.
Telescope telescope(const Zigzag& z) {
  std::optional<Telescope> t;
  for (const Step& s : telescope_steps(z)) {
    CylinderResult c = mapping_cylinder(s.map);
    const bool fwd = s.dir == Direction::Forward;
    const PairMap& near = fwd ? c.inclusion : c.target_inclusion;
    const PairMap& far = fwd ? c.target_inclusion : c.inclusion;
    if (!t) {
      t = Telescope{near.target(), near, far};
      continue;
    }
    PushoutResult g = glue_pushout(t->from_end, near);
    t = Telescope{g.pair, compose(g.from_first, t->from_start), compose(g.from_second, far)};
  }
  return *t;
}

void mark_image(const PairMap& f, std::vector<bool>& mask) {
  const OrderedComplex& src = f.source().total();
  const OrderedComplex& tgt = f.target().total();
  for (const Simplex& s : src.simplices()) {
    Simplex img;
    for (int v : s) img.push_back(f.vertex_map()[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    mask[static_cast<std::size_t>(tgt.simplex_index(img))] = true;
  }
}

// (s, y) -> (y, s) between smash(a, b) and smash(b, a).
PairMap swap_factors(const SPair& a, const SPair& b) {
  const std::size_t na = a.total().num_vertices(), nb = b.total().num_vertices();
  std::vector<int> m(na * nb);
  for (std::size_t s = 0; s < na; ++s)
    for (std::size_t y = 0; y < nb; ++y) m[s * nb + y] = static_cast<int>(y * na + s);
  return PairMap(smash(a, b), smash(b, a), std::move(m));
}

Subspace kernel_intersection(const std::vector<RatMatrix>& maps, std::size_t ambient) {
  std::vector<Subspace> ks;
  for (const auto& g : maps) ks.push_back(kernel_basis(g));
  return intersect(ks, ambient);
}

}  // namespace

// ---------------------------------------------------------------- kernels as images

KernelImagePresentation kernel_image_presentation(const std::vector<Zigzag>& maps, int n,
                                                  const std::optional<SPair>& target) {
  if (maps.empty() && !target) throw TopologyError("kernel_image_presentation: empty family needs a target");
  const SPair X = maps.empty() ? *target : maps.front().target();
  for (const auto& f : maps)
    if (f.target() != X) throw TopologyError("kernel_image_presentation: maps need a common target");

  KernelImagePresentation r{Zigzag(X), X, n, {}, {}};
  const std::size_t h = cohomology_dim(X, n);
  std::vector<RatMatrix> induced;
  for (const auto& f : maps) induced.push_back(zz_induced(f, n));
  r.kernel_intersection = kernel_intersection(induced, h);

  if (!maps.empty()) {
    std::optional<Telescope> all;
    std::vector<PairMap> starts;
    for (const auto& f : maps) {
      Telescope t = telescope(f);
      if (!all) {
        all = t;
        starts.push_back(t.from_start);
        continue;
      }
      PushoutResult g = glue_pushout(all->from_end, t.from_end);
      for (PairMap& s : starts) s = compose(g.from_first, s);
      starts.push_back(compose(g.from_second, t.from_start));
      all = Telescope{g.pair, {}, compose(g.from_first, all->from_end)};
    }
    // (X1, Y1) = (T, Y_T u X_0)
    std::vector<bool> mask = all->pair.sub_mask();
    for (const PairMap& s : starts) mark_image(s, mask);
    r.presented = SPair(all->pair.total(), std::move(mask));
    r.map = Zigzag::from_map(PairMap(X, r.presented, all->from_end.vertex_map()));
  }
  r.image = image_basis(zz_induced(r.map, n));
  return r;
}

// ---------------------------------------------------------------- commutator suspension

RatMatrix commutator_matrix(const RatMatrix& lower, const RatMatrix& upper) {
  return kron(lower, RatMatrix::identity(upper.rows())) - kron(RatMatrix::identity(lower.rows()), upper);
}

RatMatrix endomorphism_embedding(const RatMatrix& pairing) {
  const std::size_t m = pairing.rows(), r = pairing.cols();
  RatMatrix theta(m * m, r * m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < m; ++j) theta(k * m + j, i * m + k) = pairing(j, i);
  return theta;
}

CommutatorSuspension commutator_suspension(const SPair& p, int n, const std::vector<Zigzag>& endos, int twist) {
  for (const auto& f : endos)
    if (f.source() != p || f.target() != p) throw TopologyError("commutator_suspension: endos must be endomorphisms");
  CommutatorSuspension cs;
  cs.lattice = homology_lattice(p, n);
  const std::size_t d = cs.lattice.rank;
  const CohomologyBasis M = relative_cohomology(p, n);
  cs.pairing = M.basis.transpose() * cs.lattice.basis.to_rational();

  const SPair X0 = points_pair(d);
  const SPair S = suspension(X0);
  const SPair I = interval_pair();
  const SPair plus = smash(S, p);
  cs.plus = ElementaryObject{plus, n + 1, twist};

  // X_+ = (X0 smash I) smash p is the suspension of X0 smash p after reordering factors.
  const SPair base = smash(X0, p);
  const std::size_t np = p.total().num_vertices(), ni = I.total().num_vertices();
  std::vector<int> iso(plus.total().num_vertices());
  for (std::size_t x = 0; x <= d; ++x)
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t y = 0; y < np; ++y) iso[(x * ni + i) * np + y] = static_cast<int>((x * np + y) * ni + i);
  cs.witness = SuspensionWitness::with_iso(base, PairMap(plus, smash(base, I), std::move(iso)));

  const RatMatrix K = kunneth_iso(S, p, n + 1);
  const PairMap to_swapped = swap_factors(S, p), from_swapped = swap_factors(p, S);
  bool have_phi = false;
  for (const Zigzag& f : endos) {
    cs.upper.push_back(zz_induced(f, n));
    IntMatrix lower = pushforward_on_lattice(f, cs.lattice);
    cs.lower.push_back(lower);
    Zigzag f0(S);
    if (d > 0) {
      WedgeRealization w = realize_matrix_on_wedge(lower, d);
      if (!have_phi) cs.phi = w.phi;
      if (cs.phi != w.phi) throw TopologyError("commutator_suspension: wedge bases disagree");
      have_phi = true;
      f0 = w.map;
    }
    Zigzag right = Zigzag::from_map(to_swapped);
    right.append(smash_right(f, S));
    right.forward(from_swapped);
    Zigzag fp = int_combination({{1, smash_right(f0, p)}, {-1, right.compressed()}}, cs.witness, plus);
    cs.plus_induced.push_back(zz_induced(fp, n + 1));
    cs.plus_maps.push_back(std::move(fp));
  }
  if (!have_phi) {
    const CohomologyBasis h0 = relative_cohomology(X0, 0);
    RatMatrix deltas(h0.cochain_support.size(), d);
    for (std::size_t pos = 0; pos < h0.cochain_support.size(); ++pos)
      deltas(pos, static_cast<std::size_t>(X0.total().simplices()[h0.cochain_support[pos]][0]) - 1) = 1;
    cs.phi = d ? suspension_iso(X0, 0) * cohomology_coordinates(X0, 0, deltas) : RatMatrix(0, 0);
  }
  cs.beta = kron(inverse0(cs.phi), RatMatrix::identity(M.dim)) * inverse0(K);
  return cs;
}

bool commutator_identity(const CommutatorSuspension& cs, std::size_t j) {
  RatMatrix c = commutator_matrix(cs.lower[j].to_rational(), cs.upper[j]);
  return cs.beta * cs.plus_induced[j] == c * cs.beta;
}

// ---------------------------------------------------------------- presentations

bool QuotientWitness::verified() const {
  return surjective && equivariant &&
         std::all_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.ok; });
}

QuotientWitness quotient_presentation(const QuiverRep& rep, const ModuleOverCommutant& m) {
  const Commutant c = commutant(rep);
  if (std::string v = module_violation(m, c); !v.empty()) throw QuiverError("quotient_presentation: " + v);
  QuotientWitness w;
  w.target = m;
  if (m.dim == 0) {
    w.source = w.carrier = ElementaryObject{point_pair(), 0, 0};
    w.map = w.onto_commutant = RatMatrix(0, 0);
    w.surjective = w.equivariant = true;
    return w;
  }
  auto certify = [&w](std::string label, bool ok) {
    w.certificates.push_back({std::move(label), ok});
    return ok;
  };

  // Normalize and move the module along the chain of commutant isomorphisms.
  const std::vector<RewriteResult> chain = normalize(rep);
  w.rewrite_steps = chain.size();
  RatMatrix T = RatMatrix::identity(c.dim());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    certify("rewrite " + std::to_string(k) + " " + chain[k].step, chain[k].verified());
    T = chain[k].transport * T;
  }
  const QuiverRep& final = chain.empty() ? rep : chain.back().reduced;
  const Commutant c0 = commutant(final);
  const RatMatrix Tinv = inverse0(T);
  ModuleOverCommutant m0{m.dim, {}};
  for (std::size_t b = 0; b < c0.dim(); ++b) m0.action.push_back(act(m, Tinv.col(b)));
  certify("transported module", module_violation(m0, c0).empty());

  const QObject& q = final.objects().front();
  const std::size_t dm = final.dim(0);
  bool geometric = q.geometric();
  for (const auto& f : final.morphisms()) geometric = geometric && f.zigzag && !f.matrix;

  RatMatrix s, theta;
  if (geometric) {
    std::vector<Zigzag> endos;
    for (const auto& f : final.morphisms()) endos.push_back(*f.zigzag);
    CommutatorSuspension cs = commutator_suspension(*q.pair, q.degree, endos, q.twist);
    for (std::size_t j = 0; j < endos.size(); ++j)
      certify("commutator identity " + final.morphisms()[j].id, commutator_identity(cs, j));
    KernelImagePresentation ki = kernel_image_presentation(cs.plus_maps, q.degree + 1, cs.plus.pair);
    certify("kernel-image exactness", ki.exact());
    w.carrier = ElementaryObject{ki.presented, q.degree + 1, q.twist};
    s = cs.beta * zz_induced(ki.map, q.degree + 1);
    theta = endomorphism_embedding(cs.pairing);
  } else {
    // Matrix-level carrier: a wedge of circles whose H^1 is identified with the kernel.
    std::vector<RatMatrix> gs;
    for (std::size_t k = 0; k < final.morphisms().size(); ++k)
      gs.push_back(commutator_matrix(final.rho(k).transpose(), final.rho(k)));
    Subspace E = kernel_intersection(gs, dm * dm);
    w.synthetic = true;
    w.carrier = ElementaryObject{suspension(points_pair(E.dim())), 1, q.twist};
    certify("carrier cohomology", cohomology_dim(w.carrier.pair, 1) == E.dim());
    s = E.basis();
    theta = endomorphism_embedding(RatMatrix::identity(dm));
  }

  // H(carrier) -> V (x) M -> End(M) -> commutant coordinates
  const RatMatrix ends = theta * s;
  RatMatrix span(dm * dm, c0.dim());
  for (std::size_t b = 0; b < c0.dim(); ++b) {
    const auto& e = c0.basis()[b][0].entries();
    for (std::size_t i = 0; i < e.size(); ++i) span(i, b) = e[i];
  }
  if (!certify("image is the commutant", image_basis(ends) == image_basis(span))) return w;
  w.onto_commutant = RatMatrix(c0.dim(), ends.cols());
  for (std::size_t j = 0; j < ends.cols(); ++j) {
    std::vector<Rational> x = c0.coordinates({RatMatrix(dm, dm, ends.col(j))});
    for (std::size_t i = 0; i < x.size(); ++i) w.onto_commutant(i, j) = x[i];
  }
  certify("onto commutant", rank(w.onto_commutant) == c0.dim());
  bool regular = true;
  for (std::size_t a = 0; a < c0.dim(); ++a) {
    const RatMatrix& ea = c0.basis()[a][0];
    const RatMatrix La = c0.regular_action(a);
    for (std::size_t j = 0; j < ends.cols() && regular; ++j) {
      RatMatrix x(dm, dm, ends.col(j));
      regular = c0.coordinates({ea * x}) == La.apply(w.onto_commutant.col(j));
    }
  }
  certify("left multiplication is the regular action", regular);

  const FreeCover cover = free_cover(m0, c0);
  certify("free cover surjective", cover.surjective);
  certify("free cover equivariant", cover.equivariant);
  w.copies = cover.copies;
  w.source = w.carrier;
  if (w.copies > 1) w.source.pair = wedge(std::vector<SPair>(w.copies, w.carrier.pair)).pair;
  const std::size_t hc = cohomology_dim(w.carrier.pair, w.carrier.degree);
  certify("source splits into copies", cohomology_dim(w.source.pair, w.source.degree) == w.copies * hc);
  w.map = cover.map * block_diag(std::vector<RatMatrix>(w.copies, w.onto_commutant));
  w.surjective = rank(w.map) == m.dim;
  w.equivariant = cover.equivariant && regular;
  return w;
}

QuiverRep opposite_quiver(const QuiverRep& rep) {
  std::vector<QObject> objs;
  for (std::size_t i = 0; i < rep.objects().size(); ++i)
    objs.push_back(QObject::abstract_object(rep.objects()[i].id, rep.dim(i)));
  std::vector<QMorphism> ms;
  for (std::size_t k = 0; k < rep.morphisms().size(); ++k) {
    const QMorphism& f = rep.morphisms()[k];
    ms.push_back(QMorphism::with_matrix("op(" + f.id + ")", MorphismKind::A, f.target, f.source,
                                        rep.rho(k).transpose()));
  }
  return QuiverRep(std::move(objs), std::move(ms));
}

ModuleOverCommutant dual_module(const QuiverRep& rep, const ModuleOverCommutant& m) {
  const Commutant c = commutant(rep);
  const Commutant cop = commutant(opposite_quiver(rep));
  ModuleOverCommutant d{m.dim, {}};
  for (const BlockFamily& b : cop.basis()) {
    BlockFamily t;
    for (const auto& blk : b) t.push_back(blk.transpose());
    d.action.push_back(act(m, c.coordinates(t)).transpose());
  }
  return d;
}

SubWitness sub_presentation(const QuiverRep& rep, const ModuleOverCommutant& m) {
  const Commutant c = commutant(rep);
  if (std::string v = module_violation(m, c); !v.empty()) throw QuiverError("sub_presentation: " + v);
  const QuiverRep op = opposite_quiver(rep);
  SubWitness sw;
  sw.target = m;
  sw.dual = quotient_presentation(op, dual_module(rep, m));
  sw.map = sw.dual.map.transpose();
  sw.injective = rank(sw.map) == m.dim;
  // The dual quotient intertwines the opposite actions, so its transpose intertwines the original ones.
  sw.equivariant = sw.dual.equivariant;
  return sw;
}

}  // namespace noriq
