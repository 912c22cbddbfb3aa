#include <algorithm>
#include <functional>
#include <set>

#include "internal.hpp"

namespace noriq {

namespace {

std::vector<Simplex> facets_of(const OrderedComplex& c) {
  std::vector<bool> covered(c.size(), false);
  for (const Simplex& s : c.simplices()) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      covered[static_cast<std::size_t>(c.simplex_index(face))] = true;
    }
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!covered[i]) out.push_back(c.simplices()[i]);
  return out;
}

void mark_closure(const OrderedComplex& c, const Simplex& s, std::vector<bool>& mask) {
  const std::size_t k = s.size();
  for (std::size_t bits = 1; bits < (std::size_t{1} << k); ++bits) {
    Simplex face;
    for (std::size_t i = 0; i < k; ++i)
      if (bits >> i & 1) face.push_back(s[i]);
    long idx = c.simplex_index(face);
    if (idx < 0) throw TopologyError("simplex missing from complex");
    mask[static_cast<std::size_t>(idx)] = true;
  }
}

Simplex sorted_unique(Simplex s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Staircase triangulation; vertex (a,b) has index a*|B|+b.
OrderedComplex product_complex(const OrderedComplex& A, const OrderedComplex& B) {
  const std::size_t nb = B.num_vertices();
  std::vector<std::string> labels;
  labels.reserve(A.num_vertices() * nb);
  for (const auto& a : A.vertices())
    for (const auto& b : B.vertices()) labels.push_back(product_label(a, b));
  std::vector<Simplex> facets;
  const auto fa = facets_of(A), fb = facets_of(B);
  for (const Simplex& sa : fa) {
    for (const Simplex& sb : fb) {
      Simplex path;
      std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        path.push_back(sa[i] * static_cast<int>(nb) + sb[j]);
        if (i + 1 == sa.size() && j + 1 == sb.size()) facets.push_back(path);
        if (i + 1 < sa.size()) walk(i + 1, j);
        if (j + 1 < sb.size()) walk(i, j + 1);
        path.pop_back();
      };
      walk(0, 0);
    }
  }
  return OrderedComplex::from_index_facets(std::move(labels), facets);
}

std::pair<Simplex, Simplex> project(const Simplex& s, std::size_t nb) {
  Simplex a, b;
  for (int v : s) {
    a.push_back(v / static_cast<int>(nb));
    b.push_back(v % static_cast<int>(nb));
  }
  return {sorted_unique(a), sorted_unique(b)};
}

std::vector<int> offset_map(std::size_t n, std::size_t offset) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(offset + i);
  return m;
}

PairMap h_replacement_into(const SPair& p, const SPair& target) {
  std::vector<int> m;
  for (const auto& x : p.total().vertices())
    m.push_back(static_cast<int>(target.total().vertex_index(product_label(x, "1"))));
  return PairMap(p, target, std::move(m));
}

}  // namespace

SPair interval_pair() {
  return SPair::from_labels(OrderedComplex::from_facets({"0", "1"}, {{"0", "1"}}), {{"0"}, {"1"}});
}

SPair point_pair() { return SPair::from_labels(OrderedComplex::from_facets({"*"}, {}), {{"*"}}); }

SPair points_pair(std::size_t d) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i <= d; ++i) v.push_back("x" + std::to_string(i));
  return SPair::from_labels(OrderedComplex::from_facets(v, {}), {{"x0"}});
}

SPair ray_pair() {
  return SPair::from_labels(OrderedComplex::from_facets({"0", "1"}, {{"0", "1"}}), {{"0"}});
}

// ---------------------------------------------------------------- wedge

WedgeResult wedge(const std::vector<SPair>& ps) {
  if (ps.empty()) throw TopologyError("wedge of an empty list");
  if (ps.size() == 1) return {ps[0], {PairMap::identity(ps[0])}};
  std::vector<std::string> labels;
  std::vector<Simplex> facets;
  std::vector<std::size_t> offsets;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const OrderedComplex& c = ps[k].total();
    offsets.push_back(labels.size());
    for (const auto& v : c.vertices()) labels.push_back(std::to_string(k) + ":" + v);
    for (Simplex s : c.simplices()) {
      for (int& v : s) v += static_cast<int>(offsets[k]);
      facets.push_back(std::move(s));
    }
  }
  OrderedComplex total = OrderedComplex::from_index_facets(std::move(labels), facets);
  std::vector<bool> mask(total.size(), false);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const OrderedComplex& c = ps[k].total();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!ps[k].in_sub(i)) continue;
      Simplex s = c.simplices()[i];
      for (int& v : s) v += static_cast<int>(offsets[k]);
      mask[static_cast<std::size_t>(total.simplex_index(s))] = true;
    }
  }
  WedgeResult w{SPair(std::move(total), std::move(mask)), {}};
  for (std::size_t k = 0; k < ps.size(); ++k)
    w.inclusions.emplace_back(ps[k], w.pair, offset_map(ps[k].total().num_vertices(), offsets[k]));
  return w;
}

PairMap wedge_maps(const std::vector<PairMap>& fs) {
  if (fs.empty()) throw TopologyError("wedge of an empty list");
  if (fs.size() == 1) return fs[0];
  std::vector<SPair> srcs, tgts;
  for (const auto& f : fs) {
    srcs.push_back(f.source());
    tgts.push_back(f.target());
  }
  WedgeResult ws = wedge(srcs), wt = wedge(tgts);
  std::vector<int> m;
  std::size_t toff = 0;
  for (const auto& f : fs) {
    for (int w : f.vertex_map()) m.push_back(w + static_cast<int>(toff));
    toff += f.target().total().num_vertices();
  }
  return PairMap(ws.pair, wt.pair, std::move(m));
}

PairMap fold_map(const SPair& target, std::size_t copies) {
  if (copies == 0) throw TopologyError("fold of zero copies");
  WedgeResult w = wedge(std::vector<SPair>(copies, target));
  std::vector<int> m;
  for (std::size_t k = 0; k < copies; ++k)
    for (std::size_t v = 0; v < target.total().num_vertices(); ++v) m.push_back(static_cast<int>(v));
  return PairMap(w.pair, target, std::move(m));
}

// ---------------------------------------------------------------- products

std::string product_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

SPair smash(const SPair& p, const SPair& q) {
  OrderedComplex prod = product_complex(p.total(), q.total());
  const std::size_t nb = q.total().num_vertices();
  std::vector<bool> mask(prod.size(), false);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    auto [a, b] = project(prod.simplices()[i], nb);
    mask[i] = p.in_sub(static_cast<std::size_t>(p.total().simplex_index(a))) ||
              q.in_sub(static_cast<std::size_t>(q.total().simplex_index(b)));
  }
  return SPair(std::move(prod), std::move(mask));
}

PairMap smash_maps(const PairMap& f, const PairMap& g) {
  if (!f.order_compatible() || !g.order_compatible())
    throw TopologyError("smash_maps needs order-compatible maps");
  SPair src = smash(f.source(), g.source());
  SPair tgt = smash(f.target(), g.target());
  const std::size_t nb = g.source().total().num_vertices();
  const std::size_t nb2 = g.target().total().num_vertices();
  std::vector<int> m(src.total().num_vertices());
  for (std::size_t v = 0; v < m.size(); ++v)
    m[v] = f.vertex_map()[v / nb] * static_cast<int>(nb2) + g.vertex_map()[v % nb];
  return PairMap(std::move(src), std::move(tgt), std::move(m));
}

SPair cone(const SPair& p) { return smash(p, ray_pair()); }
SPair suspension(const SPair& p) { return smash(p, interval_pair()); }

Triple cone_suspension_triple(const SPair& p) {
  SPair sigma = suspension(p);
  const OrderedComplex& prod = sigma.total();
  const std::size_t nb = 2;
  std::vector<bool> inner(prod.size(), false);
  for (std::size_t i = 0; i < prod.size(); ++i) {
    auto [a, b] = project(prod.simplices()[i], nb);
    inner[i] = b == Simplex{0} || p.in_sub(static_cast<std::size_t>(p.total().simplex_index(a)));
  }
  return Triple(prod, sigma.sub_mask(), std::move(inner));
}

PairMap h_replacement(const SPair& p) {
  return h_replacement_into(p, cone_suspension_triple(p).pair_yz());
}

RatMatrix suspension_iso(const SPair& p, int n) {
  if (n < 0) throw TopologyError("negative degree");
  Triple t = cone_suspension_triple(p);
  PairMap r = h_replacement_into(p, t.pair_yz());
  RatMatrix rstar = induced_map(r, n);
  RatMatrix d = connecting_map(t, n + 1);
  if (rstar.rows() == 0) return RatMatrix(d.rows(), 0);
  return d * inverse(rstar);
}

// ---------------------------------------------------------------- cylinders and gluing

CylinderResult mapping_cylinder(const PairMap& f) {
  const OrderedComplex& K = f.source().total();
  const OrderedComplex& L = f.target().total();
  const std::size_t nk = K.num_vertices();
  const auto& fm = f.vertex_map();
  std::vector<std::string> labels;
  for (const auto& v : K.vertices()) labels.push_back("0:" + v);
  for (const auto& v : L.vertices()) labels.push_back("1:" + v);

  auto cyl_simplices = [&](const Simplex& s) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex c(s.begin(), s.begin() + static_cast<long>(i) + 1);
      for (std::size_t j = i; j < s.size(); ++j) c.push_back(static_cast<int>(nk) + fm[static_cast<std::size_t>(s[j])]);
      out.push_back(sorted_unique(std::move(c)));
    }
    return out;
  };

  std::vector<Simplex> facets;
  for (const Simplex& s : facets_of(K))
    for (Simplex& c : cyl_simplices(s)) facets.push_back(std::move(c));
  for (Simplex s : facets_of(L)) {
    for (int& v : s) v += static_cast<int>(nk);
    facets.push_back(std::move(s));
  }
  OrderedComplex cyl = OrderedComplex::from_index_facets(std::move(labels), facets);

  std::vector<bool> mask(cyl.size(), false);
  for (std::size_t i = 0; i < K.size(); ++i)
    if (f.source().in_sub(i))
      for (const Simplex& c : cyl_simplices(K.simplices()[i])) mark_closure(cyl, c, mask);
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!f.target().in_sub(i)) continue;
    Simplex s = L.simplices()[i];
    for (int& v : s) v += static_cast<int>(nk);
    mask[static_cast<std::size_t>(cyl.simplex_index(s))] = true;
  }
  SPair pair(std::move(cyl), std::move(mask));

  std::vector<int> retract(fm.begin(), fm.end());
  for (std::size_t w = 0; w < L.num_vertices(); ++w) retract.push_back(static_cast<int>(w));
  return CylinderResult{PairMap(f.source(), pair, offset_map(nk, 0)),
                        PairMap(pair, f.target(), std::move(retract)),
                        PairMap(f.target(), pair, offset_map(L.num_vertices(), nk))};
}

PushoutResult glue_pushout(const PairMap& f1, const PairMap& f2) {
  if (f1.source() != f2.source()) throw TopologyError("glue_pushout: maps need a common source");
  if (!f1.injective() || !f2.injective()) throw TopologyError("glue_pushout: maps must be injective");
  const OrderedComplex& A = f1.source().total();
  const OrderedComplex& B = f1.target().total();
  const OrderedComplex& C = f2.target().total();

  std::vector<int> cmap(C.num_vertices(), -1);
  std::vector<int> from_a(C.num_vertices(), -1);
  for (std::size_t a = 0; a < A.num_vertices(); ++a) {
    cmap[static_cast<std::size_t>(f2.vertex_map()[a])] = f1.vertex_map()[a];
    from_a[static_cast<std::size_t>(f2.vertex_map()[a])] = static_cast<int>(a);
  }
  std::vector<std::string> labels = B.vertices();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::size_t w = 0; w < C.num_vertices(); ++w) {
    if (cmap[w] >= 0) continue;
    std::string label = C.vertices()[w];
    while (used.count(label)) label = "c:" + label;
    used.insert(label);
    cmap[w] = static_cast<int>(labels.size());
    labels.push_back(std::move(label));
  }

  auto translate = [&cmap](Simplex s) {
    for (int& v : s) v = cmap[static_cast<std::size_t>(v)];
    return sorted_unique(std::move(s));
  };
  std::vector<Simplex> facets = B.simplices();
  for (const Simplex& s : C.simplices()) {
    Simplex t = translate(s);
    bool from_source = true;
    Simplex pre;
    for (int v : s) {
      if (from_a[static_cast<std::size_t>(v)] < 0) {
        from_source = false;
        break;
      }
      pre.push_back(from_a[static_cast<std::size_t>(v)]);
    }
    from_source = from_source && A.simplex_index(sorted_unique(pre)) >= 0;
    if (!from_source && B.simplex_index(t) >= 0)
      throw TopologyError("glue_pushout: gluing would merge simplices outside the common source");
    facets.push_back(std::move(t));
  }
  OrderedComplex D = OrderedComplex::from_index_facets(std::move(labels), facets);
  std::vector<bool> mask(D.size(), false);
  for (std::size_t i = 0; i < B.size(); ++i)
    if (f1.target().in_sub(i)) mask[static_cast<std::size_t>(D.simplex_index(B.simplices()[i]))] = true;
  for (std::size_t i = 0; i < C.size(); ++i)
    if (f2.target().in_sub(i)) mask[static_cast<std::size_t>(D.simplex_index(translate(C.simplices()[i])))] = true;
  SPair pair(std::move(D), std::move(mask));
  return PushoutResult{pair, PairMap(f1.target(), pair, offset_map(B.num_vertices(), 0)),
                       PairMap(f2.target(), pair, std::move(cmap))};
}

HomotopySquare homotopy_pushout(const PairMap& f, const PairMap& s) {
  if (f.source() != s.source()) throw TopologyError("homotopy_pushout: maps need a common source");
  CylinderResult cf = mapping_cylinder(f);
  CylinderResult cs = mapping_cylinder(s);
  PushoutResult g = glue_pushout(cf.inclusion, cs.inclusion);
  HomotopySquare sq;
  sq.pair = g.pair;
  sq.f_tilde = compose(g.from_second, cs.target_inclusion);
  sq.s_tilde = compose(g.from_first, cf.target_inclusion);
  sq.s_tilde_equivalence = is_cohomology_equivalence(sq.s_tilde);
  if (!sq.s_tilde_equivalence && is_cohomology_equivalence(s))
    throw TopologyError("homotopy_pushout: equivalence not preserved");
  return sq;
}

// ---------------------------------------------------------------- subdivision

SPair barycentric_subdivision(const SPair& p) {
  const OrderedComplex& K = p.total();
  std::vector<std::string> labels;
  for (const Simplex& s : K.simplices()) {
    std::string l = "[";
    for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "|" : "") + K.vertices()[static_cast<std::size_t>(s[i])];
    labels.push_back(l + "]");
  }
  std::vector<Simplex> facets;
  for (Simplex s : facets_of(K)) {
    do {
      Simplex chain, prefix;
      for (int v : s) {
        prefix.push_back(v);
        chain.push_back(static_cast<int>(K.simplex_index(sorted_unique(prefix))));
      }
      facets.push_back(std::move(chain));
    } while (std::next_permutation(s.begin(), s.end()));
  }
  OrderedComplex sd = OrderedComplex::from_index_facets(std::move(labels), facets);
  std::vector<bool> mask(sd.size());
  for (std::size_t i = 0; i < sd.size(); ++i)
    mask[i] = p.in_sub(static_cast<std::size_t>(sd.simplices()[i].back()));
  return SPair(std::move(sd), std::move(mask));
}

PairMap last_vertex_map(const SPair& p) {
  SPair sd = barycentric_subdivision(p);
  std::vector<int> m;
  for (const Simplex& s : p.total().simplices()) m.push_back(s.back());
  return PairMap(std::move(sd), p, std::move(m));
}

PairMap subdivide_map(const PairMap& f) {
  SPair src = barycentric_subdivision(f.source());
  SPair tgt = barycentric_subdivision(f.target());
  std::vector<int> m;
  for (const Simplex& s : f.source().total().simplices())
    m.push_back(static_cast<int>(f.target().total().simplex_index(oriented_image(s, f.vertex_map()).first)));
  return PairMap(std::move(src), std::move(tgt), std::move(m));
}

}  // namespace noriq
