#include "noriq/hocalc.hpp"

#include <algorithm>

namespace noriq {

namespace {

// Interval subdivided at h, in the order 0 < h < 1.
OrderedComplex split_interval() {
  return OrderedComplex::from_facets({"0", "h", "1"}, {{"0", "h"}, {"h", "1"}});
}

// Interval with its midpoint last, 0 < 1 < h, so that swapping the ends is monotone.
OrderedComplex folded_interval() {
  return OrderedComplex::from_facets({"0", "1", "h"}, {{"0", "h"}, {"1", "h"}});
}

}  // namespace

// ---------------------------------------------------------------- cogroup structure

Zigzag pinch(const SuspensionWitness& w) {
  const SPair& B = w.base;
  const SPair I = interval_pair();
  const PairMap idB = PairMap::identity(B);
  const SPair ends = SPair::from_labels(split_interval(), {{"0"}, {"1"}});
  const SPair all = SPair::from_labels(split_interval(), {{"0"}, {"h"}, {"1"}});
  const PairMap collapse = PairMap::from_labels(ends, I, {{"0", "0"}, {"h", "0"}, {"1", "1"}});
  const PairMap widen = PairMap::from_labels(ends, all, {{"0", "0"}, {"h", "h"}, {"1", "1"}});

  Zigzag z(w.pair);
  if (!w.iso.is_identity()) z.forward(w.iso);
  z.backward(smash_maps(idB, collapse), Certify::Trusted);
  z.forward(smash_maps(idB, widen));

  // first copy onto [0,h], second onto [h,1]
  const SPair BI = smash(B, I);
  const SPair BJ = smash(B, all);
  const WedgeResult W = wedge({BI, BI});
  const std::size_t nbi = BI.total().num_vertices();
  const int halves[2][2] = {{0, 1}, {1, 2}};
  std::vector<int> m(2 * nbi);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t v = 0; v < nbi; ++v)
      m[k * nbi + v] = static_cast<int>(v / 2) * 3 + halves[k][v % 2];
  z.backward(PairMap(W.pair, BJ, std::move(m)), Certify::Trusted);

  if (!w.iso.is_identity()) {
    PairMap back = inverse_bijection(w.iso);
    z.forward(wedge_maps({back, back}));
  }
  return z;
}

Zigzag wedge_zigzags(const Zigzag& f, const Zigzag& g) {
  Zigzag z(wedge({f.source(), g.source()}).pair);
  const PairMap idg = PairMap::identity(g.source());
  for (const Arrow& a : f.arrows()) {
    PairMap m = wedge_maps({a.map, idg});
    if (a.dir == Direction::Forward) z.forward(m);
    else z.backward(m, a.certified ? Certify::Trusted : Certify::None);
  }
  const PairMap idf = PairMap::identity(f.target());
  for (const Arrow& a : g.arrows()) {
    PairMap m = wedge_maps({idf, a.map});
    if (a.dir == Direction::Forward) z.forward(m);
    else z.backward(m, a.certified ? Certify::Trusted : Certify::None);
  }
  return z;
}

Zigzag cogroup_sum(const Zigzag& f, const Zigzag& g, const SuspensionWitness& w) {
  if (f.source() != w.pair || g.source() != w.pair)
    throw TopologyError("cogroup_sum: summands must start at the witnessed suspension");
  if (f.target() != g.target()) throw TopologyError("cogroup_sum: summands must share a target");
  Zigzag z = pinch(w);
  z.append(wedge_zigzags(f, g));
  z.forward(fold_map(f.target(), 2));
  return z.compressed();
}

Zigzag inversion(const SuspensionWitness& w) {
  const SPair& B = w.base;
  const SPair I = interval_pair();
  const PairMap idB = PairMap::identity(B);
  const SPair ends = SPair::from_labels(folded_interval(), {{"0"}, {"1"}});
  const PairMap collapse = PairMap::from_labels(ends, I, {{"0", "0"}, {"1", "1"}, {"h", "1"}});
  const PairMap swap = PairMap::from_labels(ends, ends, {{"0", "1"}, {"1", "0"}, {"h", "h"}});

  Zigzag z(w.pair);
  if (!w.iso.is_identity()) z.forward(w.iso);
  z.backward(smash_maps(idB, collapse), Certify::Trusted);
  z.forward(smash_maps(idB, swap));
  z.forward(smash_maps(idB, collapse));
  if (!w.iso.is_identity()) z.forward(inverse_bijection(w.iso));
  return z;
}

Zigzag negate(const Zigzag& f, const SuspensionWitness& w) {
  if (f.source() != w.pair) throw TopologyError("negate: map must start at the witnessed suspension");
  return inversion(w).append(f).compressed();
}

Zigzag int_combination(const std::vector<std::pair<long, Zigzag>>& terms, const SuspensionWitness& w,
                       const std::optional<SPair>& target_hint) {
  std::optional<Zigzag> acc;
  for (const auto& [a, f] : terms) {
    if (a == 0) continue;
    Zigzag term = a > 0 ? f : negate(f, w);
    for (long c = 0; c < std::abs(a); ++c) acc = acc ? cogroup_sum(*acc, term, w) : term;
  }
  if (acc) return *acc;
  if (target_hint) return Zigzag::from_map(PairMap::constant(w.pair, *target_hint));
  if (!terms.empty()) return Zigzag::from_map(PairMap::constant(w.pair, terms.front().second.target()));
  throw TopologyError("int_combination: empty combination needs a target");
}

// ---------------------------------------------------------------- Kuenneth

RatMatrix kunneth_iso(const SPair& p, const SPair& q, int n) {
  const SPair pq = smash(p, q);
  const CohomologyBasis target = relative_cohomology(pq, n);
  const OrderedComplex& P = p.total();
  const OrderedComplex& Q = q.total();
  const OrderedComplex& PQ = pq.total();
  const int nb = static_cast<int>(Q.num_vertices());

  std::vector<std::vector<Rational>> columns;
  for (int a = 0; a <= n; ++a) {
    const int b = n - a;
    const CohomologyBasis A = relative_cohomology(p, a);
    const CohomologyBasis B = relative_cohomology(q, b);
    if (A.dim == 0 || B.dim == 0) continue;
    std::vector<long> pa(P.size(), -1), pb(Q.size(), -1);
    for (std::size_t i = 0; i < A.cochain_support.size(); ++i) pa[A.cochain_support[i]] = static_cast<long>(i);
    for (std::size_t i = 0; i < B.cochain_support.size(); ++i) pb[B.cochain_support[i]] = static_cast<long>(i);

    // front a-face projected to p, back b-face projected to q
    std::vector<std::pair<long, long>> faces(target.cochain_support.size(), {-1, -1});
    for (std::size_t pos = 0; pos < faces.size(); ++pos) {
      const Simplex& s = PQ.simplices()[target.cochain_support[pos]];
      Simplex front, back;
      for (int i = 0; i <= a; ++i) front.push_back(s[static_cast<std::size_t>(i)] / nb);
      for (int i = a; i <= n; ++i) back.push_back(s[static_cast<std::size_t>(i)] % nb);
      if (std::adjacent_find(front.begin(), front.end()) != front.end()) continue;
      if (std::adjacent_find(back.begin(), back.end()) != back.end()) continue;
      long fi = P.simplex_index(front), bi = Q.simplex_index(back);
      if (fi < 0 || bi < 0) continue;
      faces[pos] = {pa[static_cast<std::size_t>(fi)], pb[static_cast<std::size_t>(bi)]};
    }
    for (std::size_t i = 0; i < A.dim; ++i) {
      for (std::size_t k = 0; k < B.dim; ++k) {
        std::vector<Rational> c(faces.size());
        for (std::size_t pos = 0; pos < faces.size(); ++pos) {
          auto [x, y] = faces[pos];
          if (x < 0 || y < 0) continue;
          c[pos] = A.basis(static_cast<std::size_t>(x), i) * B.basis(static_cast<std::size_t>(y), k);
        }
        columns.push_back(std::move(c));
      }
    }
  }
  RatMatrix cocycles(target.cochain_support.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) cocycles(i, j) = columns[j][i];
  RatMatrix k = cohomology_coordinates(pq, n, cocycles);
  if (k.rows() != k.cols() || (k.rows() > 0 && !is_invertible(k)))
    throw TopologyError("kunneth_iso: cross product is not an isomorphism");
  return k;
}

// ---------------------------------------------------------------- Puppe connector

Zigzag puppe_connector(const Triple& t) {
  const SPair xy = t.pair_xy();
  const SPair yz = t.pair_yz();
  const OrderedComplex& X = t.outer();
  const OrderedComplex XI = suspension(xy).total();

  // X x {1}, Z x I and Y x {0}
  std::vector<bool> mask(XI.size(), false);
  for (std::size_t i = 0; i < XI.size(); ++i) {
    Simplex a, b;
    for (int v : XI.simplices()[i]) {
      a.push_back(v / 2);
      b.push_back(v % 2);
    }
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    const auto ai = static_cast<std::size_t>(X.simplex_index(a));
    mask[i] = b == Simplex{1} || t.inner()[ai] || (b == Simplex{0} && t.middle()[ai]);
  }
  const SPair W(XI, std::move(mask));

  std::vector<int> at_zero;
  for (std::size_t x = 0; x < X.num_vertices(); ++x) at_zero.push_back(static_cast<int>(2 * x));
  const SPair sigma = suspension(yz);
  std::vector<int> incl;
  for (std::size_t v = 0; v < sigma.total().num_vertices(); ++v) {
    long x = X.vertex_index(yz.total().vertices()[v / 2]);
    incl.push_back(static_cast<int>(2 * x) + static_cast<int>(v % 2));
  }
  Zigzag z(xy);
  z.forward(PairMap(xy, W, std::move(at_zero)));
  z.backward(PairMap(sigma, W, std::move(incl)), Certify::Check);
  // the bare roof yields minus the snake connecting map; reverse the suspension coordinate
  z.append(inversion(SuspensionWitness::of(yz)));
  return z.compressed();
}

// ---------------------------------------------------------------- lattices

namespace {

IntMatrix boundary_matrix(const SPair& p, int n) {
  const CohomologyBasis lo = relative_cohomology(p, n - 1);
  const CohomologyBasis hi = relative_cohomology(p, n);
  const OrderedComplex& K = p.total();
  std::vector<long> pos(K.size(), -1);
  for (std::size_t i = 0; i < lo.cochain_support.size(); ++i) pos[lo.cochain_support[i]] = static_cast<long>(i);
  IntMatrix d(lo.cochain_support.size(), hi.cochain_support.size());
  for (std::size_t c = 0; c < hi.cochain_support.size(); ++c) {
    const Simplex& s = K.simplices()[hi.cochain_support[c]];
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      long r = pos[static_cast<std::size_t>(K.simplex_index(face))];
      if (r >= 0) d(static_cast<std::size_t>(r), c) += i % 2 ? -1 : 1;
    }
  }
  return d;
}

std::size_t snf_rank(const IntMatrix& d) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(i);
  return v;
}

}  // namespace

Lattice homology_lattice(const SPair& p, int n) {
  if (n < 0) throw TopologyError("negative degree");
  Lattice L;
  L.pair = p;
  L.degree = n;
  const std::size_t cn = relative_cohomology(p, n).cochain_support.size();
  if (cn == 0) return L;

  // integral cycles: kernel columns of the Smith transform of the n-th boundary
  IntMatrix dn = boundary_matrix(p, n);
  RatMatrix V = RatMatrix::identity(cn);
  std::size_t r = 0;
  if (dn.rows() > 0) {
    SmithForm s = smith_normal_form(dn);
    V = s.V.to_rational();
    r = snf_rank(s.D);
  }
  RatMatrix kbasis = V.cols_subset(range(r, cn));
  const std::size_t k = kbasis.cols();
  RatMatrix free_part = kbasis;
  IntMatrix dn1 = boundary_matrix(p, n + 1);
  if (k > 0 && dn1.cols() > 0) {
    RatMatrix c = (inverse(V) * dn1.to_rational()).rows_subset(range(r, cn));
    SmithForm s = smith_normal_form(to_integer(c));
    const std::size_t r1 = snf_rank(s.D);
    free_part = kbasis * inverse(s.U.to_rational()).cols_subset(range(r1, k));
  }
  L.basis = to_integer(free_part);
  L.rank = free_part.cols();
  if (L.rank != cohomology_dim(p, n)) throw TopologyError("homology_lattice: rank disagrees with cohomology");
  return L;
}

IntMatrix pushforward_on_lattice(const Zigzag& f, const Lattice& L) {
  if (f.source() != L.pair || f.target() != L.pair)
    throw TopologyError("pushforward_on_lattice: map must be an endomorphism of the lattice's pair");
  if (L.rank == 0) return IntMatrix(0, 0);
  const RatMatrix F = zz_induced(f, L.degree);
  const RatMatrix reps = relative_cohomology(L.pair, L.degree).basis;
  const RatMatrix P = reps.transpose() * L.basis.to_rational();
  const RatMatrix G = inverse(P) * F.transpose() * P;
  try {
    return to_integer(G);
  } catch (const LinAlgError&) {
    throw TopologyError("pushforward_on_lattice: non-integral entries");
  }
}

// ---------------------------------------------------------------- wedge of circles

PairMap elementary_point_map(std::size_t d, std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > d || j > d) throw TopologyError("elementary_point_map: index out of range");
  const SPair X0 = points_pair(d);
  std::vector<int> m(d + 1, 0);
  m[i] = static_cast<int>(j);
  return PairMap(X0, X0, std::move(m));
}

WedgeRealization realize_matrix_on_wedge(const IntMatrix& alpha, std::size_t d) {
  if (alpha.rows() != d || alpha.cols() != d) throw LinAlgError("realize_matrix_on_wedge: alpha must be d x d");
  const SPair X0 = points_pair(d);
  const SuspensionWitness w = SuspensionWitness::of(X0);
  const SPair I = interval_pair();

  std::vector<std::pair<long, Zigzag>> terms;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Integer& a = alpha(i, j);
      if (a == 0) continue;
      if (!a.fits_slong_p()) throw LinAlgError("realize_matrix_on_wedge: coefficient too large");
      terms.emplace_back(a.get_si(), Zigzag::from_map(smash_maps(elementary_point_map(d, i + 1, j + 1),
                                                                  PairMap::identity(I))));
    }
  }
  Zigzag f = int_combination(terms, w, w.pair);

  // indicator cochains of x1..xd
  const CohomologyBasis h0 = relative_cohomology(X0, 0);
  RatMatrix deltas(h0.cochain_support.size(), d);
  for (std::size_t pos = 0; pos < h0.cochain_support.size(); ++pos) {
    const Simplex& s = X0.total().simplices()[h0.cochain_support[pos]];
    deltas(pos, static_cast<std::size_t>(s[0]) - 1) = 1;
  }
  RatMatrix phi = suspension_iso(X0, 0) * cohomology_coordinates(X0, 0, deltas);
  return WedgeRealization{w, std::move(f), std::move(phi)};
}

}  // namespace noriq
