#include "noriq/hocalc.hpp"

namespace noriq {

Zigzag::Zigzag(SPair source) : source_(source), target_(std::move(source)) {}

Zigzag Zigzag::from_map(const PairMap& f) {
  Zigzag z(f.source());
  z.forward(f);
  return z;
}

Zigzag& Zigzag::forward(const PairMap& f) {
  if (f.source() != target_) throw TopologyError("zigzag: forward arrow does not start at the current end");
  arrows_.push_back({f, Direction::Forward, true});
  target_ = f.target();
  return *this;
}

Zigzag& Zigzag::backward(const PairMap& s, Certify how) {
  if (s.target() != target_) throw TopologyError("zigzag: backward arrow does not end at the current end");
  bool ok = how == Certify::Trusted;
  if (how == Certify::Check) {
    ok = is_cohomology_equivalence(s);
    if (!ok) throw TopologyError("zigzag: backward arrow is not a cohomology equivalence");
  }
  arrows_.push_back({s, Direction::Backward, ok});
  target_ = s.source();
  return *this;
}

Zigzag& Zigzag::append(const Zigzag& z) {
  if (z.source_ != target_) throw TopologyError("zigzag: concatenation does not chain");
  arrows_.insert(arrows_.end(), z.arrows_.begin(), z.arrows_.end());
  target_ = z.target_;
  return *this;
}

Zigzag Zigzag::compressed() const {
  Zigzag out(source_);
  for (const Arrow& a : arrows_) {
    if (a.map.is_identity()) continue;
    if (!out.arrows_.empty() && out.arrows_.back().dir == a.dir) {
      Arrow& last = out.arrows_.back();
      if (a.dir == Direction::Forward) {
        last.map = compose(a.map, last.map);
      } else {
        last.map = compose(last.map, a.map);
        last.certified = last.certified && a.certified;
      }
    } else {
      out.arrows_.push_back(a);
    }
  }
  out.target_ = target_;
  return out;
}

RatMatrix zz_induced(const Zigzag& z, int n) {
  RatMatrix m = RatMatrix::identity(cohomology_dim(z.source(), n));
  for (const Arrow& a : z.arrows()) {
    if (a.dir == Direction::Forward) {
      m = m * induced_map(a.map, n);
      continue;
    }
    if (!a.certified) throw TopologyError("zz_induced: uncertified backward arrow");
    RatMatrix b = induced_map(a.map, n);
    if (b.rows() != b.cols() || !is_invertible(b))
      throw TopologyError("zz_induced: backward arrow is not invertible in cohomology");
    if (b.rows() > 0) m = m * inverse(b);
    else m = RatMatrix(m.rows(), 0);
  }
  return m;
}

PairMap inverse_bijection(const PairMap& f) {
  if (!f.injective() || f.source().total().num_vertices() != f.target().total().num_vertices())
    throw TopologyError("not a vertex bijection");
  std::vector<int> inv(f.vertex_map().size());
  for (std::size_t v = 0; v < inv.size(); ++v) inv[static_cast<std::size_t>(f.vertex_map()[v])] = static_cast<int>(v);
  return PairMap(f.target(), f.source(), std::move(inv));
}

SuspensionWitness SuspensionWitness::of(const SPair& base) {
  SPair pair = suspension(base);
  return SuspensionWitness{pair, base, PairMap::identity(pair)};
}

SuspensionWitness SuspensionWitness::with_iso(const SPair& base, const PairMap& iso) {
  if (iso.target() != suspension(base)) throw TopologyError("witness: iso must land in the suspension of base");
  const SPair& p = iso.source();
  if (p.total().size() != iso.target().total().size() || p.relative_size() != iso.target().relative_size())
    throw TopologyError("witness: not an isomorphism of pairs");
  inverse_bijection(iso);
  return SuspensionWitness{p, base, iso};
}

namespace {

Zigzag smash_backward(const PairMap& s, const SPair& q, bool certified) {
  // s runs from X_{k+1} to X_k; the result starts at X_k smash q.
  Certify how = certified ? Certify::Trusted : Certify::None;
  PairMap idq = PairMap::identity(q);
  if (s.order_compatible()) {
    Zigzag z(smash(s.target(), q));
    z.backward(smash_maps(s, idq), how);
    return z;
  }
  Zigzag z(smash(s.target(), q));
  z.backward(smash_maps(last_vertex_map(s.target()), idq), Certify::Trusted);
  z.backward(smash_maps(subdivide_map(s), idq), how);
  z.forward(smash_maps(last_vertex_map(s.source()), idq));
  return z;
}

}  // namespace

Zigzag smash_right(const PairMap& f, const SPair& q) {
  PairMap idq = PairMap::identity(q);
  if (f.order_compatible()) return Zigzag::from_map(smash_maps(f, idq));
  Zigzag z(smash(f.source(), q));
  z.backward(smash_maps(last_vertex_map(f.source()), idq), Certify::Trusted);
  z.forward(smash_maps(subdivide_map(f), idq));
  z.forward(smash_maps(last_vertex_map(f.target()), idq));
  return z;
}

Zigzag smash_right(const Zigzag& z, const SPair& q) {
  Zigzag out(smash(z.source(), q));
  for (const Arrow& a : z.arrows()) {
    if (a.dir == Direction::Forward) out.append(smash_right(a.map, q));
    else out.append(smash_backward(a.map, q, a.certified));
  }
  return out;
}

}  // namespace noriq
