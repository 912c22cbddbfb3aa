#include <algorithm>
#include <mutex>

#include "internal.hpp"

namespace noriq {

namespace detail {

CochainEngine::CochainEngine(const OrderedComplex& total, const std::vector<bool>& sub) {
  position_.assign(total.size(), -1);
  for (int k = 0; k <= total.dimension(); ++k) {
    std::vector<std::size_t> sup;
    for (std::size_t idx : total.simplices_of_dim(k)) {
      if (sub[idx]) continue;
      position_[idx] = static_cast<long>(sup.size());
      sup.push_back(idx);
    }
    support_.push_back(std::move(sup));
  }
  while (!support_.empty() && support_.back().empty()) support_.pop_back();

  const std::size_t degrees = support_.size();
  reps_.resize(degrees);
  rep_by_top_.resize(degrees);
  boundary_by_top_.resize(degrees + 1);

  for (std::size_t k = 0; k < degrees; ++k) {
    const std::size_t n = support_[k].size();
    std::vector<SparseVec> cols(n);
    if (k + 1 < degrees) {
      const auto& upper = support_[k + 1];
      for (std::size_t r = 0; r < upper.size(); ++r) {
        const Simplex& tau = total.simplices()[upper[r]];
        for (std::size_t i = 0; i < tau.size(); ++i) {
          Simplex face = tau;
          face.erase(face.begin() + static_cast<long>(i));
          long p = position_[static_cast<std::size_t>(total.simplex_index(face))];
          if (p >= 0) cols[static_cast<std::size_t>(p)].emplace_back(r, i % 2 ? -1 : 1);
        }
      }
    }

    std::unordered_map<std::size_t, std::size_t> pivot_of_low;
    std::vector<SparseVec> R(n), V(n);
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec r = std::move(cols[j]);
      SparseVec v{{j, Rational(1)}};
      while (!r.empty()) {
        auto it = pivot_of_low.find(r.back().first);
        if (it == pivot_of_low.end()) break;
        const std::size_t i = it->second;
        Rational f = r.back().second / R[i].back().second;
        r = sparse_axpy(r, f, R[i]);
        v = sparse_axpy(v, f, V[i]);
      }
      if (r.empty()) {
        if (!boundary_by_top_[k].count(j)) {
          rep_by_top_[k].emplace(j, reps_[k].size());
          reps_[k].push_back(v);
        }
      } else {
        pivot_of_low.emplace(r.back().first, j);
        boundary_by_top_[k + 1].emplace(r.back().first, r);
        R[j] = std::move(r);
        V[j] = std::move(v);
      }
    }
  }
}

const std::vector<std::size_t>& CochainEngine::support(int n) const {
  static const std::vector<std::size_t> none;
  if (n < 0 || n >= static_cast<int>(support_.size())) return none;
  return support_[static_cast<std::size_t>(n)];
}

std::size_t CochainEngine::dim(int n) const { return reps(n).size(); }

const std::vector<SparseVec>& CochainEngine::reps(int n) const {
  static const std::vector<SparseVec> none;
  if (n < 0 || n >= static_cast<int>(reps_.size())) return none;
  return reps_[static_cast<std::size_t>(n)];
}

std::vector<Rational> CochainEngine::coordinates(int n, SparseVec z) const {
  std::vector<Rational> c(dim(n));
  if (z.empty()) return c;
  if (n < 0 || n >= static_cast<int>(reps_.size())) throw TopologyError("not a cocycle");
  const auto k = static_cast<std::size_t>(n);
  while (!z.empty()) {
    const std::size_t t = z.back().first;
    const Rational lead = z.back().second;
    if (auto b = boundary_by_top_[k].find(t); b != boundary_by_top_[k].end()) {
      z = sparse_axpy(z, lead / b->second.back().second, b->second);
    } else if (auto e = rep_by_top_[k].find(t); e != rep_by_top_[k].end()) {
      c[e->second] = lead;
      z = sparse_axpy(z, lead, reps_[k][e->second]);
    } else {
      throw TopologyError("not a cocycle");
    }
  }
  return c;
}

RatMatrix CochainEngine::basis_matrix(int n) const {
  const auto& r = reps(n);
  RatMatrix m(support(n).size(), r.size());
  for (std::size_t j = 0; j < r.size(); ++j)
    for (const auto& [i, x] : r[j]) m(i, j) = x;
  return m;
}

}  // namespace detail

namespace {

std::shared_ptr<const detail::CochainEngine> cached_engine(const detail::PairData& d) {
  static std::mutex mu;
  static std::unordered_map<std::string, std::weak_ptr<const detail::CochainEngine>> cache;
  static std::size_t purge_at = 256;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d.fingerprint);
    if (it != cache.end())
      if (auto e = it->second.lock()) return e;
  }
  auto e = std::make_shared<const detail::CochainEngine>(d.total, d.mask);
  std::lock_guard<std::mutex> lock(mu);
  cache[d.fingerprint] = e;
  if (cache.size() >= purge_at) {
    std::erase_if(cache, [](const auto& kv) { return kv.second.expired(); });
    purge_at = std::max<std::size_t>(256, 2 * cache.size());
  }
  return e;
}

}  // namespace

const detail::CochainEngine& SPair::engine() const {
  std::call_once(d_->once, [this] { d_->engine = cached_engine(*d_); });
  return *d_->engine;
}

CohomologyBasis relative_cohomology(const SPair& p, int n) {
  if (n < 0) throw TopologyError("negative degree");
  const auto& e = p.engine();
  CohomologyBasis b;
  b.pair = p;
  b.degree = n;
  b.dim = e.dim(n);
  b.cochain_support = e.support(n);
  b.basis = e.basis_matrix(n);
  return b;
}

std::size_t cohomology_dim(const SPair& p, int n) { return p.engine().dim(n); }

RatMatrix cohomology_coordinates(const SPair& p, int n, const RatMatrix& cocycles) {
  const auto& e = p.engine();
  if (cocycles.rows() != e.support(n).size()) throw TopologyError("cochain length mismatch");
  RatMatrix out(e.dim(n), cocycles.cols());
  for (std::size_t j = 0; j < cocycles.cols(); ++j) {
    std::vector<Rational> c = e.coordinates(n, to_sparse(cocycles.col(j)));
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

int top_degree(const SPair& p) { return p.engine().top_degree(); }

RatMatrix induced_map(const PairMap& f, int n) {
  const auto& se = f.source().engine();
  const auto& te = f.target().engine();
  RatMatrix m(se.dim(n), te.dim(n));
  if (m.empty()) return m;
  const OrderedComplex& src = f.source().total();
  const OrderedComplex& tgt = f.target().total();
  const auto& ssup = se.support(n);
  std::vector<std::pair<long, int>> pull(ssup.size(), {-1, 0});
  for (std::size_t pos = 0; pos < ssup.size(); ++pos) {
    auto [img, sign] = oriented_image(src.simplices()[ssup[pos]], f.vertex_map());
    if (sign == 0) continue;
    pull[pos] = {te.position(static_cast<std::size_t>(tgt.simplex_index(img))), sign};
  }
  const auto& reps = te.reps(n);
  const std::size_t tn = te.support(n).size();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    std::vector<Rational> dense = to_dense(reps[c], tn);
    SparseVec v;
    for (std::size_t pos = 0; pos < ssup.size(); ++pos) {
      auto [p, sign] = pull[pos];
      if (p < 0 || sgn(dense[static_cast<std::size_t>(p)]) == 0) continue;
      v.emplace_back(pos, sign > 0 ? dense[static_cast<std::size_t>(p)] : Rational(-dense[static_cast<std::size_t>(p)]));
    }
    std::vector<Rational> coords = se.coordinates(n, std::move(v));
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, c) = coords[i];
  }
  return m;
}

bool is_cohomology_equivalence(const PairMap& f) {
  const int top = std::max(top_degree(f.source()), top_degree(f.target()));
  for (int n = 0; n <= top; ++n) {
    if (cohomology_dim(f.source(), n) != cohomology_dim(f.target(), n)) return false;
    RatMatrix m = induced_map(f, n);
    if (!m.empty() && !is_invertible(m)) return false;
  }
  return true;
}

RatMatrix connecting_map(const Triple& t, int n) {
  SPair yz = t.pair_yz(), xy = t.pair_xy();
  const auto& ey = yz.engine();
  const auto& ex = xy.engine();
  RatMatrix m(ex.dim(n), n >= 1 ? ey.dim(n - 1) : 0);
  if (m.empty()) return m;
  const OrderedComplex& X = t.outer();
  const OrderedComplex& Y = yz.total();
  std::vector<long> ytox = embed_simplices(Y, X);
  std::vector<long> xpos(X.size(), -1);
  for (std::size_t i = 0; i < Y.size(); ++i)
    if (static_cast<int>(Y.simplices()[i].size()) == n) xpos[static_cast<std::size_t>(ytox[i])] = ey.position(i);

  const auto& xsup = ex.support(n);
  const std::size_t yn = ey.support(n - 1).size();
  const auto& reps = ey.reps(n - 1);
  for (std::size_t c = 0; c < reps.size(); ++c) {
    // extend by zero off Y, then take the coboundary in X
    std::vector<Rational> phi = to_dense(reps[c], yn);
    SparseVec v;
    for (std::size_t pos = 0; pos < xsup.size(); ++pos) {
      const Simplex& tau = X.simplices()[xsup[pos]];
      Rational acc;
      for (std::size_t i = 0; i < tau.size(); ++i) {
        Simplex face = tau;
        face.erase(face.begin() + static_cast<long>(i));
        long p = xpos[static_cast<std::size_t>(X.simplex_index(face))];
        if (p < 0) continue;
        if (i % 2) acc -= phi[static_cast<std::size_t>(p)];
        else acc += phi[static_cast<std::size_t>(p)];
      }
      if (sgn(acc) != 0) v.emplace_back(pos, std::move(acc));
    }
    std::vector<Rational> coords = ex.coordinates(n, std::move(v));
    for (std::size_t i = 0; i < coords.size(); ++i) m(i, c) = coords[i];
  }
  return m;
}

LongExactReport long_exact_triple(const Triple& t) {
  SPair xy = t.pair_xy(), xz = t.pair_xz(), yz = t.pair_yz();
  std::vector<int> id(t.outer().num_vertices());
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<int>(v);
  PairMap j(xz, xy, id);
  std::vector<int> incl;
  for (const auto& label : yz.total().vertices()) incl.push_back(static_cast<int>(t.outer().vertex_index(label)));
  PairMap i(yz, xz, incl);

  LongExactReport rep;
  rep.max_degree = std::max({top_degree(xy), top_degree(xz), top_degree(yz)}) + 1;
  for (int n = 0; n <= rep.max_degree + 1; ++n) {
    rep.dims_xy.push_back(cohomology_dim(xy, n));
    rep.dims_xz.push_back(cohomology_dim(xz, n));
    rep.dims_yz.push_back(cohomology_dim(yz, n));
    rep.connecting_maps.push_back(connecting_map(t, n));
    rep.inclusion_maps.push_back(induced_map(j, n));
    rep.restrict_maps.push_back(induced_map(i, n));
  }
  auto fail = [&rep](const std::string& slot) {
    if (rep.exact) rep.first_failure = slot;
    rep.exact = false;
  };
  for (int n = 0; n <= rep.max_degree; ++n) {
    const auto k = static_cast<std::size_t>(n);
    if (!(image_basis(rep.connecting_maps[k]) == kernel_basis(rep.inclusion_maps[k])))
      fail("H^" + std::to_string(n) + "(X,Y)");
    if (!(image_basis(rep.inclusion_maps[k]) == kernel_basis(rep.restrict_maps[k])))
      fail("H^" + std::to_string(n) + "(X,Z)");
    if (!(image_basis(rep.restrict_maps[k]) == kernel_basis(rep.connecting_maps[k + 1])))
      fail("H^" + std::to_string(n) + "(Y,Z)");
    long term = static_cast<long>(rep.dims_xy[k]) - static_cast<long>(rep.dims_xz[k]) +
                static_cast<long>(rep.dims_yz[k]);
    rep.euler_sum += n % 2 ? -term : term;
  }
  return rep;
}

}  // namespace noriq
