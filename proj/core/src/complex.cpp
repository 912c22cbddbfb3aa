#include <algorithm>
#include <set>

#include "internal.hpp"

namespace noriq {

namespace {

std::shared_ptr<detail::ComplexData> build_complex(std::vector<std::string> vertices,
                                                   const std::vector<Simplex>& facets) {
  auto d = std::make_shared<detail::ComplexData>();
  d->vertices = std::move(vertices);
  for (std::size_t i = 0; i < d->vertices.size(); ++i)
    if (!d->vindex.emplace(d->vertices[i], static_cast<int>(i)).second)
      throw TopologyError("duplicate vertex label '" + d->vertices[i] + "'");

  std::set<Simplex> all;
  for (std::size_t v = 0; v < d->vertices.size(); ++v) all.insert({static_cast<int>(v)});
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty()) continue;
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw TopologyError("simplex with a repeated vertex");
    if (f.front() < 0 || f.back() >= static_cast<int>(d->vertices.size()))
      throw TopologyError("simplex vertex out of range");
    if (f.size() > 24) throw TopologyError("simplex dimension too large");
    const std::size_t k = f.size();
    for (std::size_t bits = 1; bits < (std::size_t{1} << k); ++bits) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i)
        if (bits >> i & 1) face.push_back(f[i]);
      all.insert(std::move(face));
    }
  }
  d->simplices.assign(all.begin(), all.end());
  std::stable_sort(d->simplices.begin(), d->simplices.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  for (std::size_t i = 0; i < d->simplices.size(); ++i) {
    const Simplex& s = d->simplices[i];
    d->sindex.emplace(s, i);
    if (d->by_dim.size() < s.size()) d->by_dim.resize(s.size());
    d->by_dim[s.size() - 1].push_back(i);
  }
  return d;
}

void check_face_closed(const OrderedComplex& c, const std::vector<bool>& mask, const char* what) {
  if (mask.size() != c.size()) throw TopologyError(std::string(what) + ": mask size mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!mask[i]) continue;
    const Simplex& s = c.simplices()[i];
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(j));
      if (!mask[static_cast<std::size_t>(c.simplex_index(face))])
        throw TopologyError(std::string(what) + " is not face-closed");
    }
  }
}

std::vector<bool> close_label_facets(const OrderedComplex& c,
                                     const std::vector<std::vector<std::string>>& facets) {
  std::vector<bool> mask(c.size(), false);
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& label : f) {
      long v = c.vertex_index(label);
      if (v < 0) throw TopologyError("unknown vertex '" + label + "'");
      s.push_back(static_cast<int>(v));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (c.simplex_index(s) < 0) throw TopologyError("subcomplex simplex missing from the total");
    const std::size_t k = s.size();
    for (std::size_t bits = 1; bits < (std::size_t{1} << k); ++bits) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i)
        if (bits >> i & 1) face.push_back(s[i]);
      mask[static_cast<std::size_t>(c.simplex_index(face))] = true;
    }
  }
  return mask;
}

}  // namespace

// ---------------------------------------------------------------- OrderedComplex

OrderedComplex::OrderedComplex() : d_(build_complex({}, {})) {}

OrderedComplex OrderedComplex::from_facets(std::vector<std::string> vertices,
                                           const std::vector<std::vector<std::string>>& facets) {
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx.emplace(vertices[i], static_cast<int>(i));
  std::vector<Simplex> fs;
  fs.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& label : f) {
      auto it = idx.find(label);
      if (it == idx.end()) throw TopologyError("unknown vertex '" + label + "'");
      s.push_back(it->second);
    }
    fs.push_back(std::move(s));
  }
  return OrderedComplex(build_complex(std::move(vertices), fs));
}

OrderedComplex OrderedComplex::from_index_facets(std::vector<std::string> vertices,
                                                 const std::vector<Simplex>& facets) {
  return OrderedComplex(build_complex(std::move(vertices), facets));
}

const std::vector<std::string>& OrderedComplex::vertices() const { return d_->vertices; }
std::size_t OrderedComplex::num_vertices() const { return d_->vertices.size(); }
const std::vector<Simplex>& OrderedComplex::simplices() const { return d_->simplices; }
std::size_t OrderedComplex::size() const { return d_->simplices.size(); }
int OrderedComplex::dimension() const { return static_cast<int>(d_->by_dim.size()) - 1; }

long OrderedComplex::vertex_index(const std::string& label) const {
  auto it = d_->vindex.find(label);
  return it == d_->vindex.end() ? -1 : it->second;
}

long OrderedComplex::simplex_index(const Simplex& s) const {
  auto it = d_->sindex.find(s);
  return it == d_->sindex.end() ? -1 : static_cast<long>(it->second);
}

const std::vector<std::size_t>& OrderedComplex::simplices_of_dim(int k) const {
  static const std::vector<std::size_t> none;
  if (k < 0 || k >= static_cast<int>(d_->by_dim.size())) return none;
  return d_->by_dim[static_cast<std::size_t>(k)];
}

std::vector<std::string> OrderedComplex::labels(const Simplex& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(d_->vertices.at(static_cast<std::size_t>(v)));
  return out;
}

OrderedComplex OrderedComplex::restrict_to(const std::vector<bool>& mask) const {
  if (mask.size() != size()) throw TopologyError("restrict_to: mask size mismatch");
  std::vector<int> renum(num_vertices(), -1);
  std::vector<std::string> verts;
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    if (mask[static_cast<std::size_t>(simplex_index({static_cast<int>(v)}))]) {
      renum[v] = static_cast<int>(verts.size());
      verts.push_back(d_->vertices[v]);
    }
  }
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!mask[i]) continue;
    Simplex s;
    for (int v : d_->simplices[i]) {
      if (renum[static_cast<std::size_t>(v)] < 0) throw TopologyError("restrict_to: mask not face-closed");
      s.push_back(renum[static_cast<std::size_t>(v)]);
    }
    facets.push_back(std::move(s));
  }
  return OrderedComplex(build_complex(std::move(verts), facets));
}

std::vector<bool> OrderedComplex::mask_of(const OrderedComplex& sub) const {
  std::vector<long> idx = embed_simplices(sub, *this);
  std::vector<bool> mask(size(), false);
  for (long i : idx) {
    if (i < 0) throw TopologyError("mask_of: not a subcomplex");
    mask[static_cast<std::size_t>(i)] = true;
  }
  return mask;
}

bool OrderedComplex::operator==(const OrderedComplex& o) const {
  return d_ == o.d_ || (d_->vertices == o.d_->vertices && d_->simplices == o.d_->simplices);
}

std::vector<long> embed_simplices(const OrderedComplex& from, const OrderedComplex& to) {
  std::vector<int> vmap(from.num_vertices());
  for (std::size_t v = 0; v < from.num_vertices(); ++v) {
    long w = to.vertex_index(from.vertices()[v]);
    vmap[v] = static_cast<int>(w);
  }
  std::vector<long> out(from.size(), -1);
  for (std::size_t i = 0; i < from.size(); ++i) {
    Simplex s;
    bool ok = true;
    for (int v : from.simplices()[i]) {
      int w = vmap[static_cast<std::size_t>(v)];
      if (w < 0) {
        ok = false;
        break;
      }
      s.push_back(w);
    }
    if (!ok) continue;
    std::sort(s.begin(), s.end());
    out[i] = to.simplex_index(s);
  }
  return out;
}

std::pair<Simplex, int> oriented_image(const Simplex& s, const std::vector<int>& vmap) {
  Simplex img;
  img.reserve(s.size());
  for (int v : s) img.push_back(vmap[static_cast<std::size_t>(v)]);
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < img.size(); ++i)
    for (std::size_t j = i; j > 0 && img[j - 1] > img[j]; --j) {
      std::swap(img[j - 1], img[j]);
      sign = -sign;
    }
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return {std::move(img), 0};
  }
  return {std::move(img), sign};
}

// ---------------------------------------------------------------- SPair

SPair::SPair() : SPair(OrderedComplex::from_facets({"*"}, {}), {true}) {}

SPair::SPair(OrderedComplex total, std::vector<bool> sub_mask) {
  check_face_closed(total, sub_mask, "subcomplex");
  if (std::find(sub_mask.begin(), sub_mask.end(), true) == sub_mask.end())
    throw TopologyError("subcomplex must be nonempty");
  d_ = std::make_shared<detail::PairData>();
  d_->total = std::move(total);
  d_->mask = std::move(sub_mask);
  d_->relative_size = static_cast<std::size_t>(std::count(d_->mask.begin(), d_->mask.end(), false));
  std::string& fp = d_->fingerprint;
  for (const auto& v : d_->total.vertices()) {
    fp += v;
    fp += '\x1f';
  }
  fp += '\x1e';
  const auto& simp = d_->total.simplices();
  for (std::size_t i = 0; i < simp.size(); ++i) {
    for (int v : simp[i]) {
      fp += std::to_string(v);
      fp += ',';
    }
    fp += d_->mask[i] ? 's' : 'r';
  }
}

SPair SPair::from_labels(const OrderedComplex& total,
                         const std::vector<std::vector<std::string>>& sub_facets) {
  return SPair(total, close_label_facets(total, sub_facets));
}

const OrderedComplex& SPair::total() const { return d_->total; }
OrderedComplex SPair::sub() const { return d_->total.restrict_to(d_->mask); }
const std::vector<bool>& SPair::sub_mask() const { return d_->mask; }
bool SPair::in_sub(std::size_t simplex) const { return d_->mask[simplex]; }
std::size_t SPair::relative_size() const { return d_->relative_size; }
const std::string& SPair::fingerprint() const { return d_->fingerprint; }

bool SPair::operator==(const SPair& o) const {
  return d_ == o.d_ || d_->fingerprint == o.d_->fingerprint;
}

// ---------------------------------------------------------------- PairMap

PairMap::PairMap(SPair source, SPair target, std::vector<int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
  const OrderedComplex& s = source_.total();
  const OrderedComplex& t = target_.total();
  if (map_.size() != s.num_vertices()) throw TopologyError("vertex map has the wrong size");
  for (int w : map_)
    if (w < 0 || w >= static_cast<int>(t.num_vertices()))
      throw TopologyError("vertex map leaves the target");
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex img = oriented_image(s.simplices()[i], map_).first;
    long j = t.simplex_index(img);
    if (j < 0) throw TopologyError("image of a simplex is not a simplex of the target");
    if (source_.in_sub(i) && !target_.in_sub(static_cast<std::size_t>(j)))
      throw TopologyError("map does not carry the sub into the sub");
  }
}

PairMap PairMap::from_labels(const SPair& source, const SPair& target,
                             const std::map<std::string, std::string>& vertex_map) {
  std::vector<int> m;
  for (const auto& v : source.total().vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) throw TopologyError("vertex map misses '" + v + "'");
    long w = target.total().vertex_index(it->second);
    if (w < 0) throw TopologyError("vertex map target '" + it->second + "' unknown");
    m.push_back(static_cast<int>(w));
  }
  return PairMap(source, target, std::move(m));
}

PairMap PairMap::identity(const SPair& p) {
  std::vector<int> m(p.total().num_vertices());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
  return PairMap(p, p, std::move(m));
}

PairMap PairMap::constant(const SPair& source, const SPair& target) {
  const OrderedComplex& t = target.total();
  for (std::size_t v = 0; v < t.num_vertices(); ++v) {
    if (target.in_sub(static_cast<std::size_t>(t.simplex_index({static_cast<int>(v)})))) {
      return PairMap(source, target, std::vector<int>(source.total().num_vertices(), static_cast<int>(v)));
    }
  }
  throw TopologyError("target has an empty sub");
}

bool PairMap::order_compatible() const {
  for (const Simplex& s : source_.total().simplices())
    for (std::size_t i = 1; i < s.size(); ++i)
      if (map_[static_cast<std::size_t>(s[i - 1])] > map_[static_cast<std::size_t>(s[i])]) return false;
  return true;
}

bool PairMap::is_identity() const {
  if (source_ != target_) return false;
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

bool PairMap::injective() const {
  std::vector<int> m = map_;
  std::sort(m.begin(), m.end());
  return std::adjacent_find(m.begin(), m.end()) == m.end();
}

PairMap compose(const PairMap& g, const PairMap& f) {
  if (f.target() != g.source()) throw TopologyError("compose: maps do not chain");
  std::vector<int> m(f.vertex_map().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = g.vertex_map()[static_cast<std::size_t>(f.vertex_map()[i])];
  return PairMap(f.source(), g.target(), std::move(m));
}

// ---------------------------------------------------------------- Triple

Triple::Triple(OrderedComplex outer, std::vector<bool> middle, std::vector<bool> inner)
    : outer_(std::move(outer)), middle_(std::move(middle)), inner_(std::move(inner)) {
  check_face_closed(outer_, middle_, "middle");
  check_face_closed(outer_, inner_, "inner");
  bool any = false;
  for (std::size_t i = 0; i < outer_.size(); ++i) {
    if (inner_[i] && !middle_[i]) throw TopologyError("inner is not contained in middle");
    any = any || inner_[i];
  }
  if (!any) throw TopologyError("inner must be nonempty");
}

Triple Triple::from_labels(const OrderedComplex& outer,
                           const std::vector<std::vector<std::string>>& middle_facets,
                           const std::vector<std::vector<std::string>>& inner_facets) {
  return Triple(outer, close_label_facets(outer, middle_facets),
                close_label_facets(outer, inner_facets));
}

SPair Triple::pair_xy() const { return SPair(outer_, middle_); }
SPair Triple::pair_xz() const { return SPair(outer_, inner_); }

SPair Triple::pair_yz() const {
  OrderedComplex y = outer_.restrict_to(middle_);
  std::vector<long> idx = embed_simplices(y, outer_);
  std::vector<bool> mask(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) mask[i] = inner_[static_cast<std::size_t>(idx[i])];
  return SPair(std::move(y), std::move(mask));
}

}  // namespace noriq
