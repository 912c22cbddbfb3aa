#include "noriq_cli/generators.hpp"

#include <algorithm>
#include <set>

namespace noriq::gen {

std::size_t below(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

long between(Rng& rng, long lo, long hi) { return lo + static_cast<long>(below(rng, static_cast<std::size_t>(hi - lo + 1))); }

bool coin(Rng& rng, std::size_t num, std::size_t den) { return below(rng, den) < num; }

namespace {

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  return v;
}

// Random subset of 1..k vertices, sorted.
std::vector<int> random_face(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  for (std::size_t i = 0; i + 1 < n; ++i) std::swap(all[i], all[i + below(rng, n - i)]);
  all.resize(std::min(n, k));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

OrderedComplex random_complex(Rng& rng, std::size_t vertices, std::size_t facets, int max_dim) {
  std::vector<Simplex> fs;
  for (std::size_t f = 0; f < facets; ++f)
    fs.push_back(random_face(rng, vertices, 1 + below(rng, static_cast<std::size_t>(max_dim) + 1)));
  return OrderedComplex::from_index_facets(vertex_names(vertices), fs);
}

std::vector<std::vector<std::string>> random_subcomplex(Rng& rng, const OrderedComplex& c) {
  const auto& simplices = c.simplices();
  std::vector<std::vector<std::string>> out{c.labels(simplices[below(rng, c.num_vertices())])};
  std::size_t extra = below(rng, 3);
  for (std::size_t i = 0; i < extra; ++i) out.push_back(c.labels(simplices[below(rng, simplices.size())]));
  return out;
}

SPair random_pair(Rng& rng, std::size_t max_vertices, int max_dim) {
  std::size_t n = 2 + below(rng, std::max<std::size_t>(max_vertices, 2) - 1);
  OrderedComplex c = random_complex(rng, n, 1 + below(rng, n + 1), max_dim);
  return SPair::from_labels(c, random_subcomplex(rng, c));
}

Triple random_triple(Rng& rng, std::size_t max_vertices, int max_dim) {
  std::size_t n = 2 + below(rng, std::max<std::size_t>(max_vertices, 2) - 1);
  OrderedComplex c = random_complex(rng, n, 1 + below(rng, n + 1), max_dim);
  auto inner = random_subcomplex(rng, c);
  auto middle = inner;
  for (auto& f : random_subcomplex(rng, c)) middle.push_back(f);
  return Triple::from_labels(c, middle, inner);
}

SPair random_suspension_base(Rng& rng, std::size_t max_simplices) {
  for (;;) {
    SPair p = random_pair(rng, 5, 2);
    if (suspension(p).total().size() <= max_simplices) return p;
  }
}

PairMap random_endomorphism(Rng& rng, const SPair& p, int attempts) {
  const OrderedComplex& c = p.total();
  std::size_t n = c.num_vertices();
  std::vector<int> sub_vertices;
  for (std::size_t v = 0; v < n; ++v)
    if (p.in_sub(static_cast<std::size_t>(c.simplex_index({static_cast<int>(v)})))) sub_vertices.push_back(static_cast<int>(v));
  for (int t = 0; t < attempts; ++t) {
    std::vector<int> vm(n);
    bool into_sub = coin(rng);
    for (std::size_t v = 0; v < n; ++v) {
      bool sub = std::binary_search(sub_vertices.begin(), sub_vertices.end(), static_cast<int>(v));
      vm[v] = (sub || into_sub) ? sub_vertices[below(rng, sub_vertices.size())] : static_cast<int>(below(rng, n));
    }
    try {
      return PairMap(p, p, vm);
    } catch (const TopologyError&) {
    }
  }
  return PairMap::identity(p);
}

PairMap random_pointed_map(Rng& rng, std::size_t from, std::size_t to) {
  std::vector<int> vm(from + 1, 0);
  for (std::size_t i = 1; i <= from; ++i) vm[i] = static_cast<int>(below(rng, to + 1));
  return PairMap(points_pair(from), points_pair(to), vm);
}

Zigzag random_endo_zigzag(Rng& rng, const SuspensionWitness& w, int depth) {
  std::size_t choices = depth > 0 ? 6 : 4;
  switch (below(rng, choices)) {
    case 0:
      return Zigzag(w.pair);
    case 1:
      return inversion(w);
    case 2:
      return Zigzag::from_map(PairMap::constant(w.pair, w.pair));
    case 3: {
      // w.pair is base smashed with the interval pair when the witness comes from of().
      Zigzag z = smash_right(random_endomorphism(rng, w.base), interval_pair());
      Zigzag out = Zigzag::from_map(w.iso);
      out.append(z);
      return out.backward(w.iso, Certify::Trusted);
    }
    case 4:
      return negate(random_endo_zigzag(rng, w, depth - 1), w);
    default:
      return cogroup_sum(random_endo_zigzag(rng, w, depth - 1), random_endo_zigzag(rng, w, depth - 1), w);
  }
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = between(rng, -bound, bound);
  return m;
}

RatMatrix random_structured_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  switch (below(rng, 5)) {
    case 0:
      return m;
    case 1:
      for (std::size_t i = 0; i < std::min(rows, cols); ++i) m(i, i) = 1;
      return m;
    case 2:
      for (std::size_t i = 0; i < rows && i + 1 < cols; ++i) m(i, i + 1) = between(rng, 1, 2);
      return m;
    case 3: {
      std::vector<long> u(rows), v(cols);
      for (auto& x : u) x = between(rng, -1, 2);
      for (auto& x : v) x = between(rng, -1, 2);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = u[i] * v[j];
      return m;
    }
    default:
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = coin(rng, 1, 3) ? between(rng, -2, 2) : 0;
      return m;
  }
}

QuiverRep random_abstract_quiver(Rng& rng, const AbstractQuiverOptions& opt) {
  std::size_t count = 1 + below(rng, opt.max_objects);
  std::size_t budget = std::max(opt.max_total_dim, count);
  std::vector<QObject> objects;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t left = budget - (count - i - 1);
    std::size_t dim = 1 + below(rng, std::min<std::size_t>(left, 3));
    budget -= dim;
    objects.push_back(QObject::abstract_object("q" + std::to_string(i), dim, static_cast<int>(below(rng, opt.degrees)),
                                               static_cast<int>(below(rng, opt.twists))));
  }
  std::vector<QMorphism> morphisms;
  std::size_t wanted = below(rng, opt.max_morphisms + 1);
  for (std::size_t t = 0; t < 8 * wanted + 8 && morphisms.size() < wanted; ++t) {
    const QObject& p = objects[below(rng, count)];
    const QObject& q = objects[below(rng, count)];
    MorphismKind kind;
    if (p.degree == q.degree && p.twist == q.twist) {
      kind = MorphismKind::A;
    } else if (p.degree + 1 == q.degree && p.twist == q.twist) {
      kind = MorphismKind::B;
    } else if (p.degree == q.degree + 1 && p.twist == q.twist + 1) {
      kind = MorphismKind::C;
    } else {
      continue;
    }
    morphisms.push_back(QMorphism::with_matrix("f" + std::to_string(morphisms.size()), kind, p.id, q.id,
                                               random_structured_matrix(rng, q.abstract_dim, p.abstract_dim)));
  }
  return QuiverRep(std::move(objects), std::move(morphisms));
}

QuiverRep random_geometric_quiver(Rng& rng, const GeometricQuiverOptions& opt) {
  std::size_t count = 1 + below(rng, opt.max_objects);
  std::vector<QObject> objects;
  std::vector<std::size_t> points;
  std::vector<SuspensionWitness> witnesses;
  std::vector<QMorphism> morphisms;
  for (std::size_t i = 0; i < count; ++i) {
    points.push_back(1 + below(rng, opt.max_points));
    witnesses.push_back(SuspensionWitness::of(points_pair(points.back())));
    objects.push_back(QObject::geometric_object("s" + std::to_string(i), witnesses.back().pair, 1));
  }
  SPair I = interval_pair();
  for (std::size_t i = 0; i < count; ++i) {
    if (coin(rng, 2, 3))
      morphisms.push_back(QMorphism::with_zigzag("e" + std::to_string(i), objects[i].id, objects[i].id,
                                                 random_endo_zigzag(rng, witnesses[i], 0)));
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !coin(rng)) continue;
      // rho runs s_i -> s_j, so the map runs from the pair of s_j to the pair of s_i.
      Zigzag z = smash_right(random_pointed_map(rng, points[j], points[i]), I);
      morphisms.push_back(QMorphism::with_zigzag("m" + std::to_string(i) + std::to_string(j), objects[i].id,
                                                 objects[j].id, z));
    }
  }
  if (opt.twist) {
    objects.push_back(QObject::geometric_object("t", smash(witnesses[0].pair, I), 2, 1));
    morphisms.push_back(QMorphism::tate("k", "t", objects[0].id));
  }
  if (opt.triple) {
    Triple t = random_triple(rng, 4, 1);
    int n = 1 + static_cast<int>(below(rng, 2));
    objects.push_back(QObject::geometric_object("yz", t.pair_yz(), n - 1));
    objects.push_back(QObject::geometric_object("xy", t.pair_xy(), n));
    morphisms.push_back(QMorphism::with_triple("d", "yz", "xy", t));
  }
  return QuiverRep(std::move(objects), std::move(morphisms));
}

MapFamily random_map_family(Rng& rng) {
  MapFamily fam;
  std::size_t count = 1 + below(rng, 3);
  if (coin(rng)) {
    std::size_t d = 1 + below(rng, 3);
    SuspensionWitness w = SuspensionWitness::of(points_pair(d));
    fam.target = w.pair;
    fam.degree = 1;
    for (std::size_t k = 0; k < count; ++k) {
      switch (below(rng, 3)) {
        case 0:
          fam.maps.push_back(smash_right(random_pointed_map(rng, 1 + below(rng, 3), d), interval_pair()));
          break;
        case 1:
          fam.maps.push_back(random_endo_zigzag(rng, w, 1));
          break;
        default:
          fam.maps.push_back(Zigzag::from_map(PairMap::constant(random_pair(rng, 4, 1), w.pair)));
      }
    }
    return fam;
  }
  // Inclusions of random subpairs of a random pair.
  SPair x = random_pair(rng, 6, 2);
  fam.target = x;
  fam.degree = static_cast<int>(below(rng, static_cast<std::size_t>(std::max(top_degree(x), 0)) + 1));
  const OrderedComplex& c = x.total();
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::vector<std::string>> facets = random_subcomplex(rng, c);
    for (auto& f : random_subcomplex(rng, x.sub())) facets.push_back(f);
    std::set<std::string> used;
    for (auto& f : facets) used.insert(f.begin(), f.end());
    std::vector<std::string> vertices;
    for (const auto& v : c.vertices())
      if (used.count(v)) vertices.push_back(v);
    OrderedComplex a = OrderedComplex::from_facets(vertices, facets);
    std::vector<bool> mask(a.size());
    std::vector<std::vector<std::string>> sub_facets;
    for (std::size_t s = 0; s < a.size(); ++s) {
      std::vector<std::string> labels = a.labels(a.simplices()[s]);
      std::vector<int> idx;
      for (const auto& l : labels) idx.push_back(static_cast<int>(c.vertex_index(l)));
      long at = c.simplex_index(idx);
      if (x.in_sub(static_cast<std::size_t>(at))) sub_facets.push_back(labels);
    }
    SPair ap = SPair::from_labels(a, sub_facets);
    std::map<std::string, std::string> id;
    for (const auto& v : vertices) id[v] = v;
    fam.maps.push_back(Zigzag::from_map(PairMap::from_labels(ap, x, id)));
  }
  return fam;
}

}  // namespace noriq::gen
