// Shared test helpers: labelled random pairs fed both to the library and to the oracle.
#pragma once

#include "noriq_cli/generators.hpp"
#include "oracle/oracle.hpp"

namespace support {

using noriq::gen::Rng;

inline oracle::Pair random_labelled_pair(Rng& rng, std::size_t max_vertices = 6, int max_dim = 2) {
  using noriq::gen::below;
  oracle::Pair p;
  std::size_t n = 2 + below(rng, max_vertices - 1);
  for (std::size_t i = 0; i < n; ++i) p.vertices.push_back("v" + std::to_string(i));
  std::size_t facets = 1 + below(rng, n + 1);
  for (std::size_t f = 0; f < facets; ++f) {
    std::vector<std::string> s;
    for (std::size_t v = 0; v < n; ++v)
      if (noriq::gen::coin(rng, 1, 2)) s.push_back(p.vertices[v]);
    if (s.empty()) s.push_back(p.vertices[below(rng, n)]);
    while (s.size() > static_cast<std::size_t>(max_dim) + 1) s.erase(s.begin() + static_cast<long>(below(rng, s.size())));
    p.facets.push_back(s);
  }
  // Sub: a vertex plus faces of some facets.
  p.sub_facets.push_back({p.vertices[below(rng, n)]});
  std::size_t extra = below(rng, 3);
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<std::string> face = p.facets[below(rng, p.facets.size())];
    if (face.size() > 1 && noriq::gen::coin(rng)) face.pop_back();
    p.sub_facets.push_back(face);
  }
  return p;
}

inline noriq::SPair build(const oracle::Pair& p) {
  return noriq::SPair::from_labels(noriq::OrderedComplex::from_facets(p.vertices, p.facets), p.sub_facets);
}

inline std::vector<std::size_t> library_betti(const noriq::SPair& p, std::size_t degrees) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < degrees; ++n) out.push_back(noriq::cohomology_dim(p, static_cast<int>(n)));
  return out;
}

inline noriq::RatMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
  noriq::RatMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline noriq::RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound = 3) {
  noriq::RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = noriq::gen::coin(rng, 1, 3) ? noriq::Rational(0) : noriq::Rational(noriq::gen::between(rng, -bound, bound));
  return m;
}

}  // namespace support
