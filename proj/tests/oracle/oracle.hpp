// Independent reference computations over boost rationals. Nothing here calls the library's algorithms;
// values cross the boundary only as decimal strings.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "noriq/exactlin.hpp"

namespace oracle {

using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using Mat = std::vector<std::vector<Q>>;  // row-major, rows may be empty only when cols == 0

inline Q from(const noriq::Rational& r) {
  return Q(Z(r.get_num().get_str()), Z(r.get_den().get_str()));
}

inline Mat from(const noriq::RatMatrix& m) {
  Mat out(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = from(m(i, j));
  return out;
}

inline Mat from(const noriq::IntMatrix& m) { return from(m.to_rational()); }

inline std::string str(const Q& q) {
  Z n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

inline noriq::RatMatrix to(const Mat& m, std::size_t cols) {
  noriq::RatMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = noriq::parse_rational(str(m[i][j]));
  return out;
}

// Gauss-Jordan on rows; returns the pivot columns.
inline std::vector<std::size_t> reduce_rows(Mat& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat m, std::size_t cols) { return reduce_rows(m, cols).size(); }

// Null space vectors of m (cols unknowns), one per free column.
inline std::vector<std::vector<Q>> nullspace(Mat m, std::size_t cols) {
  std::vector<std::size_t> piv = reduce_rows(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Q>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Q> v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m[k][f];
    out.push_back(v);
  }
  return out;
}

// Reduced row echelon form of the span of the given vectors, zero rows dropped.
inline Mat canonical_span(std::vector<std::vector<Q>> vectors, std::size_t ambient) {
  std::size_t r = reduce_rows(vectors, ambient).size();
  vectors.resize(r);
  return vectors;
}

inline Mat columns_of(const noriq::RatMatrix& m) {
  Mat out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<Q> v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(from(m(i, j)));
    out.push_back(v);
  }
  return out;
}

// ---- relative simplicial cohomology from labelled facets

struct Pair {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets, sub_facets;
};

inline std::set<std::vector<int>> closure(const std::vector<std::string>& vertices,
                                          const std::vector<std::vector<std::string>>& facets) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
  std::set<std::vector<int>> out;
  for (const auto& f : facets) {
    std::vector<int> s;
    for (const auto& v : f) s.push_back(idx.at(v));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<int> face;
      for (std::size_t k = 0; k < s.size(); ++k)
        if (mask & (1u << k)) face.push_back(s[k]);
      out.insert(face);
    }
  }
  return out;
}

// dim H^n(X, Y; Q) for n = 0..top+1.
inline std::vector<std::size_t> relative_betti(const Pair& p) {
  std::set<std::vector<int>> total = closure(p.vertices, p.facets);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) total.insert({static_cast<int>(i)});
  std::set<std::vector<int>> sub = closure(p.vertices, p.sub_facets);
  std::vector<std::vector<std::vector<int>>> by_dim;
  for (const auto& s : total) {
    if (sub.count(s)) continue;
    std::size_t d = s.size() - 1;
    if (by_dim.size() <= d + 1) by_dim.resize(d + 2);
    by_dim[d].push_back(s);
  }
  if (by_dim.empty()) by_dim.resize(1);
  // Coboundary d_n : C^n -> C^{n+1}, rows indexed by (n+1)-simplices.
  std::vector<std::size_t> ranks(by_dim.size(), 0);
  for (std::size_t n = 0; n + 1 < by_dim.size(); ++n) {
    const auto& lo = by_dim[n];
    const auto& hi = by_dim[n + 1];
    if (lo.empty() || hi.empty()) continue;
    std::map<std::vector<int>, std::size_t> col;
    for (std::size_t j = 0; j < lo.size(); ++j) col[lo[j]] = j;
    Mat d(hi.size(), std::vector<Q>(lo.size(), 0));
    for (std::size_t i = 0; i < hi.size(); ++i)
      for (std::size_t k = 0; k < hi[i].size(); ++k) {
        std::vector<int> face = hi[i];
        face.erase(face.begin() + static_cast<long>(k));
        auto it = col.find(face);
        if (it != col.end()) d[i][it->second] += (k % 2 == 0) ? 1 : -1;
      }
    ranks[n] = rank(d, lo.size());
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < by_dim.size(); ++n) {
    std::size_t prev = n == 0 ? 0 : ranks[n - 1];
    out.push_back(by_dim[n].size() - ranks[n] - prev);
  }
  return out;
}

// ---- commutant of one object by flattening X S = S X

// Canonical basis (row echelon rows of flattened matrices, row-major) of {X : X S = S X for all S}.
inline Mat commutant_flat(std::size_t d, const std::vector<Mat>& endos) {
  Mat eqs;
  for (const auto& s : endos)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        // (XS - SX)_{ij} = sum_k X_ik S_kj - S_ik X_kj
        std::vector<Q> row(d * d, 0);
        for (std::size_t k = 0; k < d; ++k) {
          row[i * d + k] += s[k][j];
          row[k * d + j] -= s[i][k];
        }
        eqs.push_back(row);
      }
  return canonical_span(nullspace(eqs, d * d), d * d);
}

// ---- integer helpers

inline Z det(Mat m) {
  std::size_t n = m.size();
  Q result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      result = -result;
    }
    result *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return boost::multiprecision::numerator(result);
}

// gcd of all k x k minors (0 when every minor vanishes).
inline Z minor_gcd(const Mat& m, std::size_t k) {
  std::size_t r = m.size(), c = r ? m[0].size() : 0;
  Z g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (idx[i] < n - idx.size() + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  if (k > r || k > c) return 0;
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      Mat sub(k, std::vector<Q>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[rows[a]][cols[b]];
      Z d = det(sub);
      g = boost::multiprecision::gcd(g, d < 0 ? Z(-d) : d);
    } while (next(cols, c));
  } while (next(rows, r));
  return g;
}

}  // namespace oracle
