// Shared private data behind OrderedComplex and SPair, and the cochain engine.
#pragma once

#include <mutex>
#include <unordered_map>

#include "noriq/pairtop.hpp"
#include "sparse.hpp"

namespace noriq {

namespace detail {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (int v : s) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

struct ComplexData {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, int> vindex;
  std::vector<Simplex> simplices;
  std::unordered_map<Simplex, std::size_t, SimplexHash> sindex;
  std::vector<std::vector<std::size_t>> by_dim;
};

// Relative cochain complex reduced column by column; cohomology classes are read off
// the unpaired zero columns and coordinates by elimination on the leading index.
class CochainEngine {
 public:
  CochainEngine(const OrderedComplex& total, const std::vector<bool>& sub);

  int top_degree() const { return static_cast<int>(support_.size()) - 1; }
  const std::vector<std::size_t>& support(int n) const;
  // Position of a total-complex simplex inside its degree's support, or -1.
  long position(std::size_t simplex) const { return position_[simplex]; }
  std::size_t dim(int n) const;
  const std::vector<SparseVec>& reps(int n) const;
  // Throws TopologyError if z is not a cocycle.
  std::vector<Rational> coordinates(int n, SparseVec z) const;
  RatMatrix basis_matrix(int n) const;

 private:
  std::vector<std::vector<std::size_t>> support_;
  std::vector<long> position_;
  // Per degree: classes keyed by leading index, coboundaries keyed by leading index.
  std::vector<std::vector<SparseVec>> reps_;
  std::vector<std::unordered_map<std::size_t, std::size_t>> rep_by_top_;
  std::vector<std::unordered_map<std::size_t, SparseVec>> boundary_by_top_;
};

struct PairData {
  OrderedComplex total;
  std::vector<bool> mask;
  std::size_t relative_size = 0;
  std::string fingerprint;
  std::once_flag once;
  std::shared_ptr<const CochainEngine> engine;
};

}  // namespace detail

// Index in `to` of every simplex of `from`, matched by vertex labels; -1 when absent.
std::vector<long> embed_simplices(const OrderedComplex& from, const OrderedComplex& to);
// Sorted image simplex and the sign of the sorting permutation; sign 0 if degenerate.
std::pair<Simplex, int> oriented_image(const Simplex& s, const std::vector<int>& vmap);

}  // namespace noriq
