// Sorted sparse vectors over Q.
#pragma once

#include <utility>
#include <vector>

#include "noriq/exactlin.hpp"

namespace noriq {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// a - f*b
SparseVec sparse_axpy(const SparseVec& a, const Rational& f, const SparseVec& b);
SparseVec to_sparse(const std::vector<Rational>& v);
std::vector<Rational> to_dense(const SparseVec& v, std::size_t n);

}  // namespace noriq
