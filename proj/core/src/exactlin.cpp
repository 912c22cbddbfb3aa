#include "noriq/exactlin.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sparse.hpp"

namespace noriq {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw LinAlgError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw LinAlgError("not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw LinAlgError("entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw LinAlgError("ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

RatMatrix RatMatrix::column(const std::vector<Rational>& v) { return RatMatrix(v.size(), 1, v); }

std::vector<Rational> RatMatrix::col(std::size_t j) const {
  std::vector<Rational> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
  return std::vector<Rational>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::cols_subset(const std::vector<std::size_t>& idx) const {
  RatMatrix s(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) s(i, k) = (*this)(i, idx[k]);
  return s;
}

RatMatrix RatMatrix::rows_subset(const std::vector<std::size_t>& idx) const {
  RatMatrix s(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(idx[k], j);
  return s;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw LinAlgError("block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw LinAlgError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LinAlgError("shape mismatch in +");
  RatMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw LinAlgError("shape mismatch in -");
  RatMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw LinAlgError("shape mismatch in *");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& y = o(k, j);
        if (sgn(y) != 0) r(i, j) += x * y;
      }
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw LinAlgError("shape mismatch in apply");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << to_string((*this)(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw LinAlgError("hstack row mismatch");
  RatMatrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw LinAlgError("vstack column mismatch");
  RatMatrix r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) nr += b.rows(), nc += b.cols();
  RatMatrix r(nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw LinAlgError("ragged matrix literal");
    for (const auto& x : r) a_.push_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw LinAlgError("shape mismatch in *");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
    }
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix IntMatrix::to_rational() const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = Rational((*this)(i, j));
  return r;
}

std::string IntMatrix::str() const { return to_rational().str(); }

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw LinAlgError("non-integral entry " + to_string(m(i, j)));
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const RatMatrix& m) {
  RrefResult res;
  RatMatrix a = m;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = R;
    for (std::size_t i = r; i < R; ++i)
      if (sgn(a(i, c)) != 0) {
        p = i;
        break;
      }
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    nz.clear();
    for (std::size_t j = c; j < C; ++j)
      if (sgn(a(r, j)) != 0) {
        a(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j : nz) a(i, j) -= f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.rref = std::move(a);
  return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

bool is_invertible(const RatMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw LinAlgError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto rr = rref(hstack(m, RatMatrix::identity(n)));
  if (rr.rank < n || (n > 0 && rr.pivot_cols[n - 1] >= n)) throw LinAlgError("matrix is singular");
  return rr.rref.block(0, n, n, n);
}

RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw LinAlgError("solve_exact row mismatch");
  const std::size_t n = a.cols();
  auto rr = rref(hstack(a, b));
  std::size_t pa = 0;
  for (auto c : rr.pivot_cols) {
    if (c >= n) throw LinAlgError("right-hand side outside the column span");
    ++pa;
  }
  if (pa != n) throw LinAlgError("coefficient matrix lacks full column rank");
  return rr.rref.block(0, n, n, b.cols());
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim, const RatMatrix& spanning)
    : ambient_(ambient_dim) {
  if (spanning.rows() != ambient_dim) throw LinAlgError("spanning set has wrong ambient dimension");
  auto rr = rref(spanning.transpose());
  basis_ = RatMatrix(ambient_dim, rr.rank);
  for (std::size_t k = 0; k < rr.rank; ++k)
    for (std::size_t i = 0; i < ambient_dim; ++i) basis_(i, k) = rr.rref(k, i);
  pivots_ = rr.pivot_cols;
}

Subspace Subspace::full(std::size_t n) { return Subspace(n, RatMatrix::identity(n)); }
Subspace Subspace::zero(std::size_t n) { return Subspace(n, RatMatrix(n, 0)); }

std::vector<Rational> Subspace::coordinates(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw LinAlgError("vector has wrong ambient dimension");
  std::vector<Rational> c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  if (basis_.apply(c) != v) throw LinAlgError("vector is not in the subspace");
  return c;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) return false;
  std::vector<Rational> c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return basis_.apply(c) == v;
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  for (std::size_t j = 0; j < o.dim(); ++j)
    if (!contains(o.basis_.col(j))) return false;
  return true;
}

Subspace kernel_basis(const RatMatrix& m) {
  auto rr = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free.push_back(c);
  RatMatrix vecs(C, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    vecs(free[k], k) = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) vecs(rr.pivot_cols[r], k) = -rr.rref(r, free[k]);
  }
  return Subspace(C, vecs);
}

Subspace image_basis(const RatMatrix& m) { return Subspace(m.rows(), m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw LinAlgError("ambient dimension mismatch");
  return Subspace(a.ambient_dim(), hstack(a.basis(), b.basis()));
}

Subspace intersect(const std::vector<Subspace>& subspaces, std::size_t ambient_dim) {
  for (const auto& s : subspaces)
    if (s.ambient_dim() != ambient_dim) throw LinAlgError("ambient dimension mismatch");
  if (subspaces.empty()) return Subspace::full(ambient_dim);
  // Stack annihilators and take the common kernel.
  RatMatrix eqs(0, ambient_dim);
  for (const auto& s : subspaces) {
    auto ann = kernel_basis(s.basis().transpose());
    eqs = vstack(eqs, ann.basis().transpose());
  }
  return kernel_basis(eqs);
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

// ---------------------------------------------------------------- Smith form

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] -= q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (sgn(m(src, j)) != 0) m(dst, j) -= q * m(src, j);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (sgn(m(i, src)) != 0) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  IntMatrix D = m, U = IntMatrix::identity(R), V = IntMatrix::identity(C);
  const std::size_t steps = std::min(R, C);
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (sgn(D(i, j)) != 0 && (!found || abs(D(i, j)) < best)) {
            found = true;
            best = abs(D(i, j));
            pi = i;
            pj = j;
          }
      if (!found) goto done;
      swap_rows(D, t, pi);
      swap_rows(U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(V, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (sgn(D(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row(D, i, t, q);
        add_row(U, i, t, q);
        if (sgn(D(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (sgn(D(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col(D, j, t, q);
        add_col(V, j, t, q);
        if (sgn(D(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            add_row(D, t, i, Integer(-1));
            add_row(U, t, i, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(D(t, t)) < 0) {
      for (std::size_t j = 0; j < C; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < R; ++j) U(t, j) = -U(t, j);
    }
  }
done:
  return SmithForm{std::move(U), std::move(D), std::move(V)};
}

// ---------------------------------------------------------------- RowReducer

SparseVec sparse_axpy(const SparseVec& a, const Rational& f, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec to_sparse(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

std::vector<Rational> to_dense(const SparseVec& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

bool RowReducer::add_row(std::vector<std::pair<std::size_t, Rational>> row) {
  if (pivot_row_.empty()) pivot_row_.assign(ncols_, -1);
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec cur;
  for (auto& e : row) {
    if (e.first >= ncols_) throw LinAlgError("row entry out of range");
    if (!cur.empty() && cur.back().first == e.first) {
      cur.back().second += e.second;
      if (sgn(cur.back().second) == 0) cur.pop_back();
    } else if (sgn(e.second) != 0) {
      cur.push_back(std::move(e));
    }
  }
  std::size_t pos = 0;
  while (pos < cur.size()) {
    std::size_t c = cur[pos].first;
    long pr = pivot_row_[c];
    if (pr < 0) {
      ++pos;
      continue;
    }
    Rational f = cur[pos].second;
    // Stored rows start at their pivot, so entries before pos are untouched.
    cur = sparse_axpy(cur, f, rows_[pr]);
  }
  if (cur.empty()) return false;
  std::size_t lead = cur.front().first;
  Rational inv = 1 / cur.front().second;
  for (auto& e : cur) e.second *= inv;
  pivot_row_[lead] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(cur));
  return true;
}

Subspace RowReducer::kernel() const {
  // Back-substitute into reduced echelon form.
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (pivot col, row)
  for (std::size_t c = 0; c < ncols_ && !pivot_row_.empty(); ++c)
    if (pivot_row_[c] >= 0) order.emplace_back(c, static_cast<std::size_t>(pivot_row_[c]));
  std::vector<SparseVec> red(rows_.size());
  std::vector<bool> is_pivot(ncols_, false);
  for (auto& [c, r] : order) is_pivot[c] = true;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SparseVec cur = rows_[it->second];
    std::size_t pos = 1;
    while (pos < cur.size()) {
      std::size_t c = cur[pos].first;
      if (!is_pivot[c]) {
        ++pos;
        continue;
      }
      Rational f = cur[pos].second;
      cur = sparse_axpy(cur, f, red[pivot_row_[c]]);
    }
    red[it->second] = std::move(cur);
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  std::vector<long> free_index(ncols_, -1);
  for (std::size_t k = 0; k < free.size(); ++k) free_index[free[k]] = static_cast<long>(k);
  RatMatrix vecs(ncols_, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) vecs(free[k], k) = 1;
  for (auto& [c, r] : order)
    for (const auto& e : red[r])
      if (e.first != c) vecs(c, free_index[e.first]) = -e.second;
  return Subspace(ncols_, vecs);
}

// ---------------------------------------------------------------- block systems

std::vector<BlockFamily> solve_linear_system(
    const std::vector<std::size_t>& block_dims,
    const std::vector<std::pair<RatMatrix, RatMatrix>>& constraints) {
  std::size_t D = 0, unknowns = 0;
  std::vector<std::size_t> start, offset, block_of;
  for (std::size_t b = 0; b < block_dims.size(); ++b) {
    start.push_back(D);
    offset.push_back(unknowns);
    for (std::size_t k = 0; k < block_dims[b]; ++k) block_of.push_back(b);
    D += block_dims[b];
    unknowns += block_dims[b] * block_dims[b];
  }
  auto var = [&](std::size_t i, std::size_t j) -> long {
    std::size_t b = block_of[i];
    if (block_of[j] != b) return -1;
    return static_cast<long>(offset[b] + (i - start[b]) * block_dims[b] + (j - start[b]));
  };
  RowReducer red(unknowns);
  for (const auto& [A, B] : constraints) {
    if (A.rows() != D || A.cols() != D || B.rows() != D || B.cols() != D)
      throw LinAlgError("constraint shape does not match the block structure");
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) {
        std::map<std::size_t, Rational> eq;
        // (A x)_{ij} = sum_k A_{ik} x_{kj}
        for (std::size_t k = 0; k < D; ++k) {
          if (sgn(A(i, k)) == 0) continue;
          long v = var(k, j);
          if (v >= 0) eq[static_cast<std::size_t>(v)] += A(i, k);
        }
        // (x B)_{ij} = sum_k x_{ik} B_{kj}
        for (std::size_t k = 0; k < D; ++k) {
          if (sgn(B(k, j)) == 0) continue;
          long v = var(i, k);
          if (v >= 0) eq[static_cast<std::size_t>(v)] -= B(k, j);
        }
        std::vector<std::pair<std::size_t, Rational>> row;
        for (auto& [c, val] : eq)
          if (sgn(val) != 0) row.emplace_back(c, val);
        if (!row.empty()) red.add_row(std::move(row));
      }
  }
  Subspace ker = red.kernel();
  std::vector<BlockFamily> out;
  for (std::size_t s = 0; s < ker.dim(); ++s) {
    BlockFamily fam;
    for (std::size_t b = 0; b < block_dims.size(); ++b) {
      RatMatrix m(block_dims[b], block_dims[b]);
      for (std::size_t r = 0; r < block_dims[b]; ++r)
        for (std::size_t c = 0; c < block_dims[b]; ++c)
          m(r, c) = ker.basis()(offset[b] + r * block_dims[b] + c, s);
      fam.push_back(std::move(m));
    }
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace noriq
