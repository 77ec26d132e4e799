#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <gmpxx.h>

#include "gapvec/field.hpp"

namespace gapvec {

// Ring handles. The elimination code is templated over exactly these two:
// FpRing elements are plain residues in [0, p); QqRing elements are mpq_class.
// Each ring also fixes a "work" representation for elimination rows — the
// Montgomery domain for FpRing (one Montgomery multiply per update is what
// keeps the big evaluation tables cheap), mpq itself for QqRing.
struct FpRing {
  const PrimeOps* F = nullptr;

  using Elem = uint64_t;
  using Work = uint64_t;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return F->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
  Elem neg(const Elem& a) const { return F->neg(a); }
  Elem inv(const Elem& a) const { return F->inv(a); }
  Elem from_int64(int64_t v) const { return F->from_int64(v); }

  Work lift(const Elem& e) const { return F->to_mont(e); }
  Elem lower(const Work& w) const { return F->from_mont(w); }
  bool wzero(const Work& w) const { return w == 0; }
  Work winv(const Work& w) const { return F->mont_inv(w); }
  void wsubmul(std::vector<Work>& r, const Work& f, const std::vector<Work>& b) const {
    for (size_t k = 0, n = r.size(); k < n; ++k) r[k] = F->sub(r[k], F->mont_mul(f, b[k]));
  }
  void wscale(std::vector<Work>& r, const Work& f) const {
    for (auto& x : r) x = F->mont_mul(x, f);
  }
};

struct QqRing {
  using Elem = mpq_class;
  using Work = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem from_int64(int64_t v) const { return mpq_class(static_cast<long>(v)); }

  Work lift(const Elem& e) const { return e; }
  Elem lower(const Work& w) const { return w; }
  bool wzero(const Work& w) const { return sgn(w) == 0; }
  Work winv(const Work& w) const { return 1 / w; }
  void wsubmul(std::vector<Work>& r, const Work& f, const std::vector<Work>& b) const {
    for (size_t k = 0, n = r.size(); k < n; ++k)
      if (sgn(b[k]) != 0) r[k] -= f * b[k];
  }
  void wscale(std::vector<Work>& r, const Work& f) const {
    for (auto& x : r) x *= f;
  }
};

template <class R>
struct DenseMatrix {
  size_t rows = 0, cols = 0;
  std::vector<typename R::Elem> a;  // row-major, rows*cols entries

  DenseMatrix() = default;
  DenseMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  typename R::Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
  const typename R::Elem& at(size_t i, size_t j) const { return a[i * cols + j]; }

  std::vector<typename R::Elem> row(size_t i) const {
    return std::vector<typename R::Elem>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }
};

template <class R>
DenseMatrix<R> transpose(const DenseMatrix<R>& m) {
  DenseMatrix<R> t(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// Online Gauss–Jordan elimination. Stored rows form a "pivot-dual" basis of
// the row space seen so far: each row is 1 at its own pivot column and 0 at
// every other pivot column, so reducing an incoming row takes one pass in any
// order and lands on zero exactly when the row is in the span. Insertion
// order of rows is fixed by the caller, which makes pivots — and the kernel
// basis derived from them — deterministic.
template <class R>
class Echelon {
 public:
  Echelon(R ring, size_t cols, size_t rank_cap = std::numeric_limits<size_t>::max())
      : ring_(ring), cols_(cols), rank_cap_(std::min(rank_cap, cols)) {}

  size_t rank() const { return piv_.size(); }
  size_t cols() const { return cols_; }
  bool saturated() const { return piv_.size() >= rank_cap_; }
  const std::vector<size_t>& pivot_cols() const { return piv_; }

  // Returns true iff the row increased the rank. Rows arriving after the rank
  // cap is reached are provably dependent and are skipped outright.
  bool add_row(const std::vector<typename R::Elem>& row) {
    if (saturated()) return false;
    std::vector<typename R::Work> w(cols_);
    for (size_t k = 0; k < cols_; ++k) w[k] = ring_.lift(row[k]);
    return add_lifted(std::move(w));
  }

  bool add_lifted(std::vector<typename R::Work> w) {
    if (saturated()) return false;
    for (size_t i = 0; i < rows_.size(); ++i) {
      const auto& f = w[piv_[i]];
      if (!ring_.wzero(f)) {
        auto fv = f;  // copy: wsubmul writes through w
        ring_.wsubmul(w, fv, rows_[i]);
      }
    }
    size_t c = 0;
    while (c < cols_ && ring_.wzero(w[c])) ++c;
    if (c == cols_) return false;
    ring_.wscale(w, ring_.winv(w[c]));
    for (size_t i = 0; i < rows_.size(); ++i) {
      const auto& f = rows_[i][c];
      if (!ring_.wzero(f)) {
        auto fv = f;
        ring_.wsubmul(rows_[i], fv, w);
      }
    }
    rows_.push_back(std::move(w));
    piv_.push_back(c);
    return true;
  }

  // Basis of the right null space of everything added so far, one row per
  // free column (ascending), in the standard kernel form: 1 at the free
  // column, minus the pivot-row entry at each pivot column.
  DenseMatrix<R> kernel() const {
    std::vector<bool> is_piv(cols_, false);
    for (size_t c : piv_) is_piv[c] = true;
    size_t nfree = cols_ - piv_.size();
    DenseMatrix<R> k(nfree, cols_);
    for (size_t j = 0; j < nfree * cols_; ++j) k.a[j] = ring_.zero();
    size_t r = 0;
    for (size_t f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      k.at(r, f) = ring_.one();
      for (size_t i = 0; i < rows_.size(); ++i)
        k.at(r, piv_[i]) = ring_.neg(ring_.lower(rows_[i][f]));
      ++r;
    }
    return k;
  }

 private:
  R ring_;
  size_t cols_;
  size_t rank_cap_;
  std::vector<std::vector<typename R::Work>> rows_;
  std::vector<size_t> piv_;
};

// Fraction-free (Bareiss) elimination rank for integer rows: all intermediate
// values are minors of the input, so nothing ever leaves Z. Destroys its copy.
size_t bareiss_rank(std::vector<std::vector<mpz_class>> a,
                    size_t rank_cap = std::numeric_limits<size_t>::max());

// Scale a rational row to the primitive integer row spanning the same line:
// clear denominators, divide by the content, make the first nonzero positive.
std::vector<mpz_class> row_to_primitive(const std::vector<mpq_class>& row);

// Rank of a whole matrix. The rational overload clears denominators row by
// row and runs fraction-free elimination; the prime-field overload streams
// rows through the Montgomery echelon.
size_t rank(const FpRing& ring, const DenseMatrix<FpRing>& m,
            size_t rank_cap = std::numeric_limits<size_t>::max());
size_t rank(const QqRing& ring, const DenseMatrix<QqRing>& m,
            size_t rank_cap = std::numeric_limits<size_t>::max());

// Rank of a list of rows (consumed); same dispatch as rank().
size_t rank_rows(const FpRing& ring, std::vector<std::vector<uint64_t>> rows, size_t cols,
                 size_t rank_cap = std::numeric_limits<size_t>::max());
size_t rank_rows(const QqRing& ring, std::vector<std::vector<mpq_class>> rows, size_t cols,
                 size_t rank_cap = std::numeric_limits<size_t>::max());
size_t rank_rows_mpz(std::vector<std::vector<mpz_class>> rows,
                     size_t rank_cap = std::numeric_limits<size_t>::max());

// Basis of the right null space, one basis vector per row of the result.
template <class R>
DenseMatrix<R> kernel_basis(R ring, const DenseMatrix<R>& m) {
  Echelon<R> e(ring, m.cols);
  for (size_t i = 0; i < m.rows; ++i) e.add_row(m.row(i));
  return e.kernel();
}

}  // namespace gapvec
