#include "gapvec/matrix.hpp"

namespace gapvec {

size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, size_t rank_cap) {
  size_t rows = a.size();
  if (rows == 0) return 0;
  size_t cols = a[0].size();
  mpz_class prev = 1, t1, t2;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows && r < rank_cap; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r) std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (a[i][j]*a[r][c] - a[i][c]*a[r][j]) / prev, division exact
        t1 = a[i][j] * a[r][c];
        t2 = a[i][c] * a[r][j];
        t1 -= t2;
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<mpz_class> row_to_primitive(const std::vector<mpq_class>& row) {
  mpz_class lcm_den = 1;
  for (const auto& q : row)
    if (sgn(q) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> out(row.size());
  mpz_class content = 0;
  int lead = 0;
  for (size_t k = 0; k < row.size(); ++k) {
    out[k] = row[k].get_num() * (lcm_den / row[k].get_den());
    if (sgn(out[k]) != 0) {
      if (lead == 0) lead = sgn(out[k]);
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[k].get_mpz_t());
    }
  }
  if (sgn(content) == 0) return out;  // zero row
  if (lead < 0) content = -content;
  for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  return out;
}

size_t rank(const FpRing& ring, const DenseMatrix<FpRing>& m, size_t rank_cap) {
  Echelon<FpRing> e(ring, m.cols, rank_cap);
  for (size_t i = 0; i < m.rows && !e.saturated(); ++i) e.add_row(m.row(i));
  return e.rank();
}

size_t rank(const QqRing& ring, const DenseMatrix<QqRing>& m, size_t rank_cap) {
  (void)ring;
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(m.rows);
  for (size_t i = 0; i < m.rows; ++i) rows.push_back(row_to_primitive(m.row(i)));
  return bareiss_rank(std::move(rows), rank_cap);
}

size_t rank_rows(const FpRing& ring, std::vector<std::vector<uint64_t>> rows, size_t cols,
                 size_t rank_cap) {
  Echelon<FpRing> e(ring, cols, rank_cap);
  for (auto& r : rows) {
    if (e.saturated()) break;
    e.add_row(r);
  }
  return e.rank();
}

size_t rank_rows(const QqRing& ring, std::vector<std::vector<mpq_class>> rows, size_t cols,
                 size_t rank_cap) {
  (void)ring;
  (void)cols;
  std::vector<std::vector<mpz_class>> zrows;
  zrows.reserve(rows.size());
  for (auto& r : rows) zrows.push_back(row_to_primitive(r));
  return bareiss_rank(std::move(zrows), rank_cap);
}

size_t rank_rows_mpz(std::vector<std::vector<mpz_class>> rows, size_t rank_cap) {
  return bareiss_rank(std::move(rows), rank_cap);
}

}  // namespace gapvec
