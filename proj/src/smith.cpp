#include "qcover/smith.hpp"

#include <stdexcept>

namespace qcover {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= f * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= f * m(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  SmithForm s{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols()), 0};
  IntMatrix& d = s.diag;
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // pivot: smallest nonzero |entry| in the trailing block
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (sgn(d(r, c)) != 0 && (pr == rows || abs(d(r, c)) < abs(d(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) {
        s.rank = t;
        return s;
      }
      if (pr != t) {
        swap_rows(d, t, pr);
        swap_rows(s.left, t, pr);
      }
      if (pc != t) {
        swap_cols(d, t, pc);
        swap_cols(s.right, t, pc);
      }

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(d(r, t)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, r, t, q);
        add_row(s.left, r, t, q);
        if (sgn(d(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(d(t, c)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, c, t, q);
        add_col(s.right, c, t, q);
        if (sgn(d(t, c)) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and retry
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row(d, t, r, mpz_class(-1));
            add_row(s.left, t, r, mpz_class(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) s.left(t, c) = -s.left(t, c);
    }
  }
  s.rank = 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    if (sgn(d(t, t)) != 0) s.rank = t + 1;
  return s;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& m,
                                                    const std::vector<mpz_class>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  const SmithForm s = smith_normal_form(m);
  // m = L^{-1} D R^{-1}: m w = b  <=>  D (R^{-1} w) = L b
  std::vector<mpz_class> lb(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) lb[i] += s.left(i, j) * b[j];
  std::vector<mpz_class> y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(lb[i].get_mpz_t(), s.diag(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), lb[i].get_mpz_t(), s.diag(i, i).get_mpz_t());
    } else if (sgn(lb[i]) != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> w(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w[i] += s.right(i, j) * y[j];
  return w;
}

}  // namespace qcover
