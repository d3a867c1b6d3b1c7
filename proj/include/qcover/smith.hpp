#pragma once

// Integer matrices, Smith normal form, and solvability of integer systems.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qcover {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// diag = left · m · right with left, right unimodular and diag diagonal with
// nonnegative entries d_1 | d_2 | ... (zeros last).
struct SmithForm {
  IntMatrix diag;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Some integer w with m·w = b, or nullopt when none exists.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& m,
                                                    const std::vector<mpz_class>& b);

}  // namespace qcover
