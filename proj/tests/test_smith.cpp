#include <doctest.h>

#include <random>

#include "qcover/invariants.hpp"
#include "qcover/smith.hpp"

using namespace qcover;

TEST_CASE("smith form factors the matrix") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-12, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (auto& r : m)
      for (auto& v : r) v = d(rng);
    const IntMatrix a = IntMatrix::from_rows(m);
    const SmithForm s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diag);
    for (std::size_t i = 0; i < s.diag.rows(); ++i)
      for (std::size_t j = 0; j < s.diag.cols(); ++j)
        if (i != j) CHECK(s.diag(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
      CHECK(s.diag(i, i) > 0);
      CHECK(mpz_divisible_p(s.diag(i + 1, i + 1).get_mpz_t(), s.diag(i, i).get_mpz_t()) != 0);
    }
  }
}

TEST_CASE("cokernels") {
  for (long p : {3, 5, 7, 11}) {
    const AbelianGroup g = homology_from_matrix(IntMatrix::from_rows({{0, p}, {p, p}}));
    CHECK(g.free_rank == 0);
    CHECK(g.torsion == std::vector<mpz_class>{p, p});
  }
  CHECK(homology_from_matrix(IntMatrix::from_rows({{2, 0}, {0, 3}})).torsion == std::vector<mpz_class>{6});
  CHECK(homology_from_matrix(IntMatrix::from_rows({{0, 0}, {0, 4}})).free_rank == 1);
  CHECK(homology_from_matrix(IntMatrix::from_rows({{1, 0}, {0, -1}})).torsion.empty());
}

TEST_CASE("integer solving") {
  const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  auto x = solve_integer(a, {mpz_class(2), mpz_class(2)});
  REQUIRE(x);
  CHECK(2 * (*x)[0] + 4 * (*x)[1] == 2);
  CHECK(6 * (*x)[0] + 8 * (*x)[1] == 2);
  CHECK_FALSE(solve_integer(IntMatrix::from_rows({{2, 0}, {0, 2}}), {mpz_class(1), mpz_class(0)}));
  CHECK(solve_integer(IntMatrix::from_rows({{3}, {6}}), {mpz_class(3), mpz_class(6)}));
  CHECK_FALSE(solve_integer(IntMatrix::from_rows({{3}, {6}}), {mpz_class(3), mpz_class(5)}));
}
