#include <doctest.h>

#include <random>

#include "qcover/congruence.hpp"
#include "qcover/error.hpp"
#include "qcover/invariants.hpp"

using namespace qcover;

namespace {

CycNum num(long p, const CycInt& x) { return CycNum::integral(x, p); }

CycNum binom(long p, long n, long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return num(p, CycInt::integer(ring_modulus(p), c));
}

SkeinElem random_skein(long p, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  std::vector<CycNum> c;
  for (int j = 0; j <= degree; ++j) {
    std::vector<mpz_class> v(euler_phi(ring_modulus(p)));
    for (auto& x : v) x = d(rng);
    c.push_back(CycNum(CycInt(ring_modulus(p), v), p, d(rng) > 1 ? 1 : 0));
  }
  return SkeinElem(p, c);
}

}  // namespace

TEST_CASE("p = 5 binomial expansion") {
  const long p = 5;
  const CycNum d = num(p, delta(p));
  auto H = [&](long n) { return num(p, hopf_bracket(p, n)); };
  CycNum first = num(p, CycInt::zero(20)), second = first;
  for (long k = 0; k <= 5; ++k) {
    first += binom(p, 5, k) * d.pow(k) * H(k);
    second += binom(p, 5, k) * d.pow(k) * H(k + 1);
  }
  const CycNum expected = first - num(p, a_power(p, -3)) * d * second;
  const SkeinElem om = omega(p);
  CHECK(bracket_satellite({5, om, om}) == expected);
}

TEST_CASE("p = 7 multinomial expansion") {
  const long p = 7;
  const CycNum d = num(p, delta(p));
  const CycNum one = num(p, CycInt::one(14)), two = num(p, CycInt::integer(14, 2));
  auto H = [&](long n) { return num(p, hopf_bracket(p, n)); };
  std::vector<CycNum> sums(3, num(p, CycInt::zero(14)));
  for (long i = 0; i <= 7; ++i)
    for (long j = 0; i + j <= 7; ++j) {
      const long k = 7 - i - j;
      const CycNum coeff = binom(p, 7, i) * binom(p, 7 - i, j) * (two - d * d).pow(i) * d.pow(j) *
                           (d * d - one).pow(k);
      for (int s = 0; s < 3; ++s) sums[s] += coeff * H(j + 2 * k + s);
    }
  const CycNum a6 = num(p, a_power(p, 6)), a11 = num(p, a_power(p, 11));
  const CycNum expected = (one + a6 - a6 * d * d) * sums[0] - a11 * d * sums[1] + a6 * (d * d - one) * sums[2];
  const SkeinElem om = omega(p);
  CHECK(bracket_satellite({7, om, om}) == expected);
}

TEST_CASE("satellite kernel: serial and parallel agree") {
  std::mt19937_64 rng(41);
  for (long p : {5, 7, 11}) {
    const SkeinElem om = omega(p);
    CHECK(bracket_satellite({static_cast<int>(p), om, om}) == bracket_satellite_serial({static_cast<int>(p), om, om}));
    for (int trial = 0; trial < 3; ++trial) {
      const HopfSatellite s{static_cast<int>(p), random_skein(p, 2, rng), random_skein(p, 3, rng)};
      CHECK(bracket_satellite(s) == bracket_satellite_serial(s));
    }
  }
}

TEST_CASE("satellite kernel agrees with the tuple oracle") {
  std::mt19937_64 rng(43);
  for (long p : {5, 7}) {
    for (int trial = 0; trial < 3; ++trial) {
      const SkeinElem cable = trial == 0 ? omega(p) : random_skein(p, 2, rng);
      const SkeinElem zero = trial == 0 ? omega(p) : random_skein(p, 2, rng);
      std::vector<SkeinElem> decorations(p, cable);
      decorations.push_back(twist(zero, -1));
      CHECK(bracket_satellite({static_cast<int>(p), cable, zero}) == hopf_fibers_bracket(p, decorations));
    }
  }
}

TEST_CASE("linearity in the 0-framed decoration") {
  std::mt19937_64 rng(47);
  const long p = 7;
  const SkeinElem cable = random_skein(p, 2, rng);
  const SkeinElem z1 = random_skein(p, 2, rng), z2 = random_skein(p, 3, rng);
  const CycNum c = num(p, CycInt::root(14, 3));
  CHECK(bracket_satellite({7, cable, z1 + c * z2}) ==
        bracket_satellite({7, cable, z1}) + c * bracket_satellite({7, cable, z2}));
}

TEST_CASE("multilinearity of the Hopf fiber bracket") {
  std::mt19937_64 rng(53);
  const long p = 5;
  for (int slot = 0; slot < 3; ++slot) {
    std::vector<SkeinElem> base{random_skein(p, 2, rng), random_skein(p, 1, rng), random_skein(p, 2, rng)};
    const SkeinElem u = random_skein(p, 2, rng), v = random_skein(p, 1, rng);
    const CycNum c = num(p, CycInt::root(20, 7));
    auto with = [&](const SkeinElem& x) {
      auto d = base;
      d[slot] = x;
      return hopf_fibers_bracket(p, d);
    };
    CHECK(with(u + c * v) == with(u) + c * with(v));
  }
  // one fiber with decoration z^n is H_n
  for (int n = 0; n < 4; ++n) {
    const std::vector<SkeinElem> one_fiber{SkeinElem::z_power(p, n)};
    CHECK(hopf_fibers_bracket(p, one_fiber) == num(p, hopf_bracket(p, n)));
  }
}

TEST_CASE("invariant values") {
  const CycNum m5 = invariant_Mtilde(5);
  CHECK(m5 == num(5, CycInt(20, {0, -2, 0, 4, 0, -1, 0, -2})));
  const CycNum m7 = invariant_Mtilde(7);
  CHECK(m7.is_integral());
  CHECK(mod_p(m7.num(), 7).is_zero());
  CHECK(invariant_valuation(5) == valuation(m5));
  CHECK(invariant_valuation(7) == valuation(m7));
  CHECK(invariant_valuation(11) >= 10);
  CHECK_THROWS_AS(invariant_Mtilde(11), UnsupportedPrime);
  CHECK_THROWS_AS(invariant_Mtilde(9), InvalidPrime);
}

TEST_CASE("homology of M_p") {
  for (long p : {3, 5, 7, 11, 13}) {
    const AbelianGroup g = homology_from_matrix(linking_matrix_Mp(p));
    CHECK(g == AbelianGroup{0, {p, p}});
  }
}
