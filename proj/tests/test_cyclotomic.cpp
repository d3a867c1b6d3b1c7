#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcover/cyclotomic.hpp"
#include "qcover/error.hpp"

using namespace qcover;

namespace {

CycInt random_cycint(int modulus, std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<mpz_class> c(euler_phi(modulus));
  for (auto& v : c) v = d(rng);
  return CycInt(modulus, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(14) == std::vector<long>{1, -1, 1, -1, 1, -1, 1});
  CHECK(cyclotomic_polynomial(20) == std::vector<long>{1, 0, -1, 0, 1, 0, -1, 0, 1});
  for (int n : {5, 12, 20, 28, 44, 52})
    CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
  CHECK(ring_modulus(5) == 20);
  CHECK(ring_modulus(7) == 14);
  CHECK(ring_modulus(13) == 52);
  CHECK(ring_modulus(3) == 6);
}

TEST_CASE("reduction: ζ20^8 in the power basis") {
  // Φ20 = x^8 - x^6 + x^4 - x^2 + 1
  CHECK(CycInt::root(20, 8) == CycInt(20, {-1, 0, 1, 0, -1, 0, 1, 0}));
  CHECK(CycInt::root(20, 10) == CycInt::integer(20, -1));
  CHECK(CycInt::root(20, -1) == CycInt::root(20, 19));
  CHECK(CycInt::root(14, 7) == CycInt::integer(14, -1));
}

TEST_CASE("ring axioms and embedding agree on random elements") {
  std::mt19937_64 rng(11);
  for (int modulus : {14, 20, 22, 52}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycInt x = random_cycint(modulus, rng), y = random_cycint(modulus, rng),
                   z = random_cycint(modulus, rng);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == CycInt::zero(modulus));
      CHECK(x * CycInt::one(modulus) == x);
      CHECK(oracle::near(oracle::embed(x * y), oracle::embed(x) * oracle::embed(y)));
      CHECK(oracle::near(oracle::embed(x + y), oracle::embed(x) + oracle::embed(y)));
    }
  }
}

TEST_CASE("powers and galois action") {
  std::mt19937_64 rng(3);
  const CycInt z = CycInt::root(20, 1);
  CHECK(z.pow(20) == CycInt::one(20));
  CHECK(z.pow(-3) == CycInt::root(20, 17));
  const CycInt x = random_cycint(20, rng);
  CHECK(x.pow(3) == x * x * x);
  CHECK(x.galois(3).galois(7) == x.galois(1));
  CHECK((x * x).galois(3) == x.galois(3) * x.galois(3));
  CHECK_THROWS_AS((CycInt::integer(20, 2)).pow(-1), NotDivisible);
}

TEST_CASE("exact division round trip") {
  std::mt19937_64 rng(5);
  for (int modulus : {14, 20}) {
    for (int trial = 0; trial < 30; ++trial) {
      const CycInt x = random_cycint(modulus, rng);
      CycInt y = random_cycint(modulus, rng);
      if (y.is_zero()) continue;
      CHECK(divide_exact(x * y, y) == x);
    }
  }
  CHECK_THROWS_AS(divide_exact(CycInt::one(20), CycInt::integer(20, 5)), NotDivisible);
}

TEST_CASE("CycNum canonical form") {
  const CycNum a(CycInt::integer(20, 10), 5, 2);  // 10/25 = 2/5
  CHECK(a.denominator_exponent() == 1);
  CHECK(a.num() == CycInt::integer(20, 2));
  CHECK(CycNum(CycInt::integer(14, 7), 7, 1) == CycNum::integral(CycInt::one(14), 7));
  CHECK(CycNum(CycInt::one(14), 7, -2).num() == CycInt::integer(14, 49));
  const CycNum b(CycInt::root(20, 3), 5, 1);
  CHECK(b * CycNum(CycInt::integer(20, 5), 5) == CycNum::integral(CycInt::root(20, 3), 5));
  CHECK(b.pow(3) == b * b * b);
}

TEST_CASE("invert_p_power examples") {
  // (1-ζ5)^4 is 5 times a unit in Z[ζ20]
  const CycInt pi = CycInt::one(20) - CycInt::root(20, 4);
  const CycNum inv = invert_p_power(pi, 5);
  CHECK(inv * CycNum::integral(pi, 5) == CycNum::integral(CycInt::one(20), 5));
  CHECK(inv.denominator_exponent() == 1);
  const CycNum unit = invert_p_power(CycInt::root(14, 3), 7);
  CHECK(unit.is_integral());
  CHECK_THROWS_AS(invert_p_power(CycInt::integer(20, 3), 5), NotPPowerInvertible);
}

TEST_CASE("reduction mod p is a ring homomorphism") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const CycInt x = random_cycint(20, rng, 50), y = random_cycint(20, rng, 50);
    CHECK(mod_p(x + y, 5) == mod_p(x, 5) + mod_p(y, 5));
    CHECK(mod_p(x * y, 5) == mod_p(x, 5) * mod_p(y, 5));
  }
  CHECK(mod_p(CycInt::integer(14, 7), 7).is_zero());
}

TEST_CASE("valuation at (1 - ζ_p)") {
  CHECK(valuation(CycInt::integer(20, 5), 5) == 4);
  CHECK(valuation(CycInt::integer(14, 7), 7) == 6);
  CHECK(valuation(CycInt::one(20) - CycInt::root(20, 4), 5) == 1);
  CHECK(valuation(CycInt::zero(20), 5) == kInfiniteValuation);
  CHECK(valuation(CycInt::root(20, 1), 5) == 0);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const CycInt x = random_cycint(20, rng), y = random_cycint(20, rng);
    if (x.is_zero() || y.is_zero()) continue;
    // v(xy) = v(x) + v(y); v(x+y) >= min
    CHECK(valuation(x * y, 5) == valuation(x, 5) + valuation(y, 5));
    if (!(x + y).is_zero()) CHECK(valuation(x + y, 5) >= std::min(valuation(x, 5), valuation(y, 5)));
  }
  CHECK(valuation(CycNum(CycInt::integer(14, 49), 7, 1)) == 6);
  CHECK(valuation(CycNum(CycInt::one(14), 7, 1)) == -6);
  CHECK_THROWS_AS(valuation(CycInt::one(14), 5), DomainError);
}

TEST_CASE("argument checks") {
  CHECK(is_odd_prime(3));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_THROWS_AS(require_odd_prime(15), InvalidPrime);
  CHECK_THROWS_AS(CycInt::root(20, 1) + CycInt::root(14, 1), ModulusMismatch);
}
