#include <doctest.h>

#include <random>

#include "qcover/congruence.hpp"
#include "qcover/error.hpp"
#include "qcover/invariants.hpp"

using namespace qcover;

namespace {

// direct search over every (m, n), no residue table
bool brute_congruent(const CycInt& x, long p) {
  const ResidueClass target = mod_p(x, p);
  const CycInt k = kappa(p);
  CycInt km = CycInt::one(x.modulus());
  for (long m = 0; m < 4 * p; ++m, km = km * k)
    for (long n = 0; n < p; ++n)
      if (mod_p(km * mpz_class(n), p) == target) return true;
  return false;
}

}  // namespace

TEST_CASE("κ orders and residue table") {
  CHECK(kappa_order(5) == 20);
  CHECK(kappa_order(7) == 7);
  for (long p : {5, 7}) {
    const auto table = kappa_residues(p);
    CHECK(std::is_sorted(table.begin(), table.end(),
                         [](const auto& a, const auto& b) { return a.residue < b.residue; }));
    for (const auto& r : table) {
      CHECK(r.witness.m < kappa_order(p));
      CHECK(r.witness.n < p);
      CHECK(mod_p(kappa(p).pow(r.witness.m) * mpz_class(r.witness.n), p) == r.residue);
    }
  }
}

TEST_CASE("verdicts on the invariants") {
  const CongruenceVerdict v5 = check_kappa_congruence(invariant_Mtilde(5));
  CHECK_FALSE(v5.congruent);
  CHECK(v5.candidates_checked == 100);
  CHECK_FALSE(v5.witness);
  CHECK(v5.phase_pinned);
  CHECK_FALSE(v5.kappa_orbit_congruent);

  const CongruenceVerdict v7 = check_kappa_congruence(invariant_Mtilde(7));
  CHECK(v7.congruent);
  REQUIRE(v7.witness);
  CHECK(v7.witness->n == 0);
  CHECK(v7.candidates_checked == 49);
}

TEST_CASE("verdicts agree with a direct search") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> d(-4, 4);
  for (long p : {5, 7}) {
    const int modulus = ring_modulus(p);
    for (int trial = 0; trial < 200; ++trial) {
      CycInt x;
      if (trial % 2) {
        std::vector<mpz_class> c(euler_phi(modulus));
        for (auto& v : c) v = d(rng);
        x = CycInt(modulus, c);
      } else {
        // n κ^m + p·(noise): always congruent
        std::vector<mpz_class> c(euler_phi(modulus));
        for (auto& v : c) v = d(rng) * p;
        x = kappa(p).pow(trial % 11) * mpz_class(trial % p) + CycInt(modulus, c);
      }
      const CongruenceVerdict v = check_kappa_congruence(x, p);
      CHECK(v.congruent == brute_congruent(x, p));
      if (trial % 2 == 0) CHECK(v.congruent);
    }
  }
  CHECK_THROWS_AS(check_kappa_congruence(CycNum(CycInt::one(20), 5, 1)), DomainError);
}

TEST_CASE("CM bound") {
  CHECK(cm_bound(5) == 1);
  CHECK(cm_bound(7) == 2);
  CHECK(cm_bound(11) == 10);
  CHECK(cm_bound(13) == 15);
  for (long p : {11, 13, 17, 19, 23}) CHECK(cm_bound(p) >= p - 1);
  CHECK(cm_bound(7) < 6);
}

TEST_CASE("necklace representatives") {
  CHECK(necklace_representative({2, 0, 1}) == ColorSequence{0, 1, 2});
  CHECK(necklace_representative({1, 0, 1, 0, 0}) == ColorSequence{0, 0, 1, 0, 1});
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> c(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    ColorSequence s(5);
    for (auto& v : s) v = c(rng);
    const ColorSequence r = necklace_representative(s);
    ColorSequence rot = s;
    for (int k = 0; k < 5; ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      CHECK(necklace_representative(rot) == r);
      CHECK(r <= rot);
    }
  }
}

TEST_CASE("orbit congruence: hand instance at p = 3") {
  OrbitInstance inst;
  inst.p = 3;
  inst.weights = {CycInt::one(6), CycInt::one(6)};
  for (const ColorSequence& s : {ColorSequence{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}})
    inst.orbit_values[s] = CycInt::one(6);
  const OrbitReport r = orbit_congruence_check(inst);
  CHECK(r.lhs == CycInt::integer(6, 8));
  CHECK(r.rhs == CycInt::integer(6, 2));
  CHECK(r.congruent);
  CHECK(r.terms == 8);
}

TEST_CASE("orbit congruence: random instances, serial vs parallel") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const OrbitInstance inst = random_orbit_instance(20, 5, 2 + trial % 3, rng);
    const OrbitReport par = orbit_congruence_check(inst);
    const OrbitReport ser = orbit_congruence_check_serial(inst);
    CHECK(par.congruent);
    CHECK(par.lhs == ser.lhs);
    CHECK(par.rhs == ser.rhs);
  }
  OrbitInstance inst = random_orbit_instance(14, 7, 2, rng);
  CHECK(orbit_congruence_check(inst).terms == 128);
}
