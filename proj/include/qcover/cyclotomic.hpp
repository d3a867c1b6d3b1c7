#pragma once

// Exact arithmetic in Z[ζ_N] and Z[ζ_N][1/p].
//
// Elements are stored in the power basis 1, ζ, ..., ζ^{φ(N)-1} and kept
// reduced modulo the N-th cyclotomic polynomial, so equality is
// coefficient-wise.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace qcover {

bool is_odd_prime(long p);

// Throws InvalidPrime unless p is an odd prime.
void require_odd_prime(long p);

// Ring modulus N(p) hosting A and κ: 4p when p ≡ 1 (mod 4), else 2p.
int ring_modulus(long p);

// Euler phi and the cyclotomic polynomial Φ_N (ascending coefficients).
int euler_phi(int n);
const std::vector<long>& cyclotomic_polynomial(int n);

class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(int modulus);

  // Accepts any number of coefficients and reduces modulo Φ_N.
  CycInt(int modulus, std::vector<mpz_class> coeffs);

  static CycInt zero(int modulus) { return CycInt(modulus); }
  static CycInt one(int modulus) { return integer(modulus, 1); }
  static CycInt integer(int modulus, const mpz_class& value);
  // ζ_N^j for any integer j.
  static CycInt root(int modulus, long j);

  int modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  std::span<const mpz_class> coeffs() const { return coeffs_; }
  const mpz_class& operator[](int i) const { return coeffs_[i]; }
  bool is_zero() const;
  bool is_integer() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const mpz_class& c);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const mpz_class& c) { return a *= c; }
  friend CycInt operator*(const mpz_class& c, CycInt a) { return a *= c; }
  CycInt operator-() const;

  friend bool operator==(const CycInt& a, const CycInt& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

  // Negative exponents require a unit; otherwise NotDivisible is thrown.
  CycInt pow(long e) const;

  // Applies ζ ↦ ζ^k (k coprime to N).
  CycInt galois(long k) const;

 private:
  int modulus_;
  std::vector<mpz_class> coeffs_;
};

// q with y·q = x, found by solving the multiplication-by-y system in the
// power basis. Throws NotDivisible when no integral q exists.
CycInt divide_exact(const CycInt& x, const CycInt& y);

// Rational solution of y·q = x. Returns false when y = 0.
bool solve_rational(const CycInt& x, const CycInt& y, std::vector<mpq_class>& q);

// x / p^k with the denominator fully reduced.
class CycNum {
 public:
  CycNum() = default;
  CycNum(CycInt num, long p, long k = 0);

  static CycNum integral(CycInt num, long p) { return CycNum(std::move(num), p, 0); }

  const CycInt& num() const { return num_; }
  long prime() const { return p_; }
  long denominator_exponent() const { return k_; }
  int modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return k_ == 0; }

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  CycNum operator-() const { return CycNum(-num_, p_, k_); }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.num_ == b.num_;
  }

  CycNum pow(unsigned long e) const;

 private:
  void canonicalize();
  void require_same_prime(const CycNum& o) const;

  CycInt num_;
  long p_ = 3;
  long k_ = 0;
};

// Smallest k ≤ cap with q·x = p^k, returned as q / p^k.
// cap < 0 selects the default 2(p-1).
CycNum invert_p_power(const CycInt& x, long p, long cap = -1);

// Element of Z[ζ_N] / p Z[ζ_N] in the power basis.
class ResidueClass {
 public:
  ResidueClass(int modulus, long p, std::vector<long> coeffs);

  int modulus() const { return modulus_; }
  long prime() const { return p_; }
  std::span<const long> coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend ResidueClass operator+(const ResidueClass& a, const ResidueClass& b);
  friend ResidueClass operator*(const ResidueClass& a, const ResidueClass& b);
  friend bool operator==(const ResidueClass& a, const ResidueClass& b) = default;
  friend auto operator<=>(const ResidueClass& a, const ResidueClass& b) = default;

 private:
  int modulus_;
  long p_;
  std::vector<long> coeffs_;
};

ResidueClass mod_p(const CycInt& x, long p);

inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// Largest k with x ∈ (1-ζ_p)^k Z[ζ_N]; kInfiniteValuation for 0.
// Requires p | N.
long valuation(const CycInt& x, long p);
// valuation(num) - k(p-1) for num / p^k.
long valuation(const CycNum& x);

}  // namespace qcover
