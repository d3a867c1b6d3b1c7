#pragma once

// Kauffman-bracket skein of the solid torus in the z-basis (z^j = j parallel
// copies of the core), together with the constants of the SO(3) theory at
// an odd prime p.

#include <vector>

#include "qcover/cyclotomic.hpp"

namespace qcover {

// Exponent s with A = ζ_N^s; A is a primitive 2p-th root of unity.
int a_step(long p);

// A^k in Z[ζ_N] for N = ring_modulus(p).
CycInt a_power(long p, long k);

class SkeinElem {
 public:
  SkeinElem() = default;
  SkeinElem(long p, std::vector<CycNum> coeffs);
  static SkeinElem constant(long p, const CycNum& c) { return SkeinElem(p, {c}); }
  static SkeinElem one(long p);
  static SkeinElem z_power(long p, int j);

  long prime() const { return p_; }
  // -1 for the zero element.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<CycNum>& coeffs() const { return coeffs_; }
  // coefficient of z^j, zero past the degree
  CycNum coeff(int j) const;

  SkeinElem& operator+=(const SkeinElem& o);
  SkeinElem& operator-=(const SkeinElem& o);
  friend SkeinElem operator+(SkeinElem a, const SkeinElem& b) { return a += b; }
  friend SkeinElem operator-(SkeinElem a, const SkeinElem& b) { return a -= b; }
  // skein product = juxtaposition of parallel curves = polynomial product in z
  friend SkeinElem operator*(const SkeinElem& a, const SkeinElem& b);
  friend SkeinElem operator*(const CycNum& c, const SkeinElem& a);
  friend bool operator==(const SkeinElem& a, const SkeinElem& b) = default;

 private:
  void trim();

  long p_ = 3;
  std::vector<CycNum> coeffs_;
};

CycInt delta(long p);
// [k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2}), k >= 1
CycInt quantum_int(long p, long k);

// e_0 = 1, e_1 = z, e_{k+1} = z e_k - e_{k-1}
SkeinElem chebyshev_e(long p, int k);

// Coefficients in the e_k basis, and back.
std::vector<CycNum> to_e_basis(const SkeinElem& x);
SkeinElem from_e_basis(long p, const std::vector<CycNum>& e_coeffs);

// z ↦ δ, empty diagram ↦ 1.
CycNum plane_eval(const SkeinElem& x);

// Ω_p = Σ_{k=0}^{(p-3)/2} (-1)^k [k+1] e_k
SkeinElem omega(long p);

// Twist eigenvalue on e_k: μ_k = (-1)^k A^{k²+2k}.
CycInt twist_eigenvalue(long p, long k, long e = 1);

// t^e
SkeinElem twist(const SkeinElem& x, long e);

// Bracket of the n-component positive Hopf link, all framings +1.
CycInt hopf_bracket(long p, long n);
// H_0..H_max in one pass.
std::vector<CycInt> hopf_brackets(long p, long max_n);

// Normalization constant for p ∈ {5, 7}; UnsupportedPrime otherwise.
CycNum eta(long p);
// 1 / Σ_{k=0}^{(p-3)/2} [k+1]²
CycNum eta_squared(long p);

// κ with κ² = A^{-6-p(p+1)/2}.
CycInt kappa(long p);
// Exponent e with κ = ζ_N^e.
long kappa_root_exponent(long p);
// True for the primes whose κ and η signs are fixed by the reference values.
bool phase_pinned(long p);

}  // namespace qcover
