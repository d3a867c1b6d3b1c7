#pragma once

// Residue tests modulo p·O_p: membership of an invariant in the image of
// {n κ^m}, the Chen–Murakami valuation bound, and the orbit-collapse
// congruence for sums over color sequences.

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "qcover/cyclotomic.hpp"

namespace qcover {

struct KappaWitness {
  long m = 0;  // 0 <= m < ord(κ)
  long n = 0;  // 0 <= n < p
  friend bool operator==(const KappaWitness&, const KappaWitness&) = default;
};

struct KappaResidue {
  ResidueClass residue;
  KappaWitness witness;  // first (m, n) in m-major order producing it
};

long kappa_order(long p);

// Distinct residues of n κ^m, sorted by residue.
std::vector<KappaResidue> kappa_residues(long p);

struct CongruenceVerdict {
  bool congruent = false;
  std::optional<KappaWitness> witness;
  long candidates_checked = 0;
  // Membership when κ is replaced by either square root of κ²; differs from
  // `congruent` only if the phase choice mattered.
  bool kappa_orbit_congruent = false;
  bool phase_pinned = false;
};

// x must be integral (denominator exponent 0), else DomainError.
CongruenceVerdict check_kappa_congruence(const CycNum& x);
CongruenceVerdict check_kappa_congruence(const CycInt& x, long p);

// ⌈(p² - 7p + 12) / 6⌉
long cm_bound(long p);

using ColorSequence = std::vector<int>;

// Lexicographically smallest rotation.
ColorSequence necklace_representative(const ColorSequence& s);

struct OrbitInstance {
  long p = 0;                              // sequence length
  std::vector<CycInt> weights;             // a_j, indexed by color
  std::map<ColorSequence, CycInt> orbit_values;  // x_σ keyed by representative
};

struct OrbitReport {
  CycInt lhs;
  CycInt rhs;
  bool congruent = false;
  long terms = 0;
};

inline constexpr long kOrbitTermCap = 10'000'000;

// LHS = Σ_σ (Π a_{σ_i}) x_σ over all color sequences of length p,
// RHS = Σ_j a_j^p x_{jj...j}; verdict is LHS ≡ RHS mod p.
// Throws TooLarge past kOrbitTermCap sequences.
OrbitReport orbit_congruence_check(const OrbitInstance& inst);
OrbitReport orbit_congruence_check_serial(const OrbitInstance& inst);

// Weights and orbit values with coefficients in [-bound, bound].
OrbitInstance random_orbit_instance(int modulus, long p, int colors, std::mt19937_64& rng,
                                    long bound = 5);

}  // namespace qcover
