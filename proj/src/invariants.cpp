#include "qcover/invariants.hpp"

#include <omp.h>

#include "qcover/error.hpp"

namespace qcover {

namespace {

// Lexicographic compositions of `total` into `parts` nonnegative parts.
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  if (parts > 0) rec(rec, 0, total);
  return out;
}

struct SatelliteKernel {
  long p;
  int strands;
  int cable_degree;
  std::vector<std::vector<int>> vectors;
  std::vector<std::vector<CycNum>> powers;  // powers[j][e] = c_j^e
  std::vector<mpz_class> factorial;
  CycNum zero;

  explicit SatelliteKernel(const HopfSatellite& s)
      : p(s.cable_decor.prime()),
        strands(s.strands),
        cable_degree(std::max(s.cable_decor.degree(), 0)),
        zero(CycInt::zero(ring_modulus(p)), p, 0) {
    if (s.zero_decor.prime() != p) throw DomainError("decorations live over different primes");
    if (strands < 0) throw DomainError("strand count must be >= 0");
    vectors = compositions(strands, cable_degree + 1);
    powers.resize(cable_degree + 1);
    for (int j = 0; j <= cable_degree; ++j) {
      const CycNum c = s.cable_decor.coeff(j);
      powers[j].push_back(CycNum(CycInt::one(ring_modulus(p)), p, 0));
      for (int e = 1; e <= strands; ++e) powers[j].push_back(powers[j].back() * c);
    }
    factorial.resize(strands + 1);
    factorial[0] = 1;
    for (int i = 1; i <= strands; ++i) factorial[i] = factorial[i - 1] * i;
  }

  // Adds the term of multiplicity vector `idx` into by_degree[Σ j n_j].
  void accumulate(std::size_t idx, std::vector<CycNum>& by_degree) const {
    const auto& n = vectors[idx];
    mpz_class mult = factorial[strands];
    int deg = 0;
    for (int j = 0; j <= cable_degree; ++j) {
      mult /= factorial[n[j]];
      deg += j * n[j];
    }
    CycNum term(CycInt::integer(ring_modulus(p), mult), p, 0);
    for (int j = 0; j <= cable_degree; ++j)
      if (n[j] > 0) term *= powers[j][n[j]];
    by_degree[deg] += term;
  }

  std::vector<CycNum> empty_accumulator() const {
    return std::vector<CycNum>(strands * cable_degree + 1, zero);
  }
};

CycNum finish(const HopfSatellite& s, const std::vector<CycNum>& by_degree) {
  const long p = s.cable_decor.prime();
  const SkeinElem shifted = twist(s.zero_decor, -1);
  const long max_n = static_cast<long>(by_degree.size()) - 1 + std::max(shifted.degree(), 0);
  const auto h = hopf_brackets(p, max_n);
  CycNum total(CycInt::zero(ring_modulus(p)), p, 0);
  for (int m = 0; m <= shifted.degree(); ++m) {
    if (shifted.coeffs()[m].is_zero()) continue;
    CycNum inner(CycInt::zero(ring_modulus(p)), p, 0);
    for (std::size_t deg = 0; deg < by_degree.size(); ++deg) {
      if (by_degree[deg].is_zero()) continue;
      inner += by_degree[deg] * CycNum(h[m + deg], p, 0);
    }
    total += shifted.coeffs()[m] * inner;
  }
  return total;
}

}  // namespace

CycNum bracket_satellite_serial(const HopfSatellite& s) {
  const SatelliteKernel kernel(s);
  auto acc = kernel.empty_accumulator();
  for (std::size_t i = 0; i < kernel.vectors.size(); ++i) kernel.accumulate(i, acc);
  return finish(s, acc);
}

CycNum bracket_satellite(const HopfSatellite& s) {
  const SatelliteKernel kernel(s);
  const auto count = static_cast<long>(kernel.vectors.size());
  std::vector<std::vector<CycNum>> partial(omp_get_max_threads(), kernel.empty_accumulator());
#pragma omp parallel
  {
    auto& acc = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) kernel.accumulate(static_cast<std::size_t>(i), acc);
  }
  // exact addition: the merge order cannot change the result
  auto acc = kernel.empty_accumulator();
  for (const auto& part : partial)
    for (std::size_t d = 0; d < acc.size(); ++d) acc[d] += part[d];
  return finish(s, acc);
}

CycNum hopf_fibers_bracket(long p, std::span<const SkeinElem> decorations) {
  int max_total = 0;
  for (const auto& d : decorations) {
    if (d.prime() != p) throw DomainError("decorations live over different primes");
    max_total += std::max(d.degree(), 0);
  }
  const auto h = hopf_brackets(p, max_total);
  const int n = ring_modulus(p);
  CycNum total(CycInt::zero(n), p, 0);
  auto rec = [&](auto&& self, std::size_t idx, int deg, const CycNum& weight) -> void {
    if (weight.is_zero()) return;
    if (idx == decorations.size()) {
      total += weight * CycNum(h[deg], p, 0);
      return;
    }
    const auto& d = decorations[idx];
    for (int j = 0; j <= d.degree(); ++j) self(self, idx + 1, deg + j, weight * d.coeffs()[j]);
  };
  rec(rec, 0, 0, CycNum(CycInt::one(n), p, 0));
  return total;
}

namespace {

CycNum omega_satellite_bracket(long p) {
  const SkeinElem om = omega(p);
  return bracket_satellite(HopfSatellite{static_cast<int>(p), om, om});
}

}  // namespace

CycNum invariant_Mtilde(long p) {
  require_odd_prime(p);
  const CycNum e = eta(p);
  return e.pow(p + 2) * omega_satellite_bracket(p);
}

long invariant_valuation(long p) {
  require_odd_prime(p);
  if (p < 5) throw UnsupportedPrime(p, "invariant_valuation");
  const CycNum b = omega_satellite_bracket(p);
  const CycNum squared = eta_squared(p).pow(p + 2) * b * b;
  const long v = valuation(squared);
  if (v == kInfiniteValuation) return v;
  if (v % 2 != 0)
    throw InternalInconsistency("squared invariant has odd valuation " + std::to_string(v));
  return v / 2;
}

IntMatrix linking_matrix_Mp(long p) { return IntMatrix::from_rows({{0, p}, {p, p}}); }

AbelianGroup homology_from_matrix(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = m.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.diag(i, i) > 1) g.torsion.push_back(s.diag(i, i));
  return g;
}

}  // namespace qcover
