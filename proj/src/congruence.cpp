#include "qcover/congruence.hpp"

#include <omp.h>

#include <algorithm>

#include "qcover/error.hpp"
#include "qcover/skein.hpp"

namespace qcover {

long kappa_order(long p) {
  const CycInt k = kappa(p);
  const CycInt one = CycInt::one(k.modulus());
  CycInt cur = k;
  long order = 1;
  while (!(cur == one)) {
    cur *= k;
    ++order;
  }
  return order;
}

namespace {

std::vector<KappaResidue> residues_for(const CycInt& k, long order, long p) {
  std::map<ResidueClass, KappaWitness> seen;
  CycInt power = CycInt::one(k.modulus());
  for (long m = 0; m < order; ++m) {
    for (long n = 0; n < p; ++n) seen.try_emplace(mod_p(power * mpz_class(n), p), KappaWitness{m, n});
    power *= k;
  }
  std::vector<KappaResidue> out;
  for (auto& [r, w] : seen) out.push_back({r, w});
  return out;
}

std::optional<KappaWitness> lookup(const std::vector<KappaResidue>& table, const ResidueClass& r) {
  auto it = std::lower_bound(table.begin(), table.end(), r,
                             [](const KappaResidue& e, const ResidueClass& v) { return e.residue < v; });
  if (it != table.end() && it->residue == r) return it->witness;
  return std::nullopt;
}

}  // namespace

std::vector<KappaResidue> kappa_residues(long p) {
  return residues_for(kappa(p), kappa_order(p), p);
}

CongruenceVerdict check_kappa_congruence(const CycInt& x, long p) {
  require_odd_prime(p);
  if (x.modulus() != ring_modulus(p)) throw ModulusMismatch(x.modulus(), ring_modulus(p));
  const long order = kappa_order(p);
  const ResidueClass r = mod_p(x, p);
  CongruenceVerdict v;
  v.candidates_checked = order * p;
  v.witness = lookup(kappa_residues(p), r);
  v.congruent = v.witness.has_value();
  const CycInt neg = -kappa(p);
  const long neg_order = [&] {
    CycInt cur = neg;
    long o = 1;
    while (!(cur == CycInt::one(x.modulus()))) {
      cur *= neg;
      ++o;
    }
    return o;
  }();
  v.kappa_orbit_congruent = v.congruent || lookup(residues_for(neg, neg_order, p), r).has_value();
  v.phase_pinned = phase_pinned(p);
  return v;
}

CongruenceVerdict check_kappa_congruence(const CycNum& x) {
  if (!x.is_integral())
    throw DomainError("congruence test needs an element of O_p, got denominator p^" +
                      std::to_string(x.denominator_exponent()));
  return check_kappa_congruence(x.num(), x.prime());
}

long cm_bound(long p) {
  const long num = p * p - 7 * p + 12;
  return num >= 0 ? (num + 5) / 6 : -((-num) / 6);
}

ColorSequence necklace_representative(const ColorSequence& s) {
  ColorSequence best = s;
  ColorSequence rot = s;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

namespace {

struct OrbitSetup {
  long p;
  int colors;
  int modulus;
  long total;

  explicit OrbitSetup(const OrbitInstance& inst)
      : p(inst.p), colors(static_cast<int>(inst.weights.size())) {
    if (p < 1) throw DomainError("sequence length must be positive");
    if (colors == 0) throw DomainError("need at least one color");
    modulus = inst.weights.front().modulus();
    double count = 1;
    total = 1;
    for (long i = 0; i < p; ++i) {
      count *= colors;
      if (count > static_cast<double>(kOrbitTermCap))
        throw TooLarge(std::to_string(colors) + "^" + std::to_string(p) +
                       " color sequences exceed the cap of " + std::to_string(kOrbitTermCap));
      total *= colors;
    }
    for (const auto& w : inst.weights)
      if (w.modulus() != modulus) throw ModulusMismatch(w.modulus(), modulus);
    for (const auto& [seq, val] : inst.orbit_values)
      if (val.modulus() != modulus) throw ModulusMismatch(val.modulus(), modulus);
  }

  ColorSequence decode(long index) const {
    ColorSequence s(p);
    for (long i = p - 1; i >= 0; --i) {
      s[i] = static_cast<int>(index % colors);
      index /= colors;
    }
    return s;
  }
};

const CycInt& orbit_value(const OrbitInstance& inst, const ColorSequence& s) {
  auto it = inst.orbit_values.find(necklace_representative(s));
  if (it == inst.orbit_values.end()) throw DomainError("missing value for a color-sequence orbit");
  return it->second;
}

CycInt rhs_of(const OrbitInstance& inst, const OrbitSetup& setup) {
  CycInt rhs(setup.modulus);
  for (int j = 0; j < setup.colors; ++j)
    rhs += inst.weights[j].pow(inst.p) * orbit_value(inst, ColorSequence(inst.p, j));
  return rhs;
}

CycInt term_of(const OrbitInstance& inst, const ColorSequence& s) {
  CycInt t = orbit_value(inst, s);
  for (int c : s) t *= inst.weights[c];
  return t;
}

OrbitReport report(const OrbitInstance& inst, CycInt lhs, CycInt rhs, long terms) {
  OrbitReport r{std::move(lhs), std::move(rhs), false, terms};
  r.congruent = mod_p(r.lhs - r.rhs, inst.p).is_zero();
  return r;
}

}  // namespace

OrbitReport orbit_congruence_check_serial(const OrbitInstance& inst) {
  const OrbitSetup setup(inst);
  CycInt lhs(setup.modulus);
  for (long i = 0; i < setup.total; ++i) lhs += term_of(inst, setup.decode(i));
  return report(inst, std::move(lhs), rhs_of(inst, setup), setup.total);
}

OrbitReport orbit_congruence_check(const OrbitInstance& inst) {
  const OrbitSetup setup(inst);
  // every orbit must be present before entering the parallel region
  for (long i = 0; i < setup.total; ++i) orbit_value(inst, setup.decode(i));
  std::vector<CycInt> partial(omp_get_max_threads(), CycInt(setup.modulus));
#pragma omp parallel
  {
    CycInt& acc = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (long i = 0; i < setup.total; ++i) acc += term_of(inst, setup.decode(i));
  }
  CycInt lhs(setup.modulus);
  for (const auto& part : partial) lhs += part;
  return report(inst, std::move(lhs), rhs_of(inst, setup), setup.total);
}

OrbitInstance random_orbit_instance(int modulus, long p, int colors, std::mt19937_64& rng,
                                    long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  auto random_element = [&] {
    std::vector<mpz_class> c(euler_phi(modulus));
    for (auto& x : c) x = dist(rng);
    return CycInt(modulus, std::move(c));
  };
  OrbitInstance inst;
  inst.p = p;
  for (int j = 0; j < colors; ++j) inst.weights.push_back(random_element());
  const OrbitSetup setup(inst);
  for (long i = 0; i < setup.total; ++i) {
    ColorSequence rep = necklace_representative(setup.decode(i));
    if (!inst.orbit_values.contains(rep)) inst.orbit_values.emplace(std::move(rep), random_element());
  }
  return inst;
}

}  // namespace qcover
