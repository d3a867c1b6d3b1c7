#include "qcover/skein.hpp"

#include "qcover/error.hpp"

namespace qcover {

int a_step(long p) { return ring_modulus(p) / static_cast<int>(2 * p); }

CycInt a_power(long p, long k) { return CycInt::root(ring_modulus(p), a_step(p) * k); }

namespace {

CycNum integral(long p, CycInt x) { return CycNum(std::move(x), p, 0); }

CycNum zero_num(long p) { return integral(p, CycInt::zero(ring_modulus(p))); }

}  // namespace

SkeinElem::SkeinElem(long p, std::vector<CycNum> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  const int n = ring_modulus(p);
  for (const auto& c : coeffs_) {
    if (c.modulus() != n) throw ModulusMismatch(c.modulus(), n);
    if (c.prime() != p) throw DomainError("skein coefficient lives over a different prime");
  }
  trim();
}

SkeinElem SkeinElem::one(long p) {
  return SkeinElem(p, {integral(p, CycInt::one(ring_modulus(p)))});
}

SkeinElem SkeinElem::z_power(long p, int j) {
  std::vector<CycNum> c(j + 1, zero_num(p));
  c[j] = integral(p, CycInt::one(ring_modulus(p)));
  return SkeinElem(p, std::move(c));
}

void SkeinElem::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycNum SkeinElem::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return zero_num(p_);
  return coeffs_[j];
}

SkeinElem& SkeinElem::operator+=(const SkeinElem& o) {
  if (p_ != o.p_) throw DomainError("skein elements over different primes");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_num(p_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

SkeinElem& SkeinElem::operator-=(const SkeinElem& o) {
  if (p_ != o.p_) throw DomainError("skein elements over different primes");
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), zero_num(p_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

SkeinElem operator*(const SkeinElem& a, const SkeinElem& b) {
  if (a.p_ != b.p_) throw DomainError("skein elements over different primes");
  if (a.coeffs_.empty() || b.coeffs_.empty()) return SkeinElem(a.p_, {});
  std::vector<CycNum> c(a.coeffs_.size() + b.coeffs_.size() - 1, zero_num(a.p_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return SkeinElem(a.p_, std::move(c));
}

SkeinElem operator*(const CycNum& s, const SkeinElem& a) {
  std::vector<CycNum> c = a.coeffs_;
  for (auto& x : c) x = s * x;
  return SkeinElem(a.p_, std::move(c));
}

CycInt delta(long p) { return -(a_power(p, 2) + a_power(p, -2)); }

CycInt quantum_int(long p, long k) {
  if (k < 1) throw DomainError("quantum integer index must be >= 1");
  return divide_exact(a_power(p, 2 * k) - a_power(p, -2 * k), a_power(p, 2) - a_power(p, -2));
}

namespace {

// Integer z-coefficients of e_k.
std::vector<std::vector<long>> chebyshev_table(int max_k) {
  std::vector<std::vector<long>> e{{1}, {0, 1}};
  for (int k = 1; k < max_k; ++k) {
    std::vector<long> next(k + 2, 0);
    for (int j = 0; j <= k; ++j) next[j + 1] += e[k][j];
    for (int j = 0; j < k; ++j) next[j] -= e[k - 1][j];
    e.push_back(std::move(next));
  }
  e.resize(max_k + 1);
  return e;
}

}  // namespace

SkeinElem chebyshev_e(long p, int k) {
  if (k < 0) throw DomainError("Chebyshev index must be >= 0");
  const int n = ring_modulus(p);
  const auto table = chebyshev_table(k);
  std::vector<CycNum> c;
  for (long v : table[k]) c.push_back(integral(p, CycInt::integer(n, v)));
  return SkeinElem(p, std::move(c));
}

std::vector<CycNum> to_e_basis(const SkeinElem& x) {
  const long p = x.prime();
  const int deg = x.degree();
  if (deg < 0) return {};
  const int n = ring_modulus(p);
  const auto table = chebyshev_table(deg);
  std::vector<CycNum> rest = x.coeffs();
  std::vector<CycNum> out(deg + 1, zero_num(p));
  // e_j is monic of degree j: peel from the top
  for (int j = deg; j >= 0; --j) {
    out[j] = rest[j];
    if (out[j].is_zero()) continue;
    for (int i = 0; i <= j; ++i)
      if (table[j][i] != 0) rest[i] -= out[j] * integral(p, CycInt::integer(n, table[j][i]));
  }
  return out;
}

SkeinElem from_e_basis(long p, const std::vector<CycNum>& e_coeffs) {
  if (e_coeffs.empty()) return SkeinElem(p, {});
  const int n = ring_modulus(p);
  const int deg = static_cast<int>(e_coeffs.size()) - 1;
  const auto table = chebyshev_table(deg);
  std::vector<CycNum> out(deg + 1, zero_num(p));
  for (int k = 0; k <= deg; ++k) {
    if (e_coeffs[k].is_zero()) continue;
    for (int j = 0; j <= k; ++j)
      if (table[k][j] != 0) out[j] += e_coeffs[k] * integral(p, CycInt::integer(n, table[k][j]));
  }
  return SkeinElem(p, std::move(out));
}

CycNum plane_eval(const SkeinElem& x) {
  const long p = x.prime();
  const CycNum d = integral(p, delta(p));
  CycNum acc = zero_num(p);
  for (int j = x.degree(); j >= 0; --j) acc = acc * d + x.coeffs()[j];
  return acc;
}

SkeinElem omega(long p) {
  require_odd_prime(p);
  const long top = (p - 3) / 2;
  std::vector<CycNum> e;
  for (long k = 0; k <= top; ++k) {
    CycInt c = quantum_int(p, k + 1);
    e.push_back(integral(p, k % 2 ? -c : c));
  }
  return from_e_basis(p, e);
}

CycInt twist_eigenvalue(long p, long k, long e) {
  CycInt mu = a_power(p, e * (k * k + 2 * k));
  return (k * e) % 2 != 0 ? -mu : mu;
}

SkeinElem twist(const SkeinElem& x, long e) {
  const long p = x.prime();
  auto coeffs = to_e_basis(x);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    coeffs[k] = integral(p, twist_eigenvalue(p, static_cast<long>(k), e)) * coeffs[k];
  return from_e_basis(p, coeffs);
}

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::vector<CycInt> hopf_brackets(long p, long max_n) {
  const int n_mod = ring_modulus(p);
  std::vector<CycInt> out;
  out.reserve(max_n + 1);
  out.push_back(CycInt::one(n_mod));
  const CycInt denom = a_power(p, 2) - a_power(p, -2);
  for (long n = 1; n <= max_n; ++n) {
    CycInt sum(n_mod);
    for (long r = 0; r < n; ++r) {
      const long m = n - 2 * r + 1;
      sum += binomial(n - 1, r) * (a_power(p, m * m - 1) * (a_power(p, 2 * m) - a_power(p, -2 * m)));
    }
    out.push_back(divide_exact(sum, denom));
  }
  return out;
}

CycInt hopf_bracket(long p, long n) {
  if (n < 0) throw DomainError("Hopf link component count must be >= 0");
  return hopf_brackets(p, n).back();
}

CycNum eta(long p) {
  switch (p) {
    case 5:
      return CycNum(CycInt(20, {0, 2, 0, 1, 0, 1, 0, -3}), 5, 1);
    case 7:
      return CycNum(CycInt(14, {-2, 0, -1, -2, 2, 1}), 7, 1);
    default:
      throw UnsupportedPrime(p, "the signed normalization constant eta");
  }
}

CycNum eta_squared(long p) {
  require_odd_prime(p);
  if (p < 5) throw UnsupportedPrime(p, "eta_squared");
  const int n = ring_modulus(p);
  CycInt sum(n);
  for (long k = 0; k <= (p - 3) / 2; ++k) {
    const CycInt q = quantum_int(p, k + 1);
    sum += q * q;
  }
  return invert_p_power(sum, p);
}

long kappa_root_exponent(long p) {
  const int n = ring_modulus(p);
  const long e = -6 - p * (p + 1) / 2;
  auto mod = [](long a, long m) { return ((a % m) + m) % m; };
  if (p % 4 == 1) return mod(e, n);  // A = ζ^2, so ζ^e squares to A^e
  return mod(e, 2 * p) / 2;          // e is even; A = ζ
}

CycInt kappa(long p) { return CycInt::root(ring_modulus(p), kappa_root_exponent(p)); }

bool phase_pinned(long p) { return p == 5 || p == 7; }

}  // namespace qcover
