#include "qcover/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "qcover/error.hpp"

namespace qcover {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(long p) {
  if (!is_odd_prime(p)) throw InvalidPrime(p);
}

int ring_modulus(long p) {
  require_odd_prime(p);
  return static_cast<int>(p % 4 == 1 ? 4 * p : 2 * p);
}

int euler_phi(int n) {
  int result = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> compute_cyclotomic(int n) {
  // Φ_n = (x^n - 1) / Π_{d | n, d < n} Φ_d
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(div.size()) - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
      long c = num[i];  // divisor is monic
      quot[i - dd] = c;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<std::vector<long>>(compute_cyclotomic(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return *it->second;
}

namespace {

// Reduces a coefficient vector modulo the monic Φ_N in place and truncates
// it to φ(N) entries.
void reduce(std::vector<mpz_class>& a, int modulus) {
  const auto& phi = cyclotomic_polynomial(modulus);
  const int d = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= d; --i) {
    if (sgn(a[i]) == 0) continue;
    const mpz_class c = a[i];
    for (int j = 0; j < d; ++j) {
      if (phi[j] > 0)
        mpz_submul_ui(a[i - d + j].get_mpz_t(), c.get_mpz_t(), phi[j]);
      else if (phi[j] < 0)
        mpz_addmul_ui(a[i - d + j].get_mpz_t(), c.get_mpz_t(), -phi[j]);
    }
    a[i] = 0;
  }
  a.resize(d);
}

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CycInt::CycInt(int modulus)
    : modulus_(modulus), coeffs_(euler_phi(modulus)) {}

CycInt::CycInt(int modulus, std::vector<mpz_class> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  reduce(coeffs_, modulus_);
}

CycInt CycInt::integer(int modulus, const mpz_class& value) {
  CycInt r(modulus);
  r.coeffs_[0] = value;
  return r;
}

CycInt CycInt::root(int modulus, long j) {
  std::vector<mpz_class> c(mod_floor(j, modulus) + 1);
  c.back() = 1;
  return CycInt(modulus, std::move(c));
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (modulus_ != o.modulus_) throw ModulusMismatch(modulus_, o.modulus_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (modulus_ != o.modulus_) throw ModulusMismatch(modulus_, o.modulus_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.modulus_ != b.modulus_) throw ModulusMismatch(a.modulus_, b.modulus_);
  const int d = a.degree();
  std::vector<mpz_class> prod(2 * d > 0 ? 2 * d - 1 : 0);
  for (int i = 0; i < d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; j < d; ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
  }
  return CycInt(a.modulus_, std::move(prod));
}

CycInt& CycInt::operator*=(const CycInt& o) { return *this = *this * o; }

CycInt& CycInt::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

CycInt CycInt::pow(long e) const {
  CycInt base = *this;
  if (e < 0) {
    base = divide_exact(one(modulus_), *this);
    e = -e;
  }
  CycInt result = one(modulus_);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycInt CycInt::galois(long k) const {
  if (std::gcd(k, static_cast<long>(modulus_)) != 1)
    throw DomainError("Galois exponent must be coprime to the modulus");
  CycInt r(modulus_);
  for (int i = 0; i < degree(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    r += root(modulus_, i * k) * coeffs_[i];
  }
  return r;
}

bool solve_rational(const CycInt& x, const CycInt& y, std::vector<mpq_class>& q) {
  if (x.modulus() != y.modulus()) throw ModulusMismatch(x.modulus(), y.modulus());
  if (y.is_zero()) return false;
  const int n = y.degree();
  const int m = y.modulus();
  // column j of the system is y·ζ^j
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  CycInt col = y;
  const CycInt zeta = CycInt::root(m, 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) a[i][j] = col[i];
    col *= zeta;
  }
  for (int i = 0; i < n; ++i) a[i][n] = x[i];

  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[c], a[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  q.resize(n);
  for (int i = 0; i < n; ++i) q[i] = a[i][n] / a[i][i];
  return true;
}

CycInt divide_exact(const CycInt& x, const CycInt& y) {
  std::vector<mpq_class> q;
  if (!solve_rational(x, y, q)) throw NotDivisible("division by zero");
  std::vector<mpz_class> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1)
      throw NotDivisible("not divisible in Z[zeta_" + std::to_string(x.modulus()) + "]");
    out[i] = q[i].get_num();
  }
  return CycInt(x.modulus(), std::move(out));
}

CycNum::CycNum(CycInt num, long p, long k) : num_(std::move(num)), p_(p), k_(k) {
  if (k_ < 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p_, -k_);
    num_ *= scale;
    k_ = 0;
  }
  canonicalize();
}

void CycNum::canonicalize() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  const mpz_class p(p_);
  while (k_ > 0) {
    bool divisible = true;
    for (const auto& c : num_.coeffs())
      if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) {
        divisible = false;
        break;
      }
    if (!divisible) break;
    std::vector<mpz_class> reduced(num_.coeffs().begin(), num_.coeffs().end());
    for (auto& c : reduced) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    num_ = CycInt(num_.modulus(), std::move(reduced));
    --k_;
  }
}

void CycNum::require_same_prime(const CycNum& o) const {
  if (p_ != o.p_)
    throw DomainError("denominator primes differ: " + std::to_string(p_) +
                      " vs " + std::to_string(o.p_));
}

namespace {

mpz_class ipow(long base, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  require_same_prime(o);
  if (k_ >= o.k_) {
    num_ += o.num_ * ipow(p_, k_ - o.k_);
  } else {
    num_ = num_ * ipow(p_, o.k_ - k_) + o.num_;
    k_ = o.k_;
  }
  canonicalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  require_same_prime(o);
  num_ *= o.num_;
  k_ += o.k_;
  canonicalize();
  return *this;
}

CycNum CycNum::pow(unsigned long e) const {
  CycNum result(CycInt::one(modulus()), p_, 0);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycNum invert_p_power(const CycInt& x, long p, long cap) {
  require_odd_prime(p);
  if (cap < 0) cap = 2 * (p - 1);
  std::vector<mpq_class> q;
  if (!solve_rational(CycInt::one(x.modulus()), x, q))
    throw NotPPowerInvertible("zero has no inverse");
  mpz_class scale = 1;
  for (long k = 0; k <= cap; ++k) {
    bool integral = true;
    for (const auto& c : q) {
      mpz_class num = c.get_num() * scale;
      if (!mpz_divisible_p(num.get_mpz_t(), c.get_den().get_mpz_t())) {
        integral = false;
        break;
      }
    }
    if (integral) {
      std::vector<mpz_class> out(q.size());
      for (std::size_t i = 0; i < q.size(); ++i) {
        out[i] = q[i].get_num() * scale;
        mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), q[i].get_den().get_mpz_t());
      }
      return CycNum(CycInt(x.modulus(), std::move(out)), p, k);
    }
    scale *= p;
  }
  throw NotPPowerInvertible("no inverse with denominator p^k for k <= " +
                            std::to_string(cap));
}

ResidueClass::ResidueClass(int modulus, long p, std::vector<long> coeffs)
    : modulus_(modulus), p_(p), coeffs_(std::move(coeffs)) {
  const auto& phi = cyclotomic_polynomial(modulus_);
  const int d = static_cast<int>(phi.size()) - 1;
  for (auto& c : coeffs_) c = mod_floor(c, p_);
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= d; --i) {
    const long c = coeffs_[i];
    if (c == 0) continue;
    for (int j = 0; j < d; ++j)
      coeffs_[i - d + j] = mod_floor(coeffs_[i - d + j] - c * mod_floor(phi[j], p_), p_);
    coeffs_[i] = 0;
  }
  coeffs_.resize(d, 0);
}

bool ResidueClass::is_zero() const {
  for (long c : coeffs_)
    if (c != 0) return false;
  return true;
}

ResidueClass operator+(const ResidueClass& a, const ResidueClass& b) {
  if (a.modulus_ != b.modulus_) throw ModulusMismatch(a.modulus_, b.modulus_);
  std::vector<long> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return ResidueClass(a.modulus_, a.p_, std::move(c));
}

ResidueClass operator*(const ResidueClass& a, const ResidueClass& b) {
  if (a.modulus_ != b.modulus_) throw ModulusMismatch(a.modulus_, b.modulus_);
  const std::size_t d = a.coeffs_.size();
  std::vector<long> c(d ? 2 * d - 1 : 0, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      c[i + j] = (c[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.p_;
  return ResidueClass(a.modulus_, a.p_, std::move(c));
}

ResidueClass mod_p(const CycInt& x, long p) {
  std::vector<long> c(x.degree());
  const mpz_class pp(p);
  for (int i = 0; i < x.degree(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x[i].get_mpz_t(), pp.get_mpz_t());
    c[i] = r.get_si();
  }
  return ResidueClass(x.modulus(), p, std::move(c));
}

long valuation(const CycInt& x, long p) {
  require_odd_prime(p);
  if (x.modulus() % p != 0)
    throw DomainError("zeta_" + std::to_string(p) + " is not in Z[zeta_" +
                      std::to_string(x.modulus()) + "]");
  if (x.is_zero()) return kInfiniteValuation;
  const int n = x.modulus();
  const CycInt pi = CycInt::one(n) - CycInt::root(n, n / p);
  long v = 0;
  CycInt cur = x;
  std::vector<mpq_class> q;
  for (;;) {
    solve_rational(cur, pi, q);
    std::vector<mpz_class> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i].get_den() != 1) return v;
      out[i] = q[i].get_num();
    }
    cur = CycInt(n, std::move(out));
    ++v;
  }
}

long valuation(const CycNum& x) {
  const long v = valuation(x.num(), x.prime());
  if (v == kInfiniteValuation) return v;
  return v - x.denominator_exponent() * (x.prime() - 1);
}

}  // namespace qcover
