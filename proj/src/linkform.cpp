#include "qcover/linkform.hpp"

#include <omp.h>

#include <numeric>
#include <sstream>

#include "qcover/cyclotomic.hpp"
#include "qcover/error.hpp"
#include "qcover/smith.hpp"

namespace qcover {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(mod(a, n)) * mod(b, n)) % n);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  std::int64_t g = n, x = 0, g1 = mod(a, n), x1 = 1;
  while (g1 != 0) {
    const std::int64_t q = g / g1;
    std::tie(g, g1) = std::make_pair(g1, g - q * g1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw DomainError("not a unit modulo " + std::to_string(n));
  return mod(x, n);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// p-adic valuation of n > 0
int vp(std::int64_t n, long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_power_of(std::int64_t n, long p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& s) {
  const std::string t = trim(s);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'");
  }
  if (used != t.size()) throw ParseError("expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

QZ::QZ(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("Q/Z denominator must be positive");
  num = mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

QZ operator+(const QZ& a, const QZ& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return QZ(mod(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l), l);
}

QZ operator*(std::int64_t k, const QZ& a) { return QZ(mulmod(k, a.num_, a.den_), a.den_); }

std::string QZ::str() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t smallest_nonresidue(long p) {
  require_odd_prime(p);
  for (std::int64_t a = 2; a < p; ++a) {
    bool square = false;
    for (std::int64_t x = 1; x < p && !square; ++x) square = (x * x) % p == a;
    if (!square) return a;
  }
  throw InternalInconsistency("no quadratic non-residue found");
}

WallForm::WallForm(long p, std::vector<WallSummand> summands) : p_(p), summands_(std::move(summands)) {
  require_odd_prime(p);
  for (auto& s : summands_) {
    if (s.exponent < 1) throw DomainError("Wall summand exponent must be >= 1");
    const std::int64_t ord = ipow(p, s.exponent);
    if (ord > (std::int64_t{1} << 40)) throw TooLarge("Wall summand order too large");
    if (s.kind == WallKind::A) {
      s.unit = 1;
    } else {
      s.unit = mod(s.unit, ord);
      const std::int64_t r = s.unit % p;
      bool square = false;
      for (std::int64_t x = 1; x < p && !square; ++x) square = (x * x) % p == r;
      if (r == 0 || square)
        throw DomainError("B-type unit " + std::to_string(s.unit) + " is not a non-square mod " +
                          std::to_string(p));
    }
    orders_.push_back(ord);
  }
}

WallForm WallForm::parse(const std::string& literal) {
  std::vector<WallSummand> summands;
  long p = 0;
  for (const auto& raw : split(literal, '+')) {
    const std::string term = trim(raw);
    if (term.size() < 2 || (term[0] != 'A' && term[0] != 'B'))
      throw ParseError("bad Wall summand '" + term + "'");
    WallSummand s;
    s.kind = term[0] == 'A' ? WallKind::A : WallKind::B;
    std::string order_text = term.substr(1);
    std::optional<std::int64_t> unit;
    if (const auto lb = order_text.find('['); lb != std::string::npos) {
      if (s.kind != WallKind::B || order_text.back() != ']')
        throw ParseError("bad Wall summand '" + term + "'");
      unit = parse_int(order_text.substr(lb + 1, order_text.size() - lb - 2));
      order_text = order_text.substr(0, lb);
    }
    const std::int64_t ord = parse_int(order_text);
    if (ord < 3) throw ParseError("bad summand order in '" + term + "'");
    long q = 0;
    for (long d = 2; d <= ord; ++d)
      if (ord % d == 0) {
        q = d;
        break;
      }
    if (!is_odd_prime(q) || !is_power_of(ord, q))
      throw ParseError("summand order " + std::to_string(ord) + " is not a power of an odd prime");
    if (p == 0) p = q;
    if (q != p) throw ParseError("Wall form mixes primes " + std::to_string(p) + " and " + std::to_string(q));
    s.exponent = vp(ord, p);
    s.unit = s.kind == WallKind::A ? 1 : unit.value_or(smallest_nonresidue(p));
    summands.push_back(s);
  }
  if (summands.empty()) throw ParseError("empty Wall form");
  return WallForm(p, std::move(summands));
}

std::int64_t WallForm::group_order() const {
  std::int64_t n = 1;
  for (auto o : orders_) n *= o;
  return n;
}

std::string WallForm::str() const {
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out += "+";
    out += summands_[i].kind == WallKind::A ? "A" : "B";
    out += std::to_string(orders_[i]);
    if (summands_[i].kind == WallKind::B) out += "[" + std::to_string(summands_[i].unit) + "]";
  }
  return out;
}

TorsionElement reduce(const WallForm& f, TorsionElement x) {
  if (x.size() != f.size()) throw DomainError("torsion element has the wrong number of coordinates");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], f.order(i));
  return x;
}

QZ pair(const WallForm& f, const TorsionElement& x, const TorsionElement& y) {
  if (x.size() != f.size() || y.size() != f.size())
    throw DomainError("torsion element shape does not match the form");
  QZ total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t n = f.order(i);
    const std::int64_t v = mulmod(mulmod(f.summands()[i].unit, x[i], n), y[i], n);
    total = total + QZ(v, n);
  }
  return total;
}

Character Character::parse(const std::string& literal, std::optional<std::int64_t> order) {
  Character c;
  c.order = order;
  auto parse_value = [&](const std::string& s) {
    const std::string t = trim(s);
    if (const auto slash = t.find('/'); slash != std::string::npos)
      return QZ(parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1)));
    if (!order && parse_int(t) == 0) return QZ(0, 1);
    if (!order) throw ParseError("integer value '" + t + "' needs a finite character order");
    return QZ(parse_int(t), *order);
  };
  for (const auto& section : split(literal, ';')) {
    const std::string sec = trim(section);
    if (sec.empty()) continue;
    const auto colon = sec.find(':');
    if (colon == std::string::npos) throw ParseError("character section '" + sec + "' lacks a key");
    const std::string key = trim(sec.substr(0, colon));
    const std::string body = trim(sec.substr(colon + 1));
    std::vector<QZ>* target = nullptr;
    if (key == "free") target = &c.free_values;
    else if (key == "tors") target = &c.torsion_values;
    else throw ParseError("unknown character section '" + key + "'");
    if (!body.empty())
      for (const auto& v : split(body, ',')) target->push_back(parse_value(v));
  }
  return c;
}

std::string Character::str() const {
  std::string out = "free:";
  for (std::size_t i = 0; i < free_values.size(); ++i) out += (i ? "," : "") + free_values[i].str();
  out += ";tors:";
  for (std::size_t i = 0; i < torsion_values.size(); ++i) out += (i ? "," : "") + torsion_values[i].str();
  return out;
}

bool Character::is_zero() const {
  for (const auto& v : free_values)
    if (!v.is_zero()) return false;
  for (const auto& v : torsion_values)
    if (!v.is_zero()) return false;
  return true;
}

void validate(const Homology1& h, const Character& chi) {
  const long p = h.form.prime();
  if (chi.free_values.size() != static_cast<std::size_t>(h.free_rank))
    throw DomainError("character has " + std::to_string(chi.free_values.size()) +
                      " free values for free rank " + std::to_string(h.free_rank));
  if (chi.torsion_values.size() != h.form.size())
    throw DomainError("character has " + std::to_string(chi.torsion_values.size()) +
                      " torsion values for " + std::to_string(h.form.size()) + " summands");
  if (chi.order && !is_power_of(*chi.order, p))
    throw DomainError("character order " + std::to_string(*chi.order) + " is not a power of " +
                      std::to_string(p));
  auto check = [&](const QZ& v) {
    if (chi.order && *chi.order % v.den() != 0)
      throw DomainError("value " + v.str() + " does not lie in Z_" + std::to_string(*chi.order));
  };
  for (const auto& v : chi.free_values) check(v);
  for (std::size_t i = 0; i < h.form.size(); ++i) {
    const QZ& v = chi.torsion_values[i];
    check(v);
    if (h.form.order(i) % v.den() != 0)
      throw DomainError("torsion value " + v.str() + " does not annihilate Z_" +
                        std::to_string(h.form.order(i)));
  }
}

H1Class H1Class::parse(const std::string& literal) {
  H1Class c;
  for (const auto& section : split(literal, ';')) {
    const std::string sec = trim(section);
    if (sec.empty()) continue;
    const auto colon = sec.find(':');
    if (colon == std::string::npos) throw ParseError("class section '" + sec + "' lacks a key");
    const std::string key = trim(sec.substr(0, colon));
    const std::string body = trim(sec.substr(colon + 1));
    std::vector<std::int64_t>* target = nullptr;
    if (key == "free") target = &c.free;
    else if (key == "tors") target = &c.torsion;
    else throw ParseError("unknown class section '" + key + "'");
    if (!body.empty())
      for (const auto& v : split(body, ',')) target->push_back(parse_int(v));
  }
  return c;
}

QZ evaluate(const Character& chi, const H1Class& c) {
  if (c.free.size() != chi.free_values.size() || c.torsion.size() != chi.torsion_values.size())
    throw DomainError("class shape does not match the character");
  QZ total;
  for (std::size_t i = 0; i < c.free.size(); ++i) total = total + c.free[i] * chi.free_values[i];
  for (std::size_t i = 0; i < c.torsion.size(); ++i) total = total + c.torsion[i] * chi.torsion_values[i];
  return total;
}

TorsionElement dual_element(const WallForm& f, const std::vector<QZ>& torsion_values) {
  if (torsion_values.size() != f.size()) throw DomainError("character shape does not match the form");
  TorsionElement c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t n = f.order(i);
    const QZ& v = torsion_values[i];
    if (n % v.den() != 0) throw DomainError("torsion value " + v.str() + " does not annihilate its summand");
    const std::int64_t a = v.num() * (n / v.den());  // v = a / n
    c[i] = mulmod(a, inverse_mod(f.summands()[i].unit, n), n);
  }
  return c;
}

bool is_simple(const Homology1& h, const Character& chi) {
  validate(h, chi);
  for (const auto& v : chi.torsion_values)
    if (!v.is_zero()) return false;
  return true;
}

bool complement_simple(const Homology1& h, const Character& chi, const std::vector<H1Class>& curves) {
  validate(h, chi);
  const TorsionElement target = dual_element(h.form, chi.torsion_values);
  const std::size_t r = h.free_rank;
  const std::size_t s = h.form.size();
  const std::size_t n = curves.size();
  // unknowns: curve multipliers λ (n) and torsion slack μ (s)
  //   Σ λ_i free(γ_i) = 0,   Σ λ_i tors(γ_i) + p^{t_j} μ_j = β(χ)_j
  IntMatrix m(r + s, n + s);
  for (std::size_t i = 0; i < n; ++i) {
    if (curves[i].free.size() != r || curves[i].torsion.size() != s)
      throw DomainError("curve class shape does not match the homology");
    for (std::size_t a = 0; a < r; ++a) m(a, i) = static_cast<long>(curves[i].free[a]);
    for (std::size_t j = 0; j < s; ++j) m(r + j, i) = static_cast<long>(curves[i].torsion[j]);
  }
  for (std::size_t j = 0; j < s; ++j) m(r + j, n + j) = static_cast<long>(h.form.order(j));
  std::vector<mpz_class> b(r + s);
  for (std::size_t j = 0; j < s; ++j) b[r + j] = static_cast<long>(target[j]);
  return solve_integer(m, b).has_value();
}

namespace {

// x in summand i with 𝔟(c_i, x) = 1/p^s where p^s is the order of c_i.
CurveChoice choose_curve(const WallForm& f, const TorsionElement& c, std::size_t i, const Character& chi) {
  const long p = f.prime();
  const std::int64_t n = f.order(i);
  const int t = f.summands()[i].exponent;
  const int s = t - vp(c[i], p);  // order of c_i is p^s
  const std::int64_t ps = ipow(p, s);
  const std::int64_t u = c[i] / (n / ps);  // c_i = p^{t-s} u, u a unit
  CurveChoice out;
  out.summand = i;
  out.x.assign(f.size(), 0);
  out.x[i] = inverse_mod(mulmod(f.summands()[i].unit, u, ps), ps);
  out.pairing = pair(f, c, out.x);
  H1Class cls{std::vector<std::int64_t>(chi.free_values.size(), 0), out.x};
  const QZ v = evaluate(chi, cls);
  out.chi_value = v.num() * (*chi.order / v.den());
  return out;
}

}  // namespace

std::vector<CurveChoice> scc_curves(const Homology1& h, const Character& chi) {
  validate(h, chi);
  const long p = h.form.prime();
  if (chi.order != p) throw DomainError("scc_curves needs a Z_p-valued character");
  if (chi.is_zero()) throw DomainError("scc_curves needs a nonzero character");
  const TorsionElement c = dual_element(h.form, chi.torsion_values);
  std::vector<CurveChoice> out;
  for (std::size_t i = 0; i < h.form.size(); ++i)
    if (c[i] != 0) out.push_back(choose_curve(h.form, c, i, chi));
  return out;
}

std::vector<CurveChoice> scc2_curves(const Homology1& h, const Character& chi) {
  validate(h, chi);
  const long p = h.form.prime();
  const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
  if (chi.order != p2) throw DomainError("scc2_curves needs a Z_{p^2}-valued character");
  bool onto = false;
  for (const auto& v : chi.free_values) onto = onto || v.den() == p2;
  for (const auto& v : chi.torsion_values) onto = onto || v.den() == p2;
  if (!onto) throw DomainError("character is not onto Z_" + std::to_string(p2));
  const TorsionElement c = dual_element(h.form, chi.torsion_values);
  std::vector<CurveChoice> out;
  for (std::size_t i = 0; i < h.form.size(); ++i)
    if (c[i] != 0) out.push_back(choose_curve(h.form, c, i, chi));
  return out;
}

namespace {

struct ClassEnumerator {
  const WallForm& form;
  std::int64_t total;
  explicit ClassEnumerator(const WallForm& f) : form(f), total(f.group_order()) {}
  TorsionElement decode(std::int64_t index) const {
    TorsionElement x(form.size());
    for (std::size_t i = form.size(); i-- > 0;) {
      x[i] = index % form.order(i);
      index /= form.order(i);
    }
    return x;
  }
};

bool good_curve(const Homology1& h, const Character& chi, const TorsionElement& x) {
  H1Class cls{std::vector<std::int64_t>(h.free_rank, 0), x};
  return !evaluate(chi, cls).is_zero() && complement_simple(h, chi, {cls});
}

}  // namespace

std::vector<TorsionElement> good_single_curves_serial(const Homology1& h, const Character& chi) {
  validate(h, chi);
  const ClassEnumerator e(h.form);
  std::vector<TorsionElement> out;
  for (std::int64_t i = 0; i < e.total; ++i) {
    TorsionElement x = e.decode(i);
    if (good_curve(h, chi, x)) out.push_back(std::move(x));
  }
  return out;
}

std::vector<TorsionElement> good_single_curves(const Homology1& h, const Character& chi) {
  validate(h, chi);
  const ClassEnumerator e(h.form);
  std::vector<char> hit(e.total, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < e.total; ++i) hit[i] = good_curve(h, chi, e.decode(i)) ? 1 : 0;
  std::vector<TorsionElement> out;
  for (std::int64_t i = 0; i < e.total; ++i)
    if (hit[i]) out.push_back(e.decode(i));
  return out;
}

}  // namespace qcover
