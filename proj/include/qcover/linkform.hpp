#pragma once

// Linking forms on p-primary torsion in Wall normal form, characters into
// Z_k ⊂ Q/Z, Bockstein images, and curve selection for simple covers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcover {

// Element of Q/Z, stored as num/den with 0 <= num < den and gcd(num, den) = 1.
class QZ {
 public:
  QZ() = default;
  QZ(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend QZ operator+(const QZ& a, const QZ& b);
  friend QZ operator-(const QZ& a) { return QZ(-a.num_, a.den_); }
  friend QZ operator*(std::int64_t k, const QZ& a);
  friend bool operator==(const QZ&, const QZ&) = default;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class WallKind { A, B };

struct WallSummand {
  int exponent = 1;          // t: the summand is Z_{p^t}
  WallKind kind = WallKind::A;
  std::int64_t unit = 1;     // n_t for kind B, 1 for kind A
  friend bool operator==(const WallSummand&, const WallSummand&) = default;
};

class WallForm {
 public:
  WallForm(long p, std::vector<WallSummand> summands);

  // "A25+A5+B5[2]"; a B summand without brackets uses the smallest
  // quadratic non-residue mod p.
  static WallForm parse(const std::string& literal);

  long prime() const { return p_; }
  const std::vector<WallSummand>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  std::int64_t order(std::size_t i) const { return orders_[i]; }
  std::int64_t group_order() const;
  std::string str() const;

 private:
  long p_;
  std::vector<WallSummand> summands_;
  std::vector<std::int64_t> orders_;
};

std::int64_t smallest_nonresidue(long p);

// Residues x_i ∈ Z_{p^{t_i}}, one per summand.
using TorsionElement = std::vector<std::int64_t>;

TorsionElement reduce(const WallForm& f, TorsionElement x);

// Σ_i n_i x_i y_i / p^{t_i} mod 1
QZ pair(const WallForm& f, const TorsionElement& x, const TorsionElement& y);

struct Homology1 {
  int free_rank = 0;
  WallForm form;
};

// χ: Z^r ⊕ T → Z_k ⊂ Q/Z, recorded by its values on the free basis and on
// the summand generators. order = k (a power of p) or nullopt for Q/Z.
struct Character {
  std::optional<std::int64_t> order;
  std::vector<QZ> free_values;
  std::vector<QZ> torsion_values;

  // "free:0,0;tors:1/5,0,2/5". Bare integers are read as elements of Z_k.
  static Character parse(const std::string& literal, std::optional<std::int64_t> order);
  std::string str() const;
  bool is_zero() const;
};

// Throws DomainError unless χ is well defined on h.
void validate(const Homology1& h, const Character& chi);

// A first homology class: free coordinates plus a torsion element.
struct H1Class {
  std::vector<std::int64_t> free;
  TorsionElement torsion;
  static H1Class parse(const std::string& literal);
};

QZ evaluate(const Character& chi, const H1Class& c);

// The unique c with pair(c, ·) = χ on torsion: the Poincaré dual of β(χ).
TorsionElement dual_element(const WallForm& f, const std::vector<QZ>& torsion_values);

// β_k(χ) = 0, i.e. χ kills torsion and lifts to an integral character.
bool is_simple(const Homology1& h, const Character& chi);

// dual_element(χ) lies in the span of the curve classes intersected with T.
bool complement_simple(const Homology1& h, const Character& chi, const std::vector<H1Class>& curves);

struct CurveChoice {
  std::size_t summand = 0;
  TorsionElement x;
  QZ pairing;               // 𝔟(β(χ)_i, x)
  std::int64_t chi_value = 0;  // χ(x) as an element of Z_k
};

// χ with k = p, nonzero: one curve per summand where β(χ) projects nonzero,
// each with pairing 1/p.
std::vector<CurveChoice> scc_curves(const Homology1& h, const Character& chi);

// χ onto Z_{p²}: pairing 1/p² on summands where the projection has order p²
// (χ-value 1), 1/p where it has order p (χ-value p).
std::vector<CurveChoice> scc2_curves(const Homology1& h, const Character& chi);

// Serial reference and OpenMP kernel for the exhaustive search over single
// torsion classes γ with complement_simple({γ}) and χ(γ) ≠ 0.
std::vector<TorsionElement> good_single_curves_serial(const Homology1& h, const Character& chi);
std::vector<TorsionElement> good_single_curves(const Homology1& h, const Character& chi);

}  // namespace qcover
