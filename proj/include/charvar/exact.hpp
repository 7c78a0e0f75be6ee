#pragma once

// Exact arithmetic: GMP rationals, sparse bivariate polynomials in (z, w),
// reduced rational functions over them, and univariate helpers used for the
// (z, w) -> (-1, v) style specializations.

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charvar {

using BigInt = mpz_class;
using BigRat = mpq_class;

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public MathError {
 public:
  using MathError::MathError;
};

/// Raised when a specialization lands on a pole of the rational function.
class PoleError : public MathError {
 public:
  using MathError::MathError;
};

/// Raised when a value that must be a polynomial carries a denominator.
class NotPolynomial : public MathError {
 public:
  using MathError::MathError;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt parse_bigint(std::string_view text);
/// Accepts "a", "-a" and "a/b".
BigRat parse_bigrat(std::string_view text);
std::string to_string(const BigRat& x);

struct Exponent {
  std::uint32_t z = 0;
  std::uint32_t w = 0;

  std::uint32_t total() const { return z + w; }
  friend bool operator==(Exponent, Exponent) = default;
};

/// Graded lexicographic order with z > w.
inline bool grlex_less(Exponent a, Exponent b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.z < b.z;
}

/// Sparse polynomial in z and w with rational coefficients. Terms are kept in
/// increasing graded-lex order, coefficients are never zero.
class ZWPoly {
 public:
  using Term = std::pair<Exponent, BigRat>;

  ZWPoly() = default;
  ZWPoly(const BigRat& c);  // NOLINT(google-explicit-constructor)
  ZWPoly(long c) : ZWPoly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)

  static ZWPoly monomial(const BigRat& c, std::uint32_t ez, std::uint32_t ew);
  static ZWPoly z() { return monomial(1, 1, 0); }
  static ZWPoly w() { return monomial(1, 0, 1); }
  /// Combines duplicate exponents and drops zeros.
  static ZWPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  BigRat coefficient(Exponent e) const;
  /// Leading term under graded-lex order; requires a nonzero polynomial.
  const Term& leading() const { return terms_.back(); }

  std::uint32_t degree_z() const;
  std::uint32_t degree_w() const;
  std::uint32_t total_degree() const;

  ZWPoly operator-() const;
  ZWPoly& operator+=(const ZWPoly& o);
  ZWPoly& operator-=(const ZWPoly& o);
  ZWPoly& operator*=(const ZWPoly& o);
  ZWPoly& operator*=(const BigRat& c);

  friend ZWPoly operator+(ZWPoly a, const ZWPoly& b) { return a += b; }
  friend ZWPoly operator-(ZWPoly a, const ZWPoly& b) { return a -= b; }
  friend ZWPoly operator*(const ZWPoly& a, const ZWPoly& b);
  friend ZWPoly operator*(ZWPoly a, const BigRat& c) { return a *= c; }
  friend bool operator==(const ZWPoly& a, const ZWPoly& b);

  ZWPoly pow(unsigned e) const;
  /// z -> z^m, w -> w^m.
  ZWPoly inflate(unsigned m) const;
  ZWPoly swap_variables() const;
  /// Multiplies by z^ez w^ew.
  ZWPoly shift(std::uint32_t ez, std::uint32_t ew) const;

  std::string to_string(std::string_view zname = "z",
                        std::string_view wname = "w") const;

 private:
  explicit ZWPoly(std::vector<Term> sorted_terms, int)
      : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

/// Greatest common divisor, normalized so its graded-lex leading coefficient
/// is 1. gcd(0, 0) = 0.
ZWPoly gcd(const ZWPoly& a, const ZWPoly& b);

/// a / b where b divides a exactly; throws MathError otherwise.
ZWPoly exact_div(const ZWPoly& a, const ZWPoly& b);

/// Element of Q(z, w) in canonical form: gcd(num, den) = 1 and the graded-lex
/// leading coefficient of den is 1. Zero is 0/1.
class FieldElem {
 public:
  FieldElem() : den_(1) {}
  FieldElem(const BigRat& c) : num_(c), den_(1) {}  // NOLINT
  FieldElem(long c) : FieldElem(BigRat(c)) {}        // NOLINT
  FieldElem(ZWPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  FieldElem(ZWPoly num, ZWPoly den);

  static FieldElem z() { return FieldElem(ZWPoly::z()); }
  static FieldElem w() { return FieldElem(ZWPoly::w()); }

  const ZWPoly& num() const { return num_; }
  const ZWPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Requires is_polynomial() and a constant numerator.
  bool is_rational_constant() const {
    return den_.is_one() && num_.is_constant();
  }
  BigRat constant_value() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  FieldElem& operator*=(const BigRat& c);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend FieldElem operator*(FieldElem a, const BigRat& c) { return a *= c; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  FieldElem inverse() const;
  FieldElem pow(int e) const;
  /// f(z, w) -> f(z^m, w^m); canonical form is preserved.
  FieldElem inflate(unsigned m) const;
  FieldElem swap_variables() const;

  std::string to_string(std::string_view zname = "z",
                        std::string_view wname = "w") const;

 private:
  struct Reduced {};
  FieldElem(ZWPoly num, ZWPoly den, Reduced)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_den();

  ZWPoly num_;
  ZWPoly den_;
};

/// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const BigRat& c);  // NOLINT
  UniPoly(long c) : UniPoly(BigRat(c)) {}  // NOLINT
  explicit UniPoly(std::vector<BigRat> coeffs);

  static UniPoly x() { return UniPoly(std::vector<BigRat>{0, 1}); }
  static UniPoly monomial(const BigRat& c, unsigned e);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const BigRat& leading() const { return c_.back(); }
  BigRat coeff(int i) const;
  const std::vector<BigRat>& coeffs() const { return c_; }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly pow(unsigned e) const;
  BigRat eval(const BigRat& x) const;
  /// Quotient and remainder of Euclidean division; throws on b == 0.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  UniPoly monic() const;
  bool has_integer_coefficients() const;

  std::string to_string(std::string_view var = "v") const;

 private:
  void trim();
  std::vector<BigRat> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Reduced univariate rational function with monic denominator.
class UniRat {
 public:
  UniRat() : den_(1) {}
  UniRat(UniPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  UniRat(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  UniRat& operator+=(const UniRat& o);
  UniRat& operator-=(const UniRat& o);
  UniRat& operator*=(const UniRat& o);
  friend UniRat operator+(UniRat a, const UniRat& b) { return a += b; }
  friend UniRat operator-(UniRat a, const UniRat& b) { return a -= b; }
  friend UniRat operator*(UniRat a, const UniRat& b) { return a *= b; }
  friend bool operator==(const UniRat&, const UniRat&) = default;

  /// Multiplies by x^e, e may be negative.
  UniRat shift(int e) const;
  std::string to_string(std::string_view var = "v") const;

 private:
  UniPoly num_;
  UniPoly den_;
};

/// f(z_val(v), w_val(v)) reduced. Throws PoleError when the substituted
/// denominator vanishes identically.
UniRat substitute(const FieldElem& f, const UniPoly& z_val, const UniPoly& w_val);

/// Numerator of r when its reduced denominator is 1; NotPolynomial otherwise.
UniPoly poly_assert(const UniRat& r);

/// Image c * u^eu * v^ev of a variable under a Laurent monomial substitution.
struct MonomialImage {
  BigRat coeff = 1;
  int eu = 0;
  int ev = 0;
};

/// f(z -> image_z, w -> image_w) as an element of Q(u, v); the result reuses
/// FieldElem with z standing for u and w for v.
FieldElem substitute_monomial(const FieldElem& f, const MonomialImage& image_z,
                              const MonomialImage& image_w);

inline std::ostream& operator<<(std::ostream& os, const ZWPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const FieldElem& f) { return os << f.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UniRat& r) { return os << r.to_string(); }

}  // namespace charvar
