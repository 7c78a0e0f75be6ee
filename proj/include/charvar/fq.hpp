#pragma once

// Brute-force point counts over prime fields: solutions of the surface-group
// relation with prescribed conjugacy classes in GL_n(F_q), and points of the
// Fricke cubic.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "charvar/exact.hpp"
#include "charvar/partition.hpp"

namespace charvar::fq {

/// F_q for an odd prime q (q = 2 allowed when no quadratic elements are used),
/// together with F_{q²} = F_q[s]/(s² − nonresidue).
class PrimeField {
 public:
  explicit PrimeField(long q);

  long q() const { return q_; }
  long nonresidue() const { return nonres_; }

  long add(long a, long b) const { return (a + b) % q_; }
  long sub(long a, long b) const { return (a - b + q_) % q_; }
  long mul(long a, long b) const { return a * b % q_; }
  long neg(long a) const { return (q_ - a) % q_; }
  long pow(long a, long e) const;
  /// ValidationError for 0.
  long inv(long a) const;
  long reduce(long a) const { return ((a % q_) + q_) % q_; }
  /// Smallest generator of F_q^*.
  long primitive_root() const;
  std::optional<long> sqrt(long a) const;

 private:
  long q_;
  long nonres_ = 0;
};

/// a + b·s in F_{q²}.
struct Fq2 {
  long a = 0;
  long b = 0;
  friend auto operator<=>(const Fq2&, const Fq2&) = default;
};

Fq2 mul(const PrimeField& F, Fq2 x, Fq2 y);
Fq2 pow(const PrimeField& F, Fq2 x, long e);
/// x^q, the Frobenius conjugate.
Fq2 frobenius(const PrimeField& F, Fq2 x);

/// One eigenvalue of a class over F_q. When b ≠ 0 the entry stands for the
/// Frobenius pair {x, x^q}, both with this multiplicity and Jordan type.
struct FqEigen {
  Fq2 value;
  int mult = 1;
  Partition jordan;

  bool quadratic() const { return value.b != 0; }
  int degree() const { return quadratic() ? 2 : 1; }
};

struct FqClassSpec {
  std::vector<FqEigen> eigenvalues;

  int rank() const;
  /// Eigenvalues over F_{q²} with multiplicity, pairs expanded.
  std::vector<std::pair<Fq2, int>> spectrum(const PrimeField& F) const;
  void validate(const PrimeField& F) const;
};

/// Square matrices up to 3×3, entries in [0, q).
struct FqMatrix {
  int n = 0;
  std::array<long, 9> a{};

  long& at(int i, int j) { return a[i * n + j]; }
  long at(int i, int j) const { return a[i * n + j]; }
  static FqMatrix identity(int n);
  std::uint64_t encode(long q) const;
  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

FqMatrix mul(const PrimeField& F, const FqMatrix& x, const FqMatrix& y);
long det(const PrimeField& F, const FqMatrix& x);
int rank(const PrimeField& F, FqMatrix x);
/// Requires det ≠ 0.
FqMatrix inverse(const PrimeField& F, const FqMatrix& x);
long trace(const PrimeField& F, const FqMatrix& x);

/// Π_{i<n} (q^n − q^i).
BigInt group_size(int n, long q);

/// Block-diagonal Jordan form (companion blocks for Frobenius pairs).
FqMatrix jordan_representative(const PrimeField& F, const FqClassSpec& spec);
/// Membership via the nullities of f(X)^m for every eigenvalue factor f.
bool in_class(const PrimeField& F, const FqMatrix& x, const FqClassSpec& spec);
/// All conjugates of the representative; n ≤ 3, q ≤ 17 and at most 10^7
/// elements, SizingError otherwise.
std::vector<FqMatrix> class_elements(const PrimeField& F, const FqClassSpec& spec);

/// Exact analogue of the genericity test over F_q.
bool is_generic(const PrimeField& F, const std::vector<FqClassSpec>& specs);

/// |{(A_i, B_i, X_j) : Π[A_i, B_i] Π X_j = 1, X_j ∈ C_j}| / |PGL_n(F_q)|.
/// ValidationError for non-generic data, SizingError above 10^9 loop steps,
/// MathError when the division is not exact.
BigInt count_points(int g, long q, const std::vector<FqClassSpec>& specs);

/// Points of x y z + x² + y² + z² + A x + B y + C z + D = 0 over F_q, with
/// A..D from traces t1, t2, t3 of X_1..X_3 and t4 = tr(X_1 X_2 X_3).
BigInt fricke_count(long q, long t1, long t2, long t3, long t4);

/// Interpolating polynomial through (x_i, y_i), distinct x_i.
UniPoly lagrange(const std::vector<std::pair<BigInt, BigInt>>& points);

/// Semisimple classes with split eigenvalues and multiplicities nus[j], the
/// first generic choice in a fixed search order, or nothing.
std::optional<std::vector<FqClassSpec>> find_generic_semisimple(const PrimeField& F,
                                                                const std::vector<Partition>& nus);

/// Regular semisimple SL_2 classes {λ_j, λ_j^{-1}}, λ_j ≠ ±1, λ_j in F_q^* or
/// of norm 1 in F_{q²}; the first generic k-tuple, or nothing.
std::optional<std::vector<FqClassSpec>> find_generic_sl2_regular(const PrimeField& F, int k);

}  // namespace charvar::fq
