#pragma once

// Symmetric functions of bounded degree in one alphabet over Q(z, w).
// Base changes go through the power sums; tables are built once per degree.

#include <map>
#include <string>
#include <string_view>

#include "charvar/exact.hpp"
#include "charvar/partition.hpp"

namespace charvar {

enum class Basis { m, e, h, p, s };

char basis_letter(Basis b);
Basis basis_from_letter(std::string_view name);

/// Largest degree for which transition tables can be built.
inline constexpr int kMaxTableDegree = 16;

class SymFunc1 {
 public:
  explicit SymFunc1(Basis basis = Basis::s, int degree_bound = 8);

  static SymFunc1 element(Basis basis, const Partition& lam, int degree_bound = 8);

  Basis basis() const { return basis_; }
  int degree_bound() const { return bound_; }
  const std::map<Partition, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coefficient(const Partition& lam) const;

  /// Adds c to the coefficient of lam; throws SizingError above the bound.
  void add_term(const Partition& lam, const FieldElem& c);

  SymFunc1& operator+=(const SymFunc1& o);
  SymFunc1& operator-=(const SymFunc1& o);
  SymFunc1& operator*=(const FieldElem& c);
  friend SymFunc1 operator+(SymFunc1 a, const SymFunc1& b) { return a += b; }
  friend SymFunc1 operator-(SymFunc1 a, const SymFunc1& b) { return a -= b; }
  friend SymFunc1 operator*(SymFunc1 a, const FieldElem& c) { return a *= c; }
  friend bool operator==(const SymFunc1& a, const SymFunc1& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  /// Applies f(z, w) -> f(w, z) to every coefficient.
  SymFunc1 swap_variables() const;

  /// `3*s[2,1] + (z^2)*s[1,1,1]`, largest partitions first.
  std::string to_string() const;

 private:
  Basis basis_;
  int bound_;
  std::map<Partition, FieldElem> terms_;
};

SymFunc1 convert(const SymFunc1& f, Basis target);

/// Product, formed in the power sums and returned in f's basis. Throws
/// SizingError when a product term exceeds the smaller degree bound.
SymFunc1 multiply(const SymFunc1& f, const SymFunc1& g);

/// Hall inner product, ⟨p_λ, p_μ⟩ = δ z_λ.
FieldElem hall_pairing(const SymFunc1& f, const SymFunc1& g);

/// ⟨h_ν, s_λ⟩; ValidationError when |ν| ≠ |λ|.
BigInt kostka(const Partition& nu, const Partition& lam);

/// Irreducible character χ^λ at cycle type ρ (Murnaghan–Nakayama).
BigInt character(const Partition& lam, const Partition& rho);

/// Power-sum expansion of a single basis element b_λ.
const std::map<Partition, BigRat>& p_expansion(Basis b, const Partition& lam);

/// Π s_{ω^i}[X^{d_i}] in the Schur basis.
SymFunc1 twisted_schur(const TypeOmega& t);

/// p_λ -> p_{mλ}; coefficients untouched.
SymFunc1 adams_basis_only(const SymFunc1& f_in_p, int m);

inline std::ostream& operator<<(std::ostream& os, const SymFunc1& f) { return os << f.to_string(); }

}  // namespace charvar
