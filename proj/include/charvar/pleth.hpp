#pragma once

// Symmetric functions in k alphabets (always stored on power sums) and
// truncated series in s with Adams operators and plethystic Exp / Log.

#include <map>
#include <string>
#include <vector>

#include "charvar/symfunc.hpp"

namespace charvar {

using MultiKey = std::vector<Partition>;

/// Σ c · p_{λ¹}[X₁]⋯p_{λᵏ}[X_k].
class MultiSymFunc {
 public:
  explicit MultiSymFunc(int k = 1) : k_(k) {}

  /// Π_j f_j[X_j].
  static MultiSymFunc tensor(const std::vector<SymFunc1>& per_alphabet);
  /// The constant c.
  static MultiSymFunc constant(int k, const FieldElem& c);

  int k() const { return k_; }
  const std::map<MultiKey, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coefficient(const MultiKey& key) const;

  void add_term(const MultiKey& key, const FieldElem& c);

  MultiSymFunc& operator+=(const MultiSymFunc& o);
  MultiSymFunc& operator-=(const MultiSymFunc& o);
  MultiSymFunc& operator*=(const FieldElem& c);
  friend MultiSymFunc operator+(MultiSymFunc a, const MultiSymFunc& b) { return a += b; }
  friend MultiSymFunc operator-(MultiSymFunc a, const MultiSymFunc& b) { return a -= b; }
  friend MultiSymFunc operator*(MultiSymFunc a, const FieldElem& c) { return a *= c; }
  friend MultiSymFunc operator*(const MultiSymFunc& a, const MultiSymFunc& b);
  friend bool operator==(const MultiSymFunc& a, const MultiSymFunc& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  /// Coefficients f(z^m, w^m), p_λ[X_j] -> p_{mλ}[X_j].
  MultiSymFunc adams(int m) const;
  /// Exchanges alphabets i and j.
  MultiSymFunc swap_alphabets(int i, int j) const;

  std::string to_string() const;

 private:
  int k_;
  std::map<MultiKey, FieldElem> terms_;
};

/// Bilinear product over alphabets of Hall pairings.
FieldElem pair_multi(const MultiSymFunc& f, const MultiSymFunc& g);

/// Σ_{d ≤ n} c_d s^d with c_d ∈ Sym[X₁,…,X_k].
class SymSeries {
 public:
  SymSeries(int k, int n);

  int k() const { return k_; }
  int order() const { return n_; }
  /// Set when an operation dropped terms above the truncation order.
  bool truncated() const { return truncated_; }

  const MultiSymFunc& operator[](int d) const { return c_.at(d); }
  MultiSymFunc& operator[](int d) { return c_.at(d); }

  SymSeries& operator+=(const SymSeries& o);
  SymSeries& operator-=(const SymSeries& o);
  SymSeries& operator*=(const FieldElem& c);
  friend SymSeries operator+(SymSeries a, const SymSeries& b) { return a += b; }
  friend SymSeries operator-(SymSeries a, const SymSeries& b) { return a -= b; }
  friend SymSeries operator*(SymSeries a, const FieldElem& c) { return a *= c; }
  friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
  friend bool operator==(const SymSeries& a, const SymSeries& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.c_ == b.c_;
  }

  /// s^d -> s^{md}; terms landing above the order are dropped and flagged.
  SymSeries adams(int m) const;

 private:
  int k_;
  int n_;
  bool truncated_ = false;
  std::vector<MultiSymFunc> c_;
};

SymSeries adams(int m, const SymSeries& f);

/// Ordinary exp of a series without constant term.
SymSeries series_exp(const SymSeries& g);
/// Ordinary log of a series with constant term 1.
SymSeries series_log(const SymSeries& h);

/// exp(Σ_m adams(m, g)/m); MathError unless g has zero constant term.
SymSeries pleth_exp(const SymSeries& g);
/// Σ_m μ(m)/m · adams(m, log h); MathError unless h has constant term 1.
SymSeries pleth_log(const SymSeries& h);

int moebius(int m);

}  // namespace charvar
