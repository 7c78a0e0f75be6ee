#pragma once

// The genus-g, k-point Cauchy function Ω and the degree-n HLV kernel.

#include <map>
#include <tuple>

#include "charvar/pleth.hpp"

namespace charvar {

/// Π over cells (z^{2a+1} − w^{2l+1})^{2g} / ((z^{2a+2} − w^{2l})(z^{2a} − w^{2l+2})).
FieldElem hook_factor(const Partition& lam, int g);

/// Σ_{|λ| ≤ n_max} ℋ_λ Π_j H̃_λ[X_j; z², w²] s^{|λ|}.
SymSeries omega(int g, int k, int n_max);

struct KernelResult {
  int n = 0;
  int g = 0;
  int k = 0;
  /// s^n coefficient of (z²−1)(1−w²) Log Ω, on power sums.
  MultiSymFunc kernel;
};

using KernelKey = std::tuple<int, int, int>;

/// Memoized on (n, g, k).
KernelResult hlv_kernel(int n, int g, int k);
std::map<KernelKey, KernelResult> kernel_snapshot();
void kernel_seed(const std::map<KernelKey, KernelResult>& entries);
void kernel_clear_memo();

/// ⟨f, kernel⟩ at (z, w) = (z_val, w_val), still a rational function.
UniRat specialize_pair_rational(const KernelResult& kr, const MultiSymFunc& f,
                                const UniPoly& z_val, const UniPoly& w_val);
/// Same, asserting a polynomial result.
UniPoly specialize_pair(const KernelResult& kr, const MultiSymFunc& f, const UniPoly& z_val,
                        const UniPoly& w_val);

}  // namespace charvar
