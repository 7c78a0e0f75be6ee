#include "charvar/hlv.hpp"

#include <mutex>

#include "charvar/macdonald.hpp"

namespace charvar {

namespace {

ZWPoly zw(std::uint32_t a, std::uint32_t b) { return ZWPoly::monomial(1, a, b); }

std::mutex kernel_mutex;
std::map<KernelKey, KernelResult>& kernel_memo() {
  static std::map<KernelKey, KernelResult> m;
  return m;
}

}  // namespace

FieldElem hook_factor(const Partition& lam, int g) {
  if (g < 0) throw ValidationError("genus must be nonnegative");
  ZWPoly num(1), den(1);
  for (auto cell : lam.cells()) {
    auto [a, l] = arm_leg(lam, cell);
    std::uint32_t ua = a, ul = l;
    num *= (zw(2 * ua + 1, 0) - zw(0, 2 * ul + 1)).pow(2 * static_cast<unsigned>(g));
    den *= (zw(2 * ua + 2, 0) - zw(0, 2 * ul)) * (zw(2 * ua, 0) - zw(0, 2 * ul + 2));
  }
  return FieldElem(num, den);
}

SymSeries omega(int g, int k, int n_max) {
  if (k < 1) throw ValidationError("at least one puncture is required");
  SymSeries out(k, n_max);
  out[0] = MultiSymFunc::constant(k, FieldElem(1));
  for (int d = 1; d <= n_max; ++d)
    for (const auto& lam : partitions_of(d)) {
      MultiSymFunc term = MultiSymFunc::tensor(std::vector<SymFunc1>(k, htilde(lam)));
      out[d] += term * hook_factor(lam, g);
    }
  return out;
}

KernelResult hlv_kernel(int n, int g, int k) {
  if (n < 1) throw ValidationError("kernel degree must be at least 1");
  KernelKey key{n, g, k};
  {
    std::lock_guard lock(kernel_mutex);
    auto it = kernel_memo().find(key);
    if (it != kernel_memo().end()) return it->second;
  }
  SymSeries log = pleth_log(omega(g, k, n));
  FieldElem factor = FieldElem(zw(2, 0) - ZWPoly(1)) * FieldElem(ZWPoly(1) - zw(0, 2));
  KernelResult kr{n, g, k, log[n] * factor};
  std::lock_guard lock(kernel_mutex);
  return kernel_memo().emplace(key, std::move(kr)).first->second;
}

std::map<KernelKey, KernelResult> kernel_snapshot() {
  std::lock_guard lock(kernel_mutex);
  return kernel_memo();
}

void kernel_seed(const std::map<KernelKey, KernelResult>& entries) {
  std::lock_guard lock(kernel_mutex);
  for (const auto& [key, kr] : entries) kernel_memo().emplace(key, kr);
}

void kernel_clear_memo() {
  std::lock_guard lock(kernel_mutex);
  kernel_memo().clear();
}

UniRat specialize_pair_rational(const KernelResult& kr, const MultiSymFunc& f,
                                const UniPoly& z_val, const UniPoly& w_val) {
  if (f.k() != kr.k)
    throw ValidationError("probe has " + std::to_string(f.k()) + " alphabets, kernel has " +
                          std::to_string(kr.k));
  for (const auto& [key, c] : f.terms())
    for (const auto& lam : key)
      if (lam.size() != kr.n)
        throw ValidationError("probe must have degree " + std::to_string(kr.n) +
                              " in every alphabet");
  return substitute(pair_multi(f, kr.kernel), z_val, w_val);
}

UniPoly specialize_pair(const KernelResult& kr, const MultiSymFunc& f, const UniPoly& z_val,
                        const UniPoly& w_val) {
  return poly_assert(specialize_pair_rational(kr, f, z_val, w_val));
}

}  // namespace charvar
