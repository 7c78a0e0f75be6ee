#pragma once

// Modified Macdonald polynomials H̃_λ[X; q, t] in the Schur basis, with
// q = z², t = w² already substituted.

#include <map>

#include "charvar/symfunc.hpp"

namespace charvar {

/// Triangularity construction, memoized. Coefficients are polynomials in
/// z², w² with nonnegative integer coefficients.
SymFunc1 htilde(const Partition& lam);

/// Sum over fillings of the diagram (exponential; |λ| ≤ 6 enforced).
SymFunc1 htilde_oracle(const Partition& lam);

/// Entries computed so far (used to persist the table).
std::map<Partition, SymFunc1> htilde_snapshot();
/// Preloads entries, e.g. from a disk cache. Existing entries are kept.
void htilde_seed(const std::map<Partition, SymFunc1>& entries);
void htilde_clear_memo();

/// Solves one partition without touching the memo.
SymFunc1 htilde_solve(const Partition& lam);

}  // namespace charvar
