#pragma once

// Character-variety level computations: genericity, dimensions, and the
// polynomials read off the generating kernel.

#include <string>
#include <vector>

#include "charvar/hlv.hpp"

namespace charvar {

/// exp(2πi·torsion) · Π x_s^{free_s} over independent symbols x_s.
struct EigenvalueSpec {
  BigRat torsion;  // kept in [0, 1)
  std::vector<long> free;

  EigenvalueSpec() = default;
  EigenvalueSpec(BigRat t, std::vector<long> f);

  bool is_one() const;
  EigenvalueSpec operator*(const EigenvalueSpec& o) const;
  EigenvalueSpec pow(long e) const;
  friend bool operator==(const EigenvalueSpec& a, const EigenvalueSpec& b);
  friend bool operator<(const EigenvalueSpec& a, const EigenvalueSpec& b);
  std::string to_string() const;
};

struct Eigenvalue {
  EigenvalueSpec value;
  int mult = 1;
  Partition jordan;  // a partition of mult
};

struct PunctureData {
  std::vector<Eigenvalue> eigenvalues;

  int rank() const;
  MultiPartition jordan() const;
};

struct SurfaceData {
  int genus = 0;
  std::vector<PunctureData> punctures;

  int rank() const;
  int k() const { return static_cast<int>(punctures.size()); }
  /// Structural checks (shared rank, distinct eigenvalues, |μ^i| = ν_i);
  /// throws ValidationError.
  void validate() const;
  /// Same eigenvalues with the Jordan data replaced.
  SurfaceData with_jordan(const std::vector<MultiPartition>& jordan) const;
  std::vector<MultiPartition> jordan() const;
};

/// Fresh generic eigenvalues for the given Jordan data ([puncture][eigenvalue]).
SurfaceData auto_surface(int genus, const std::vector<MultiPartition>& jordan);

bool is_generic(const SurfaceData& s);

int dim_class(const PunctureData& p);
/// n²(2g−2) + 2 + Σ dim_class; ValidationError for non-generic data.
int dim_charvar(const SurfaceData& s);

MultiSymFunc s_mu_prime(const SurfaceData& s);
MultiSymFunc h_mu_prime(const SurfaceData& s);

/// v^{d_μ} ⟨s_{μ'}, ℍ(−1, v)⟩.
UniPoly poincare_ih(const SurfaceData& s);
/// v^{d_μ} ⟨h_{μ'}, ℍ(−1, v)⟩, the resolution side.
UniPoly poincare_h_probe(const SurfaceData& s);
/// Semisimple classes with multiplicities ν^j and fresh generic eigenvalues.
UniPoly poincare_ss(int genus, const std::vector<Partition>& nus);

/// Π_{j,i} ⟨h_{μ^{j,i}'}, s_{ρ^{j,i}'}⟩.
BigInt multiplicity_dim(const std::vector<MultiPartition>& mu,
                        const std::vector<MultiPartition>& rho);

/// Strata ρ ⪯ μ over all punctures, μ first.
std::vector<std::vector<MultiPartition>> strata(const SurfaceData& s);

struct IdentityReport {
  bool ok = true;
  UniPoly lhs;
  UniPoly rhs;
  std::string diff;
};

/// h_{μ'}-probe polynomial against Σ_ρ multiplicity_dim · v^{d_μ−d_ρ} · P_ih(ρ).
IdentityReport resolution_identity_check(const SurfaceData& s);

/// Sign (−1)^{r(η)} and the probe h̃_η.
int eta_r(const SurfaceData& s, const EtaIndex& eta);
MultiSymFunc h_tilde_eta(const SurfaceData& s, const EtaIndex& eta);
EtaIndex trivial_eta(const SurfaceData& s);
/// Conjugacy classes of the relative Weyl group with their sizes.
std::vector<std::pair<EtaIndex, BigInt>> weyl_classes(const SurfaceData& s);
BigInt weyl_order(const SurfaceData& s);

/// (−1)^{r(η)} v^{d_μ} ⟨h̃_η, ℍ(−1, v)⟩.
UniPoly twisted_poincare(const SurfaceData& s, const EtaIndex& eta);

/// Polynomial in q and v, stored as a ZWPoly with z standing for q and w for v.
struct MixedHodge {
  ZWPoly poly;
  bool conjectural = true;
};

/// (v√q)^{d_μ} ⟨s_{μ'}, ℍ(−1/√q, v√q)⟩ with √q formal; odd powers are an error.
MixedHodge mixed_hodge_conjectural(const SurfaceData& s);
/// Mixed-Hodge polynomial at v = −1, as a polynomial in q.
UniPoly e_polynomial(const SurfaceData& s);

}  // namespace charvar
