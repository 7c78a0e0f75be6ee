#include "charvar/charvar.hpp"

#include <algorithm>
#include <set>

namespace charvar {

// ---- eigenvalues ------------------------------------------------------------

namespace {

BigRat frac(BigRat t) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  t -= BigRat(fl);
  return t;
}

void trim(std::vector<long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

EigenvalueSpec::EigenvalueSpec(BigRat t, std::vector<long> f)
    : torsion(frac(std::move(t))), free(std::move(f)) {
  trim(free);
}

bool EigenvalueSpec::is_one() const { return torsion == 0 && free.empty(); }

EigenvalueSpec EigenvalueSpec::operator*(const EigenvalueSpec& o) const {
  std::vector<long> f(std::max(free.size(), o.free.size()), 0);
  for (std::size_t i = 0; i < free.size(); ++i) f[i] += free[i];
  for (std::size_t i = 0; i < o.free.size(); ++i) f[i] += o.free[i];
  return EigenvalueSpec(torsion + o.torsion, std::move(f));
}

EigenvalueSpec EigenvalueSpec::pow(long e) const {
  std::vector<long> f = free;
  for (long& x : f) x *= e;
  return EigenvalueSpec(torsion * BigRat(e), std::move(f));
}

bool operator==(const EigenvalueSpec& a, const EigenvalueSpec& b) {
  return a.torsion == b.torsion && a.free == b.free;
}

bool operator<(const EigenvalueSpec& a, const EigenvalueSpec& b) {
  if (a.torsion != b.torsion) return a.torsion < b.torsion;
  return a.free < b.free;
}

std::string EigenvalueSpec::to_string() const {
  std::string s = "exp(2pi i*" + torsion.get_str() + ")";
  for (std::size_t i = 0; i < free.size(); ++i)
    if (free[i]) s += "*x" + std::to_string(i) + "^" + std::to_string(free[i]);
  return s;
}

// ---- surface data -----------------------------------------------------------

int PunctureData::rank() const {
  int n = 0;
  for (const auto& e : eigenvalues) n += e.mult;
  return n;
}

MultiPartition PunctureData::jordan() const {
  MultiPartition m;
  for (const auto& e : eigenvalues) m.components.push_back(e.jordan);
  return m;
}

int SurfaceData::rank() const { return punctures.empty() ? 0 : punctures[0].rank(); }

std::vector<MultiPartition> SurfaceData::jordan() const {
  std::vector<MultiPartition> out;
  for (const auto& p : punctures) out.push_back(p.jordan());
  return out;
}

void SurfaceData::validate() const {
  if (genus < 0) throw ValidationError("genus must be nonnegative");
  if (punctures.empty()) throw ValidationError("at least one puncture is required");
  int n = rank();
  if (n < 1) throw ValidationError("rank must be positive");
  for (std::size_t j = 0; j < punctures.size(); ++j) {
    const auto& p = punctures[j];
    if (p.rank() != n)
      throw ValidationError("puncture " + std::to_string(j) + " has rank " +
                            std::to_string(p.rank()) + ", expected " + std::to_string(n));
    for (std::size_t i = 0; i < p.eigenvalues.size(); ++i) {
      const auto& e = p.eigenvalues[i];
      if (e.mult < 1) throw ValidationError("eigenvalue multiplicity must be positive");
      if (e.jordan.size() != e.mult)
        throw ValidationError("Jordan type " + e.jordan.to_string() + " is not a partition of " +
                              std::to_string(e.mult));
      for (std::size_t i2 = 0; i2 < i; ++i2)
        if (p.eigenvalues[i2].value == e.value)
          throw ValidationError("puncture " + std::to_string(j) + " repeats an eigenvalue");
    }
  }
}

SurfaceData SurfaceData::with_jordan(const std::vector<MultiPartition>& jordan) const {
  if (jordan.size() != punctures.size()) throw ValidationError("Jordan data shape mismatch");
  SurfaceData out = *this;
  for (std::size_t j = 0; j < punctures.size(); ++j) {
    if (jordan[j].components.size() != punctures[j].eigenvalues.size())
      throw ValidationError("Jordan data shape mismatch");
    for (std::size_t i = 0; i < jordan[j].components.size(); ++i) {
      if (jordan[j].components[i].size() != punctures[j].eigenvalues[i].mult)
        throw ValidationError("Jordan data shape mismatch");
      out.punctures[j].eigenvalues[i].jordan = jordan[j].components[i];
    }
  }
  return out;
}

SurfaceData auto_surface(int genus, const std::vector<MultiPartition>& jordan) {
  SurfaceData s;
  s.genus = genus;
  std::size_t total = 0;
  for (const auto& m : jordan) total += m.components.size();
  if (total == 0) throw ValidationError("no eigenvalues to generate");
  long m_last = jordan.back().components.back().size();
  std::size_t symbols = total - 1;
  std::vector<long> last_free(symbols, 0);
  std::size_t t = 0;
  for (std::size_t j = 0; j < jordan.size(); ++j) {
    PunctureData p;
    for (std::size_t i = 0; i < jordan[j].components.size(); ++i) {
      const Partition& mu = jordan[j].components[i];
      Eigenvalue e;
      e.mult = mu.size();
      e.jordan = mu;
      if (t < symbols) {
        std::vector<long> f(symbols, 0);
        f[t] = m_last;
        last_free[t] = -e.mult;
        e.value = EigenvalueSpec(0, f);
      } else {
        e.value = EigenvalueSpec(BigRat(1, m_last), last_free);
      }
      ++t;
      p.eigenvalues.push_back(std::move(e));
    }
    s.punctures.push_back(std::move(p));
  }
  s.validate();
  return s;
}

// ---- genericity and dimensions ----------------------------------------------

namespace {

// Products of all size-r sub-multisets of one puncture's eigenvalues.
std::set<EigenvalueSpec> sub_products(const PunctureData& p, int r) {
  std::set<EigenvalueSpec> out;
  auto rec = [&](auto&& self, std::size_t i, int left, EigenvalueSpec acc) -> void {
    if (i == p.eigenvalues.size()) {
      if (left == 0) out.insert(acc);
      return;
    }
    for (int c = 0; c <= std::min(left, p.eigenvalues[i].mult); ++c)
      self(self, i + 1, left - c, acc * p.eigenvalues[i].value.pow(c));
  };
  rec(rec, 0, r, EigenvalueSpec());
  return out;
}

}  // namespace

bool is_generic(const SurfaceData& s) {
  s.validate();
  EigenvalueSpec total;
  for (const auto& p : s.punctures)
    for (const auto& e : p.eigenvalues) total = total * e.value.pow(e.mult);
  if (!total.is_one()) return false;
  for (int r = 1; r < s.rank(); ++r) {
    std::set<EigenvalueSpec> reach{EigenvalueSpec()};
    for (const auto& p : s.punctures) {
      std::set<EigenvalueSpec> next;
      for (const auto& a : reach)
        for (const auto& b : sub_products(p, r)) next.insert(a * b);
      reach = std::move(next);
    }
    if (reach.count(EigenvalueSpec())) return false;
  }
  return true;
}

int dim_class(const PunctureData& p) {
  int n = p.rank();
  int d = n * n;
  for (const auto& e : p.eigenvalues) {
    Partition t = e.jordan.transpose();
    for (int c : t.parts()) d -= c * c;
  }
  return d;
}

int dim_charvar(const SurfaceData& s) {
  if (!is_generic(s)) throw ValidationError("eigenvalue data is not generic");
  int n = s.rank();
  int d = n * n * (2 * s.genus - 2) + 2;
  for (const auto& p : s.punctures) d += dim_class(p);
  return d;
}

namespace {

MultiSymFunc probe(const SurfaceData& s, Basis b) {
  int bound = std::max(8, s.rank());
  std::vector<SymFunc1> per;
  for (const auto& p : s.punctures) {
    SymFunc1 f = SymFunc1::element(b, Partition(), bound);
    for (const auto& e : p.eigenvalues)
      f = multiply(f, SymFunc1::element(b, e.jordan.transpose(), bound));
    per.push_back(std::move(f));
  }
  return MultiSymFunc::tensor(per);
}

const UniPoly kMinusOne(-1);

UniPoly shifted_pairing(const SurfaceData& s, const MultiSymFunc& f, int d) {
  KernelResult kr = hlv_kernel(s.rank(), s.genus, s.k());
  return poly_assert(specialize_pair_rational(kr, f, kMinusOne, UniPoly::x()).shift(d));
}

void require_generic(const SurfaceData& s) {
  if (!is_generic(s)) throw ValidationError("eigenvalue data is not generic");
}

}  // namespace

MultiSymFunc s_mu_prime(const SurfaceData& s) { return probe(s, Basis::s); }
MultiSymFunc h_mu_prime(const SurfaceData& s) { return probe(s, Basis::h); }

UniPoly poincare_ih(const SurfaceData& s) {
  require_generic(s);
  return shifted_pairing(s, s_mu_prime(s), dim_charvar(s));
}

UniPoly poincare_h_probe(const SurfaceData& s) {
  require_generic(s);
  return shifted_pairing(s, h_mu_prime(s), dim_charvar(s));
}

UniPoly poincare_ss(int genus, const std::vector<Partition>& nus) {
  std::vector<MultiPartition> jordan;
  for (const auto& nu : nus) {
    MultiPartition m;
    for (int part : nu.parts()) m.components.push_back(Partition::column(part));
    jordan.push_back(std::move(m));
  }
  return poincare_ih(auto_surface(genus, jordan));
}

BigInt multiplicity_dim(const std::vector<MultiPartition>& mu,
                        const std::vector<MultiPartition>& rho) {
  if (mu.size() != rho.size()) throw ValidationError("stratum shape mismatch");
  BigInt out = 1;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j].components.size() != rho[j].components.size())
      throw ValidationError("stratum shape mismatch");
    for (std::size_t i = 0; i < mu[j].components.size(); ++i) {
      const Partition& a = mu[j].components[i];
      const Partition& b = rho[j].components[i];
      if (a.size() != b.size()) throw ValidationError("stratum shape mismatch");
      out *= kostka(a.transpose(), b.transpose());
      if (out == 0) return out;
    }
  }
  return out;
}

std::vector<std::vector<MultiPartition>> strata(const SurfaceData& s) {
  std::vector<std::vector<MultiPartition>> out{{}};
  for (const auto& p : s.punctures) {
    std::vector<std::vector<MultiPartition>> next;
    auto below = strata_below(p.jordan());
    for (const auto& prefix : out)
      for (const auto& m : below) {
        auto v = prefix;
        v.push_back(m);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

IdentityReport resolution_identity_check(const SurfaceData& s) {
  IdentityReport rep;
  rep.lhs = poincare_h_probe(s);
  int d_mu = dim_charvar(s);
  UniRat rhs;
  std::string terms;
  for (const auto& rho : strata(s)) {
    BigInt mult = multiplicity_dim(s.jordan(), rho);
    if (mult == 0) continue;
    SurfaceData sr = s.with_jordan(rho);
    UniPoly p = poincare_ih(sr);
    int shift = d_mu - dim_charvar(sr);
    rhs += UniRat(p * UniPoly(BigRat(mult))).shift(shift);
    terms += "  stratum";
    for (const auto& m : rho) terms += " " + m.to_string();
    terms += ": " + mult.get_str() + " * v^" + std::to_string(shift) + " * (" + p.to_string() +
             ")\n";
  }
  rep.rhs = poly_assert(rhs);
  rep.ok = rep.lhs == rep.rhs;
  if (!rep.ok)
    rep.diff = "h-probe: " + rep.lhs.to_string() + "\nstrata sum: " + rep.rhs.to_string() +
               "\n" + terms;
  return rep;
}

// ---- twisted -------------------------------------------------------------------

namespace {

void check_eta_shape(const SurfaceData& s, const EtaIndex& eta) {
  if (eta.size() != s.punctures.size()) throw ValidationError("eta must have one entry per puncture");
  for (std::size_t j = 0; j < eta.size(); ++j)
    if (eta[j].size() != s.punctures[j].eigenvalues.size())
      throw ValidationError("eta must have one entry per eigenvalue at puncture " +
                            std::to_string(j));
}

}  // namespace

int eta_r(const SurfaceData& s, const EtaIndex& eta) {
  check_eta_shape(s, eta);
  int r = 0;
  for (std::size_t j = 0; j < eta.size(); ++j)
    for (std::size_t i = 0; i < eta[j].size(); ++i)
      r += r_of_type(eta_to_types(s.punctures[j].eigenvalues[i].jordan, eta[j][i]));
  return r;
}

MultiSymFunc h_tilde_eta(const SurfaceData& s, const EtaIndex& eta) {
  check_eta_shape(s, eta);
  int bound = std::max(8, s.rank());
  std::vector<SymFunc1> per;
  for (std::size_t j = 0; j < eta.size(); ++j) {
    SymFunc1 f = SymFunc1::element(Basis::s, Partition(), bound);
    for (std::size_t i = 0; i < eta[j].size(); ++i) {
      TypeOmega w = eta_to_types(s.punctures[j].eigenvalues[i].jordan, eta[j][i]);
      SymFunc1 t = twisted_schur(w.transpose());
      SymFunc1 resized(Basis::s, bound);
      for (const auto& [lam, c] : t.terms()) resized.add_term(lam, c);
      f = multiply(f, resized);
    }
    per.push_back(std::move(f));
  }
  return MultiSymFunc::tensor(per);
}

EtaIndex trivial_eta(const SurfaceData& s) {
  EtaIndex out;
  for (const auto& p : s.punctures) {
    std::vector<std::vector<Partition>> row;
    for (const auto& e : p.eigenvalues) row.push_back(trivial_eta(e.jordan));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::pair<EtaIndex, BigInt>> weyl_classes(const SurfaceData& s) {
  std::vector<std::pair<EtaIndex, BigInt>> out{{EtaIndex(s.punctures.size()), BigInt(1)}};
  for (std::size_t j = 0; j < s.punctures.size(); ++j)
    for (const auto& e : s.punctures[j].eigenvalues) {
      std::vector<std::pair<EtaIndex, BigInt>> next;
      for (const auto& [prefix, size] : out)
        for (const auto& [slice, csize] : eta_classes(e.jordan)) {
          EtaIndex v = prefix;
          v[j].push_back(slice);
          next.emplace_back(std::move(v), size * csize);
        }
      out = std::move(next);
    }
  return out;
}

BigInt weyl_order(const SurfaceData& s) {
  BigInt out = 1;
  for (const auto& p : s.punctures)
    for (const auto& e : p.eigenvalues) out *= relative_weyl_order(e.jordan);
  return out;
}

UniPoly twisted_poincare(const SurfaceData& s, const EtaIndex& eta) {
  require_generic(s);
  UniPoly p = shifted_pairing(s, h_tilde_eta(s, eta), dim_charvar(s));
  return eta_r(s, eta) % 2 ? -p : p;
}

// ---- mixed Hodge -------------------------------------------------------------

MixedHodge mixed_hodge_conjectural(const SurfaceData& s) {
  require_generic(s);
  int d = dim_charvar(s);
  KernelResult kr = hlv_kernel(s.rank(), s.genus, s.k());
  FieldElem pairing = pair_multi(s_mu_prime(s), kr.kernel);
  // z -> -1/u, w -> v u; the result lives in Q(u, v) with z standing for u.
  FieldElem uv = substitute_monomial(pairing, {BigRat(-1), -1, 0}, {BigRat(1), 1, 1});
  ZWPoly shift = ZWPoly::monomial(1, d > 0 ? d : 0, d > 0 ? d : 0);
  uv *= FieldElem(shift);
  if (d < 0) uv /= FieldElem(ZWPoly::monomial(1, -d, -d));
  if (!uv.is_polynomial())
    throw NotPolynomial("mixed-Hodge pairing keeps a denominator: " + uv.to_string("u", "v"));
  std::vector<ZWPoly::Term> terms;
  for (const auto& [e, c] : uv.num().terms()) {
    if (e.z % 2)
      throw MathError("odd power of sqrt(q) survives in the mixed-Hodge polynomial: " +
                      uv.to_string("u", "v"));
    terms.emplace_back(Exponent{e.z / 2, e.w}, c);
  }
  return {ZWPoly::from_terms(std::move(terms)), true};
}

UniPoly e_polynomial(const SurfaceData& s) {
  MixedHodge mh = mixed_hodge_conjectural(s);
  std::vector<BigRat> coeffs;
  for (const auto& [e, c] : mh.poly.terms()) {
    if (coeffs.size() <= e.z) coeffs.resize(e.z + 1);
    coeffs[e.z] += e.w % 2 ? BigRat(-c) : c;
  }
  return UniPoly(std::move(coeffs));
}

}  // namespace charvar
