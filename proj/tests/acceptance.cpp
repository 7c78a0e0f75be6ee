// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance               all criteria
//   acceptance --criterion 4 just one
// Exit status 0 when every selected criterion passes.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "brute_force.hpp"
#include "charvar/fq.hpp"
#include "charvar/hlv.hpp"
#include "charvar/macdonald.hpp"

using namespace charvar;
using namespace charvar::brute;

namespace {

// Wall-clock limits in seconds; 0 means none.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 60.0;
constexpr double kLimit3 = 600.0;
constexpr double kLimit4 = 300.0;

const UniPoly V = UniPoly::x();

// Collects the first few mismatches so a FAIL line says what broke.
struct Verdict {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

MultiPartition regular(int n) { return MultiPartition{std::vector<Partition>(n, Partition{1})}; }

// ---- 1 --------------------------------------------------------------------

Verdict rank_one() {
  Verdict v;
  for (int g = 0; g <= 3; ++g)
    for (int k = 1; k <= 3; ++k) {
      UniPoly p = poincare_ih(auto_surface(g, std::vector<MultiPartition>(k, regular(1))));
      UniPoly expect = V.pow(2 * g) * (UniPoly(1) + V).pow(2 * g);
      v.expect(p == expect, "g=" + std::to_string(g) + " k=" + std::to_string(k) + ": " + p.to_string("v"));
    }
  return v;
}

// ---- 2 --------------------------------------------------------------------

Verdict macdonald_dual() {
  Verdict v;
  for (int n = 1; n <= 5; ++n)
    for (const auto& lam : partitions_of(n))
      v.expect(htilde(lam) == htilde_oracle(lam), "fillings differ at " + lam.to_string());
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n))
      v.expect(htilde(lam) == htilde(lam.transpose()).swap_variables(), "q<->t fails at " + lam.to_string());
  return v;
}

// ---- 3 --------------------------------------------------------------------

void probe_tuples(int n, int k, std::vector<Partition>& cur, std::vector<std::vector<Partition>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (const auto& p : partitions_of(n)) {
    cur.push_back(p);
    probe_tuples(n, k, cur, out);
    cur.pop_back();
  }
}

Verdict kernel_positivity() {
  Verdict v;
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 1; ++g)
      for (int k = 1; k <= 3; ++k) {
        std::string tag = "(" + std::to_string(n) + "," + std::to_string(g) + "," + std::to_string(k) + ")";
        KernelResult kr = hlv_kernel(n, g, k);
        std::vector<std::vector<Partition>> tuples;
        std::vector<Partition> cur;
        probe_tuples(n, k, cur, tuples);
        for (const auto& t : tuples) {
          std::vector<SymFunc1> per;
          for (const auto& p : t) per.push_back(SymFunc1::element(Basis::s, p));
          UniRat r = specialize_pair_rational(kr, MultiSymFunc::tensor(per), UniPoly(-1), V);
          bool ok = r.is_polynomial() && r.num().has_integer_coefficients();
          if (ok)
            for (const auto& c : r.num().coeffs()) ok = ok && c >= 0;
          v.expect(ok, "probe " + tag + ": " + r.to_string("v"));
        }
        for (const auto& data : all_data(n, k)) {
          SurfaceData s = auto_surface(g, data);
          UniPoly p = poincare_ih(s);
          if (p == UniPoly()) continue;  // empty variety
          v.expect(p.degree() == 2 * dim_charvar(s) && p.coeffs().back() == 1,
                   "poincare shape " + tag + ": " + p.to_string("v"));
        }
      }
  return v;
}

// ---- 4 --------------------------------------------------------------------

// Semisimple multiplicity types for k punctures of rank n, by decreasing
// dimension of the character variety.
std::vector<std::vector<Partition>> types_by_dimension(int n, int g, int k) {
  std::vector<std::vector<Partition>> all{{}};
  for (int j = 0; j < k; ++j) {
    std::vector<std::vector<Partition>> next;
    for (const auto& a : all)
      for (const auto& nu : partitions_of(n)) {
        auto b = a;
        b.push_back(nu);
        next.push_back(std::move(b));
      }
    all = std::move(next);
  }
  std::vector<std::pair<int, std::vector<Partition>>> keyed;
  for (auto& nus : all) {
    std::vector<MultiPartition> jd;
    for (const auto& nu : nus) {
      MultiPartition m;
      for (int part : nu.parts()) m.components.push_back(Partition::column(part));
      jd.push_back(std::move(m));
    }
    keyed.emplace_back(dim_charvar(auto_surface(g, jd)), std::move(nus));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::vector<Partition>> out;
  for (auto& [d, nus] : keyed) out.push_back(std::move(nus));
  return out;
}

SurfaceData semisimple_surface(int g, const std::vector<Partition>& nus) {
  std::vector<MultiPartition> jd;
  for (const auto& nu : nus) {
    MultiPartition m;
    for (int part : nu.parts()) m.components.push_back(Partition::column(part));
    jd.push_back(std::move(m));
  }
  return auto_surface(g, jd);
}

std::string nus_label(const std::vector<Partition>& nus) {
  std::string s;
  for (const auto& nu : nus) s += nu.to_string();
  return s;
}

Verdict e_polynomial_vs_count(std::ostream& log) {
  Verdict v;
  struct Case {
    int n, g, k;
  };
  for (Case c : {Case{1, 1, 1}, Case{1, 2, 1}, Case{2, 0, 3}, Case{2, 0, 4}}) {
    auto types = types_by_dimension(c.n, c.g, c.k);
    for (long q : {3L, 5L, 7L, 11L}) {
      fq::PrimeField F(q);
      bool realized = false;
      for (const auto& nus : types) {
        auto specs = fq::find_generic_semisimple(F, nus);
        if (!specs) continue;
        realized = true;
        BigInt count = fq::count_points(c.g, q, *specs);
        BigRat e = e_polynomial(semisimple_surface(c.g, nus)).eval(q);
        std::ostringstream tag;
        tag << "(" << c.n << "," << c.g << "," << c.k << ") q=" << q << " " << nus_label(nus);
        log << "  " << tag.str() << ": count " << count << ", E " << e << '\n';
        v.expect(BigRat(count) == e, tag.str() + ": count " + count.get_str() + " vs E " + e.get_str());
        break;
      }
      v.expect(realized, "no generic data over F_" + std::to_string(q));
    }
  }

  // (2,0,4) regular: interpolate through 7, 11, 17 and predict 13
  std::vector<Partition> reg(4, Partition{1, 1});
  std::vector<std::pair<BigInt, BigInt>> pts;
  for (long q : {7L, 11L, 17L}) {
    auto specs = fq::find_generic_semisimple(fq::PrimeField(q), reg);
    if (!specs) {
      v.expect(false, "no regular data over F_" + std::to_string(q));
      return v;
    }
    pts.emplace_back(q, fq::count_points(0, q, *specs));
  }
  UniPoly interp = fq::lagrange(pts);
  auto specs13 = fq::find_generic_semisimple(fq::PrimeField(13), reg);
  v.expect(bool(specs13), "no regular data over F_13");
  if (specs13) {
    BigInt held = fq::count_points(0, 13, *specs13);
    log << "  held out q=13: count " << held << ", interpolation " << interp.eval(13) << '\n';
    v.expect(BigRat(held) == interp.eval(13), "held-out 13: " + held.get_str() + " vs " + interp.eval(13).get_str());
  }
  v.expect(interp == e_polynomial(semisimple_surface(0, reg)), "interpolant " + interp.to_string("q"));
  return v;
}

// ---- 5 --------------------------------------------------------------------

Verdict resolution() {
  Verdict v;
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 1; ++g)
      for (int k = 1; k <= 2; ++k)
        for (const auto& data : all_data(n, k)) {
          auto rep = resolution_identity_check(auto_surface(g, data));
          v.expect(rep.ok, rep.diff);
        }
  return v;
}

// ---- 6 --------------------------------------------------------------------

Verdict twisted() {
  Verdict v;
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : types_of_degree(n)) {
      SymFunc1 a = twisted_schur(t), b = twisted_schur(t.transpose());
      BigRat sign = r_of_type(t) % 2 ? -1 : 1;
      for (const auto& rho : partitions_of(n))
        v.expect(b.coefficient(rho.transpose()) == a.coefficient(rho) * sign, "sign law at degree " + std::to_string(n));
    }

  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 1; ++g)
      for (int k = 1; k <= 2; ++k)
        for (const auto& data : all_data(n, k)) {
          auto s = auto_surface(g, data);
          v.expect(twisted_poincare(s, trivial_eta(s)) == poincare_h_probe(s), "trivial eta");
        }

  auto mp = [](std::vector<Partition> c) { return MultiPartition{std::move(c)}; };
  std::vector<SurfaceData> cases{
      auto_surface(1, {mp({{2}})}),
      auto_surface(2, {mp({{2}})}),
      auto_surface(0, {mp({{2}}), mp({{2}}), mp({{1}, {1}})}),
      auto_surface(1, {mp({{2}}), mp({{2}})}),
      auto_surface(0, {mp({{2}}), mp({{1}, {1}}), mp({{1}, {1}}), mp({{1}, {1}})}),
      auto_surface(1, {mp({{2}, {1}})}),
      auto_surface(1, {mp({{1, 1}, {2}})}),
      auto_surface(0, {mp({{2, 2}}), mp({{1}, {1}, {1}, {1}}), mp({{1}, {1}, {1}, {1}})}),
  };
  for (const auto& s : cases) {
    BigInt order = weyl_order(s);
    if (order > 4) continue;
    UniPoly avg;
    for (const auto& [eta, size] : weyl_classes(s)) avg += twisted_poincare(s, eta) * UniPoly(BigRat(size));
    avg = avg * UniPoly(BigRat(BigInt(1), order));
    int d_mu = dim_charvar(s);
    UniRat rhs;
    for (const auto& rho : strata(s)) {
      BigInt mult = 1;
      for (std::size_t j = 0; j < rho.size(); ++j)
        for (std::size_t i = 0; i < rho[j].components.size(); ++i)
          mult *= invariant_multiplicity(s.punctures[j].eigenvalues[i].jordan, rho[j].components[i]);
      if (mult == 0) continue;
      SurfaceData sr = s.with_jordan(rho);
      rhs += UniRat(poincare_ih(sr) * UniPoly(BigRat(mult))).shift(d_mu - dim_charvar(sr));
    }
    v.expect(rhs.is_polynomial() && avg == rhs.num(), "Weyl average: " + avg.to_string("v"));
  }
  return v;
}

// ---- 7 --------------------------------------------------------------------

Verdict fricke(std::ostream& log) {
  Verdict v;
  for (long q : {3L, 5L, 7L}) {
    fq::PrimeField F(q);
    auto specs = fq::find_generic_sl2_regular(F, 4);
    if (!specs) {
      log << "  q=" << q << ": no generic regular semisimple SL2 data over F_" << q << '\n';
      v.expect(false, "no generic regular semisimple SL2 data over F_" + std::to_string(q));
      continue;
    }
    long t[4];
    for (int i = 0; i < 4; ++i) t[i] = fq::trace(F, fq::jordan_representative(F, (*specs)[i]));
    // X1 X2 X3 = X4^{-1}, which has the trace of X4 in SL2
    BigInt fr = fq::fricke_count(q, t[0], t[1], t[2], t[3]);
    BigInt cp = fq::count_points(0, q, *specs);
    log << "  q=" << q << " traces " << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ": Fricke " << fr
        << ", group " << cp << '\n';
    v.expect(fr == cp, "q=" + std::to_string(q) + ": " + fr.get_str() + " vs " + cp.get_str());
  }
  auto s = auto_surface(0, std::vector<MultiPartition>(4, regular(2)));
  BigRat euler = poincare_ih(s).eval(-1), e1 = e_polynomial(s).eval(1);
  v.expect(euler == 6 && e1 == 6, "Euler characteristic " + euler.get_str() + ", E(1) " + e1.get_str());
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Verdict(std::ostream&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "run a single criterion (1-7)")->check(CLI::Range(1, 7));
  app.add_flag("-v,--verbose", verbose, "print the individual comparisons");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> all{
      {1, "rank-one closed form", kLimit1, [](std::ostream&) { return rank_one(); }},
      {2, "Macdonald triangular solve = fillings, q<->t symmetry", kLimit2,
       [](std::ostream&) { return macdonald_dual(); }},
      {3, "kernel polynomiality/positivity, Poincare shape", kLimit3,
       [](std::ostream&) { return kernel_positivity(); }},
      {4, "E-polynomial = F_q point count, held-out q=13", kLimit4, e_polynomial_vs_count},
      {5, "resolution identity, exhaustive", 0, [](std::ostream&) { return resolution(); }},
      {6, "transpose sign law, trivial twist, Weyl average", 0, [](std::ostream&) { return twisted(); }},
      {7, "Fricke cubic = group count (q=3,5,7), Euler characteristic 6", 0, fricke},
  };

  std::ostringstream sink;
  std::ostream& log = verbose ? std::cout : sink;
  bool ok = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    std::string error;
    try {
      v = c.body(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.limit == 0 || secs < c.limit;
    bool pass = error.empty() && v.failures == 0 && in_time;
    ok = ok && pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << v.checks << " checks, "
         << std::fixed << std::setprecision(2) << secs << " s";
    if (c.limit > 0) line << " / limit " << c.limit << " s";
    line << "]";
    if (!error.empty()) line << " error: " << error;
    if (v.failures) line << " " << v.failures << " failed, first: " << v.first;
    if (!in_time) line << " over time limit";
    std::cout << line.str() << std::endl;
  }
  return ok ? 0 : 1;
}
