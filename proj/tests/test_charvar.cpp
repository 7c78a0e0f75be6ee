#include <doctest.h>

#include <map>

#include "brute_force.hpp"
#include "charvar/charvar.hpp"

using namespace charvar;
using namespace charvar::brute;

namespace {

const UniPoly V = UniPoly::x();

Eigenvalue ev(BigRat torsion, int mult, Partition jordan, std::vector<long> free = {}) {
  return Eigenvalue{EigenvalueSpec(std::move(torsion), std::move(free)), mult, std::move(jordan)};
}

SurfaceData surface(int g, std::vector<std::vector<Eigenvalue>> punct) {
  SurfaceData s;
  s.genus = g;
  for (auto& p : punct) s.punctures.push_back(PunctureData{std::move(p)});
  return s;
}

MultiPartition mp(std::vector<Partition> c) { return MultiPartition{std::move(c)}; }

SurfaceData regular_ss(int g, int n, int k) {
  std::vector<MultiPartition> j(k, mp(std::vector<Partition>(n, Partition{1})));
  return auto_surface(g, j);
}

// Eigenvalue -1 with multiplicity 2 at the first puncture, 1 with multiplicity
// 2 elsewhere, Jordan (2) everywhere.
SurfaceData cubic_surface_data() {
  std::vector<std::vector<Eigenvalue>> p;
  p.push_back({ev(BigRat(1, 2), 2, {2})});
  for (int j = 0; j < 3; ++j) p.push_back({ev(0, 2, {2})});
  return surface(0, p);
}

UniPoly q_at_one(const ZWPoly& p) {
  std::vector<BigRat> c;
  for (const auto& [e, x] : p.terms()) {
    if (c.size() <= e.w) c.resize(e.w + 1);
    c[e.w] += x;
  }
  return UniPoly(c);
}

}  // namespace

TEST_CASE("eigenvalue specs") {
  EigenvalueSpec minus_one(BigRat(1, 2), {});
  CHECK((minus_one * minus_one).is_one());
  CHECK(EigenvalueSpec(BigRat(3, 2), {0, 0}) == minus_one);
  CHECK(EigenvalueSpec(0, {1, -2}).pow(2) == EigenvalueSpec(0, {2, -4}));
  CHECK_FALSE(EigenvalueSpec(0, {1}).is_one());
}

TEST_CASE("genericity examples") {
  CHECK(is_generic(cubic_surface_data()));
  auto pm = [] { return std::vector<Eigenvalue>{ev(0, 1, {1}), ev(BigRat(1, 2), 1, {1})}; };
  CHECK_FALSE(is_generic(surface(0, {pm(), pm()})));
  CHECK(is_generic(surface(0, {{ev(0, 1, {1})}})));
  // product of all eigenvalues must be 1
  CHECK_FALSE(is_generic(surface(0, {{ev(BigRat(1, 3), 1, {1})}})));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(surface(0, {{ev(0, 1, {1})}, {ev(0, 2, {2})}}).validate(), ValidationError);
  CHECK_THROWS_AS(surface(0, {{ev(0, 2, {1})}}).validate(), ValidationError);
  CHECK_THROWS_AS(surface(0, {{ev(0, 1, {1}), ev(1, 1, {1})}}).validate(), ValidationError);
  auto bad = surface(0, {{ev(0, 1, {1}), ev(BigRat(1, 2), 1, {1})},
                         {ev(0, 1, {1}), ev(BigRat(1, 2), 1, {1})}});
  CHECK_THROWS_AS(dim_charvar(bad), ValidationError);
  CHECK_THROWS_AS(poincare_ih(bad), ValidationError);
}

TEST_CASE("auto-generated eigenvalues are generic") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& data : all_data(n, k)) {
        if (k == 3 && n == 3) break;  // enough coverage, keeps the test quick
        CHECK(is_generic(auto_surface(0, data)));
      }
}

TEST_CASE("dimensions") {
  CHECK(dim_class(PunctureData{{ev(0, 2, {1, 1})}}) == 0);
  CHECK(dim_class(PunctureData{{ev(0, 1, {1}), ev(BigRat(1, 2), 1, {1})}}) == 2);
  CHECK(dim_class(PunctureData{{ev(0, 2, {2})}}) == 2);
  for (int g = 0; g <= 3; ++g)
    for (int k = 1; k <= 3; ++k) CHECK(dim_charvar(regular_ss(g, 1, k)) == 2 * g);
  CHECK(dim_charvar(regular_ss(0, 2, 4)) == 2);
  CHECK(dim_charvar(regular_ss(1, 2, 1)) == 4);
  CHECK(dim_charvar(cubic_surface_data()) == 2);
}

TEST_CASE("probe functions") {
  auto s = cubic_surface_data();
  auto probe = s_mu_prime(s);
  std::vector<SymFunc1> per(4, SymFunc1::element(Basis::s, {1, 1}));
  CHECK(probe == MultiSymFunc::tensor(per));
  auto c = surface(1, {{ev(0, 3, {1, 1, 1})}});
  CHECK(s_mu_prime(c) == MultiSymFunc::tensor({SymFunc1::element(Basis::s, {3})}));
}

TEST_CASE("rank one closed form") {
  for (int g = 0; g <= 2; ++g)
    for (int k = 1; k <= 3; ++k) {
      auto s = regular_ss(g, 1, k);
      UniPoly expect = V.pow(2 * g) * (UniPoly(1) + V).pow(2 * g);
      CHECK(poincare_ih(s) == expect);
      CHECK(poincare_ss(g, std::vector<Partition>(k, Partition{1})) == expect);
      CHECK(e_polynomial(s) == (V - UniPoly(1)).pow(2 * g));
      // v^{2g}(1 + qv)^{2g}
      ZWPoly qv = ZWPoly(1) + ZWPoly::monomial(1, 1, 1);
      CHECK(mixed_hodge_conjectural(s).poly == ZWPoly::monomial(1, 0, 2 * g) * qv.pow(2 * g));
    }
}

TEST_CASE("four punctures on the sphere, rank two") {
  auto s = regular_ss(0, 2, 4);
  UniPoly p = poincare_ih(s);
  CHECK(p == V.pow(4) + UniPoly(5) * V.pow(2));
  CHECK(p.eval(-1) == 6);
  CHECK(e_polynomial(s) == V.pow(2) + UniPoly(4) * V + UniPoly(1));
  std::vector<Partition> nus(4, Partition{1, 1});
  CHECK(poincare_ss(0, nus) == p);

  UniPoly c = poincare_ih(cubic_surface_data());
  CHECK(c.degree() == 4);
  CHECK(c.coeffs().back() == 1);
}

TEST_CASE("intersection Poincare shape") {
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 1; ++g)
      for (int k = 1; k <= 3; ++k) {
        if (n == 3 && k == 3) continue;
        for (const auto& data : all_data(n, k)) {
          auto s = auto_surface(g, data);
          UniPoly p = poincare_ih(s);
          if (p == UniPoly()) continue;  // empty variety
          int d = dim_charvar(s);
          INFO(n, " ", g, " ", k);
          CHECK(p.degree() == 2 * d);
          CHECK(p.coeffs().back() == 1);
          for (const auto& c : p.coeffs()) {
            CHECK(c >= 0);
            CHECK(c.get_den() == 1);
          }
        }
      }
}

TEST_CASE("multiplicity dimensions") {
  std::vector<MultiPartition> mu{mp({{2}})};
  CHECK(multiplicity_dim(mu, mu) == 1);
  CHECK(multiplicity_dim(mu, {mp({{1, 1}})}) == 1);
  CHECK(multiplicity_dim({mp({{3}})}, {mp({{2, 1}})}) == 2);
  CHECK(multiplicity_dim({mp({{2, 1}})}, {mp({{1, 1, 1}})}) == 1);
  CHECK(multiplicity_dim({mp({{1, 1}})}, {mp({{2}})}) == 0);
  CHECK_THROWS_AS(multiplicity_dim(mu, {mp({{1}})}), ValidationError);
}

TEST_CASE("resolution identity") {
  SUBCASE("worked cases") {
    CHECK(resolution_identity_check(regular_ss(2, 1, 2)).ok);
    auto two = auto_surface(1, {mp({{2}})});
    CHECK(strata(two).size() == 2);
    CHECK(resolution_identity_check(two).ok);
    CHECK(strata(auto_surface(1, {mp({{2, 1}})})).size() == 2);
    auto three = auto_surface(1, {mp({{3}})});
    CHECK(strata(three).size() == 3);
    CHECK(resolution_identity_check(three).ok);
  }
  SUBCASE("exhaustive") {
    for (int n = 1; n <= 3; ++n)
      for (int g = 0; g <= 1; ++g)
        for (int k = 1; k <= 2; ++k)
          for (const auto& data : all_data(n, k)) {
            auto rep = resolution_identity_check(auto_surface(g, data));
            INFO(rep.diff);
            CHECK(rep.ok);
          }
  }
}

TEST_CASE("twisted Poincare") {
  SUBCASE("trivial eta gives the h-probe") {
    for (int g = 0; g <= 1; ++g)
      for (const auto& data : all_data(2, 2)) {
        auto s = auto_surface(g, data);
        CHECK(twisted_poincare(s, trivial_eta(s)) == poincare_h_probe(s));
      }
  }
  SUBCASE("two-cycle on a Jordan (2) block") {
    auto s = auto_surface(1, {mp({{2}})});
    EtaIndex eta{{{Partition{2}}}};
    CHECK(eta_r(s, eta) == 1);
    KernelResult kr = hlv_kernel(2, 1, 1);
    auto p2 = MultiSymFunc::tensor({SymFunc1::element(Basis::p, {2})});
    UniPoly expect = -poly_assert(
        specialize_pair_rational(kr, p2, UniPoly(-1), V).shift(dim_charvar(s)));
    CHECK(twisted_poincare(s, eta) == expect);
  }
  SUBCASE("shape mismatch") {
    auto s = auto_surface(1, {mp({{2}})});
    CHECK_THROWS(twisted_poincare(s, EtaIndex{}));
  }
}

TEST_CASE("Weyl average against explicit plethysm") {
  std::vector<SurfaceData> cases{
      auto_surface(1, {mp({{2}})}),
      auto_surface(0, {mp({{2}}), mp({{2}}), mp({{1}, {1}})}),
      auto_surface(1, {mp({{2}}), mp({{2}})}),
      auto_surface(0, {mp({{2}}), mp({{1}, {1}}), mp({{1}, {1}}), mp({{1}, {1}})}),
      auto_surface(1, {mp({{2}, {1}})}),
      auto_surface(0, {mp({{2, 2}}), mp({{1}, {1}, {1}, {1}}), mp({{1}, {1}, {1}, {1}})}),
  };
  for (const auto& s : cases) {
    BigInt order = weyl_order(s);
    REQUIRE(order <= 4);
    BigInt total = 0;
    UniPoly avg;
    for (const auto& [eta, size] : weyl_classes(s)) {
      total += size;
      avg += twisted_poincare(s, eta) * UniPoly(BigRat(size));
    }
    CHECK(total == order);
    avg = avg * UniPoly(BigRat(BigInt(1), order));

    int d_mu = dim_charvar(s);
    UniRat rhs;
    for (const auto& rho : strata(s)) {
      BigInt mult = 1;
      for (std::size_t j = 0; j < rho.size(); ++j)
        for (std::size_t i = 0; i < rho[j].components.size(); ++i)
          mult *= invariant_multiplicity(s.punctures[j].eigenvalues[i].jordan,
                                         rho[j].components[i]);
      if (mult == 0) continue;
      SurfaceData sr = s.with_jordan(rho);
      rhs += UniRat(poincare_ih(sr) * UniPoly(BigRat(mult))).shift(d_mu - dim_charvar(sr));
    }
    CHECK(avg == poly_assert(rhs));
  }
}

TEST_CASE("mixed Hodge slices") {
  for (int n = 1; n <= 3; ++n)
    for (int g = 0; g <= 1; ++g)
      for (int k = 1; k <= 2; ++k)
        for (const auto& data : all_data(n, k)) {
          auto s = auto_surface(g, data);
          MixedHodge mh = mixed_hodge_conjectural(s);
          CHECK(mh.conjectural);
          CHECK(q_at_one(mh.poly) == poincare_ih(s));
        }
  auto s = regular_ss(0, 2, 4);
  auto mh = mixed_hodge_conjectural(s);
  UniPoly at_minus_one;
  for (const auto& [e, c] : mh.poly.terms())
    at_minus_one += UniPoly::monomial(e.w % 2 ? BigRat(-c) : c, e.z);
  CHECK(at_minus_one == e_polynomial(s));
}
