#include <doctest.h>

#include "charvar/charvar.hpp"
#include "charvar/fq.hpp"

using namespace charvar;
using namespace charvar::fq;

namespace {

FqEigen split(long a, int mult, Partition jordan) { return FqEigen{Fq2{a, 0}, mult, std::move(jordan)}; }

long class_trace(const PrimeField& F, const FqClassSpec& s) { return trace(F, jordan_representative(F, s)); }

}  // namespace

TEST_CASE("prime fields") {
  CHECK_THROWS_AS(PrimeField(9), ValidationError);
  PrimeField F(7);
  CHECK(F.primitive_root() == 3);
  CHECK(F.mul(F.inv(5), 5) == 1);
  CHECK(F.pow(F.nonresidue(), 3) == 6);
  Fq2 s{0, 1};
  CHECK(mul(F, s, s) == Fq2{F.nonresidue(), 0});
  CHECK(mul(F, s, frobenius(F, s)) == Fq2{F.neg(F.nonresidue()), 0});
  CHECK(pow(F, s, 7) == frobenius(F, s));
}

TEST_CASE("group sizes") {
  CHECK(group_size(1, 5) == 4);
  CHECK(group_size(2, 3) == 48);
  CHECK(group_size(2, 2) == 6);
  CHECK(group_size(3, 2) == 168);
}

TEST_CASE("class elements") {
  PrimeField F(3);
  CHECK(class_elements(F, {{split(2, 2, {1, 1})}}).size() == 1);
  CHECK(class_elements(F, {{split(1, 1, {1}), split(2, 1, {1})}}).size() == 12);
  CHECK(class_elements(F, {{split(1, 2, {2})}}).size() == 8);
  // the non-split regular class: |GL_2| / (q² − 1)
  CHECK(class_elements(F, {{FqEigen{Fq2{0, 1}, 1, {1}}}}).size() == 6);
  for (const auto& x : class_elements(F, {{split(1, 2, {2})}})) {
    CHECK(in_class(F, x, {{split(1, 2, {2})}}));
    CHECK_FALSE(in_class(F, x, {{split(1, 2, {1, 1})}}));
  }
  PrimeField G(5);
  FqClassSpec mixed{{split(2, 2, {2}), split(3, 1, {1})}};
  auto elems = class_elements(G, mixed);
  CHECK(BigInt(elems.size()) == group_size(3, 5) / (5 * 4 * 4));  // centralizer q(q−1)·(q−1)
  for (std::size_t i = 0; i < elems.size(); i += 97) CHECK(in_class(G, elems[i], mixed));
}

TEST_CASE("class validation") {
  PrimeField F(5);
  CHECK_THROWS_AS(FqClassSpec{{split(0, 1, {1})}}.validate(F), ValidationError);
  CHECK_THROWS_AS((FqClassSpec{{split(2, 1, {1}), split(2, 1, {1})}}.validate(F)), ValidationError);
  CHECK_THROWS_AS((FqClassSpec{{FqEigen{Fq2{1, 1}, 1, {1}}, FqEigen{Fq2{1, 4}, 1, {1}}}}.validate(F)),
                  ValidationError);
  CHECK_THROWS_AS(FqClassSpec{{split(2, 2, {1})}}.validate(F), ValidationError);
}

TEST_CASE("count points, rank one") {
  for (long q : {3L, 5L, 7L, 11L, 13L}) {
    PrimeField F(q);
    long a = F.primitive_root();
    CHECK(count_points(0, q, {{{split(a, 1, {1})}}, {{split(F.inv(a), 1, {1})}}}) == 1);
    for (int g = 1; g <= 2; ++g) {
      BigInt expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), q - 1, 2 * g);
      if (g == 2 && q > 7) continue;  // (q−1)^4 loop, still quick but unneeded
      CHECK(count_points(g, q, {{{split(1, 1, {1})}}}) == expect);
    }
  }
}

TEST_CASE("count points, rank two") {
  SUBCASE("split regular data at q = 7") {
    // eigenvalue exponents of the generator 3: (0,1), (0,1), (0,1), (1,2)
    PrimeField F(7);
    std::vector<FqClassSpec> specs(3, FqClassSpec{{split(1, 1, {1}), split(3, 1, {1})}});
    specs.push_back({{split(3, 1, {1}), split(2, 1, {1})}});
    REQUIRE(is_generic(F, specs));
    CHECK(count_points(0, 7, specs) == 78);
    auto e = e_polynomial(auto_surface(0, std::vector<MultiPartition>(4, MultiPartition{{{1}, {1}}})));
    CHECK(e.eval(7) == 78);
  }
  SUBCASE("non-generic data is rejected") {
    std::vector<FqClassSpec> specs(2, FqClassSpec{{split(1, 1, {1}), split(6, 1, {1})}});
    CHECK_THROWS_AS(count_points(0, 7, specs), ValidationError);
  }
  SUBCASE("no split regular generic data at q = 3 and 5") {
    for (long q : {3L, 5L}) CHECK_FALSE(find_generic_semisimple(PrimeField(q), std::vector<Partition>(4, {1, 1})));
    CHECK(find_generic_semisimple(PrimeField(7), std::vector<Partition>(4, {1, 1})));
  }
}

TEST_CASE("Fricke cubic") {
  SUBCASE("symmetry") {
    for (long q : {5L, 7L})
      CHECK(fricke_count(q, 1, 1, 1, 3) == fricke_count(q, 1, 1, 3, 1));
  }
  SUBCASE("the Cayley cubic over F_3") {
    // traces (-2, 2, 2, 2) give x y z + x² + y² + z² − 4
    BigInt scan = 0;
    for (long x = 0; x < 3; ++x)
      for (long y = 0; y < 3; ++y)
        for (long z = 0; z < 3; ++z)
          if ((x * y * z + x * x + y * y + z * z - 4 + 300) % 3 == 0) scan += 1;
    CHECK(fricke_count(3, -2, 2, 2, 2) == scan);
  }
  SUBCASE("agrees with the group count") {
    PrimeField F7(7);
    std::vector<FqClassSpec> s7{{{split(3, 1, {1}), split(5, 1, {1})}},
                                {{split(3, 1, {1}), split(5, 1, {1})}},
                                {{split(3, 1, {1}), split(5, 1, {1})}},
                                {{split(2, 1, {1}), split(4, 1, {1})}}};
    REQUIRE(is_generic(F7, s7));
    CHECK(class_trace(F7, s7[0]) == 1);
    CHECK(class_trace(F7, s7[3]) == 6);
    CHECK(fricke_count(7, 1, 1, 1, 6) == count_points(0, 7, s7));

    PrimeField F5(5);
    auto s5 = find_generic_sl2_regular(F5, 4);
    REQUIRE(s5);
    long t[4];
    for (int i = 0; i < 4; ++i) t[i] = class_trace(F5, (*s5)[i]);
    BigInt fr = fricke_count(5, t[0], t[1], t[2], t[3]);
    CHECK(fr == count_points(0, 5, *s5));
    CHECK_FALSE(find_generic_sl2_regular(PrimeField(3), 4));
  }
}

TEST_CASE("interpolation") {
  UniPoly p(std::vector<BigRat>{1, 4, 1});
  std::vector<std::pair<BigInt, BigInt>> pts;
  for (long x : {7L, 11L, 17L}) pts.emplace_back(x, BigInt(p.eval(x).get_num()));
  CHECK(lagrange(pts) == p);
  CHECK_THROWS_AS((lagrange({{1, 2}, {1, 3}})), ValidationError);
}
