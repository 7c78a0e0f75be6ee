#include <doctest.h>
#include <functional>

#include "charvar/symfunc.hpp"

using namespace charvar;

namespace {

SymFunc1 el(Basis b, Partition p) { return SymFunc1::element(b, p); }

// Semistandard tableaux of shape lam and content nu, by horizontal strips.
long ssyt(const Partition& lam, const std::vector<int>& nu, std::size_t idx, const Partition& inner) {
  if (idx == nu.size()) return inner == lam ? 1 : 0;
  long total = 0;
  // choose outer ⊇ inner, outer ⊆ lam, outer/inner a horizontal strip of size nu[idx]
  std::vector<int> outer(lam.length(), 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == lam.length()) {
      if (left == 0) total += ssyt(lam, nu, idx + 1, Partition::from_unsorted(outer));
      return;
    }
    int lo = inner.part(row + 1);
    int hi = lam.part(row + 1);
    if (row > 0) hi = std::min(hi, inner.part(row));  // horizontal strip
    for (int x = lo; x <= hi && x - lo <= left; ++x) {
      if (row > 0 && x > outer[row - 1]) break;
      outer[row] = x;
      rec(row + 1, left - (x - lo));
    }
    outer[row] = 0;
  };
  rec(0, nu[idx]);
  return total;
}

}  // namespace

TEST_CASE("convert examples") {
  CHECK(convert(el(Basis::h, {2}), Basis::s) == el(Basis::s, {2}));
  CHECK(convert(el(Basis::e, {2}), Basis::s) == el(Basis::s, {1, 1}));
  CHECK(convert(el(Basis::p, {2}), Basis::s) == el(Basis::s, {2}) - el(Basis::s, {1, 1}));
}

TEST_CASE("round trips through every basis") {
  Basis all[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : partitions_of(n))
      for (Basis a : all)
        for (Basis b : all) {
          SymFunc1 f = el(a, lam);
          CHECK(convert(convert(f, b), a) == f);
        }
}

TEST_CASE("multiply examples") {
  CHECK(multiply(el(Basis::p, {2}), el(Basis::p, {1})) == el(Basis::p, {2, 1}));
  CHECK(multiply(el(Basis::s, {1}), el(Basis::s, {1})) == el(Basis::s, {2}) + el(Basis::s, {1, 1}));
  SymFunc1 h1 = el(Basis::h, {1});
  CHECK(multiply(multiply(h1, h1), h1) == el(Basis::h, {1, 1, 1}));
  SymFunc1 big = SymFunc1::element(Basis::s, {3}, 4);
  CHECK_THROWS_AS(multiply(big, big), SizingError);
}

TEST_CASE("hall pairing") {
  CHECK(hall_pairing(el(Basis::p, {2}), el(Basis::p, {2})) == FieldElem(2));
  CHECK(hall_pairing(el(Basis::p, {2}), el(Basis::p, {1, 1})).is_zero());
  CHECK(hall_pairing(el(Basis::s, {2, 1}), el(Basis::s, {2, 1})) == FieldElem(1));
  CHECK(hall_pairing(el(Basis::s, {2, 1}), el(Basis::s, {3})).is_zero());
  for (int n = 0; n <= 7; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n))
        CHECK(hall_pairing(el(Basis::s, a), el(Basis::s, b)) == FieldElem(a == b ? 1 : 0));
}

TEST_CASE("kostka numbers") {
  CHECK(kostka({1, 1, 1}, {2, 1}) == 2);
  CHECK(kostka({2, 1}, {2, 1}) == 1);
  CHECK(kostka({2, 2, 1}, {5}) == 1);
  CHECK_THROWS_AS(kostka({2}, {1}), ValidationError);
  for (int n = 1; n <= 7; ++n)
    for (const auto& nu : partitions_of(n))
      for (const auto& lam : partitions_of(n)) {
        BigInt k = kostka(nu, lam);
        CHECK(k >= 0);
        CHECK(k == ssyt(lam, nu.parts(), 0, Partition()));
      }
}

TEST_CASE("character column orthogonality") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& nu : partitions_of(n)) {
        BigInt acc = 0;
        for (const auto& lam : partitions_of(n)) acc += character(lam, mu) * character(lam, nu);
        CHECK(acc == (mu == nu ? z_lambda(mu) : BigInt(0)));
      }
}

TEST_CASE("twisted schur examples") {
  CHECK(twisted_schur({{{1, Partition{2, 1}}}}) == el(Basis::s, {2, 1}));
  CHECK(twisted_schur({{{2, Partition{1}}}}) == el(Basis::s, {2}) - el(Basis::s, {1, 1}));
  CHECK(twisted_schur({{{2, Partition{1}}, {1, Partition{1}}}}) ==
        el(Basis::s, {3}) - el(Basis::s, {1, 1, 1}));
}

TEST_CASE("transpose sign law for twisted coefficients") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : types_of_degree(n)) {
      SymFunc1 a = twisted_schur(t), b = twisted_schur(t.transpose());
      int sign = r_of_type(t) % 2 ? -1 : 1;
      for (const auto& rho : partitions_of(n))
        CHECK(b.coefficient(rho.transpose()) == a.coefficient(rho) * BigRat(sign));
    }
}

TEST_CASE("rendering") {
  SymFunc1 f = el(Basis::s, {2, 1}) * FieldElem(3);
  f.add_term({1, 1, 1}, FieldElem::z() * FieldElem::z());
  CHECK(f.to_string() == "3*s[2,1] + (z^2)*s[1,1,1]");
  CHECK((el(Basis::s, {2}) - el(Basis::s, {1, 1})).to_string() == "s[2] - s[1,1]");
}
