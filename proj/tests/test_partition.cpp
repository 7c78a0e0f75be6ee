#include <doctest.h>

#include "charvar/partition.hpp"

using namespace charvar;

TEST_CASE("transpose") {
  CHECK(Partition{5, 4, 2}.transpose() == Partition{3, 3, 2, 2, 1});
  CHECK(Partition().transpose() == Partition());
  CHECK(Partition{4}.transpose() == Partition::column(4));
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions_of(n)) {
      CHECK(p.transpose().size() == n);
      CHECK(p.transpose().transpose() == p);
    }
}

TEST_CASE("arm and leg") {
  CHECK(arm_leg(Partition{5, 4, 2}, {1, 2}) == ArmLeg{3, 2});
  CHECK(arm_leg(Partition{1}, {1, 1}) == ArmLeg{0, 0});
  CHECK(arm_leg(Partition{2, 2}, {1, 1}) == ArmLeg{1, 1});
  CHECK_THROWS_AS(arm_leg(Partition{2}, {2, 1}), ValidationError);
}

TEST_CASE("hook and leg sums") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) {
      int legs = 0, arms = 0, n_lambda = 0, n_prime = 0;
      for (auto c : p.cells()) {
        auto [a, l] = arm_leg(p, c);
        legs += l;
        arms += a;
      }
      for (int i = 1; i <= p.length(); ++i) n_lambda += (i - 1) * p.part(i);
      Partition t = p.transpose();
      for (int i = 1; i <= t.length(); ++i) n_prime += (i - 1) * t.part(i);
      CHECK(legs == n_lambda);
      CHECK(arms == n_prime);
    }
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
  CHECK_FALSE(dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
  CHECK_FALSE(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK(dominance_leq(Partition{3}, Partition{3}));
  for (int n = 1; n <= 8; ++n) {
    const auto& ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        if (!dominance_leq(a, b)) continue;
        for (const auto& c : ps)
          if (dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("z_lambda") {
  CHECK(z_lambda(Partition{1, 1, 1}) == 6);
  CHECK(z_lambda(Partition{3}) == 3);
  CHECK(z_lambda(Partition{2, 1}) == 2);
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& p : partitions_of(n)) total += factorial(n) / z_lambda(p);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("partition counts") {
  int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(expected[n]));
  CHECK(partitions_of(3).front() == Partition{3});
}

TEST_CASE("types") {
  CHECK(r_of_type({{{1, Partition{3}}}}) == 0);
  CHECK(r_of_type({{{2, Partition{1}}}}) == 1);
  CHECK(r_of_type({{{2, Partition{1}}, {3, Partition{2}}}}) == 5);
  CHECK(TypeOmega{{{2, Partition{2, 1}}}}.degree() == 6);
}

TEST_CASE("eta to types") {
  auto t = eta_to_types(Partition{2}, {Partition{1, 1}});
  REQUIRE(t.pairs.size() == 2);
  CHECK(t.pairs[0] == std::pair<int, Partition>{1, Partition{1}});
  CHECK(t.pairs[1] == std::pair<int, Partition>{1, Partition{1}});
  auto u = eta_to_types(Partition{2}, {Partition{2}});
  REQUIRE(u.pairs.size() == 1);
  CHECK(u.pairs[0] == std::pair<int, Partition>{2, Partition{1}});
  auto v = eta_to_types(Partition{1}, {Partition{1}});
  REQUIRE(v.pairs.size() == 1);
  CHECK(v.pairs[0] == std::pair<int, Partition>{1, Partition{1}});
  CHECK_THROWS_AS(eta_to_types(Partition{2}, {Partition{1}}), ValidationError);
  // (3,1)' = (2,1,1): slots a=2 (m=1), a=1 (m=2)
  auto slots = column_multiplicities(Partition{3, 1});
  CHECK(slots == std::vector<std::pair<int, int>>{{2, 1}, {1, 2}});
  CHECK(relative_weyl_order(Partition{3, 1}) == 2);
  CHECK(eta_classes(Partition{3, 1}).size() == 2);
}

TEST_CASE("strata below") {
  auto a = strata_below({{Partition{2}}});
  REQUIRE(a.size() == 2);
  CHECK(a[0].components[0] == Partition{2});
  CHECK(a[1].components[0] == Partition{1, 1});
  CHECK(strata_below({{Partition{1, 1}}}).size() == 1);
  auto c = strata_below({{Partition{2}, Partition{1}}});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == MultiPartition{{Partition{2}, Partition{1}}});
  CHECK(c[1] == MultiPartition{{Partition{1, 1}, Partition{1}}});
}
