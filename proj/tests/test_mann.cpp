#include "charkit/mann.hpp"
#include "doctest.h"

using namespace charkit;

TEST_CASE("d_bound values") {
  CHECK(d_bound(1) == 2);
  CHECK(d_bound(2) == 6);
  CHECK(d_bound(3) == 6);
  CHECK(d_bound(4) == 30);
}

TEST_CASE("mann_solve examples") {
  auto s = mann_solve({Rat(1), Rat(1)});
  CHECK(s.bound_used == 6);
  REQUIRE(s.solutions.size() == 2);
  CHECK(s.solutions[0] == (std::vector<RootOfUnity>{{1, 6}, {5, 6}}));
  CHECK(s.solutions[1] == (std::vector<RootOfUnity>{{5, 6}, {1, 6}}));

  CHECK(mann_solve({Rat(3)}).solutions.empty());

  auto t = mann_solve({Rat(2), Rat(-1)});
  REQUIRE(t.solutions.size() == 1);
  CHECK(t.solutions[0] == (std::vector<RootOfUnity>{{0, 1}, {0, 1}}));

  auto u = mann_solve({Rat(1)});
  REQUIRE(u.solutions.size() == 1);
  CHECK(u.solutions[0] == (std::vector<RootOfUnity>{{0, 1}}));
}

TEST_CASE("mann_solve solutions are exact and non-degenerate") {
  for (auto& c : std::vector<std::vector<Rat>>{
           {Rat(1), Rat(1)},
           {Rat(1), Rat(1), Rat(1)},
           {Rat(1, 2), Rat(1, 2)},
           {Rat(2), Rat(-1), Rat(1)},
           {Rat(1), Rat(-1), Rat(1)}}) {
    auto s = mann_solve(c);
    long n = (long)c.size();
    for (auto& sol : s.solutions) {
      REQUIRE((long)sol.size() == n);
      // full sum is exactly 1
      Cyclo total = Cyclo::zero();
      for (long i = 0; i < n; ++i)
        total = total + Cyclo::from_rat(c[i]) * Cyclo::root(sol[i]);
      CHECK(total == Cyclo::one());
      // no proper nonempty subsum vanishes
      for (long mask = 1; mask < (1 << n) - 1; ++mask) {
        Cyclo sub = Cyclo::zero();
        for (long i = 0; i < n; ++i)
          if (mask & (1 << i))
            sub = sub + Cyclo::from_rat(c[i]) * Cyclo::root(sol[i]);
        CHECK(!sub.is_zero());
      }
      // orders respect the bound
      for (auto& r : sol) CHECK(s.bound_used % r.den == 0);
    }
  }
}

TEST_CASE("arity budget") {
  std::vector<Rat> big(mann_arity_budget + 1, Rat(1));
  CHECK_THROWS_AS(mann_solve(big), std::runtime_error);
}

TEST_CASE("genericity_check") {
  CHECK(genericity_check({Unit(RootOfUnity(1, 12))}, {}).generic);
  CHECK(genericity_check({Unit(RootOfUnity(1, 6))}, {}).generic);
  CHECK(genericity_check({Unit(FormalUnit{"t", 0, true})}, {}).generic);
  CHECK(genericity_check({Unit(Rat(2))}, {Unit(Rat(2))}).generic);

  auto r = genericity_check({Unit(Rat(2))}, {});
  REQUIRE(!r.generic);
  REQUIRE(r.witness.has_value());
  CHECK(std::get<Rat>(*r.witness) == Rat(2));

  // precondition mcl(H) n G = H fails for G = <2,4>, H = <4>
  CHECK_THROWS_AS(
      genericity_check({Unit(Rat(2)), Unit(Rat(4))}, {Unit(Rat(4))}),
      std::invalid_argument);
}

TEST_CASE("axiom_instance") {
  CharContext p7{7}, p2{2}, p3{3};
  CHECK(axiom_instance(p7, 2, {{Rat(1), Rat(1)}}, 1));
  CHECK(axiom_instance(p2, 2, {{Rat(1), Rat(1)}}, 2));
  CHECK(axiom_instance(p3, 2, {{Rat(1), Rat(1)}}, 2));
  CHECK(axiom_instance(p7, 1, {{Rat(1)}}, 2));

  std::vector<std::vector<Rat>> pool;
  std::vector<Rat> vals = {Rat(1),    Rat(-1),    Rat(2),    Rat(-2),
                           Rat(1, 2), Rat(-1, 2), Rat(1, 3), Rat(-1, 3)};
  for (auto& a : vals)
    for (auto& b : vals) pool.push_back({a, b});
  CHECK(axiom_instance(p7, 2, pool, 2));
}

TEST_CASE("char_pullback shapes") {
  CharContext p7{7}, p2{2};
  auto w = [&](long i) { return CPoly::var(2, i, Cyclo::one()); };

  auto q1 = char_pullback(p7, {w(0) - w(1)}, 2);
  REQUIRE(q1.size() == 1);
  FPoly expect(2);
  expect.add_term({1, 0}, fq_one(7));
  expect.add_term({0, 1}, -fq_one(7));
  CHECK(q1[0] == expect);

  auto q2 = char_pullback(p7, {w(0) + w(1)}, 2);
  REQUIRE(q2.size() == 1);
  FPoly expect2(2);
  expect2.add_term({1, 0}, fq_one(7));
  expect2.add_term({0, 1}, fq_one(7));
  CHECK(q2[0] == expect2);

  // at p = 2 the sum has no chi-preimage shape, so the system splits
  auto q3 = char_pullback(p2, {w(0) + w(1)}, 2);
  REQUIRE(q3.size() == 2);
  FPoly s1(2), s2(2);
  s1.add_term({1, 0}, fq_one(2));
  s2.add_term({0, 1}, fq_one(2));
  CHECK(((q3[0] == s1 && q3[1] == s2) || (q3[0] == s2 && q3[1] == s1)));

  auto q4 = char_pullback(p7, {w(0) - CPoly::constant(2, Cyclo::one())}, 2);
  REQUIRE(q4.size() == 1);
  FPoly expect4(2);
  expect4.add_term({1, 0}, fq_one(7));
  expect4.add_term({0, 0}, -fq_one(7));
  CHECK(q4[0] == expect4);
}
