#include <random>

#include "charkit/cyclo.hpp"
#include "doctest.h"

using namespace charkit;

TEST_CASE("canonical forms") {
  Cyclo z3 = Cyclo::root(1, 3);
  CHECK((Cyclo::one() + z3 + z3 * z3).is_zero());
  CHECK(Cyclo::root(1, 6).str() == "1 + z(1/3)");
  Cyclo s = Cyclo::root(1, 5) + Cyclo::root(2, 5) + Cyclo::root(3, 5) +
            Cyclo::root(4, 5);
  CHECK(s == Cyclo::from_rat(Rat(-1)));
  CHECK(Cyclo::root(1, 6) + Cyclo::root(5, 6) == Cyclo::one());
  // conductor is minimized and never 2 mod 4
  CHECK(Cyclo::root(1, 6).conductor() == 3);
  CHECK(Cyclo::root(1, 2).conductor() == 1);
  CHECK(Cyclo::root(1, 4).conductor() == 4);
  CHECK(Cyclo::root(3, 9).conductor() == 3);
}

TEST_CASE("as_root_of_unity") {
  auto r = (Cyclo::one() + Cyclo::root(1, 3)).as_root_of_unity();
  REQUIRE(r.has_value());
  CHECK(*r == RootOfUnity(1, 6));
  CHECK(!(Cyclo::one() + Cyclo::one()).as_root_of_unity());
  CHECK(!Cyclo::zero().as_root_of_unity());
  CHECK(Cyclo::one().as_root_of_unity() == RootOfUnity(0, 1));
  CHECK(Cyclo::from_rat(Rat(-1)).as_root_of_unity() == RootOfUnity(1, 2));
}

TEST_CASE("field laws on random elements") {
  std::mt19937_64 gen(5);
  // orders drawn from divisors of 24 so that any product of three random
  // elements stays within the conductor cap
  const long orders[] = {1, 2, 3, 4, 6, 8, 12, 24};
  auto rnd = [&]() {
    Rat q((long)(gen() % 7) - 3, 1 + gen() % 3);
    q.canonicalize();
    Cyclo c = Cyclo::from_rat(q);
    long m = orders[gen() % 8];
    c = c + Cyclo::root(gen() % m, m);
    if (gen() % 2) c = c * Cyclo::root(gen() % 8, 8);
    return c;
  };
  for (int t = 0; t < 80; ++t) {
    Cyclo a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclo::one());
      CHECK(a / a == Cyclo::one());
      CHECK(a.pow(-2) == (a * a).inverse());
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(poly_str(cyclotomic_poly(1)) == "x1 - 1");
  CHECK(poly_str(cyclotomic_poly(6)) == "x1^2 - x1 + 1");
  CHECK(poly_str(cyclotomic_poly(12)) == "x1^4 - x1^2 + 1");
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(105) == 48);
  // phi(k) = degree, and zeta_k is a root
  for (long k = 1; k <= 30; ++k) {
    QPoly f = cyclotomic_poly(k);
    CHECK(f.degree() == euler_phi(k));
    Cyclo v = f.eval(std::vector<Cyclo>{Cyclo::root(1, k)}, Cyclo::zero(),
                     Cyclo::one());
    CHECK(v.is_zero());
  }
}

TEST_CASE("reduce of formal combinations") {
  // zeta8 + zeta8^3 + zeta8^5 + zeta8^7 = 0
  Cyclo s = Cyclo::reduce({{Rat(1), RootOfUnity(1, 8)},
                           {Rat(1), RootOfUnity(3, 8)},
                           {Rat(1), RootOfUnity(5, 8)},
                           {Rat(1), RootOfUnity(7, 8)}});
  CHECK(s.is_zero());
  Cyclo t = Cyclo::reduce({{Rat(1, 2), RootOfUnity(0, 1)},
                           {Rat(1, 2), RootOfUnity(0, 1)}});
  CHECK(t == Cyclo::one());
}
