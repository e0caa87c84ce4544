#include <numeric>

#include "charkit/ideal.hpp"
#include "doctest.h"

using namespace charkit;

static QPoly qv(long n, long i) { return QPoly::var(n, i, Rat(1)); }
static QPoly qc(long n, long v) { return QPoly::constant(n, Rat(v)); }

TEST_CASE("groebner examples") {
  Ideal I;
  I.nvars = 1;
  QPoly x = qv(1, 0);
  I.gens = {x * x - qc(1, 1), x - qc(1, 1)};
  auto& g = groebner(I);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == x - qc(1, 1));
}

TEST_CASE("membership and radical membership") {
  Ideal I;
  I.nvars = 1;
  QPoly x = qv(1, 0);
  I.gens = {x * x + x + qc(1, 1)};
  CHECK(radical_member(x * x * x - qc(1, 1), I));
  CHECK(!radical_member(x - qc(1, 1), I));
  CHECK(radical_member(QPoly(1), I));
  CHECK(ideal_member(x * x * x - qc(1, 1), I));
  CHECK(!ideal_member(x + qc(1, 1), I));

  // a non-radical example: x in sqrt((x^2)) but x not in (x^2)
  Ideal S;
  S.nvars = 1;
  S.gens = {x * x};
  CHECK(radical_member(x, S));
  CHECK(!ideal_member(x, S));
}

TEST_CASE("dimension") {
  Ideal I;
  I.nvars = 2;
  I.gens = {qv(2, 0) * qv(2, 1)};
  CHECK(ideal_dim(I) == 1);
  Ideal Z;
  Z.nvars = 3;
  CHECK(ideal_dim(Z) == 3);
  Ideal P;
  P.nvars = 2;
  P.gens = {qv(2, 0), qv(2, 1)};
  CHECK(ideal_dim(P) == 0);
  Ideal U;
  U.nvars = 2;
  U.gens = {qc(2, 1)};
  CHECK(!ideal_dim(U).has_value());
}

TEST_CASE("special_poly against a cyclotomic product oracle") {
  QPoly x1 = qv(2, 0), x2 = qv(2, 1);
  CHECK(special_poly({1, 0}, {0, 1}, 3) == x1 * x1 + x1 * x2 + x2 * x2);
  CHECK(special_poly({1}, {0}, 1) == qv(1, 0) - qc(1, 1));
  CHECK(special_poly({1, 0}, {0, 1}, 2) == x1 + x2);

  // oracle: prod over primitive k-th roots zeta of (x^M - zeta x^N)
  for (long k = 1; k <= 12; ++k) {
    for (auto [M, N] : std::vector<std::pair<Expo, Expo>>{
             {{1, 0}, {0, 1}}, {{2, 0}, {0, 1}}, {{1, 1}, {0, 2}}}) {
      QPoly s = special_poly(M, N, k);
      CPoly prod = CPoly::constant(2, Cyclo::one());
      for (long j = 1; j <= k; ++j) {
        if (std::gcd(j, k) != 1) continue;
        CPoly lin(2);
        lin.add_term(M, Cyclo::one());
        lin.add_term(N, Cyclo::zero() - Cyclo::root(j, k));
        prod = prod * lin;
      }
      CPoly sc(2);
      for (auto& [e, c] : s.terms) sc.add_term(e, Cyclo::from_rat(c));
      CHECK(prod == sc);
    }
  }
}

TEST_CASE("type ideals") {
  QPoly x = qv(1, 0);
  {
    auto [I, J] = type_ideals({RootOfUnity(1, 3)});
    REQUIRE(J.gens.size() == 1);
    CHECK(J.gens[0] == x * x + x + qc(1, 1));
    CHECK(type_ideal_member(x * x * x - qc(1, 1), I));
    CHECK(!type_ideal_member(x - qc(1, 1), I));
    CHECK(!type_ideal_member(x * x - qc(1, 1), I));
  }
  {
    auto [I, J] = type_ideals({RootOfUnity(0, 1)});
    REQUIRE(J.gens.size() == 1);
    CHECK(J.gens[0] == x - qc(1, 1));
    CHECK(type_ideal_member(x - qc(1, 1), I));
    CHECK(!type_ideal_member(x + qc(1, 1), I));
  }
  {
    auto [I, J] = type_ideals({RootOfUnity(1, 6), RootOfUnity(5, 6)});
    QPoly x1 = qv(2, 0), x2 = qv(2, 1);
    CHECK(type_ideal_member(x1 * x2 - qc(2, 1), I));
    CHECK(!type_ideal_member(x1 - x2, I));
    CHECK(type_ideal_member(x1 * x1 - x1 + qc(2, 1), I));
    CHECK(radical_member(x1 * x2 - qc(2, 1), J));
    CHECK(!radical_member(x1 - x2, J));
  }
}

TEST_CASE("type ideal membership matches vanishing at conjugates") {
  // p in J_g iff p vanishes at every Galois conjugate of g
  std::vector<std::vector<RootOfUnity>> tuples = {
      {{1, 3}}, {{1, 4}}, {{1, 6}, {1, 3}}, {{1, 2}, {1, 4}}};
  std::vector<QPoly> probes;
  for (auto& g : tuples) {
    long n = (long)g.size();
    auto [I, J] = type_ideals(g);
    probes.clear();
    QPoly a = qv(n, 0);
    probes.push_back(a * a + qc(n, 1));
    probes.push_back(a - qc(n, 1));
    probes.push_back(a * a * a * a - qc(n, 1));
    if (n == 2) {
      probes.push_back(qv(n, 0) * qv(n, 1) - qc(n, 1));
      probes.push_back(qv(n, 0) - qv(n, 1) * qv(n, 1));
    }
    for (auto& p : probes) {
      // brute-force vanishing over conjugates sigma_j(g), gcd(j, L) = 1
      long L = 1;
      for (auto& r : g) L = lcm_long(L, r.den);
      bool vanishes = true;
      for (long j = 1; j <= L; ++j) {
        if (std::gcd(j, L) != 1) continue;
        std::vector<Cyclo> pt;
        for (auto& r : g) pt.push_back(Cyclo::root(r.num * j, r.den));
        if (!p.eval(pt, Cyclo::zero(), Cyclo::one()).is_zero())
          vanishes = false;
      }
      CHECK(radical_member(p, J) == vanishes);
    }
  }
}

TEST_CASE("saturation") {
  Ideal I;
  I.nvars = 2;
  I.gens = {qv(2, 0) * qv(2, 1)};
  Ideal S = saturate(I, qv(2, 0));
  auto& g = groebner(S);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == qv(2, 1));
  CHECK_THROWS_AS(saturate(I, QPoly(2)), std::invalid_argument);
}

TEST_CASE("cyclic-3 system") {
  long n = 3;
  QPoly x = qv(n, 0), y = qv(n, 1), z = qv(n, 2);
  Ideal I;
  I.nvars = n;
  I.gens = {x + y + z, x * y + y * z + z * x, x * y * z - qc(n, 1)};
  CHECK(!groebner(I).empty());
  CHECK(ideal_dim(I) == 0);
  CHECK(ideal_member(x * x * x + y * y * y + z * z * z - qc(n, 3), I));
}

TEST_CASE("groebner limits are enforced") {
  GroebnerLimits saved = groebner_limits;
  groebner_limits.max_pairs = 1;
  Ideal I;
  I.nvars = 3;
  QPoly x = qv(3, 0), y = qv(3, 1), z = qv(3, 2);
  I.gens = {x + y + z, x * y + y * z + z * x, x * y * z - qc(3, 1)};
  CHECK_THROWS_AS(groebner(I), std::runtime_error);
  groebner_limits = saved;
}
