#include <random>

#include "charkit/units.hpp"
#include "doctest.h"

using namespace charkit;

TEST_CASE("relation lattices by kind") {
  CHECK(relation_lattice({Unit(RootOfUnity(1, 3)), Unit(RootOfUnity(1, 6))})
            .str() == "[[1,4],[0,6]]");
  CHECK(relation_lattice({Unit(fq_make(7, 1, {2})), Unit(fq_make(7, 1, {4}))})
            .str() == "[[1,1],[0,3]]");
  CHECK(relation_lattice({Unit(Rat(2)), Unit(Rat(3)), Unit(Rat(6))}).str() ==
        "[[1,1,-1]]");
  CHECK(relation_lattice({Unit(FormalUnit{"u", 5, false})}).str() == "[[5]]");
  CHECK(relation_lattice({Unit(FormalUnit{"t", 0, true})}).rows == 0);
  CHECK_THROWS_AS(relation_lattice({Unit(Rat(2)), Unit(RootOfUnity(1, 3))}),
                  std::invalid_argument);
}

TEST_CASE("independence and basis") {
  CHECK(is_mult_independent({Unit(Rat(2)), Unit(Rat(3))}));
  CHECK(!is_mult_independent({Unit(Rat(-2)), Unit(Rat(2)), Unit(Rat(-1))}));
  CHECK(is_mult_independent(
      {Unit(FormalUnit{"t", 0, true}), Unit(FormalUnit{"s", 0, true})}));
  CHECK(!is_mult_independent(
      {Unit(FormalUnit{"t", 0, true}), Unit(FormalUnit{"u", 5, false})}));

  auto b = mult_basis({Unit(Rat(2)), Unit(Rat(3)), Unit(Rat(6))});
  REQUIRE(b.size() == 2);
  CHECK(unit_str(b[0]) == "2");
  CHECK(unit_str(b[1]) == "3");

  // basis cardinality is invariant under input permutation
  std::vector<Unit> A = {Unit(Rat(6)), Unit(Rat(2)), Unit(Rat(3)),
                         Unit(Rat(12)), Unit(Rat(-1))};
  size_t size0 = mult_basis(A).size();
  std::sort(A.begin(), A.end(), [](const Unit& x, const Unit& y) {
    return unit_str(x) < unit_str(y);
  });
  do {
    CHECK(mult_basis(A).size() == size0);
  } while (std::next_permutation(
      A.begin(), A.end(), [](const Unit& x, const Unit& y) {
        return unit_str(x) < unit_str(y);
      }));
}

TEST_CASE("mcl membership") {
  CHECK(mcl_member(Unit(RootOfUnity(1, 6)), {Unit(RootOfUnity(1, 3))}));
  CHECK(mcl_member(Unit(RootOfUnity(1, 5)), {}));  // torsion is closed in
  CHECK(!mcl_member(Unit(Rat(2)), {}));
  CHECK(mcl_member(Unit(Rat(-1)), {}));
  CHECK(mcl_member(Unit(Rat(4)), {Unit(Rat(2))}));
  CHECK(mcl_member(Unit(Rat(-8)), {Unit(Rat(2))}));
  CHECK(!mcl_member(Unit(Rat(3)), {Unit(Rat(2))}));
  CHECK(mcl_member(Unit(Rat(6)), {Unit(Rat(2))}, {Unit(Rat(3))}));
  CHECK(!mcl_member(Unit(FormalUnit{"t", 0, true}),
                    {Unit(FormalUnit{"u", 5, false})}));
}

TEST_CASE("mcl exchange property") {
  // if a in mcl(A u {b}) \ mcl(A), then b in mcl(A u {a})
  std::vector<Unit> pool = {Unit(Rat(2)),  Unit(Rat(3)),  Unit(Rat(4)),
                            Unit(Rat(6)),  Unit(Rat(9)),  Unit(Rat(-2)),
                            Unit(Rat(8)),  Unit(Rat(1, 2)), Unit(Rat(12))};
  for (auto& a : pool)
    for (auto& b : pool)
      for (auto& base : pool) {
        std::vector<Unit> A = {base};
        if (mcl_member(a, {A[0], b}) && !mcl_member(a, A)) {
          CHECK(mcl_member(b, {A[0], a}));
        }
      }
}

TEST_CASE("torsion lattice brute force (small boxes)") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 120; ++trial) {
    long n = 1 + gen() % 2;
    std::vector<RootOfUnity> g;
    std::vector<Unit> gu;
    long L = 1;
    for (long i = 0; i < n; ++i) {
      long m = 1 + gen() % 6;
      g.push_back(RootOfUnity(gen() % m, m));
      gu.push_back(Unit(g.back()));
      L = lcm_long(L, g.back().den);
    }
    IntMatrix h = relation_lattice(gu);
    std::vector<long> v(n, -6);
    bool more = true;
    while (more) {
      long num = 0;
      for (long i = 0; i < n; ++i) num += v[i] * g[i].num * (L / g[i].den);
      bool vanish = ((num % L) + L) % L == 0;
      std::vector<Int> vv(v.begin(), v.end());
      CHECK(lattice_contains(h, vv) == vanish);
      long d = 0;
      while (d < n && ++v[d] == 7) v[d++] = -6;
      more = d < n;
    }
  }
}

TEST_CASE("rational unit with large prime factor is rejected") {
  CHECK_THROWS_AS(
      relation_lattice({Unit(Rat(1000003L * 7))}, {}),
      std::invalid_argument);
}
