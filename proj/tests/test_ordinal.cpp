#include <random>

#include "charkit/ordinal.hpp"
#include "doctest.h"

using namespace charkit;

TEST_CASE("ordinal ordering") {
  Ordinal2 b = Ordinal2::bot();
  CHECK(b.str() == "-inf");
  CHECK(Ordinal2::of(1, 0).str() == "w*1+0");
  CHECK(Ordinal2::of(0, 3).str() == "w*0+3");

  CHECK(ord_compare(b, b) == 0);
  CHECK(ord_compare(b, Ordinal2::of(0, 0)) == -1);
  CHECK(ord_compare(Ordinal2::of(0, 5), Ordinal2::of(1, 0)) == -1);
  CHECK(ord_compare(Ordinal2::of(1, 0), Ordinal2::of(1, 1)) == -1);
  CHECK(ord_compare(Ordinal2::of(2, 0), Ordinal2::of(1, 7)) == 1);
  CHECK(ord_max(Ordinal2::of(0, 5), Ordinal2::of(1, 0)) == Ordinal2::of(1, 0));
  CHECK(ord_max(b, Ordinal2::of(0, 0)) == Ordinal2::of(0, 0));

  // total order: antisymmetry + transitivity on a sample
  std::vector<Ordinal2> xs = {b, Ordinal2::of(0, 0), Ordinal2::of(0, 2),
                              Ordinal2::of(1, 0), Ordinal2::of(1, 2),
                              Ordinal2::of(2, 1)};
  for (auto& x : xs)
    for (auto& y : xs) {
      CHECK(ord_compare(x, y) == -ord_compare(y, x));
      for (auto& z : xs)
        if (ord_compare(x, y) <= 0 && ord_compare(y, z) <= 0)
          CHECK(ord_compare(x, z) <= 0);
    }
}

TEST_CASE("gr and gd examples") {
  auto a = rd_atom(1, 1, 0, 1);
  CHECK(gr_eval(a) == Ordinal2::of(1, 0));
  CHECK(gd_eval(a) == 1);

  CHECK(gr_eval(rd_empty()).bottom);
  CHECK(gd_eval(rd_empty()) == 0);

  auto p = rd_product(rd_atom(1, 1, 0, 1), rd_atom(0, 1, 2, 3));
  CHECK(gr_eval(p) == Ordinal2::of(1, 2));
  CHECK_THROWS_AS(gd_eval(p), std::invalid_argument);

  // bottom absorbs products
  CHECK(gr_eval(rd_product(a, rd_empty())).bottom);

  auto u = rd_union({rd_atom(1, 1, 0, 2), rd_atom(1, 1, 0, 2)}, 2);
  CHECK(gr_eval(u) == Ordinal2::of(1, 0));
  CHECK(gd_eval(u) == 2);  // 2 + 2 - 2

  // tie at the top without a declared overlap is an error
  auto ut = rd_union({rd_atom(1, 1, 0, 2), rd_atom(1, 1, 0, 2)});
  CHECK_THROWS_AS(gd_eval(ut), std::invalid_argument);
  // no tie: overlap not needed, max child wins
  auto un = rd_union({rd_atom(1, 1, 0, 2), rd_atom(0, 1, 0, 5)});
  CHECK(gd_eval(un) == 2);

  auto dj = rd_disjoint_union({rd_atom(1, 1, 0, 3), rd_atom(0, 1, 0, 5)});
  CHECK(gr_eval(dj) == Ordinal2::of(1, 0));
  CHECK(gd_eval(dj) == 3);
  auto dj2 = rd_disjoint_union({rd_atom(1, 1, 0, 3), rd_atom(1, 1, 0, 4)});
  CHECK(gd_eval(dj2) == 7);
}

TEST_CASE("product law on random trees") {
  std::mt19937_64 gen(17);
  auto atom = [&]() {
    return rd_atom(gen() % 3, 1 + gen() % 4, gen() % 3, 1 + gen() % 4);
  };
  for (int t = 0; t < 300; ++t) {
    auto a = atom(), b = atom(), c = atom();
    // commutativity and associativity of gr under products
    CHECK(gr_eval(rd_product(a, b)) == gr_eval(rd_product(b, a)));
    CHECK(gr_eval(rd_product(rd_product(a, b), c)) ==
          gr_eval(rd_product(a, rd_product(b, c))));
    // componentwise addition
    Ordinal2 ga = gr_eval(a), gb = gr_eval(b);
    CHECK(gr_eval(rd_product(a, b)) ==
          Ordinal2::of(ga.rho_K + gb.rho_K, ga.rho_F + gb.rho_F));
    // union is the max
    CHECK(gr_eval(rd_union({a, b, c})) ==
          ord_max(ga, ord_max(gb, gr_eval(c))));
  }
}
