#include "charkit/fq.hpp"
#include "doctest.h"

using namespace charkit;

TEST_CASE("conway polynomials") {
  CHECK(conway_poly(2, 1) == std::vector<long>{1, 1});
  CHECK(conway_poly(2, 2) == std::vector<long>{1, 1, 1});
  CHECK(conway_poly(2, 4) == std::vector<long>{1, 1, 0, 0, 1});
  CHECK(conway_poly(7, 1) == std::vector<long>{4, 1});
  CHECK(conway_poly(3, 2) == std::vector<long>{2, 2, 1});
}

TEST_CASE("canonical minimal-field storage") {
  // the generator of F4 embedded anywhere still reports degree 2
  FqElem g = fq_gen(2, 2);
  CHECK(g.n == 2);
  CHECK(fq_from_dlog(2, 4, Int(5)) == g);  // g16^5 has order 3
  CHECK(fq_make(2, 2, {1, 0}) == fq_one(2));
  CHECK(fq_make(7, 1, {9}) == fq_make(7, 1, {2}));
}

TEST_CASE("dlog is a homomorphism") {
  for (auto [p, n] : {std::pair<long, long>{2, 4}, {3, 3}, {7, 2}}) {
    Int order = int_pow(Int(p), n) - 1;
    auto elems = fq_all_elements(p, n);
    // g^dlog(a) = a after embedding-compatible scaling
    for (auto& a : elems) {
      if (a.is_zero()) continue;
      CHECK(fq_from_dlog(a.p, a.n, fq_dlog(a)) == a);
    }
    // spot-check multiplicativity inside the top field
    FqElem g = fq_gen(p, n);
    FqElem x = g;
    for (long k = 1; k < 12; ++k) {
      Int scale_x =
          (order) / (int_pow(Int(p), x.n) - 1) * fq_dlog(x) % order;
      CHECK(scale_x == Int(k) % order);
      x = x * g;
    }
  }
}

TEST_CASE("embedding compatibility") {
  // F4 -> F16: exponent scale 15/3 = 5, and C_{2,2}(g16^5) = 0
  FqElem g165 = fq_from_dlog(2, 4, Int(5));
  CHECK((g165 * g165 + g165 + fq_one(2)).is_zero());
  FqRep emb = fq_embed(fq_gen(2, 2), 4);
  FqRep direct = fq_embed(g165, 4);
  CHECK(emb == direct);
  // norm-compatibility for F9 in F81
  FqElem g9 = fq_gen(3, 2);
  CHECK(fq_embed(g9, 4) == fq_embed(fq_from_dlog(3, 4, Int(10)), 4));
}

TEST_CASE("field laws") {
  for (auto [p, n] : {std::pair<long, long>{2, 3}, {3, 2}}) {
    auto elems = fq_all_elements(p, n);
    CHECK((long)elems.size() == [&] {
      long s = 1;
      for (long i = 0; i < n; ++i) s *= p;
      return s;
    }());
    for (auto& a : elems)
      for (auto& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
      }
    for (auto& a : elems) {
      CHECK((a - a).is_zero());
      CHECK(a * fq_one(p) == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == fq_one(p));
    }
  }
}

TEST_CASE("resource bound") {
  CHECK_THROWS_AS(fq_gen(2, 25), std::runtime_error);
}
