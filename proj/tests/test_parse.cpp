#include "charkit/parse.hpp"
#include "doctest.h"

using namespace charkit;

TEST_CASE("tokens") {
  CHECK(parse_root("z(1/6)") == RootOfUnity(1, 6));
  CHECK(parse_root("z(0)") == RootOfUnity(0, 1));
  CHECK_THROWS(parse_root("z(1/0)"));
  CHECK(parse_fq("fq(7,1,[3])") == fq_make(7, 1, {3}));
  CHECK(parse_fq("fq(2,3,[0,1,0])") == fq_make(2, 3, {0, 1, 0}));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(rat_str(Rat(-3, 4)) == "-3/4");
  CHECK(rat_str(Rat(5)) == "5");
}

TEST_CASE("polynomial round trips") {
  QPoly p = parse_qpoly("x1^2 - x1 + 1");
  CHECK(p.nvars == 1);
  CHECK(poly_str(p) == "x1^2 - x1 + 1");
  QPoly q = parse_qpoly("2*x1*x2 - 1/2", 3);
  CHECK(q.nvars == 3);
  CHECK(poly_str(q) == "2*x1*x2 - 1/2");
  CPoly c = parse_cpoly("w1 + z(1/3)*w2");
  CHECK(c.nvars == 2);
  CHECK(parse_cpoly(cpoly_str(c), 2) == c);
  QPoly zero = parse_qpoly("", 2);
  CHECK(zero.is_zero());
  // parse(str(p)) == p for a handful of shapes
  for (auto s : {"x1^3*x2 - 2*x1 + 7", "1/3", "x2^2 + x2", "-x1 - 1"}) {
    QPoly r = parse_qpoly(s, 2);
    CHECK(parse_qpoly(poly_str(r), 2) == r);
  }
}

TEST_CASE("presentation json round trip") {
  std::string j = R"({
    "ambient": 2,
    "fibers": [
      { "label": [0], "V": [ {"gens": ["x2"], "irreducible": "verified"},
                              {"gens": ["x1"]} ],
        "S": [ [ {"gens": ["x1","x2"]} ] ] },
      { "label": [1], "V": [ {"gens": ["x2"]} ] }
    ],
    "annotation": {"rF": 0, "dF": null}
  })";
  FinitePresentation P = parse_presentation(j);
  CHECK(P.n == 2);
  REQUIRE(P.fibers.size() == 2);
  CHECK(P.fibers[0].T.V.comps.size() == 2);
  CHECK(P.fibers[0].T.S.size() == 1);
  CHECK(P.fibers[0].T.V.comps[0].flag == IrredFlag::Verified);
  CHECK(P.fibers[0].T.V.comps[1].flag == IrredFlag::Verified);  // linear
  std::string out = presentation_json(P);
  FinitePresentation P2 = parse_presentation(out);
  REQUIRE(P2.fibers.size() == 2);
  CHECK(P2.fibers[0].T.V.comps.size() == 2);
  CHECK(presentation_json(P2) == out);
}

TEST_CASE("rank expressions") {
  auto d = parse_rank_expr("prod(atom(1,1,0,1), atom(0,1,2,3))");
  CHECK(gr_eval(d) == Ordinal2::of(1, 2));
  auto u = parse_rank_expr("union(atom(1,1,0,2), atom(1,1,0,2), overlap=2)");
  CHECK(gd_eval(u) == 2);
  CHECK(gr_eval(parse_rank_expr("empty")).bottom);
  CHECK(gd_eval(parse_rank_expr("disj(atom(1,1,0,3), atom(0,1,0,5))")) == 3);
  CHECK(gr_eval(parse_rank_expr("atom(1,1,0,1)")).str() == "w*1+0");
  CHECK_THROWS(parse_rank_expr("atom(1,1)"));
  CHECK_THROWS(parse_rank_expr("nonsense"));
}
