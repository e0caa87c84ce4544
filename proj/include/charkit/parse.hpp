#pragma once

#include <string>

#include "charkit/mann.hpp"
#include "charkit/ordinal.hpp"
#include "charkit/pcset.hpp"

namespace charkit {

// Token forms: roots of unity `z(a/m)`, finite-field elements
// `fq(p,n,[c0,c1,...])`, polynomials as `+`/`-` joined products of
// rationals `a/b`, `z(a/m)` tokens and variables `x1^e1` (1-based).
RootOfUnity parse_root(const std::string& s);
FqElem parse_fq(const std::string& s);

// nvars = 0 infers the variable count from the highest index used.
CPoly parse_cpoly(const std::string& s, long nvars = 0,
                  const std::string& prefix = "w");
QPoly parse_qpoly(const std::string& s, long nvars = 0,
                  const std::string& prefix = "x");

std::string cpoly_str(const CPoly& p, const std::string& prefix = "w");
std::string fpoly_str(const FPoly& p, const std::string& prefix = "s");

// Presentation files: JSON with ambient dimension, fibers (label, V, S)
// and an optional rank annotation.
FinitePresentation parse_presentation(const std::string& json_text);
std::string presentation_json(const FinitePresentation& P);

// Rank descriptor expressions:
//   atom(rhoK,dK,rhoF,dF) | empty | prod(e,e) | union(e,...[,overlap=g])
//   | disj(e,...)
RankDescriptorPtr parse_rank_expr(const std::string& s);

}  // namespace charkit
