#pragma once

#include <optional>
#include <vector>

#include "charkit/character.hpp"
#include "charkit/ideal.hpp"
#include "charkit/units.hpp"

namespace charkit {

// Mann bound d(n) = product of primes <= n+1; sound for equations with n
// left-hand terms.
long d_bound(long n);

extern long mann_arity_budget;  // default 4

struct MannSolutionSet {
  std::vector<std::vector<RootOfUnity>> solutions;  // sorted tuples
  long bound_used = 1;
};

// Complete set of non-degenerate root-of-unity solutions of c.x = 1,
// by exact enumeration over tuples with orders dividing d_bound(n).
MannSolutionSet mann_solve(const std::vector<Rat>& c);

enum class CoeffField { Q };

struct GenericityResult {
  bool generic = true;
  std::optional<Unit> witness;  // set when generic is false
};

// Genericity of the group generated by G over the group generated by H,
// with coefficients in C.  Precondition mcl(H) n G = H (modulo torsion) is
// verified first; violation raises std::invalid_argument.
GenericityResult genericity_check(const std::vector<Unit>& G,
                                  const std::vector<Unit>& H,
                                  CoeffField C = CoeffField::Q);

// Verifies the universal axiom instance for arity n and the coefficient
// vectors in pool, against chi restricted to fields of degree <= n_max:
// every non-degenerate solution x in chi(F^x)^n of c.x = 1 satisfies
// x_i^{d(n)} = 1.  Returns false and fills witness on violation.
bool axiom_instance(const CharContext& ctx, long n,
                    const std::vector<std::vector<Rat>>& pool, long n_max,
                    std::vector<RootOfUnity>* witness = nullptr);

using FPoly = MPoly<FqElem>;

// Pullback through chi: given a system P over Q(U)-coefficients of the
// shape (rational multiple of a root of unity per term) in k variables w,
// produce a system Q over F_p in k variables s with Z(Q) = chi^{-1}(Z(P)).
std::vector<FPoly> char_pullback(const CharContext& ctx,
                                 const std::vector<CPoly>& P, long k);

}  // namespace charkit
