#pragma once

#include <optional>
#include <string>

#include "charkit/cyclo.hpp"
#include "charkit/fq.hpp"

namespace charkit {

// The canonical injective multiplicative character chi: Fp^alg -> Q(U)+{0},
// pinned by the Conway tower: generator of F_{p^n}^x maps to zeta_{p^n-1}.
struct CharContext {
  long p;
};

// chi(0) = 0; for a != 0 with minimal field F_{p^m} and dlog k,
// chi(a) = zeta_{p^m-1}^k.
Cyclo chi(const CharContext& ctx, const FqElem& a);

// Inverse of chi on its image.  nullopt when order(u) is divisible by p;
// throws std::runtime_error when the order is coprime to p but the field
// needed exceeds the supported bound.
std::optional<FqElem> chi_preimage(const CharContext& ctx, const RootOfUnity& u);

struct CharReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> failures;  // witnesses
};

// Exhaustive multiplicativity / injectivity / tower-compatibility check
// over all F_{p^n}, n <= n_max.
CharReport verify_character(const CharContext& ctx, long n_max);

}  // namespace charkit
