#pragma once

#include <string>
#include <variant>
#include <vector>

#include "charkit/cyclo.hpp"
#include "charkit/fq.hpp"
#include "charkit/intmat.hpp"

namespace charkit {

// A named symbolic unit with a declared multiplicative order
// (0 = infinite order) and a transcendence flag.  Distinct formal units
// are treated as multiplicatively independent of each other.
struct FormalUnit {
  std::string name;
  long order = 0;
  bool transcendental = false;
  bool operator==(const FormalUnit& o) const = default;
};

// A nonzero element of the multiplicative universe.
using Unit = std::variant<RootOfUnity, FqElem, Rat, FormalUnit>;

std::string unit_str(const Unit& u);

// Bound for trial-division factoring of rational units.
extern long unit_factor_bound;

// Lattice { v in Z^n : g^v in <H> }, in HNF.  All units must be of one
// comparable kind (throws std::invalid_argument otherwise).
IntMatrix relation_lattice(const std::vector<Unit>& g,
                           const std::vector<Unit>& H = {});

// True iff relation_lattice(g over B) is the zero lattice.
bool is_mult_independent(const std::vector<Unit>& g,
                         const std::vector<Unit>& B = {});

// a in mcl_B(A): some positive power of a lies in <A u B>.
bool mcl_member(const Unit& a, const std::vector<Unit>& A,
                const std::vector<Unit>& B = {});

// Greedy deterministic multiplicative basis of A over B (subsequence of A).
std::vector<Unit> mult_basis(const std::vector<Unit>& A,
                             const std::vector<Unit>& B = {});

}  // namespace charkit
