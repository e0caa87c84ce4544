#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charkit/ideal.hpp"
#include "charkit/ordinal.hpp"

namespace charkit {

enum class IrredFlag { Verified, Asserted, Unresolved };

// One irreducible component of an algebraic set, with cached dimension.
struct Component {
  Ideal ideal;
  IrredFlag flag = IrredFlag::Unresolved;
  long dim = -1;
};

// Machine-verifies irreducibility where supported (points and linear
// varieties; principal quadrics via the rank of the associated symmetric
// matrix); otherwise the component is user-asserted or left unresolved.
Component make_component(Ideal I, bool user_asserted = false);

struct AlgSet {
  long n = 0;
  std::vector<Component> comps;
};

// T = V \ S with S presented as a finite list of algebraic sets.
struct PcSet {
  AlgSet V;
  std::vector<AlgSet> S;
  bool closure_normalized = false;
};

// V(c) subseteq V(d), decided by radical membership of d's generators.
bool comp_subset(const Component& c, const Component& d);

// K-closure of V \ S; drops components contained in a member of S (and
// components swallowed by other kept components); normalizes T in place.
AlgSet pc_closure(PcSet& T);

struct RankDeg {
  std::optional<long> r_K;  // nullopt = -infinity (empty set)
  long d_K = 0;
};
RankDeg pc_rank_deg(const PcSet& T);

enum class PcOp { Cap, CapDot, DotMinus, Times };
PcSet pc_op(const PcSet& a, const PcSet& b, PcOp op);

enum class PcRel { AlmostSub, AlmostEq, AlmostDisjoint, Mixed };
// Requires equal r_K (std::invalid_argument otherwise).
PcRel pc_rel(const PcSet& a, const PcSet& b);
std::string pc_rel_str(PcRel r);

struct Fiber {
  std::string label;
  PcSet T;
};

struct Annotation {
  long rF = 0;
  std::optional<long> dF;
};

struct FinitePresentation {
  long n = 0;
  std::vector<Fiber> fibers;
  std::optional<Annotation> annotation;
};

bool is_essentially_disjoint(const FinitePresentation& P);
bool is_geometric(const FinitePresentation& P);

// Iterated capdot/dotminus splitting on offending maximal-rank pairs until
// every such pair is almost-equal or almost-disjoint.
FinitePresentation refine_essentially_disjoint(FinitePresentation P);

// ~-classes of the maximal-rank fibers (labels), requires essential
// disjointness.
std::vector<std::vector<std::string>> primary_quotient(
    const FinitePresentation& P);

// Splits multi-component primary fibers along their own top components
// until each primary fiber has a single top-dimensional component.
FinitePresentation refine_geometric(FinitePresentation P);

// gr = omega * (max fiber r_K) + r_F, gd = d_F of the primary quotient.
std::pair<Ordinal2, long> presentation_gr_gd(const FinitePresentation& P);

}  // namespace charkit
