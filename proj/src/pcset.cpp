#include "charkit/pcset.hpp"

#include <algorithm>
#include <stdexcept>

namespace charkit {

namespace {

// Rank of a rational symmetric matrix, by Gaussian elimination.
long mat_rank(std::vector<std::vector<Rat>> m) {
  long rows = (long)m.size();
  if (rows == 0) return 0;
  long cols = (long)m[0].size();
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (long r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (long j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool all_linear(const std::vector<QPoly>& gens) {
  for (auto& g : gens)
    if (g.degree() > 1) return false;
  return true;
}

// Irreducibility of a principal quadric over the algebraic closure: the
// associated (n+1)x(n+1) symmetric matrix of the projective closure has
// rank >= 3.
bool quadric_irreducible(const QPoly& g) {
  long n = g.nvars;
  std::vector<std::vector<Rat>> m(n + 1, std::vector<Rat>(n + 1, Rat(0)));
  for (auto& [e, c] : g.terms) {
    std::vector<long> idx;
    for (long i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx.size() == 2) {
      if (idx[0] == idx[1])
        m[idx[0]][idx[0]] += c;
      else {
        m[idx[0]][idx[1]] += c / 2;
        m[idx[1]][idx[0]] += c / 2;
      }
    } else if (idx.size() == 1) {
      m[idx[0]][n] += c / 2;
      m[n][idx[0]] += c / 2;
    } else {
      m[n][n] += c;
    }
  }
  return mat_rank(std::move(m)) >= 3;
}

}  // namespace

Component make_component(Ideal I, bool user_asserted) {
  Component c;
  c.flag = IrredFlag::Unresolved;
  if (ideal_is_unit(I))
    throw std::invalid_argument("component: unit ideal is not a variety");
  if (all_linear(groebner(I))) {
    c.flag = IrredFlag::Verified;
  } else if (I.gens.size() == 1 && I.gens[0].degree() == 2 &&
             quadric_irreducible(I.gens[0])) {
    c.flag = IrredFlag::Verified;
  } else if (user_asserted) {
    c.flag = IrredFlag::Asserted;
  }
  auto d = ideal_dim(I);
  c.dim = *d;
  c.ideal = std::move(I);
  return c;
}

bool comp_subset(const Component& c, const Component& d) {
  for (auto& g : d.ideal.gens)
    if (!radical_member(g, c.ideal)) return false;
  return true;
}

namespace {

bool comp_equal(const Component& a, const Component& b) {
  return a.dim == b.dim && comp_subset(a, b) && comp_subset(b, a);
}

// C subseteq union W: C irreducible, so iff C is inside some component.
bool comp_in_algset(const Component& c, const AlgSet& W) {
  for (auto& d : W.comps)
    if (comp_subset(c, d)) return true;
  return false;
}

void require_resolved(const Component& c) {
  if (c.flag == IrredFlag::Unresolved)
    throw std::invalid_argument(
        "pc_sets: unresolved component irreducibility");
}

// drop duplicate components and components swallowed by other ones
std::vector<Component> irredundant(std::vector<Component> comps) {
  std::vector<Component> out;
  for (auto& c : comps) {
    bool drop = false;
    for (auto& d : out)
      if (comp_subset(c, d)) {
        drop = true;
        break;
      }
    if (drop) continue;
    std::vector<Component> kept;
    for (auto& d : out)
      if (!comp_subset(d, c)) kept.push_back(std::move(d));
    kept.push_back(std::move(c));
    out = std::move(kept);
  }
  return out;
}

}  // namespace

AlgSet pc_closure(PcSet& T) {
  if (T.closure_normalized) return T.V;
  for (auto& c : T.V.comps) require_resolved(c);
  for (auto& W : T.S)
    for (auto& c : W.comps) require_resolved(c);
  std::vector<Component> kept;
  for (auto& c : T.V.comps) {
    bool inside_S = false;
    for (auto& W : T.S)
      if (comp_in_algset(c, W)) {
        inside_S = true;
        break;
      }
    if (!inside_S) kept.push_back(c);
  }
  T.V.comps = irredundant(std::move(kept));
  T.closure_normalized = true;
  return T.V;
}

RankDeg pc_rank_deg(const PcSet& T) {
  PcSet copy = T;
  AlgSet V = pc_closure(copy);
  RankDeg rd;
  if (V.comps.empty()) return rd;  // (-inf, 0)
  long r = -1;
  for (auto& c : V.comps) r = std::max(r, c.dim);
  rd.r_K = r;
  for (auto& c : V.comps)
    if (c.dim == r) ++rd.d_K;
  return rd;
}

namespace {

std::optional<Component> resolve_intersection(const Component& a,
                                              const Component& b) {
  if (comp_subset(a, b)) return a;
  if (comp_subset(b, a)) return b;
  Ideal I;
  I.nvars = a.ideal.nvars;
  I.gens = a.ideal.gens;
  I.gens.insert(I.gens.end(), b.ideal.gens.begin(), b.ideal.gens.end());
  if (ideal_is_unit(I)) return std::nullopt;
  if (!all_linear(groebner(I)))
    throw std::runtime_error(
        "pc_op: unresolvable component intersection (non-linear pair)");
  Ideal R;
  R.nvars = I.nvars;
  R.gens = groebner(I);
  return make_component(std::move(R));
}

AlgSet intersect_algsets(const AlgSet& A, const AlgSet& B) {
  AlgSet R;
  R.n = A.n;
  std::vector<Component> comps;
  for (auto& a : A.comps)
    for (auto& b : B.comps)
      if (auto c = resolve_intersection(a, b)) comps.push_back(std::move(*c));
  R.comps = irredundant(std::move(comps));
  return R;
}

Component product_component(const Component& a, const Component& b, long n,
                            long n2) {
  Ideal I;
  I.nvars = n + n2;
  for (auto& g : a.ideal.gens) I.gens.push_back(lift_poly(g, n + n2, I.order));
  for (auto& g : b.ideal.gens) {
    QPoly p(n + n2);
    for (auto& [e, c] : g.terms) {
      Expo e2(n + n2, 0);
      std::copy(e.begin(), e.end(), e2.begin() + n);
      p.terms.emplace(std::move(e2), c);
    }
    I.gens.push_back(std::move(p));
  }
  Component c;
  c.ideal = std::move(I);
  c.dim = a.dim + b.dim;
  if (a.flag == IrredFlag::Unresolved || b.flag == IrredFlag::Unresolved)
    c.flag = IrredFlag::Unresolved;
  else if (a.flag == IrredFlag::Verified && b.flag == IrredFlag::Verified)
    c.flag = IrredFlag::Verified;
  else
    c.flag = IrredFlag::Asserted;
  return c;
}

AlgSet product_algsets(const AlgSet& A, const AlgSet& B) {
  AlgSet R;
  R.n = A.n + B.n;
  for (auto& a : A.comps)
    for (auto& b : B.comps)
      R.comps.push_back(product_component(a, b, A.n, B.n));
  return R;
}

PcSet normalized(const PcSet& T) {
  PcSet c = T;
  pc_closure(c);
  return c;
}

std::vector<const Component*> top_components(const AlgSet& V) {
  long r = -1;
  for (auto& c : V.comps) r = std::max(r, c.dim);
  std::vector<const Component*> tops;
  for (auto& c : V.comps)
    if (c.dim == r) tops.push_back(&c);
  return tops;
}

}  // namespace

PcSet pc_op(const PcSet& a, const PcSet& b, PcOp op) {
  PcSet r;
  switch (op) {
    case PcOp::Cap: {
      r.V = intersect_algsets(a.V, b.V);
      r.S = a.S;
      r.S.insert(r.S.end(), b.S.begin(), b.S.end());
      break;
    }
    case PcOp::CapDot: {
      PcSet nb = normalized(b);
      r.V = intersect_algsets(a.V, nb.V);
      r.S = a.S;
      break;
    }
    case PcOp::DotMinus: {
      PcSet nb = normalized(b);
      r.V = a.V;
      r.S = a.S;
      r.S.push_back(nb.V);
      break;
    }
    case PcOp::Times: {
      r.V = product_algsets(a.V, b.V);
      for (auto& Sa : a.S) r.S.push_back(product_algsets(Sa, b.V));
      for (auto& Sb : b.S) r.S.push_back(product_algsets(a.V, Sb));
      break;
    }
  }
  pc_closure(r);
  return r;
}

PcRel pc_rel(const PcSet& a, const PcSet& b) {
  PcSet na = normalized(a), nb = normalized(b);
  RankDeg ra = pc_rank_deg(na), rb = pc_rank_deg(nb);
  if (ra.r_K != rb.r_K)
    throw std::invalid_argument("pc_rel: rank mismatch");
  if (!ra.r_K)  // both empty
    return PcRel::AlmostEq;
  long r = *ra.r_K;
  auto ta = top_components(na.V), tb = top_components(nb.V);
  long shared = 0;
  bool fwd = true, bwd = true;
  for (auto* c : ta) {
    bool found = false;
    for (auto* d : tb)
      if (comp_equal(*c, *d)) {
        found = true;
        break;
      }
    if (found)
      ++shared;
    else
      fwd = false;
  }
  for (auto* d : tb) {
    bool found = false;
    for (auto* c : ta)
      if (comp_equal(*d, *c)) {
        found = true;
        break;
      }
    if (!found) bwd = false;
  }
  if (fwd && bwd) return PcRel::AlmostEq;
  if (fwd) return PcRel::AlmostSub;
  if (shared == 0) {
    // confirm the rank drop of every pairwise intersection
    for (auto* c : ta)
      for (auto* d : tb) {
        Ideal I;
        I.nvars = c->ideal.nvars;
        I.gens = c->ideal.gens;
        I.gens.insert(I.gens.end(), d->ideal.gens.begin(),
                      d->ideal.gens.end());
        auto dim = ideal_dim(I);
        if (dim && *dim >= r)
          throw std::logic_error("pc_rel: distinct top components intersect "
                                 "in full rank");
      }
    return PcRel::AlmostDisjoint;
  }
  return PcRel::Mixed;
}

std::string pc_rel_str(PcRel r) {
  switch (r) {
    case PcRel::AlmostSub:
      return "almost-subset";
    case PcRel::AlmostEq:
      return "almost-equal";
    case PcRel::AlmostDisjoint:
      return "almost-disjoint";
    case PcRel::Mixed:
      return "mixed";
  }
  return "?";
}

namespace {

bool fiber_empty(const Fiber& f) {
  return !pc_rank_deg(f.T).r_K.has_value();
}

// indices of nonempty fibers attaining the maximal rank
std::vector<size_t> primary_indices(const std::vector<Fiber>& fibers) {
  long best = -1;
  std::vector<size_t> idx;
  for (size_t i = 0; i < fibers.size(); ++i) {
    auto rd = pc_rank_deg(fibers[i].T);
    if (!rd.r_K) continue;
    if (*rd.r_K > best) {
      best = *rd.r_K;
      idx.clear();
    }
    if (*rd.r_K == best) idx.push_back(i);
  }
  return idx;
}

}  // namespace

bool is_essentially_disjoint(const FinitePresentation& P) {
  auto idx = primary_indices(P.fibers);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      PcRel r = pc_rel(P.fibers[idx[i]].T, P.fibers[idx[j]].T);
      if (r != PcRel::AlmostEq && r != PcRel::AlmostDisjoint) return false;
    }
  return true;
}

bool is_geometric(const FinitePresentation& P) {
  if (!is_essentially_disjoint(P)) return false;
  for (size_t i : primary_indices(P.fibers)) {
    PcSet c = normalized(P.fibers[i].T);
    if (top_components(c.V).size() > 1) return false;
  }
  return true;
}

namespace {

// replace fiber at position i by its capdot/dotminus split against cutter
void split_fiber(std::vector<Fiber>& fibers, size_t i, const PcSet& cutter) {
  Fiber f = fibers[i];
  Fiber a{f.label + ".1", pc_op(f.T, cutter, PcOp::CapDot)};
  Fiber b{f.label + ".2", pc_op(f.T, cutter, PcOp::DotMinus)};
  std::vector<Fiber> out;
  for (size_t t = 0; t < fibers.size(); ++t) {
    if (t != i) {
      out.push_back(std::move(fibers[t]));
      continue;
    }
    if (!fiber_empty(a)) out.push_back(a);
    if (!fiber_empty(b)) out.push_back(b);
  }
  fibers = std::move(out);
}

}  // namespace

FinitePresentation refine_essentially_disjoint(FinitePresentation P) {
  for (auto& f : P.fibers) pc_closure(f.T);
  for (long guard = 0; guard < 1000; ++guard) {
    auto idx = primary_indices(P.fibers);
    bool split = false;
    for (size_t i = 0; i < idx.size() && !split; ++i)
      for (size_t j = i + 1; j < idx.size() && !split; ++j) {
        const Fiber& fi = P.fibers[idx[i]];
        const Fiber& fj = P.fibers[idx[j]];
        PcRel r = pc_rel(fi.T, fj.T);
        if (r == PcRel::AlmostEq || r == PcRel::AlmostDisjoint) continue;
        if (r == PcRel::AlmostSub) {
          // fi almost-inside fj: split the larger fiber fj along fi
          PcSet cut = fi.T;
          split_fiber(P.fibers, idx[j], cut);
        } else {
          PcSet cut = fj.T;
          split_fiber(P.fibers, idx[i], cut);
        }
        split = true;
      }
    if (!split) return P;
  }
  throw std::runtime_error("refine_essentially_disjoint: no fixpoint");
}

std::vector<std::vector<std::string>> primary_quotient(
    const FinitePresentation& P) {
  if (!is_essentially_disjoint(P))
    throw std::invalid_argument(
        "primary_quotient: presentation not essentially disjoint");
  auto idx = primary_indices(P.fibers);
  std::vector<std::vector<std::string>> classes;
  std::vector<bool> placed(idx.size(), false);
  for (size_t i = 0; i < idx.size(); ++i) {
    if (placed[i]) continue;
    std::vector<std::string> cls{P.fibers[idx[i]].label};
    placed[i] = true;
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (placed[j]) continue;
      if (pc_rel(P.fibers[idx[i]].T, P.fibers[idx[j]].T) == PcRel::AlmostEq) {
        cls.push_back(P.fibers[idx[j]].label);
        placed[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

FinitePresentation refine_geometric(FinitePresentation P) {
  if (!is_essentially_disjoint(P))
    throw std::invalid_argument("refine_geometric: not essentially disjoint");
  for (long guard = 0; guard < 1000; ++guard) {
    auto idx = primary_indices(P.fibers);
    bool split = false;
    for (size_t i : idx) {
      PcSet c = normalized(P.fibers[i].T);
      auto tops = top_components(c.V);
      if (tops.size() <= 1) continue;
      PcSet cut;
      cut.V.n = c.V.n;
      cut.V.comps.push_back(*tops.front());
      split_fiber(P.fibers, i, cut);
      split = true;
      break;
    }
    if (!split) {
      if (!is_essentially_disjoint(P)) {
        P = refine_essentially_disjoint(std::move(P));
        continue;
      }
      return P;
    }
  }
  throw std::runtime_error("refine_geometric: no fixpoint");
}

std::pair<Ordinal2, long> presentation_gr_gd(const FinitePresentation& P) {
  if (!is_geometric(P))
    throw std::invalid_argument("presentation_gr_gd: not geometric");
  auto idx = primary_indices(P.fibers);
  if (idx.empty()) return {Ordinal2::bot(), 0};
  long rK = *pc_rank_deg(P.fibers[idx[0]].T).r_K;
  long rF = P.annotation ? P.annotation->rF : 0;
  long gd;
  if (P.annotation && P.annotation->dF)
    gd = *P.annotation->dF;
  else
    gd = (long)primary_quotient(P).size();
  return {Ordinal2::of(rK, rF), gd};
}

}  // namespace charkit
