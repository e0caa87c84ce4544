#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "charkit/cyclo.hpp"
#include "charkit/mpoly.hpp"

namespace charkit {

// Resource caps for Buchberger; exceeding any raises std::runtime_error.
struct GroebnerLimits {
  long max_basis = 4000;
  int max_degree = 80;
  long max_pairs = 400000;
};
extern GroebnerLimits groebner_limits;

// Ideal in C[x_1..x_nvars] with a lazily cached reduced Groebner basis.
template <class C>
struct IdealT {
  long nvars = 0;
  TermOrder order = TermOrder::Grevlex;
  int aux_block = 0;
  std::vector<MPoly<C>> gens;
  mutable std::vector<MPoly<C>> gb;  // empty = not yet computed
  mutable bool gb_ready = false;
};

using Ideal = IdealT<Rat>;

namespace gbdetail {

inline bool expo_divides(const Expo& a, const Expo& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace gbdetail

// Full normal form of p modulo basis (leading-term division, every term
// fully reduced).  basis need not be a Groebner basis.
template <class C>
MPoly<C> normal_form(MPoly<C> p, const std::vector<MPoly<C>>& basis) {
  MPoly<C> r(p.nvars, p.order);
  r.aux_block = p.aux_block;
  while (!p.is_zero()) {
    auto& lt = p.lead();
    bool reduced = false;
    for (auto& g : basis) {
      if (g.is_zero()) continue;
      auto& gl = g.lead();
      if (!gbdetail::expo_divides(gl.first, lt.first)) continue;
      C q = lt.second / gl.second;
      MPoly<C> m = MPoly<C>::monomial(
          p.nvars, gbdetail::expo_sub(lt.first, gl.first), q, p.order);
      m.aux_block = p.aux_block;
      p = p - m * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lt.first, lt.second);
      MPoly<C> m =
          MPoly<C>::monomial(p.nvars, lt.first, lt.second, p.order);
      m.aux_block = p.aux_block;
      p = p - m;
    }
  }
  return r;
}

// Buchberger with sugar-strategy selection and both classical criteria;
// returns the monic reduced Groebner basis.
template <class C>
std::vector<MPoly<C>> groebner_basis(std::vector<MPoly<C>> basis,
                                     TermOrder order, int aux_block,
                                     long nvars) {
  using P = MPoly<C>;
  for (auto& g : basis) {
    g.order = order;
    g.aux_block = aux_block;
  }
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const P& g) { return g.is_zero(); }),
              basis.end());
  struct Pair {
    long i, j;
    Expo l;
    int sugar;
  };
  auto make_pair = [&](long i, long j) {
    Expo l = gbdetail::expo_lcm(basis[i].lead().first, basis[j].lead().first);
    int s = total_deg(l) +
            std::max(basis[i].degree() - total_deg(basis[i].lead().first),
                     basis[j].degree() - total_deg(basis[j].lead().first));
    return Pair{i, j, std::move(l), s};
  };
  std::vector<Pair> queue;
  for (long i = 0; i < (long)basis.size(); ++i)
    for (long j = i + 1; j < (long)basis.size(); ++j)
      queue.push_back(make_pair(i, j));
  std::set<std::pair<long, long>> pending;
  for (auto& pr : queue) pending.insert({pr.i, pr.j});
  long processed = 0;
  while (!queue.empty()) {
    if (++processed > groebner_limits.max_pairs)
      throw std::runtime_error("groebner: pair budget exceeded");
    auto best = queue.begin();
    for (auto it = std::next(queue.begin()); it != queue.end(); ++it)
      if (it->sugar < best->sugar ||
          (it->sugar == best->sugar &&
           expo_less(it->l, best->l, order, aux_block)))
        best = it;
    Pair pr = *best;
    queue.erase(best);
    pending.erase({pr.i, pr.j});
    auto& fi = basis[pr.i];
    auto& fj = basis[pr.j];
    // product criterion
    Expo sum = fi.lead().first;
    for (size_t t = 0; t < sum.size(); ++t) sum[t] += fj.lead().first[t];
    if (sum == pr.l) continue;
    // chain criterion
    bool chained = false;
    for (long k = 0; k < (long)basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!gbdetail::expo_divides(basis[k].lead().first, pr.l)) continue;
      auto key = [&](long a, long b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k)))
        chained = true;
    }
    if (chained) continue;
    // s-polynomial: (lcm/lt_i) f_i / c_i - (lcm/lt_j) f_j / c_j
    C ci = fi.lead().second, cj = fj.lead().second;
    C one = ci / ci;
    P mi = P::monomial(nvars, gbdetail::expo_sub(pr.l, fi.lead().first),
                       one / ci, order);
    P mj = P::monomial(nvars, gbdetail::expo_sub(pr.l, fj.lead().first),
                       one / cj, order);
    mi.aux_block = mj.aux_block = aux_block;
    P s = mi * fi - mj * fj;
    P h = normal_form(s, basis);
    if (h.is_zero()) continue;
    if (h.degree() > groebner_limits.max_degree)
      throw std::runtime_error("groebner: degree budget exceeded");
    if ((long)basis.size() >= groebner_limits.max_basis)
      throw std::runtime_error("groebner: basis budget exceeded");
    long idx = (long)basis.size();
    basis.push_back(h);
    for (long i = 0; i < idx; ++i) {
      queue.push_back(make_pair(i, idx));
      pending.insert({i, idx});
    }
  }
  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<P> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gbdetail::expo_divides(basis[j].lead().first, basis[i].lead().first))
        redundant = basis[j].lead().first != basis[i].lead().first || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // inter-reduce and make monic
  std::vector<P> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<P> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    P h = normal_form(minimal[i], others);
    if (h.is_zero()) continue;
    C lc = h.lead().second;
    reduced.push_back(h.scaled((lc / lc) / lc));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const P& a, const P& b) {
    return expo_less(a.lead().first, b.lead().first, order, aux_block);
  });
  return reduced;
}

template <class C>
const std::vector<MPoly<C>>& groebner(const IdealT<C>& I) {
  if (!I.gb_ready) {
    I.gb = groebner_basis(I.gens, I.order, I.aux_block, I.nvars);
    I.gb_ready = true;
  }
  return I.gb;
}

template <class C>
bool ideal_member(const MPoly<C>& p, const IdealT<C>& I) {
  MPoly<C> q = p;
  q.order = I.order;
  q.aux_block = I.aux_block;
  return normal_form(q, groebner(I)).is_zero();
}

template <class C>
bool ideal_is_unit(const IdealT<C>& I) {
  auto& g = groebner(I);
  return g.size() == 1 && g[0].degree() == 0;
}

// Lift a polynomial into a ring with extra trailing variables.
template <class C>
MPoly<C> lift_poly(const MPoly<C>& p, long new_nvars, TermOrder order,
                   int aux_block = 0) {
  MPoly<C> r(new_nvars, order);
  r.aux_block = aux_block;
  for (auto& [e, c] : p.terms) {
    Expo e2(new_nvars, 0);
    std::copy(e.begin(), e.end(), e2.begin());
    r.terms.emplace(std::move(e2), c);
  }
  return r;
}

template <class C>
void lift_into(IdealT<C>& J, const MPoly<C>& g);

// For a zero-dimensional ideal the quotient is Artinian of vector-space
// dimension D (= number of standard monomials), so p in sqrt(I) iff
// p^D in I; repeated squaring of normal forms against the cached basis
// decides that without any per-query Groebner run.  Returns nullopt when
// the ideal is not zero-dimensional or the staircase is too large.
template <class C>
std::optional<bool> radical_member_zerodim(const MPoly<C>& p,
                                           const IdealT<C>& I) {
  auto& g = groebner(I);
  if (g.size() == 1 && g[0].degree() == 0) return true;  // unit ideal
  long n = I.nvars;
  std::vector<long> bound(n, -1);  // pure-power lead degree per variable
  for (auto& f : g) {
    auto& e = f.lead().first;
    long var = -1;
    bool pure = true;
    for (long i = 0; i < n; ++i)
      if (e[i] > 0) {
        if (var >= 0) pure = false;
        var = i;
      }
    if (pure && var >= 0 && (bound[var] < 0 || e[var] < bound[var]))
      bound[var] = e[var];
  }
  long box = 1;
  for (long i = 0; i < n; ++i) {
    if (bound[i] < 0) return std::nullopt;  // positive-dimensional
    box *= bound[i];
    if (box > 100000) return std::nullopt;
  }
  // count standard monomials (box minus those under some leading term)
  long D = 0;
  Expo e(n, 0);
  while (true) {
    bool standard = true;
    for (auto& f : g)
      if (gbdetail::expo_divides(f.lead().first, e)) {
        standard = false;
        break;
      }
    if (standard) ++D;
    long i = 0;
    for (; i < n; ++i) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
    }
    if (i == n) break;
  }
  MPoly<C> h = p;
  h.order = I.order;
  h.aux_block = I.aux_block;
  h = normal_form(h, g);
  for (long exp = 1; exp < D && !h.is_zero(); exp *= 2)
    h = normal_form(h * h, g);
  return h.is_zero();
}

// Rabinowitsch: p in sqrt(I)  <=>  1 in I + (1 - y*p).
template <class C>
bool radical_member(const MPoly<C>& p, const IdealT<C>& I) {
  if (p.is_zero()) return true;
  if (auto fast = radical_member_zerodim(p, I)) return *fast;
  IdealT<C> J;
  J.nvars = I.nvars + 1;
  J.order = TermOrder::Grevlex;
  for (auto& g : I.gens) lift_into(J, g);
  MPoly<C> yp = lift_poly(p, J.nvars, J.order);
  const C& c0 = p.terms.begin()->second;
  C one = c0 / c0;
  MPoly<C> y = MPoly<C>::var(J.nvars, J.nvars - 1, one, J.order);
  J.gens.push_back(MPoly<C>::constant(J.nvars, one, J.order) - y * yp);
  return ideal_is_unit(J);
}

template <class C>
void lift_into(IdealT<C>& J, const MPoly<C>& g) {
  J.gens.push_back(lift_poly(g, J.nvars, J.order, J.aux_block));
}

// Krull dimension via maximal independent variable subsets modulo the
// initial ideal; nullopt (= -infinity) for the unit ideal.
template <class C>
std::optional<long> ideal_dim(const IdealT<C>& I) {
  auto& g = groebner(I);
  if (ideal_is_unit(I)) return std::nullopt;
  long n = I.nvars;
  std::vector<Expo> leads;
  for (auto& p : g) leads.push_back(p.lead().first);
  long best = 0;
  for (long mask = 0; mask < (1L << n); ++mask) {
    bool independent = true;
    for (auto& e : leads) {
      bool inside = true;
      for (long i = 0; i < n && inside; ++i)
        if (e[i] > 0 && !((mask >> i) & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<long>(best, __builtin_popcountl(mask));
  }
  return best;
}

// I : f^infinity via elimination of the auxiliary variable from
// I + (y*f - 1) under an elimination order.
template <class C>
IdealT<C> saturate(const IdealT<C>& I, const MPoly<C>& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  IdealT<C> J;
  J.nvars = I.nvars + 1;
  J.order = TermOrder::ElimLast;
  J.aux_block = 1;
  for (auto& g : I.gens) lift_into(J, g);
  MPoly<C> fl = lift_poly(f, J.nvars, J.order, 1);
  const C& c0 = f.terms.begin()->second;
  C one = c0 / c0;
  MPoly<C> y = MPoly<C>::var(J.nvars, J.nvars - 1, one, J.order);
  y.aux_block = 1;
  J.gens.push_back(y * fl - MPoly<C>::constant(J.nvars, one, J.order));
  IdealT<C> R;
  R.nvars = I.nvars;
  R.order = I.order;
  R.aux_block = I.aux_block;
  for (auto& g : groebner(J)) {
    bool uses_y = false;
    for (auto& [e, c] : g.terms)
      if (e[J.nvars - 1] > 0) uses_y = true;
    if (uses_y) continue;
    MPoly<C> p(I.nvars, I.order);
    p.aux_block = I.aux_block;
    for (auto& [e, c] : g.terms)
      p.terms.emplace(Expo(e.begin(), e.begin() + I.nvars), c);
    R.gens.push_back(std::move(p));
  }
  if (R.gens.empty()) R.gens.push_back(MPoly<C>(I.nvars, I.order));
  return R;
}

// prod_{zeta primitive k-th} (M - zeta N) for monomials M, N: the
// homogenization N^phi(k) * Phi_k(M/N), rational coefficients.
QPoly special_poly(const Expo& M, const Expo& N, long k);

// (I_g, J_g) for a torsion tuple g.  I_g lives in n+1 variables: the last
// one is an auxiliary t with Phi_m(t) adjoined representing the cyclotomic
// coefficients; membership of rational polynomials in n variables is tested
// after lifting.  J_g lives in n variables over Q.
std::pair<Ideal, Ideal> type_ideals(const std::vector<RootOfUnity>& g);

// Membership of an n-variable rational polynomial in I_g as returned above.
bool type_ideal_member(const QPoly& p, const Ideal& Ig);

}  // namespace charkit
