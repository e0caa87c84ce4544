#include "charkit/mann.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace charkit {

long mann_arity_budget = 4;

long d_bound(long n) {
  if (n < 1) throw std::invalid_argument("d_bound: n >= 1 required");
  long d = 1;
  for (long q = 2; q <= n + 1; ++q) {
    bool prime = q >= 2;
    for (long t = 2; t * t <= q; ++t)
      if (q % t == 0) prime = false;
    if (prime) d *= q;
  }
  return d;
}

namespace {

// Row j = coefficients of x^j mod Phi_L, length phi(L); exact integer
// arithmetic in long long (small L only).
std::vector<std::vector<long long>> cyclo_rows(long L) {
  if (L < 1 || L > 3000) throw std::runtime_error("cyclotomic table bound");
  const std::vector<Int>& phi = cyclotomic_coeffs(L);
  long d = (long)phi.size() - 1;
  std::vector<long long> f(d);
  for (long i = 0; i < d; ++i) f[i] = to_long(phi[i]);  // monic tail
  std::vector<std::vector<long long>> rows(L, std::vector<long long>(d, 0));
  std::vector<long long> cur(d, 0);
  cur[0] = 1;
  for (long j = 0; j < L; ++j) {
    rows[j] = cur;
    long long top = d > 0 ? cur[d - 1] : 0;
    for (long i = d - 1; i > 0; --i) cur[i] = cur[i - 1] - top * f[i];
    if (d > 0) cur[0] = -top * f[0];
  }
  return rows;
}

bool is_zero_vec(const std::vector<long long>& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

MannSolutionSet mann_solve(const std::vector<Rat>& c) {
  long n = (long)c.size();
  if (n < 1) throw std::invalid_argument("mann_solve: empty equation");
  if (n > mann_arity_budget)
    throw std::runtime_error("mann_solve: arity budget exceeded");
  for (auto& q : c)
    if (q == 0) throw std::invalid_argument("mann_solve: zero coefficient");
  long d = d_bound(n);
  auto rows = cyclo_rows(d);
  long phi = (long)rows[0].size();
  Int D = 1;
  for (auto& q : c) D = lcm(D, Int(q.get_den()));
  std::vector<long long> ci(n);
  for (long i = 0; i < n; ++i) ci[i] = to_long(Int(c[i].get_num()) * (D / c[i].get_den()));
  long long Dl = to_long(D);

  MannSolutionSet out;
  out.bound_used = d;
  std::vector<long> e(n);
  std::vector<std::vector<long long>> partial(n + 1,
                                              std::vector<long long>(phi, 0));
  for (long j = 0; j < phi; ++j) partial[0][j] = -Dl * rows[0][j];

  std::function<void(long)> rec = [&](long depth) {
    if (depth == n) {
      if (!is_zero_vec(partial[n])) return;
      // non-degeneracy: every nonempty proper subsum of c.x is nonzero
      std::vector<std::vector<long long>> v(n);
      for (long i = 0; i < n; ++i) {
        v[i].assign(phi, 0);
        for (long j = 0; j < phi; ++j) v[i][j] = ci[i] * rows[e[i]][j];
      }
      for (long mask = 1; mask + 1 < (1L << n); ++mask) {
        std::vector<long long> s(phi, 0);
        for (long i = 0; i < n; ++i)
          if ((mask >> i) & 1)
            for (long j = 0; j < phi; ++j) s[j] += v[i][j];
        if (is_zero_vec(s)) return;
      }
      std::vector<RootOfUnity> sol;
      for (long i = 0; i < n; ++i) sol.emplace_back(e[i], d);
      out.solutions.push_back(std::move(sol));
      return;
    }
    for (long k = 0; k < d; ++k) {
      e[depth] = k;
      for (long j = 0; j < phi; ++j)
        partial[depth + 1][j] = partial[depth][j] + ci[depth] * rows[k][j];
      rec(depth + 1);
    }
  };
  rec(0);
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const std::vector<RootOfUnity>& a,
               const std::vector<RootOfUnity>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end());
            });
  return out;
}

namespace {

bool unit_is_torsion(const Unit& u) {
  if (std::holds_alternative<RootOfUnity>(u)) return true;
  if (auto* q = std::get_if<Rat>(&u)) return *q == 1 || *q == -1;
  if (auto* f = std::get_if<FormalUnit>(&u)) return f->order > 0;
  return false;  // FqElem handled separately
}

// g in <H> . U : the cyclic relation lattice of g over H is (1).
bool in_group_mod_torsion(const Unit& g, const std::vector<Unit>& H) {
  IntMatrix h = relation_lattice({g}, H);
  return h.rows > 0 && h.at(0, 0) == 1;
}

}  // namespace

GenericityResult genericity_check(const std::vector<Unit>& G,
                                  const std::vector<Unit>& H, CoeffField) {
  for (auto& u : G)
    if (std::holds_alternative<FqElem>(u))
      throw std::invalid_argument(
          "genericity_check: finite-field units unsupported");
  // precondition mcl(H) n G = H, modulo torsion
  for (auto& g : G) {
    if (unit_is_torsion(g)) continue;
    if (mcl_member(g, H) && !in_group_mod_torsion(g, H))
      throw std::invalid_argument(
          "genericity_check: precondition mcl(H) n G = H violated");
  }
  GenericityResult res;
  for (auto& g : G) {
    if (unit_is_torsion(g)) continue;
    if (!H.empty() && in_group_mod_torsion(g, H)) continue;
    if (auto* f = std::get_if<FormalUnit>(&g)) {
      if (f->transcendental) continue;
      throw std::invalid_argument(
          "genericity_check: formal unit of undeclared transcendence");
    }
    // a multiplicatively independent algebraic unit of infinite order
    res.generic = false;
    res.witness = g;
    return res;
  }
  return res;
}

bool axiom_instance(const CharContext& ctx, long n,
                    const std::vector<std::vector<Rat>>& pool, long n_max,
                    std::vector<RootOfUnity>* witness) {
  if (n < 1 || n_max < 1) throw std::invalid_argument("axiom_instance: arity");
  if (n > mann_arity_budget)
    throw std::runtime_error("axiom_instance: arity budget exceeded");
  long p = ctx.p;
  long L = 1;
  for (long m = 0; m < n_max; ++m) {
    if (L > fq_max_size / p) throw std::runtime_error("axiom_instance: field bound");
    L *= p;
  }
  L -= 1;
  // exponents e with ord(zeta_L^e) dividing p^m - 1 for some m <= n_max
  std::vector<long> allowed;
  {
    std::vector<long> qm1;
    long q = 1;
    for (long m = 1; m <= n_max; ++m) {
      q *= p;
      qm1.push_back(q - 1);
    }
    for (long e = 0; e < L; ++e) {
      long ord = L / std::gcd(L, e == 0 ? L : e);
      for (long v : qm1)
        if (v % ord == 0) {
          allowed.push_back(e);
          break;
        }
    }
  }
  double work = 1;
  for (long i = 0; i < n; ++i) work *= (double)allowed.size();
  if (work > 5e7) throw std::runtime_error("axiom_instance: budget exceeded");
  auto rows = cyclo_rows(L);
  long phi = (long)rows[0].size();
  long d = d_bound(n);

  bool ok = true;
  for (auto& c : pool) {
    if ((long)c.size() != n)
      throw std::invalid_argument("axiom_instance: coefficient arity");
    Int D = 1;
    for (auto& q : c) D = lcm(D, Int(q.get_den()));
    std::vector<long long> ci(n);
    for (long i = 0; i < n; ++i)
      ci[i] = to_long(Int(c[i].get_num()) * (D / c[i].get_den()));
    long long Dl = to_long(D);
    std::vector<long> e(n);
    std::vector<std::vector<long long>> partial(
        n + 1, std::vector<long long>(phi, 0));
    for (long j = 0; j < phi; ++j) partial[0][j] = -Dl * rows[0][j];
    std::function<bool(long)> rec = [&](long depth) -> bool {
      if (depth == n) {
        if (!is_zero_vec(partial[n])) return true;
        std::vector<std::vector<long long>> v(n);
        for (long i = 0; i < n; ++i) {
          v[i].assign(phi, 0);
          for (long j = 0; j < phi; ++j) v[i][j] = ci[i] * rows[e[i]][j];
        }
        for (long mask = 1; mask + 1 < (1L << n); ++mask) {
          std::vector<long long> s(phi, 0);
          for (long i = 0; i < n; ++i)
            if ((mask >> i) & 1)
              for (long j = 0; j < phi; ++j) s[j] += v[i][j];
          if (is_zero_vec(s)) return true;  // degenerate
        }
        for (long i = 0; i < n; ++i)
          if ((Int(e[i]) * d) % L != 0) {
            if (witness) {
              witness->clear();
              for (long t = 0; t < n; ++t) witness->emplace_back(e[t], L);
            }
            return false;
          }
        return true;
      }
      for (long k : allowed) {
        e[depth] = k;
        for (long j = 0; j < phi; ++j)
          partial[depth + 1][j] = partial[depth][j] + ci[depth] * rows[k][j];
        if (!rec(depth + 1)) return false;
      }
      return true;
    };
    if (!rec(0)) ok = false;
    if (!ok) return false;
  }
  return ok;
}

namespace {

// c = q * zeta for rational q and a root of unity zeta; throws otherwise.
std::pair<Rat, RootOfUnity> split_coefficient(const Cyclo& c) {
  if (c.is_zero())
    throw std::invalid_argument("char_pullback: zero coefficient");
  long m = c.conductor();
  long L = std::lcm(2L, m);
  for (long j = 0; j < L; ++j) {
    Cyclo t = c * Cyclo::root(j, L);
    if (t.is_rat()) return {t.rat_value(), RootOfUnity(L - j, L)};
  }
  throw std::invalid_argument(
      "char_pullback: coefficient outside supported form (not q*zeta)");
}

bool fpoly_less(const FPoly& a, const FPoly& b) {
  if (a.terms.size() != b.terms.size())
    return a.terms.size() < b.terms.size();
  auto ia = a.terms.begin(), ib = b.terms.begin();
  for (; ia != a.terms.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (!(ia->second == ib->second)) return ia->second < ib->second;
  }
  return false;
}

bool is_nonzero_constant(const FPoly& g) {
  return g.terms.size() == 1 && total_deg(g.terms.begin()->first) == 0;
}

// Z(a) subseteq Z(b): every generator of b is in the radical of (a).
bool piece_contains(const std::vector<FPoly>& b, const std::vector<FPoly>& a,
                    long k) {
  IdealT<FqElem> I;
  I.nvars = k;
  I.gens = a;
  for (auto& g : b)
    if (!radical_member(g, I)) return false;
  return true;
}

}  // namespace

std::vector<FPoly> char_pullback(const CharContext& ctx,
                                 const std::vector<CPoly>& P, long k) {
  long p = ctx.p;
  std::vector<FPoly> Q;
  FqElem one = fq_one(p);
  for (auto& poly : P) {
    if (poly.nvars != k)
      throw std::invalid_argument("char_pullback: arity mismatch");
    if (poly.is_zero()) continue;
    long T = (long)poly.terms.size();
    if (T > 8) throw std::runtime_error("char_pullback: term budget exceeded");
    std::vector<Expo> mono(T);
    std::vector<Rat> qc(T);
    std::vector<RootOfUnity> zc(T);
    {
      long t = 0;
      for (auto& [e, c] : poly.terms) {
        mono[t] = e;
        auto [q, z] = split_coefficient(c);
        qc[t] = q;
        zc[t] = z;
        ++t;
      }
    }
    // enumerate set partitions of the term index set
    std::vector<std::vector<FPoly>> pieces;
    std::vector<std::vector<long>> groups;
    std::function<void()> emit = [&]() {
      // per-group generator alternatives; cartesian product -> pieces
      std::vector<std::vector<std::vector<FPoly>>> alts;  // group -> choices
      for (auto& g : groups) {
        if (g.size() == 1) {
          long t = g[0];
          if (total_deg(mono[t]) == 0) return;  // constant cannot vanish
          alts.push_back({{FPoly::monomial(k, mono[t], one)}});
          continue;
        }
        long t0 = g[0];
        long r = (long)g.size() - 1;
        std::vector<Rat> c(r);
        for (long l = 1; l <= r; ++l) c[l - 1] = -qc[g[l]] / qc[t0];
        MannSolutionSet sols = mann_solve(c);
        std::vector<std::vector<FPoly>> choice;
        for (auto& x : sols.solutions) {
          bool good = true;
          std::vector<FPoly> gens;
          for (long l = 1; l <= r && good; ++l) {
            RootOfUnity tl = x[l - 1] * zc[t0] * zc[g[l]].inverse();
            if (tl.order() % p == 0) {
              good = false;
              break;
            }
            auto a = chi_preimage(ctx, tl);
            FPoly b(k);
            b.add_term(mono[g[l]], one);
            b.add_term(mono[t0], -*a);
            if (is_nonzero_constant(b)) good = false;
            gens.push_back(std::move(b));
          }
          if (good) choice.push_back(std::move(gens));
        }
        if (choice.empty()) return;  // group cannot vanish
        alts.push_back(std::move(choice));
      }
      // cartesian product over groups
      std::vector<std::vector<FPoly>> acc = {{}};
      for (auto& choice : alts) {
        std::vector<std::vector<FPoly>> next;
        for (auto& base : acc)
          for (auto& sel : choice) {
            auto piece = base;
            piece.insert(piece.end(), sel.begin(), sel.end());
            next.push_back(std::move(piece));
          }
        acc = std::move(next);
        if (acc.size() > 500)
          throw std::runtime_error("char_pullback: piece budget exceeded");
      }
      for (auto& piece : acc) pieces.push_back(std::move(piece));
    };
    std::function<void(long)> part = [&](long t) {
      if (t == T) {
        emit();
        return;
      }
      // index access: the recursive call appends to groups and may
      // reallocate, so references into it do not survive
      for (size_t gi = 0; gi < groups.size(); ++gi) {
        groups[gi].push_back(t);
        part(t + 1);
        groups[gi].pop_back();
      }
      groups.push_back({t});
      part(t + 1);
      groups.pop_back();
    };
    part(0);
    // canonicalize pieces and drop redundant ones
    for (auto& piece : pieces) std::sort(piece.begin(), piece.end(), fpoly_less);
    std::sort(pieces.begin(), pieces.end(),
              [](const std::vector<FPoly>& a, const std::vector<FPoly>& b) {
                return std::lexicographical_compare(a.begin(), a.end(),
                                                    b.begin(), b.end(),
                                                    fpoly_less);
              });
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    std::vector<bool> alive(pieces.size(), true);
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (!alive[i]) continue;
      for (auto& g : pieces[i])
        if (is_nonzero_constant(g)) alive[i] = false;
    }
    for (size_t i = 0; i < pieces.size(); ++i) {
      if (!alive[i]) continue;
      for (size_t j = 0; j < pieces.size(); ++j) {
        if (i == j || !alive[j] || !alive[i]) continue;
        if (piece_contains(pieces[j], pieces[i], k)) {
          // Z(i) subseteq Z(j); on mutual containment keep the smaller index
          if (piece_contains(pieces[i], pieces[j], k) && j > i)
            alive[j] = false;
          else
            alive[i] = false;
        }
      }
    }
    std::vector<std::vector<FPoly>> live;
    for (size_t i = 0; i < pieces.size(); ++i)
      if (alive[i]) live.push_back(pieces[i]);
    if (live.empty()) return {FPoly::constant(k, one)};  // empty pullback
    // union of pieces: products of one generator per piece.  The raw
    // product count is prod_i |live[i]|, so interreduce with a Groebner
    // basis (same ideal, same zero set) whenever the running set grows.
    std::vector<FPoly> gens = live[0];
    for (size_t i = 1; i < live.size(); ++i) {
      std::vector<FPoly> next;
      for (auto& a : gens)
        for (auto& b : live[i]) next.push_back(a * b);
      if (next.size() > 2000)
        throw std::runtime_error("char_pullback: generator budget exceeded");
      gens = std::move(next);
      if (gens.size() > 64)
        gens = groebner_basis(gens, TermOrder::Grevlex, 0, k);
    }
    for (auto& g : gens) {
      FqElem lc = g.lead().second;
      Q.push_back(g.scaled(lc.inverse()));
    }
  }
  std::sort(Q.begin(), Q.end(), fpoly_less);
  Q.erase(std::unique(Q.begin(), Q.end()), Q.end());
  return Q;
}

}  // namespace charkit
