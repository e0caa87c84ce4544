#include "charkit/ideal.hpp"

#include <numeric>

#include "charkit/units.hpp"

namespace charkit {

GroebnerLimits groebner_limits;

QPoly special_poly(const Expo& M, const Expo& N, long k) {
  if (k < 1) throw std::invalid_argument("special_poly: k >= 1 required");
  if (M.size() != N.size()) throw std::invalid_argument("monomial arity");
  long n = (long)M.size();
  const std::vector<Int>& phi = cyclotomic_coeffs(k);
  long d = (long)phi.size() - 1;  // = euler_phi(k)
  QPoly r(n);
  for (long i = 0; i <= d; ++i) {
    if (phi[i] == 0) continue;
    Expo e(n);
    for (long v = 0; v < n; ++v) e[v] = i * M[v] + (d - i) * N[v];
    r.add_term(e, Rat(phi[i]));
  }
  return r;
}

std::pair<Ideal, Ideal> type_ideals(const std::vector<RootOfUnity>& g) {
  long n = (long)g.size();
  if (n == 0) throw std::invalid_argument("type_ideals: empty tuple");
  long m = 1;
  for (auto& z : g) m = std::lcm(m, z.order());

  // I_g: vanishing ideal of g over Q(zeta_m), realized in Q[x_1..x_n, t]
  // with Phi_m(t) adjoined: generators x_i - t^{a_i}, g_i = zeta_m^{a_i}.
  // lex with t last: the generators' leads x_1..x_n, t^phi(m) are pairwise
  // coprime, so this generating set is already a Groebner basis and
  // membership is plain rewriting x_i -> t^{a_i} mod Phi_m.
  Ideal I;
  I.nvars = n + 1;
  I.order = TermOrder::Lex;
  for (long i = 0; i < n; ++i) {
    long a = to_long(Int(g[i].num) * (m / g[i].den) % m);
    QPoly p(I.nvars);
    Expo xi(I.nvars, 0), ta(I.nvars, 0);
    xi[i] = 1;
    ta[n] = (int)a;
    p.add_term(xi, Rat(1));
    p.add_term(ta, Rat(-1));
    I.gens.push_back(std::move(p));
  }
  {
    const std::vector<Int>& phi = cyclotomic_coeffs(m);
    QPoly p(I.nvars);
    for (long i = 0; i < (long)phi.size(); ++i) {
      if (phi[i] == 0) continue;
      Expo e(I.nvars, 0);
      e[n] = (int)i;
      p.add_term(e, Rat(phi[i]));
    }
    I.gens.push_back(std::move(p));
  }

  // J_g: special polynomials from the primitive vectors of an HNF basis of
  // the relation lattice of g.
  Ideal J;
  J.nvars = n;
  std::vector<Unit> units(g.begin(), g.end());
  IntMatrix L = relation_lattice(units);
  for (long r = 0; r < L.rows; ++r) {
    Int d = 0;
    for (long j = 0; j < n; ++j) d = gcd(d, L.at(r, j));
    if (d == 0) continue;
    Expo M(n), N(n);
    Cyclo acc = Cyclo::one();
    for (long j = 0; j < n; ++j) {
      long w = to_long(L.at(r, j) / d);
      if (w > 0)
        M[j] = (int)w;
      else
        N[j] = (int)(-w);
      acc = acc * Cyclo::root(g[j].num * w, g[j].den);
    }
    auto ru = acc.as_root_of_unity();
    if (!ru) throw std::logic_error("type_ideals: g^w not torsion");
    J.gens.push_back(special_poly(M, N, ru->order()));
  }
  return {std::move(I), std::move(J)};
}

bool type_ideal_member(const QPoly& p, const Ideal& Ig) {
  return ideal_member(lift_poly(p, Ig.nvars, Ig.order, Ig.aux_block), Ig);
}

}  // namespace charkit
