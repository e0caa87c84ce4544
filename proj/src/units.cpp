#include "charkit/units.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace charkit {

long unit_factor_bound = 1000000;

std::string unit_str(const Unit& u) {
  if (auto* r = std::get_if<RootOfUnity>(&u)) return r->str();
  if (auto* f = std::get_if<FqElem>(&u)) return f->str();
  if (auto* q = std::get_if<Rat>(&u)) return rat_str(*q);
  return std::get<FormalUnit>(u).name;
}

namespace {

// kernel of v -> v * G modulo the row span of B, projected to v; HNF basis
IntMatrix lattice_modulo(const IntMatrix& G, const IntMatrix& B) {
  long n = G.rows, h = B.rows, d = G.cols;
  IntMatrix st(n + h, d);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < d; ++j) st.at(i, j) = G.at(i, j);
  for (long i = 0; i < h; ++i)
    for (long j = 0; j < d; ++j) st.at(n + i, j) = B.at(i, j);
  IntMatrix k = left_kernel(st);
  IntMatrix proj(k.rows, n);
  for (long i = 0; i < k.rows; ++i)
    for (long j = 0; j < n; ++j) proj.at(i, j) = k.at(i, j);
  return hnf(proj);
}

IntMatrix torsion_lattice(const std::vector<Unit>& g,
                          const std::vector<Unit>& H) {
  long M = 1;
  for (auto& u : g) M = std::lcm(M, std::get<RootOfUnity>(u).order());
  for (auto& u : H) M = std::lcm(M, std::get<RootOfUnity>(u).order());
  Int g0 = M;
  for (auto& u : H) {
    auto& r = std::get<RootOfUnity>(u);
    g0 = gcd(g0, Int(r.num * (M / r.den)));
  }
  if (g0 == 0) g0 = M;
  std::vector<Int> a;
  for (auto& u : g) {
    auto& r = std::get<RootOfUnity>(u);
    a.emplace_back(r.num * (M / r.den));
  }
  return kernel_mod(a, g0);
}

IntMatrix fq_lattice(const std::vector<Unit>& g, const std::vector<Unit>& H) {
  long p = std::get<FqElem>(g[0]).p;
  long N = 1;
  for (auto& u : g) {
    auto& e = std::get<FqElem>(u);
    if (e.p != p) throw std::invalid_argument("mixed characteristics");
    if (e.is_zero()) throw std::invalid_argument("zero is not a unit");
    N = std::lcm(N, e.n);
  }
  for (auto& u : H) {
    auto& e = std::get<FqElem>(u);
    if (e.p != p) throw std::invalid_argument("mixed characteristics");
    N = std::lcm(N, e.n);
  }
  long Q1 = 1;
  for (long i = 0; i < N; ++i) Q1 *= p;
  Q1 -= 1;
  auto amb_dlog = [&](const FqElem& e) {
    long qm1 = 1;
    for (long i = 0; i < e.n; ++i) qm1 *= p;
    qm1 -= 1;
    return to_long(fq_dlog(e)) * (Q1 / qm1);
  };
  Int g0 = Q1;
  for (auto& u : H) g0 = gcd(g0, Int(amb_dlog(std::get<FqElem>(u))));
  if (g0 == 0) g0 = Q1;
  std::vector<Int> a;
  for (auto& u : g) a.emplace_back(amb_dlog(std::get<FqElem>(u)));
  return kernel_mod(a, g0);
}

// signed rational -> exponent vector over an indexed prime list + sign slot
void rat_exponents(const Rat& q, std::map<long, long>& primes_out) {
  for (Int part : {Int(q.get_num()), Int(q.get_den())}) {
    Int v = abs(part);
    for (long d = 2; d <= unit_factor_bound && Int(d) * d <= v; ++d)
      while (v % d == 0) {
        primes_out[d];
        v /= d;
      }
    if (v > unit_factor_bound)
      throw std::invalid_argument("rational unit beyond factor bound");
    if (v > 1) primes_out[to_long(v)];
  }
}

std::vector<Int> rat_vector(const Rat& q, const std::map<long, long>& idx) {
  std::vector<Int> v(idx.size() + 1);
  const Int parts[2] = {Int(q.get_num()), Int(q.get_den())};
  for (int k = 0; k < 2; ++k) {
    long sgn = k == 0 ? 1 : -1;
    Int w = abs(parts[k]);
    for (auto& [pr, col] : idx)
      while (w % pr == 0) {
        v[col] += sgn;
        w /= pr;
      }
  }
  v[idx.size()] = q < 0 ? 1 : 0;
  return v;
}

IntMatrix rat_lattice(const std::vector<Unit>& g, const std::vector<Unit>& H) {
  std::map<long, long> primes;
  for (auto& u : g) {
    if (std::get<Rat>(u) == 0) throw std::invalid_argument("zero is not a unit");
    rat_exponents(std::get<Rat>(u), primes);
  }
  for (auto& u : H) rat_exponents(std::get<Rat>(u), primes);
  long col = 0;
  for (auto& [p, c] : primes) c = col++;
  long d = (long)primes.size() + 1;
  IntMatrix G((long)g.size(), d), B((long)H.size() + 1, d);
  for (long i = 0; i < (long)g.size(); ++i) {
    auto v = rat_vector(std::get<Rat>(g[i]), primes);
    for (long j = 0; j < d; ++j) G.at(i, j) = v[j];
  }
  for (long i = 0; i < (long)H.size(); ++i) {
    auto v = rat_vector(std::get<Rat>(H[i]), primes);
    for (long j = 0; j < d; ++j) B.at(i, j) = v[j];
  }
  B.at((long)H.size(), d - 1) = 2;  // sign has order 2
  return lattice_modulo(G, B);
}

IntMatrix formal_lattice(const std::vector<Unit>& g,
                         const std::vector<Unit>& H) {
  std::map<std::string, std::pair<long, long>> names;  // name -> (col, order)
  auto note = [&](const FormalUnit& f) {
    auto it = names.find(f.name);
    if (it == names.end())
      names.emplace(f.name, std::make_pair((long)0, f.order));
    else if (it->second.second != f.order)
      throw std::invalid_argument("inconsistent formal unit declaration: " +
                                  f.name);
  };
  for (auto& u : g) note(std::get<FormalUnit>(u));
  for (auto& u : H) note(std::get<FormalUnit>(u));
  long col = 0;
  for (auto& [nm, pc] : names) pc.first = col++;
  long d = (long)names.size();
  long torsion_rows = 0;
  for (auto& [nm, pc] : names)
    if (pc.second > 0) ++torsion_rows;
  IntMatrix G((long)g.size(), d), B((long)H.size() + torsion_rows, d);
  for (long i = 0; i < (long)g.size(); ++i) {
    auto& f = std::get<FormalUnit>(g[i]);
    G.at(i, names.at(f.name).first) = 1;
  }
  for (long i = 0; i < (long)H.size(); ++i) {
    auto& f = std::get<FormalUnit>(H[i]);
    B.at(i, names.at(f.name).first) = 1;
  }
  long r = (long)H.size();
  for (auto& [nm, pc] : names)
    if (pc.second > 0) B.at(r++, pc.first) = pc.second;
  return lattice_modulo(G, B);
}

}  // namespace

IntMatrix relation_lattice(const std::vector<Unit>& g,
                           const std::vector<Unit>& H) {
  if (g.empty()) return IntMatrix(0, 0);
  size_t kind = g[0].index();
  for (auto& u : g)
    if (u.index() != kind)
      throw std::invalid_argument("incomparable unit kinds in tuple");
  for (auto& u : H)
    if (u.index() != kind)
      throw std::invalid_argument("incomparable unit kinds in tuple");
  switch (kind) {
    case 0:
      return torsion_lattice(g, H);
    case 1:
      return fq_lattice(g, H);
    case 2:
      return rat_lattice(g, H);
    default:
      return formal_lattice(g, H);
  }
}

bool is_mult_independent(const std::vector<Unit>& g,
                         const std::vector<Unit>& B) {
  return relation_lattice(g, B).rows == 0;
}

bool mcl_member(const Unit& a, const std::vector<Unit>& A,
                const std::vector<Unit>& B) {
  std::vector<Unit> all;
  all.push_back(a);
  all.insert(all.end(), A.begin(), A.end());
  all.insert(all.end(), B.begin(), B.end());
  IntMatrix h = relation_lattice(all);
  return h.rows > 0 && h.at(0, 0) != 0;
}

std::vector<Unit> mult_basis(const std::vector<Unit>& A,
                             const std::vector<Unit>& B) {
  std::vector<Unit> chosen;
  for (auto& a : A)
    if (!mcl_member(a, chosen, B)) chosen.push_back(a);
  return chosen;
}

}  // namespace charkit
