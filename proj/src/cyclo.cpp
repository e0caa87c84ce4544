#include "charkit/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charkit {

long Cyclo::max_conductor = 1260;

RootOfUnity::RootOfUnity(long a, long m) {
  if (m < 1) throw std::invalid_argument("root of unity: modulus < 1");
  a %= m;
  if (a < 0) a += m;
  long g = std::gcd(a, m);
  num = a / g;
  den = m / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  long m = std::lcm(den, o.den);
  return RootOfUnity(num * (m / den) + o.num * (m / o.den), m);
}

RootOfUnity RootOfUnity::pow(long k) const {
  // num*k may overflow for huge k; desk-scale orders keep this safe
  long r = ((num % den) * (k % den)) % den;
  return RootOfUnity(r, den);
}

bool RootOfUnity::operator<(const RootOfUnity& o) const {
  // by argument a/m as a fraction, so output ordering is circle order
  return num * o.den < o.num * den;
}

std::string RootOfUnity::str() const {
  std::ostringstream os;
  os << "z(" << num << "/" << den << ")";
  return os.str();
}

long euler_phi(long m) {
  long r = m;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

std::mutex cache_mu;

// exact division of integer polynomials, a / b with b monic-leading
std::vector<Int> zpoly_div_exact(const std::vector<Int>& a,
                                 const std::vector<Int>& b) {
  std::vector<Int> r = a;
  long db = (long)b.size() - 1;
  long dq = (long)r.size() - 1 - db;
  std::vector<Int> q(dq + 1);
  for (long i = dq; i >= 0; --i) {
    Int c = r[i + db] / b[db];
    q[i] = c;
    for (long j = 0; j <= db; ++j) r[i + j] -= c * b[j];
  }
  for (auto& x : r)
    if (x != 0) throw std::logic_error("inexact cyclotomic division");
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_coeffs(long k) {
  static std::map<long, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lk(cache_mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  // iterative: for d ascending, Phi_d = (x^d - 1) / prod_{e|d, e<d} Phi_e
  for (long d = 1; d <= k; ++d) {
    if (k % d != 0 || cache.count(d)) continue;
    std::vector<Int> num(d + 1);
    num[0] = -1;
    num[d] = 1;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) num = zpoly_div_exact(num, cache.at(e));
    cache.emplace(d, std::move(num));
  }
  return cache.at(k);
}

QPoly cyclotomic_poly(long k) {
  const auto& c = cyclotomic_coeffs(k);
  QPoly p(1);
  for (long i = 0; i < (long)c.size(); ++i)
    if (c[i] != 0) p.add_term({(int)i}, Rat(c[i]));
  return p;
}

namespace {

// Representation of zeta_m^j (0 <= j < m) in the basis {zeta_m^i : i<phi(m)},
// as integer vectors (the coefficients are always integers).
const std::vector<std::vector<Int>>& power_table(long m) {
  static std::map<long, std::vector<std::vector<Int>>> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  long phi = euler_phi(m);
  const auto& cp = cyclotomic_coeffs(m);
  std::vector<std::vector<Int>> tab(m, std::vector<Int>(phi));
  for (long j = 0; j < phi; ++j) tab[j][j] = 1;
  for (long j = phi; j < m; ++j) {
    // x^j = x * x^(j-1); reduce the overflow of degree phi via Phi_m
    std::vector<Int> v(phi + 1);
    for (long i = 0; i < phi; ++i) v[i + 1] = tab[j - 1][i];
    if (v[phi] != 0) {
      Int top = v[phi];
      for (long i = 0; i < phi; ++i) v[i] -= top * cp[i];
    }
    for (long i = 0; i < phi; ++i) tab[j][i] = v[i];
  }
  std::lock_guard<std::mutex> lk(cache_mu);
  return cache.emplace(m, std::move(tab)).first->second;
}

// dense rational univariate helpers for inversion mod Phi_m
void rpoly_trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> rpoly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  while ((long)a.size() >= (long)b.size() && !b.empty()) {
    Rat c = a.back() / b.back();
    long off = a.size() - b.size();
    for (long j = 0; j < (long)b.size(); ++j) a[off + j] -= c * b[j];
    rpoly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

Cyclo Cyclo::from_rat(const Rat& q) { return Cyclo(1, {q}); }

Cyclo Cyclo::root(long a, long m) {
  RootOfUnity r(a, m);
  long phi = euler_phi(r.den);
  std::vector<Rat> c(phi);
  const auto& row = power_table(r.den)[r.num];
  for (long i = 0; i < phi; ++i) c[i] = Rat(row[i]);
  Cyclo x(r.den, std::move(c));
  x.minimize();
  return x;
}

Cyclo Cyclo::reduce(const std::vector<std::pair<Rat, RootOfUnity>>& raw) {
  Cyclo acc;
  for (auto& [q, r] : raw) acc = acc + q * root(r);
  return acc;
}

bool Cyclo::is_zero() const {
  for (auto& q : c_)
    if (q != 0) return false;
  return true;
}

Rat Cyclo::rat_value() const {
  if (m_ != 1) throw std::logic_error("not rational");
  return c_[0];
}

std::vector<Rat> Cyclo::raised_to(long big) const {
  long phi = euler_phi(big);
  std::vector<Rat> out(phi);
  long step = big / m_;
  const auto& tab = power_table(big);
  for (long i = 0; i < (long)c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& row = tab[(i * step) % big];
    for (long j = 0; j < phi; ++j)
      if (row[j] != 0) out[j] += c_[i] * Rat(row[j]);
  }
  return out;
}

Cyclo Cyclo::make(long m, std::vector<Rat> c) {
  Cyclo x(m, std::move(c));
  x.minimize();
  return x;
}

void Cyclo::minimize() {
  bool changed = true;
  while (changed && m_ > 1) {
    changed = false;
    long m = m_;
    std::vector<long> primes;
    for (long p = 2, t = m; p * p <= t; ++p)
      if (t % p == 0) {
        primes.push_back(p);
        while (t % p == 0) t /= p;
        m = t;
      }
    // recover remaining prime
    {
      long t = m_;
      for (long p : primes)
        while (t % p == 0) t /= p;
      if (t > 1) primes.push_back(t);
    }
    for (long q : primes) {
      long md = m_ / q;
      // try to rewrite in Q(zeta_md); solve A y = c over Q
      long phi = euler_phi(m_), phid = euler_phi(md);
      long step = m_ / md;
      const auto& tab = power_table(m_);
      // columns: zeta_md^j at conductor m_
      std::vector<std::vector<Rat>> A(phi, std::vector<Rat>(phid + 1));
      for (long j = 0; j < phid; ++j) {
        const auto& row = tab[(j * step) % m_];
        for (long i = 0; i < phi; ++i) A[i][j] = Rat(row[i]);
      }
      for (long i = 0; i < phi; ++i) A[i][phid] = c_[i];
      // gaussian elimination on [A | c]
      std::vector<long> pivot_col(phi, -1);
      long r = 0;
      for (long col = 0; col < phid && r < phi; ++col) {
        long pr = -1;
        for (long i = r; i < phi; ++i)
          if (A[i][col] != 0) {
            pr = i;
            break;
          }
        if (pr < 0) continue;
        std::swap(A[pr], A[r]);
        Rat inv = Rat(1) / A[r][col];
        for (long j = col; j <= phid; ++j) A[r][j] *= inv;
        for (long i = 0; i < phi; ++i) {
          if (i == r || A[i][col] == 0) continue;
          Rat f = A[i][col];
          for (long j = col; j <= phid; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col[r] = col;
        ++r;
      }
      bool consistent = true;
      for (long i = r; i < phi; ++i)
        if (A[i][phid] != 0) {
          consistent = false;
          break;
        }
      if (!consistent) continue;
      std::vector<Rat> y(phid);
      for (long i = 0; i < r; ++i) y[pivot_col[i]] = A[i][phid];
      m_ = md;
      c_ = std::move(y);
      changed = true;
      break;
    }
  }
  if (m_ % 4 == 2) throw std::logic_error("conductor normalization failed");
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (m_ == 1 && o.m_ == 1) return from_rat(c_[0] + o.c_[0]);
  long M = std::lcm(m_, o.m_);
  if (M > max_conductor) throw std::runtime_error("conductor bound exceeded");
  std::vector<Rat> a = raised_to(M), b = o.raised_to(M);
  for (long i = 0; i < (long)a.size(); ++i) a[i] += b[i];
  return make(M, std::move(a));
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (m_ == 1 && o.m_ == 1) return from_rat(c_[0] * o.c_[0]);
  if (m_ == 1) return o * *this;
  if (o.m_ == 1) {  // scalar
    if (o.c_[0] == 0) return Cyclo();
    Cyclo r = *this;
    for (auto& q : r.c_) q *= o.c_[0];
    return r;
  }
  long M = std::lcm(m_, o.m_);
  if (M > max_conductor) throw std::runtime_error("conductor bound exceeded");
  std::vector<Rat> a = raised_to(M), b = o.raised_to(M);
  long phi = euler_phi(M);
  const auto& tab = power_table(M);
  std::vector<Rat> out(phi);
  for (long i = 0; i < phi; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < phi; ++j) {
      if (b[j] == 0) continue;
      Rat f = a[i] * b[j];
      const auto& row = tab[(i + j) % M];
      for (long k = 0; k < phi; ++k)
        if (row[k] != 0) out[k] += f * Rat(row[k]);
    }
  }
  return make(M, std::move(out));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (m_ == 1) return from_rat(Rat(1) / c_[0]);
  // extended euclid: s*f + t*Phi_m = 1 in Q[x], f = this
  const auto& cpz = cyclotomic_coeffs(m_);
  std::vector<Rat> phi_poly(cpz.size());
  for (long i = 0; i < (long)cpz.size(); ++i) phi_poly[i] = Rat(cpz[i]);
  std::vector<Rat> r0 = phi_poly, r1(c_);
  rpoly_trim(r1);
  std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // coeffs of f-multiplier
  // invariant: r_i = s_i * f (mod Phi_m)
  while (true) {
    // r0 = q*r1 + r2
    std::vector<Rat> q((long)r0.size() - (long)r1.size() + 1);
    std::vector<Rat> r2 = r0;
    while ((long)r2.size() >= (long)r1.size()) {
      Rat c = r2.back() / r1.back();
      long off = r2.size() - r1.size();
      q[off] = c;
      for (long j = 0; j < (long)r1.size(); ++j) r2[off + j] -= c * r1[j];
      rpoly_trim(r2);
      if (r2.empty()) break;
    }
    // s2 = s0 - q*s1
    std::vector<Rat> s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()));
    for (long i = 0; i < (long)q.size(); ++i) {
      if (q[i] == 0) continue;
      for (long j = 0; j < (long)s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    rpoly_trim(s2);
    if (r2.empty()) {
      // r1 is the gcd; it must be a nonzero constant since Phi_m is
      // irreducible and f != 0 mod Phi_m
      if (r1.size() != 1) throw std::logic_error("non-unit gcd with Phi_m");
      std::vector<Rat> inv = s1;
      for (auto& x : inv) x /= r1[0];
      inv = rpoly_rem(std::move(inv), phi_poly);
      // rebuild as element at conductor m_
      long phi = euler_phi(m_);
      std::vector<Rat> out(phi);
      for (long i = 0; i < (long)inv.size() && i < phi; ++i) out[i] = inv[i];
      return make(m_, std::move(out));
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

Cyclo Cyclo::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclo r = one(), b = *this;
  for (; k; k >>= 1) {
    if (k & 1) r = r * b;
    b = b * b;
  }
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
  return m_ == o.m_ && c_ == o.c_;
}

bool Cyclo::operator<(const Cyclo& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  return c_ < o.c_;
}

std::optional<RootOfUnity> Cyclo::as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  if (m_ == 1) {
    if (c_[0] == 1) return RootOfUnity(0, 1);
    if (c_[0] == -1) return RootOfUnity(1, 2);
    return std::nullopt;
  }
  long bound = std::lcm(2L, m_);  // torsion of Q(zeta_m) is exactly mu_lcm(2,m)
  long order = 0;
  for (long d = 1; d <= bound; ++d) {
    if (bound % d != 0) continue;
    if (pow(d) == one()) {
      order = d;
      break;
    }
  }
  if (order == 0) return std::nullopt;
  for (long e = 0; e < order; ++e) {
    if (std::gcd(e, order) != 1 && order > 1) continue;
    if (*this == root(e, order)) return RootOfUnity(e, order);
  }
  return std::nullopt;
}

std::string Cyclo::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < (long)c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat q = c_[i];
    if (!first) {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    } else {
      first = false;
    }
    if (i == 0) {
      os << q;
    } else if (q == 1) {
      os << "z(" << i << "/" << m_ << ")";
    } else if (q == -1 && first) {
      os << "-z(" << i << "/" << m_ << ")";
    } else {
      os << q << "*z(" << i << "/" << m_ << ")";
    }
  }
  return os.str();
}

}  // namespace charkit
