#include "charkit/fq.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace charkit {

long fq_max_size = 1L << 20;

namespace {

constexpr long kTableLimit = 1L << 16;

long pow_long(long b, long e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> fs;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

// polynomials over Z/p as coefficient vectors, trailing zeros trimmed
using PolyP = std::vector<long>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP pmul(const PolyP& a, const PolyP& b, long p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

PolyP pmod(PolyP a, const PolyP& f, long p) {
  // f monic
  long df = (long)f.size() - 1;
  while ((long)a.size() - 1 >= df) {
    long c = a.back();
    long off = (long)a.size() - 1 - df;
    if (c) {
      for (long j = 0; j <= df; ++j) {
        a[off + j] = (a[off + j] - c * f[j]) % p;
        if (a[off + j] < 0) a[off + j] += p;
      }
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

PolyP pmulmod(const PolyP& a, const PolyP& b, const PolyP& f, long p) {
  return pmod(pmul(a, b, p), f, p);
}

PolyP ppowmod(PolyP base, long e, const PolyP& f, long p) {
  PolyP r = {1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PolyP pgcd(PolyP a, PolyP b, long p) {
  // make monic-leading division work: normalize leading coeff
  auto monic = [p](PolyP v) {
    trim(v);
    if (v.empty()) return v;
    // leading inverse mod p
    long lc = v.back(), inv = 1;
    for (long t = 1; t < p; ++t)
      if (lc * t % p == 1) {
        inv = t;
        break;
      }
    for (auto& x : v) x = x * inv % p;
    return v;
  };
  a = monic(std::move(a));
  b = monic(std::move(b));
  while (!b.empty()) {
    PolyP r = pmod(a, b, p);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return a;
}

PolyP psub(PolyP a, const PolyP& b, long p) {
  a.resize(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] - b[i] % p + p) % p;
  trim(a);
  return a;
}

bool is_irreducible(const PolyP& f, long p) {
  long n = (long)f.size() - 1;
  if (n <= 0) return false;
  // x^(p^n) == x mod f, and gcd(x^(p^(n/d)) - x, f) = 1 for prime d | n
  PolyP xr = pmod({0, 1}, f, p);
  std::vector<PolyP> frob_pows(n + 1);  // x^(p^k) mod f
  frob_pows[0] = xr;
  for (long k = 1; k <= n; ++k)
    frob_pows[k] = ppowmod(frob_pows[k - 1], p, f, p);
  if (!psub(frob_pows[n], xr, p).empty()) return false;
  for (long d : prime_factors(n)) {
    PolyP g = psub(frob_pows[n / d], xr, p);
    PolyP gg = pgcd(f, g, p);
    if ((long)gg.size() - 1 != 0) return false;
  }
  return true;
}

bool is_primitive(const PolyP& f, long p) {
  long n = (long)f.size() - 1;
  long q1 = pow_long(p, n) - 1;
  PolyP x = {0, 1};
  PolyP e = ppowmod(x, q1, f, p);
  if (e != PolyP{1}) return false;
  for (long r : prime_factors(q1)) {
    if (ppowmod(x, q1 / r, f, p) == PolyP{1}) return false;
  }
  return true;
}

struct FieldInfo {
  long p, n, q;
  PolyP conway;  // length n+1
  bool tables = false;
  std::vector<uint32_t> expt;   // k -> code of g^k, size q-1
  std::vector<int64_t> dlog;    // code -> k, -1 for 0
};

long encode(const std::vector<long>& c, long p) {
  long code = 0;
  for (long i = (long)c.size() - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

std::vector<long> decode(long code, long p, long n) {
  std::vector<long> c(n);
  for (long i = 0; i < n; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::mutex fq_mu;
std::map<std::pair<long, long>, PolyP> conway_cache;
std::map<std::pair<long, long>, std::shared_ptr<FieldInfo>> field_cache;

const PolyP& conway_poly_locked(long p, long n);

bool conway_compatible(const PolyP& f, long p, long n) {
  long qn1 = pow_long(p, n) - 1;
  for (long m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    const PolyP& cm = conway_poly_locked(p, m);
    long r = qn1 / (pow_long(p, m) - 1);
    PolyP y = ppowmod({0, 1}, r, f, p);
    // evaluate cm at y mod f
    PolyP acc = {};
    PolyP ypow = {1};
    for (long i = 0; i < (long)cm.size(); ++i) {
      if (cm[i]) {
        PolyP term = ypow;
        for (auto& t : term) t = t * cm[i] % p;
        acc.resize(std::max(acc.size(), term.size()), 0);
        for (size_t j = 0; j < term.size(); ++j) acc[j] = (acc[j] + term[j]) % p;
      }
      if (i + 1 < (long)cm.size()) ypow = pmulmod(ypow, y, f, p);
    }
    trim(acc);
    if (!acc.empty()) return false;
  }
  return true;
}

const PolyP& conway_poly_locked(long p, long n) {
  auto key = std::make_pair(p, n);
  auto it = conway_cache.find(key);
  if (it != conway_cache.end()) return it->second;
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (pow_long(p, n) > fq_max_size)
    throw std::runtime_error("field size beyond supported bound");

  // search in the Conway ordering: tuples (c_{n-1},...,c_0) ascending,
  // with f = x^n + sum_i (-1)^(n-i) c_i x^i
  std::vector<long> cvec(n, 0);
  while (true) {
    PolyP f(n + 1, 0);
    f[n] = 1;
    // a_i = (-1)^(n-i) * c_i
    for (long i = 0; i < n; ++i)
      f[i] = (((n - i) % 2 == 0 ? cvec[i] : -cvec[i]) % p + p) % p;
    if (f[0] != 0 && is_irreducible(f, p) && is_primitive(f, p) &&
        conway_compatible(f, p, n)) {
      return conway_cache.emplace(key, std::move(f)).first->second;
    }
    // next tuple: c_0 is the fastest-moving digit
    long i = 0;
    while (i < n) {
      if (++cvec[i] < p) break;
      cvec[i] = 0;
      ++i;
    }
    if (i == n) throw std::logic_error("no Conway polynomial found");
  }
}

const std::shared_ptr<FieldInfo>& field(long p, long n) {
  std::lock_guard<std::mutex> lk(fq_mu);
  auto key = std::make_pair(p, n);
  auto it = field_cache.find(key);
  if (it != field_cache.end()) return it->second;
  auto fi = std::make_shared<FieldInfo>();
  fi->p = p;
  fi->n = n;
  fi->q = pow_long(p, n);
  fi->conway = conway_poly_locked(p, n);
  if (fi->q <= kTableLimit) {
    fi->tables = true;
    fi->expt.resize(fi->q - 1);
    fi->dlog.assign(fi->q, -1);
    PolyP g = {0, 1};
    if (n == 1) g = {(p - fi->conway[0] % p) % p};  // root of x + a0
    PolyP cur = {1};
    for (long k = 0; k < fi->q - 1; ++k) {
      std::vector<long> cc(n, 0);
      for (size_t i = 0; i < cur.size(); ++i) cc[i] = cur[i];
      long code = encode(cc, p);
      fi->expt[k] = (uint32_t)code;
      fi->dlog[code] = k;
      cur = pmulmod(cur, g, fi->conway, p);
    }
  }
  return field_cache.emplace(key, std::move(fi)).first->second;
}

// dlog of nonzero element (by coeff vector, in field (p,n)); BSGS fallback
long dlog_in(const std::shared_ptr<FieldInfo>& fi, const std::vector<long>& c) {
  if (fi->tables) return (long)fi->dlog[encode(c, fi->p)];
  long q1 = fi->q - 1;
  long m = (long)std::ceil(std::sqrt((double)q1));
  PolyP g = {0, 1};
  if (fi->n == 1) g = {(fi->p - fi->conway[0] % fi->p) % fi->p};
  std::unordered_map<long, long> baby;
  PolyP cur = {1};
  for (long j = 0; j < m; ++j) {
    std::vector<long> cc(fi->n, 0);
    for (size_t i = 0; i < cur.size(); ++i) cc[i] = cur[i];
    baby.emplace(encode(cc, fi->p), j);
    cur = pmulmod(cur, g, fi->conway, fi->p);
  }
  // giant step: g^{-m}
  PolyP gm = ppowmod(g, q1 - m % q1, fi->conway, fi->p);
  PolyP a(c);
  trim(a);
  for (long i = 0; i < m + 1; ++i) {
    std::vector<long> cc(fi->n, 0);
    for (size_t k = 0; k < a.size(); ++k) cc[k] = a[k];
    auto it = baby.find(encode(cc, fi->p));
    if (it != baby.end()) return (i * m + it->second) % q1;
    a = pmulmod(a, gm, fi->conway, fi->p);
  }
  throw std::logic_error("dlog not found");
}

std::vector<long> from_dlog_in(const std::shared_ptr<FieldInfo>& fi, long k) {
  long q1 = fi->q - 1;
  k %= q1;
  if (k < 0) k += q1;
  if (fi->tables) return decode(fi->expt[k], fi->p, fi->n);
  PolyP g = {0, 1};
  if (fi->n == 1) g = {(fi->p - fi->conway[0] % fi->p) % fi->p};
  PolyP r = ppowmod(g, k, fi->conway, fi->p);
  std::vector<long> cc(fi->n, 0);
  for (size_t i = 0; i < r.size(); ++i) cc[i] = r[i];
  return cc;
}

FqElem canonicalize(long p, long n, std::vector<long> c) {
  for (auto& x : c) {
    x %= p;
    if (x < 0) x += p;
  }
  bool zero = std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
  if (zero) return FqElem{p, 1, {0}};
  auto fi = field(p, n);
  // minimal d | n fixed by Frobenius^d
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    PolyP a(c);
    trim(a);
    PolyP fr = a;
    for (long i = 0; i < d; ++i) fr = ppowmod(fr, p, fi->conway, p);
    PolyP aa = a;
    if (fr != aa) continue;
    if (d == n) return FqElem{p, n, std::move(c)};
    long k = dlog_in(fi, c);
    long r = (fi->q - 1) / (pow_long(p, d) - 1);
    if (k % r != 0) throw std::logic_error("subfield dlog mismatch");
    auto fd = field(p, d);
    return FqElem{p, d, from_dlog_in(fd, k / r)};
  }
  return FqElem{p, n, std::move(c)};
}

}  // namespace

const std::vector<long>& conway_poly(long p, long n) {
  std::lock_guard<std::mutex> lk(fq_mu);
  return conway_poly_locked(p, n);
}

bool FqElem::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}
bool FqElem::is_one() const { return n == 1 && c[0] == 1; }

FqElem fq_make(long p, long n, std::vector<long> coeffs) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if ((long)coeffs.size() > n) throw std::invalid_argument("coefficient count");
  coeffs.resize(n, 0);
  if (pow_long(p, n) > fq_max_size)
    throw std::runtime_error("field size beyond supported bound");
  return canonicalize(p, n, std::move(coeffs));
}

FqElem fq_zero(long p) { return FqElem{p, 1, {0}}; }
FqElem fq_one(long p) { return FqElem{p, 1, {1}}; }

FqElem fq_gen(long p, long n) {
  if (n == 1) {
    auto fi = field(p, 1);
    return FqElem{p, 1, {(p - fi->conway[0] % p) % p}};
  }
  std::vector<long> c(n, 0);
  c[1] = 1;
  return fq_make(p, n, std::move(c));
}

FqElem fq_from_dlog(long p, long n, const Int& k) {
  auto fi = field(p, n);
  Int kk = k % (fi->q - 1);
  return canonicalize(p, n, from_dlog_in(fi, to_long(kk)));
}

Int fq_dlog(const FqElem& a) {
  if (a.is_zero()) throw std::domain_error("dlog of zero");
  auto fi = field(a.p, a.n);
  return Int(dlog_in(fi, a.c));
}

FqRep fq_embed(const FqElem& a, long n2) {
  if (n2 % a.n != 0)
    throw std::invalid_argument("degree does not divide target degree");
  if (pow_long(a.p, n2) > fq_max_size)
    throw std::runtime_error("field size beyond supported bound");
  if (a.is_zero()) return FqRep{a.p, n2, std::vector<long>(n2, 0)};
  auto fi2 = field(a.p, n2);
  long r = (fi2->q - 1) / (pow_long(a.p, a.n) - 1);
  long k = to_long(fq_dlog(a));
  return FqRep{a.p, n2, from_dlog_in(fi2, k * r)};
}

namespace {

FqElem binop(const FqElem& a, const FqElem& b, bool mul) {
  if (a.p != b.p) throw std::invalid_argument("characteristic mismatch");
  long n = std::lcm(a.n, b.n);
  auto fi = field(a.p, n);
  std::vector<long> ca = (a.n == n) ? a.c : fq_embed(a, n).c;
  std::vector<long> cb = (b.n == n) ? b.c : fq_embed(b, n).c;
  if (mul) {
    PolyP pa(ca), pb(cb);
    trim(pa);
    trim(pb);
    PolyP r = pmulmod(pa, pb, fi->conway, a.p);
    std::vector<long> cc(n, 0);
    for (size_t i = 0; i < r.size(); ++i) cc[i] = r[i];
    return canonicalize(a.p, n, std::move(cc));
  }
  for (long i = 0; i < n; ++i) ca[i] = (ca[i] + cb[i]) % a.p;
  return canonicalize(a.p, n, std::move(ca));
}

}  // namespace

FqElem FqElem::operator+(const FqElem& o) const { return binop(*this, o, false); }

FqElem FqElem::operator-() const {
  FqElem r = *this;
  for (auto& x : r.c) x = (p - x) % p;
  return r;
}

FqElem FqElem::operator*(const FqElem& o) const { return binop(*this, o, true); }

FqElem FqElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  auto fi = field(p, n);
  long k = to_long(fq_dlog(*this));
  return canonicalize(p, n, from_dlog_in(fi, fi->q - 1 - k));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

FqElem FqElem::pow(const Int& k) const {
  if (is_zero()) {
    if (k <= 0) throw std::domain_error("0^k for k <= 0");
    return *this;
  }
  auto fi = field(p, n);
  Int e = k % (fi->q - 1);
  long kk = to_long(fq_dlog(*this));
  return canonicalize(p, n, from_dlog_in(fi, to_long(e) * kk % (fi->q - 1)));
}

bool FqElem::operator<(const FqElem& o) const {
  if (p != o.p) return p < o.p;
  if (n != o.n) return n < o.n;
  return c < o.c;
}

std::string FqElem::str() const {
  std::ostringstream os;
  os << "fq(" << p << "," << n << ",[";
  for (long i = 0; i < n; ++i) os << (i ? "," : "") << c[i];
  os << "])";
  return os.str();
}

std::vector<FqElem> fq_all_elements(long p, long n) {
  long q = pow_long(p, n);
  std::vector<FqElem> out;
  out.reserve(q);
  for (long code = 0; code < q; ++code)
    out.push_back(canonicalize(p, n, decode(code, p, n)));
  return out;
}

}  // namespace charkit
