#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "charkit/rat.hpp"

namespace charkit {

using Expo = std::vector<int>;  // exponent vector, length = variable count

inline int total_deg(const Expo& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

enum class TermOrder {
  Grevlex,  // graded reverse lexicographic (default)
  Lex,
  ElimLast,  // eliminate the trailing aux_block variables: compare their
             // grevlex block first, then grevlex on the rest
};

// a < b in the given order?  aux = size of trailing elimination block.
bool expo_less(const Expo& a, const Expo& b, TermOrder ord, int aux = 0);

inline bool ck_is_zero(const Rat& q) { return q == 0; }

// Sparse multivariate polynomial over coefficient ring C.
// Terms are stored in a canonical (order-independent) map; the order tag is
// consulted only when a leading term is requested.
template <class C>
class MPoly {
 public:
  long nvars = 0;
  TermOrder order = TermOrder::Grevlex;
  int aux_block = 0;  // trailing variables treated as the elimination block
  std::map<Expo, C> terms;

  MPoly() = default;
  explicit MPoly(long n, TermOrder ord = TermOrder::Grevlex)
      : nvars(n), order(ord) {}

  static MPoly constant(long n, C c, TermOrder ord = TermOrder::Grevlex) {
    MPoly p(n, ord);
    if (!ck_is_zero(c)) p.terms.emplace(Expo(n, 0), std::move(c));
    return p;
  }
  static MPoly var(long n, long i, C one, TermOrder ord = TermOrder::Grevlex) {
    MPoly p(n, ord);
    Expo e(n, 0);
    e.at(i) = 1;
    p.terms.emplace(std::move(e), std::move(one));
    return p;
  }
  static MPoly monomial(long n, Expo e, C c,
                        TermOrder ord = TermOrder::Grevlex) {
    MPoly p(n, ord);
    if ((long)e.size() != n) throw std::invalid_argument("exponent length");
    if (!ck_is_zero(c)) p.terms.emplace(std::move(e), std::move(c));
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  int degree() const {
    int d = -1;
    for (auto& [e, c] : terms) d = std::max(d, total_deg(e));
    return d;
  }

  void add_term(const Expo& e, const C& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (!ck_is_zero(c)) terms.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (ck_is_zero(it->second)) terms.erase(it);
    }
  }

  MPoly operator+(const MPoly& o) const {
    check(o);
    MPoly r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }
  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }
  MPoly operator-(const MPoly& o) const { return *this + (-o); }
  MPoly operator*(const MPoly& o) const {
    check(o);
    MPoly r(nvars, order);
    r.aux_block = aux_block;
    Expo e(nvars);
    for (auto& [ea, ca] : terms)
      for (auto& [eb, cb] : o.terms) {
        for (long i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MPoly scaled(const C& c) const {
    MPoly r(nvars, order);
    r.aux_block = aux_block;
    if (ck_is_zero(c)) return r;
    for (auto& [e, t] : terms) r.terms.emplace(e, t * c);
    return r;
  }
  MPoly pow(long k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    if (k == 0) {
      if (terms.empty()) throw std::logic_error("0^0");
      const C& c = terms.begin()->second;
      return constant(nvars, c / c, order);
    }
    MPoly b = *this, r(nvars, order);
    bool have = false;
    for (; k; k >>= 1) {
      if (k & 1) {
        r = have ? r * b : b;
        have = true;
      }
      b = b * b;
    }
    return r;
  }

  bool operator==(const MPoly& o) const {
    return nvars == o.nvars && terms == o.terms;
  }

  // Leading term under the polynomial's order tag.
  const std::pair<const Expo, C>& lead() const {
    if (terms.empty()) throw std::logic_error("lead of zero polynomial");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
      if (expo_less(best->first, it->first, order, aux_block)) best = it;
    return *best;
  }

  // Exact evaluation; V must support V+V, V*V and C*V.
  template <class V>
  V eval(const std::vector<V>& pt, const V& zero, const V& one) const {
    if ((long)pt.size() != nvars)
      throw std::invalid_argument("point length mismatch");
    V acc = zero;
    for (auto& [e, c] : terms) {
      V m = one;
      for (long i = 0; i < nvars; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * pt[i];
      acc = acc + c * m;
    }
    return acc;
  }

 private:
  void check(const MPoly& o) const {
    if (nvars != o.nvars) throw std::invalid_argument("variable count mismatch");
  }
};

using QPoly = MPoly<Rat>;

std::string poly_str(const QPoly& p, const std::vector<std::string>& vars = {});

}  // namespace charkit
