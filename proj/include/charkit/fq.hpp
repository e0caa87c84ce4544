#pragma once

#include <memory>
#include <string>
#include <vector>

#include "charkit/rat.hpp"

namespace charkit {

// Element of F_{p^n} in the power basis of the Conway generator of its
// *minimal* field: n is always the smallest degree containing the element.
struct FqElem {
  long p = 2;
  long n = 1;
  std::vector<long> c{0};  // length n, entries in [0, p)

  bool is_zero() const;
  bool is_one() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator-(const FqElem& o) const { return *this + (-o); }
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem inverse() const;
  FqElem pow(const Int& k) const;

  bool operator==(const FqElem& o) const = default;
  bool operator<(const FqElem& o) const;
  std::string str() const;  // fq(p,n,[c0,...])
};

inline bool ck_is_zero(const FqElem& a) { return a.is_zero(); }

// Largest supported field size p^n; requests beyond raise std::runtime_error.
extern long fq_max_size;

// Conway polynomial C_{p,n}, coefficients c[0..n] with c[n] = 1.
const std::vector<long>& conway_poly(long p, long n);

FqElem fq_make(long p, long n, std::vector<long> coeffs);  // canonicalizes
FqElem fq_zero(long p);
FqElem fq_one(long p);
FqElem fq_gen(long p, long n);  // Conway generator of F_{p^n}
FqElem fq_from_dlog(long p, long n, const Int& k);  // g_{p,n}^k

// Discrete log of a unit in its minimal field: g^k = a, 0 <= k < p^n - 1.
Int fq_dlog(const FqElem& a);

// Representation of an element at a fixed (not necessarily minimal) degree.
struct FqRep {
  long p, n;
  std::vector<long> c;  // length n
  bool operator==(const FqRep& o) const = default;
};

// Norm-compatible embedding into F_{p^n2}; requires degree(a) | n2.
// On units the dlog scales by (p^n2 - 1)/(p^m - 1).
FqRep fq_embed(const FqElem& a, long n2);

// All elements of F_{p^n} (including subfield elements), canonical forms.
std::vector<FqElem> fq_all_elements(long p, long n);

}  // namespace charkit
