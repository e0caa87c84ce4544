#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charkit/mpoly.hpp"
#include "charkit/rat.hpp"

namespace charkit {

// exp(2*pi*i * num/den) with 0 <= num < den, gcd(num,den) = 1.
struct RootOfUnity {
  long num = 0;
  long den = 1;

  RootOfUnity() = default;
  RootOfUnity(long a, long m);

  long order() const { return den; }
  RootOfUnity inverse() const { return RootOfUnity(-num, den); }
  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity pow(long k) const;
  bool operator==(const RootOfUnity& o) const = default;
  bool operator<(const RootOfUnity& o) const;
  std::string str() const;  // z(a/m)
};

long euler_phi(long m);

// k-th cyclotomic polynomial, integer coefficients, degree phi(k).
const std::vector<Int>& cyclotomic_coeffs(long k);
QPoly cyclotomic_poly(long k);  // univariate over Q

// Element of the union of cyclotomic fields, stored at its minimal
// conductor m (never 2 mod 4) in the power basis {zeta_m^i : i < phi(m)}.
class Cyclo {
 public:
  Cyclo() : m_(1), c_(1) {}  // zero
  static Cyclo from_rat(const Rat& q);
  static Cyclo root(long a, long m);  // zeta_m^a
  static Cyclo root(const RootOfUnity& r) { return root(r.num, r.den); }
  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return from_rat(1); }

  // Canonical form of a formal Q-linear combination of roots of unity.
  static Cyclo reduce(const std::vector<std::pair<Rat, RootOfUnity>>& raw);

  long conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rat() const { return m_ == 1; }
  Rat rat_value() const;  // requires is_rat()

  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator-(const Cyclo& o) const { return *this + (-o); }
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator/(const Cyclo& o) const;  // throws on zero divisor
  Cyclo inverse() const;
  Cyclo pow(long k) const;  // k may be negative for units
  bool operator==(const Cyclo& o) const;
  bool operator<(const Cyclo& o) const;  // canonical ordering for sets

  std::optional<RootOfUnity> as_root_of_unity() const;

  std::string str() const;

  // Resource bound on conductors arising in arithmetic.
  static long max_conductor;

 private:
  long m_;
  std::vector<Rat> c_;

  Cyclo(long m, std::vector<Rat> c) : m_(m), c_(std::move(c)) {}
  static Cyclo make(long m, std::vector<Rat> c);  // reduces + minimizes
  std::vector<Rat> raised_to(long big) const;     // coeffs at conductor big
  void minimize();
};

inline bool ck_is_zero(const Cyclo& c) { return c.is_zero(); }
inline Cyclo operator*(const Rat& q, const Cyclo& c) {
  return Cyclo::from_rat(q) * c;
}

using CPoly = MPoly<Cyclo>;

}  // namespace charkit
