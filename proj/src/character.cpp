#include "charkit/character.hpp"

#include <sstream>
#include <stdexcept>

namespace charkit {

Cyclo chi(const CharContext& ctx, const FqElem& a) {
  if (a.p != ctx.p) throw std::invalid_argument("characteristic mismatch");
  if (a.is_zero()) return Cyclo::zero();
  long qm1 = 1;
  for (long i = 0; i < a.n; ++i) qm1 *= a.p;
  qm1 -= 1;
  return Cyclo::root(to_long(fq_dlog(a)), qm1);
}

std::optional<FqElem> chi_preimage(const CharContext& ctx, const RootOfUnity& u) {
  long d = u.order();
  if (d % ctx.p == 0) return std::nullopt;
  // minimal e with d | p^e - 1
  long qe = 1;
  for (long e = 1;; ++e) {
    if (qe > fq_max_size / ctx.p)
      throw std::runtime_error("preimage order exceeds supported field bound");
    qe *= ctx.p;
    if ((qe - 1) % d == 0)
      return fq_from_dlog(ctx.p, e, Int(u.num) * ((qe - 1) / d));
  }
}

CharReport verify_character(const CharContext& ctx, long n_max) {
  CharReport rep;
  auto fail = [&](const std::string& s) {
    rep.pass = false;
    if (rep.failures.size() < 10) rep.failures.push_back(s);
  };
  for (long n = 1; n <= n_max; ++n) {
    auto elems = fq_all_elements(ctx.p, n);
    // injectivity
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = i + 1; j < elems.size(); ++j)
        if (chi(ctx, elems[i]) == chi(ctx, elems[j]))
          fail("chi not injective at " + elems[i].str() + ", " + elems[j].str());
    // multiplicativity
    for (auto& a : elems)
      for (auto& b : elems) {
        ++rep.checked;
        if (chi(ctx, a * b) != chi(ctx, a) * chi(ctx, b))
          fail("chi(ab) != chi(a)chi(b) at " + a.str() + ", " + b.str());
      }
    // tower compatibility: recompute through the degree-n representation
    long qn1 = 1;
    for (long i = 0; i < n; ++i) qn1 *= ctx.p;
    qn1 -= 1;
    for (auto& a : elems) {
      if (a.is_zero()) continue;
      FqRep up = fq_embed(a, n);
      // dlog in the ambient field via the embedded coefficients
      FqElem probe = fq_make(ctx.p, n, up.c);
      if (!(probe == a)) fail("embedding not canonical at " + a.str());
      long m = a.n;
      long qm1 = 1;
      for (long i = 0; i < m; ++i) qm1 *= ctx.p;
      qm1 -= 1;
      Cyclo via_min = chi(ctx, a);
      Cyclo via_amb = Cyclo::root(to_long(fq_dlog(a)) * (qn1 / qm1), qn1);
      if (!(via_min == via_amb))
        fail("tower incompatibility at " + a.str() + " in degree " +
             std::to_string(n));
    }
  }
  return rep;
}

}  // namespace charkit
