#include "charkit/mpoly.hpp"

#include <sstream>

namespace charkit {

namespace {

// grevlex: higher total degree wins; ties broken by the *smallest* trailing
// exponent difference (reverse lex on negated exponents).
int grevlex_cmp(const int* a, const int* b, long n) {
  int da = 0, db = 0;
  for (long i = 0; i < n; ++i) da += a[i], db += b[i];
  if (da != db) return da < db ? -1 : 1;
  for (long i = n - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

int lex_cmp(const int* a, const int* b, long n) {
  for (long i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

bool expo_less(const Expo& a, const Expo& b, TermOrder ord, int aux) {
  long n = (long)a.size();
  switch (ord) {
    case TermOrder::Grevlex:
      return grevlex_cmp(a.data(), b.data(), n) < 0;
    case TermOrder::Lex:
      return lex_cmp(a.data(), b.data(), n) < 0;
    case TermOrder::ElimLast: {
      long main = n - aux;
      int c = grevlex_cmp(a.data() + main, b.data() + main, aux);
      if (c != 0) return c < 0;
      return grevlex_cmp(a.data(), b.data(), main) < 0;
    }
  }
  return false;
}

std::string poly_str(const QPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  // print highest terms first under the poly's order
  std::vector<const std::pair<const Expo, Rat>*> ts;
  for (auto& t : p.terms) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) {
    return expo_less(y->first, x->first, p.order, p.aux_block);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Rat c = t->second;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    }
    bool any_var = total_deg(t->first) > 0;
    if (c != 1 || !any_var) {
      os << c;
      if (any_var) os << "*";
    }
    bool needs_star = false;
    for (long i = 0; i < p.nvars; ++i) {
      int e = t->first[i];
      if (!e) continue;
      if (needs_star) os << "*";
      if (i < (long)vars.size())
        os << vars[i];
      else
        os << "x" << (i + 1);
      if (e > 1) os << "^" << e;
      needs_star = true;
    }
  }
  return os.str();
}

}  // namespace charkit
