#include "charkit/parse.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace charkit {

using nlohmann::json;

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
}

long parse_long_at(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
  if (i == start) throw std::invalid_argument("expected integer in: " + s);
  return std::stol(s.substr(start, i - start));
}

void expect(const std::string& s, size_t& i, char c) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    throw std::invalid_argument(std::string("expected '") + c + "' in: " + s);
  ++i;
}

bool peek(const std::string& s, size_t i, char c) {
  skip_ws(s, i);
  return i < s.size() && s[i] == c;
}

RootOfUnity parse_root_at(const std::string& s, size_t& i) {
  skip_ws(s, i);
  if (s.compare(i, 1, "z") != 0)
    throw std::invalid_argument("expected z(a/m) in: " + s);
  ++i;
  expect(s, i, '(');
  long a = parse_long_at(s, i);
  long m = 1;
  if (peek(s, i, '/')) {
    ++i;
    m = parse_long_at(s, i);
  }
  expect(s, i, ')');
  return RootOfUnity(a, m);
}

}  // namespace

RootOfUnity parse_root(const std::string& s) {
  size_t i = 0;
  RootOfUnity r = parse_root_at(s, i);
  skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing input in: " + s);
  return r;
}

FqElem parse_fq(const std::string& s) {
  size_t i = 0;
  skip_ws(s, i);
  if (s.compare(i, 2, "fq") != 0)
    throw std::invalid_argument("expected fq(p,n,[...]) in: " + s);
  i += 2;
  expect(s, i, '(');
  long p = parse_long_at(s, i);
  expect(s, i, ',');
  long n = parse_long_at(s, i);
  expect(s, i, ',');
  expect(s, i, '[');
  std::vector<long> c;
  if (!peek(s, i, ']')) {
    c.push_back(parse_long_at(s, i));
    while (peek(s, i, ',')) {
      ++i;
      c.push_back(parse_long_at(s, i));
    }
  }
  expect(s, i, ']');
  expect(s, i, ')');
  skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing input in: " + s);
  return fq_make(p, n, std::move(c));
}

namespace {

struct RawTerm {
  Cyclo coeff;
  std::map<long, int> expo;  // 0-based var index -> exponent
};

// sum of products of rationals, z(a/m) tokens and prefix-indexed variables
std::vector<RawTerm> parse_terms(const std::string& s,
                                 const std::string& prefix, long& max_var) {
  std::vector<RawTerm> terms;
  size_t i = 0;
  max_var = 0;
  skip_ws(s, i);
  if (i == s.size()) return terms;  // empty = zero polynomial
  bool first = true;
  while (true) {
    skip_ws(s, i);
    if (i == s.size()) break;
    Cyclo coeff = Cyclo::one();
    bool neg = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') neg = !neg;
      ++i;
      skip_ws(s, i);
    }
    first = false;
    RawTerm t;
    bool any_factor = false;
    while (true) {
      skip_ws(s, i);
      if (i >= s.size()) break;
      char c = s[i];
      if (std::isdigit((unsigned char)c)) {
        long num = parse_long_at(s, i);
        long den = 1;
        if (peek(s, i, '/')) {
          ++i;
          den = parse_long_at(s, i);
        }
        coeff = coeff * Cyclo::from_rat(Rat(num, den));
        any_factor = true;
      } else if (c == 'z' && peek(s, i + 1, '(')) {
        RootOfUnity r = parse_root_at(s, i);
        coeff = coeff * Cyclo::root(r);
        any_factor = true;
      } else if (s.compare(i, prefix.size(), prefix) == 0 &&
                 i + prefix.size() < s.size() &&
                 std::isdigit((unsigned char)s[i + prefix.size()])) {
        i += prefix.size();
        long idx = parse_long_at(s, i);
        if (idx < 1) throw std::invalid_argument("variable index >= 1");
        long e = 1;
        if (peek(s, i, '^')) {
          ++i;
          e = parse_long_at(s, i);
          if (e < 0) throw std::invalid_argument("negative exponent");
        }
        t.expo[idx - 1] += (int)e;
        max_var = std::max(max_var, idx);
        any_factor = true;
      } else {
        break;
      }
      if (peek(s, i, '*')) {
        ++i;
        continue;
      }
      break;
    }
    if (!any_factor)
      throw std::invalid_argument("malformed polynomial: " + s);
    t.coeff = neg ? -coeff : coeff;
    terms.push_back(std::move(t));
    skip_ws(s, i);
    if (i == s.size()) break;
    if (s[i] != '+' && s[i] != '-')
      throw std::invalid_argument("expected + or - in: " + s);
  }
  return terms;
}

}  // namespace

CPoly parse_cpoly(const std::string& s, long nvars, const std::string& prefix) {
  long max_var = 0;
  auto terms = parse_terms(s, prefix, max_var);
  if (nvars == 0) nvars = max_var;
  if (max_var > nvars)
    throw std::invalid_argument("variable index exceeds arity in: " + s);
  CPoly p(nvars);
  for (auto& t : terms) {
    Expo e(nvars, 0);
    for (auto& [v, k] : t.expo) e[v] = k;
    p.add_term(e, t.coeff);
  }
  return p;
}

QPoly parse_qpoly(const std::string& s, long nvars, const std::string& prefix) {
  CPoly c = parse_cpoly(s, nvars, prefix);
  QPoly p(c.nvars);
  for (auto& [e, coeff] : c.terms) {
    if (!coeff.is_rat())
      throw std::invalid_argument("cyclotomic coefficient in rational context");
    p.add_term(e, coeff.rat_value());
  }
  return p;
}

namespace {

template <class C>
std::string generic_poly_str(const MPoly<C>& p, const std::string& prefix,
                             std::string (*coeff_str)(const C&),
                             bool (*coeff_is_one)(const C&)) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Expo, C>*> ts;
  for (auto& t : p.terms) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) {
    return expo_less(y->first, x->first, p.order, p.aux_block);
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    if (!first) os << " + ";
    first = false;
    bool any_var = total_deg(t->first) > 0;
    if (!coeff_is_one(t->second) || !any_var) {
      std::string cs = coeff_str(t->second);
      if (cs.find_first_of("+-") != std::string::npos && cs[0] != '-' &&
          any_var)
        os << "(" << cs << ")";
      else if (cs.find_first_of("+-", 1) != std::string::npos && any_var)
        os << "(" << cs << ")";
      else
        os << cs;
      if (any_var) os << "*";
    }
    bool needs_star = false;
    for (long i = 0; i < p.nvars; ++i) {
      int e = t->first[i];
      if (!e) continue;
      if (needs_star) os << "*";
      os << prefix << (i + 1);
      if (e > 1) os << "^" << e;
      needs_star = true;
    }
  }
  return os.str();
}

}  // namespace

std::string cpoly_str(const CPoly& p, const std::string& prefix) {
  return generic_poly_str<Cyclo>(
      p, prefix, +[](const Cyclo& c) { return c.str(); },
      +[](const Cyclo& c) { return c == Cyclo::one(); });
}

std::string fpoly_str(const FPoly& p, const std::string& prefix) {
  return generic_poly_str<FqElem>(
      p, prefix, +[](const FqElem& c) { return c.str(); },
      +[](const FqElem& c) { return c.is_one(); });
}

namespace {

Component component_from_json(const json& j, long n) {
  Ideal I;
  I.nvars = n;
  for (auto& g : j.at("gens"))
    I.gens.push_back(parse_qpoly(g.get<std::string>(), n));
  bool asserted = j.value("irreducible", "") == std::string("asserted");
  return make_component(std::move(I), asserted);
}

json component_to_json(const Component& c) {
  json j;
  std::vector<std::string> gens;
  for (auto& g : c.ideal.gens)
    gens.push_back(poly_str(g));
  j["gens"] = gens;
  j["irreducible"] = c.flag == IrredFlag::Verified    ? "verified"
                     : c.flag == IrredFlag::Asserted ? "asserted"
                                                     : "unresolved";
  return j;
}

}  // namespace

FinitePresentation parse_presentation(const std::string& json_text) {
  json j = json::parse(json_text);
  FinitePresentation P;
  P.n = j.at("ambient").get<long>();
  for (auto& jf : j.at("fibers")) {
    Fiber f;
    f.label = jf.at("label").dump();
    f.T.V.n = P.n;
    for (auto& jc : jf.at("V"))
      f.T.V.comps.push_back(component_from_json(jc, P.n));
    if (jf.contains("S"))
      for (auto& js : jf.at("S")) {
        AlgSet W;
        W.n = P.n;
        for (auto& jc : js) W.comps.push_back(component_from_json(jc, P.n));
        f.T.S.push_back(std::move(W));
      }
    P.fibers.push_back(std::move(f));
  }
  if (j.contains("annotation") && !j.at("annotation").is_null()) {
    auto& ja = j.at("annotation");
    Annotation a;
    a.rF = ja.value("rF", 0L);
    if (ja.contains("dF") && !ja.at("dF").is_null())
      a.dF = ja.at("dF").get<long>();
    P.annotation = a;
  }
  return P;
}

std::string presentation_json(const FinitePresentation& P) {
  json j;
  j["ambient"] = P.n;
  j["fibers"] = json::array();
  for (auto& f : P.fibers) {
    json jf;
    json lbl = json::parse(f.label, nullptr, false);
    jf["label"] = lbl.is_discarded() ? json(f.label) : lbl;
    jf["V"] = json::array();
    for (auto& c : f.T.V.comps) jf["V"].push_back(component_to_json(c));
    jf["S"] = json::array();
    for (auto& W : f.T.S) {
      json js = json::array();
      for (auto& c : W.comps) js.push_back(component_to_json(c));
      jf["S"].push_back(js);
    }
    j["fibers"].push_back(jf);
  }
  if (P.annotation) {
    j["annotation"]["rF"] = P.annotation->rF;
    j["annotation"]["dF"] =
        P.annotation->dF ? json(*P.annotation->dF) : json(nullptr);
  }
  return j.dump(2);
}

namespace {

RankDescriptorPtr parse_rank_at(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  while (i < s.size() && std::isalpha((unsigned char)s[i])) ++i;
  std::string name = s.substr(start, i - start);
  if (name == "empty") return rd_empty();
  expect(s, i, '(');
  if (name == "atom") {
    long k = parse_long_at(s, i);
    expect(s, i, ',');
    long dk = parse_long_at(s, i);
    expect(s, i, ',');
    long f = parse_long_at(s, i);
    expect(s, i, ',');
    long df = parse_long_at(s, i);
    expect(s, i, ')');
    return rd_atom(k, dk, f, df);
  }
  if (name == "prod") {
    auto a = parse_rank_at(s, i);
    expect(s, i, ',');
    auto b = parse_rank_at(s, i);
    expect(s, i, ')');
    return rd_product(a, b);
  }
  if (name == "union" || name == "disj") {
    std::vector<RankDescriptorPtr> children;
    std::optional<long> overlap;
    children.push_back(parse_rank_at(s, i));
    while (peek(s, i, ',')) {
      ++i;
      skip_ws(s, i);
      if (s.compare(i, 8, "overlap=") == 0) {
        i += 8;
        overlap = parse_long_at(s, i);
        break;
      }
      children.push_back(parse_rank_at(s, i));
    }
    expect(s, i, ')');
    if (name == "disj") {
      if (overlap)
        throw std::invalid_argument("disj takes no overlap declaration");
      return rd_disjoint_union(std::move(children));
    }
    return rd_union(std::move(children), overlap);
  }
  throw std::invalid_argument("unknown rank expression: " + name);
}

}  // namespace

RankDescriptorPtr parse_rank_expr(const std::string& s) {
  size_t i = 0;
  auto d = parse_rank_at(s, i);
  skip_ws(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing input in: " + s);
  return d;
}

}  // namespace charkit
