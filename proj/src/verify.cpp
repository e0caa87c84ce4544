#include "charkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "charkit/character.hpp"
#include "charkit/fq.hpp"
#include "charkit/mann.hpp"
#include "charkit/ordinal.hpp"

namespace charkit {

bool SuiteReport::pass() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string suite_text(const SuiteReport& r) {
  std::ostringstream os;
  for (auto& c : r.checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << r.suite << "/" << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

using Pt = std::vector<Rat>;

// ---------- small geometry helpers over the corpus --------------------

Component lincomp(long n, std::vector<QPoly> gens) {
  Ideal I;
  I.nvars = n;
  I.gens = std::move(gens);
  return make_component(std::move(I));
}

PcSet pcv(long n, std::vector<Component> comps) {
  PcSet T;
  T.V.n = n;
  T.V.comps = std::move(comps);
  return T;
}

Rat eval_q(const QPoly& p, const Pt& pt) {
  return p.eval(pt, Rat(0), Rat(1));
}

bool on_comp(const Component& c, const Pt& pt) {
  for (auto& g : c.ideal.gens)
    if (eval_q(g, pt) != 0) return false;
  return true;
}

bool in_algset(const AlgSet& A, const Pt& pt) {
  for (auto& c : A.comps)
    if (on_comp(c, pt)) return true;
  return false;
}

bool in_pcset(const PcSet& T, const Pt& pt) {
  if (!in_algset(T.V, pt)) return false;
  for (auto& W : T.S)
    if (in_algset(W, pt)) return false;
  return true;
}

bool vcomp_equal(const Component& a, const Component& b) {
  return comp_subset(a, b) && comp_subset(b, a);
}

std::vector<Component> closure_of(const PcSet& T) {
  PcSet c = T;
  return pc_closure(c).comps;
}

std::vector<Component> union_comps(const std::vector<Component>& a,
                                   const std::vector<Component>& b) {
  std::vector<Component> all = a;
  for (auto& c : b) all.push_back(c);
  std::vector<Component> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < all.size() && !drop; ++j) {
      if (i == j) continue;
      if (comp_subset(all[i], all[j]))
        drop = !comp_subset(all[j], all[i]) || j < i;
    }
    if (!drop) out.push_back(all[i]);
  }
  return out;
}

RankDeg comps_rank(const std::vector<Component>& cs) {
  RankDeg r;
  for (auto& c : cs)
    if (!r.r_K || c.dim > *r.r_K) r.r_K = c.dim;
  if (r.r_K)
    for (auto& c : cs)
      if (c.dim == *r.r_K) ++r.d_K;
  return r;
}

std::vector<Component> tops_of(const std::vector<Component>& cs) {
  RankDeg r = comps_rank(cs);
  std::vector<Component> t;
  if (!r.r_K) return t;
  for (auto& c : cs)
    if (c.dim == *r.r_K) t.push_back(c);
  return t;
}

bool comp_sets_equal(const std::vector<Component>& a,
                     const std::vector<Component>& b) {
  auto covered = [](const std::vector<Component>& x,
                    const std::vector<Component>& y) {
    for (auto& c : x) {
      bool found = false;
      for (auto& d : y)
        if (vcomp_equal(c, d)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

bool rk_lt(const std::optional<long>& a, const std::optional<long>& b) {
  if (!a) return (bool)b;
  if (!b) return false;
  return *a < *b;
}

// Definitional almost-containment predicates, built only from intersection
// pc-sets and closure ranks (independent of pc_rel's classification).
bool p_asub(const PcSet& a, const PcSet& b) {
  RankDeg ra = pc_rank_deg(a), rb = pc_rank_deg(b);
  if (!ra.r_K && !rb.r_K) return true;
  PcSet cap = pc_op(a, b, PcOp::Cap);
  RankDeg rc = pc_rank_deg(cap);
  return ra.r_K == rb.r_K && rb.r_K == rc.r_K && rc.d_K == ra.d_K;
}

bool p_aeq(const PcSet& a, const PcSet& b) {
  return p_asub(a, b) && p_asub(b, a);
}

bool p_adisj(const PcSet& a, const PcSet& b) {
  RankDeg ra = pc_rank_deg(a), rb = pc_rank_deg(b);
  if (!ra.r_K || ra.r_K != rb.r_K) return false;
  PcSet cap = pc_op(a, b, PcOp::Cap);
  return rk_lt(pc_rank_deg(cap).r_K, ra.r_K);
}

PcSet punctured(const CorpusSet& s, const RankDeg& rd) {
  if (!rd.r_K || *rd.r_K == 0) return s.T;
  std::vector<Component> tops = tops_of(closure_of(s.T));
  for (auto& pt : s.samples) {
    if (!in_pcset(s.T, pt)) continue;
    bool on_top = false;
    for (auto& c : tops)
      if (on_comp(c, pt)) on_top = true;
    if (!on_top) continue;
    std::vector<QPoly> gens;
    for (long i = 0; i < s.n; ++i)
      gens.push_back(QPoly::var(s.n, i, Rat(1)) -
                     QPoly::constant(s.n, pt[i]));
    PcSet T = s.T;
    T.closure_normalized = false;
    T.S.push_back({s.n, {lincomp(s.n, std::move(gens))}});
    return T;
  }
  return s.T;
}

// ---------- the corpus -----------------------------------------------

std::vector<Pt> pts(std::initializer_list<std::initializer_list<long>> ps) {
  std::vector<Pt> out;
  for (auto& p : ps) {
    Pt q;
    for (long v : p) q.push_back(Rat(v));
    out.push_back(std::move(q));
  }
  return out;
}

// Points base + t*dir for t in {-2,-1,0,1,2,3}.
std::vector<Pt> ray(const std::vector<long>& base,
                    const std::vector<long>& dir) {
  std::vector<Pt> out;
  for (long t = -2; t <= 3; ++t) {
    Pt q;
    for (size_t i = 0; i < base.size(); ++i) q.push_back(Rat(base[i] + t * dir[i]));
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<Pt> cat(std::vector<Pt> a, const std::vector<Pt>& b) {
  for (auto& p : b) a.push_back(p);
  return a;
}

std::vector<CorpusSet> build_corpus() {
  std::vector<CorpusSet> C;
  auto add = [&](std::string name, long n, PcSet T, std::vector<Pt> ps) {
    C.push_back({std::move(name), n, std::move(T), std::move(ps)});
  };

  // ---- ambient dimension 2 ----
  {
    long n = 2;
    QPoly x1 = QPoly::var(n, 0, Rat(1)), x2 = QPoly::var(n, 1, Rat(1));
    QPoly one = QPoly::constant(n, Rat(1));
    Component L1 = lincomp(n, {x2});            // x-axis
    Component L2 = lincomp(n, {x1});            // y-axis
    Component D = lincomp(n, {x1 - x2});        // diagonal
    Component A = lincomp(n, {x1 + x2});        // antidiagonal
    Component St = lincomp(n, {x2 - x1 - x1});  // x2 = 2 x1
    Component H = lincomp(n, {x2 - one});       // x2 = 1
    Component Vv = lincomp(n, {x1 - one});      // x1 = 1
    Component Aff = lincomp(n, {x1 + x2 - one});
    Component Plane = lincomp(n, {});
    Component O = lincomp(n, {x1, x2});
    Component E1 = lincomp(n, {x1 - one, x2});
    Component E2 = lincomp(n, {x1, x2 - one});
    Component U = lincomp(n, {x1 - one, x2 - one});
    auto grid = [&]() {
      std::vector<Pt> g;
      for (long a = -1; a <= 2; ++a)
        for (long b = -1; b <= 2; ++b) g.push_back({Rat(a), Rat(b)});
      return g;
    }();
    auto s_l1 = ray({0, 0}, {1, 0});
    auto s_l2 = ray({0, 0}, {0, 1});
    auto s_d = ray({0, 0}, {1, 1});
    auto s_a = ray({0, 0}, {1, -1});
    auto s_st = ray({0, 0}, {1, 2});
    auto s_h = ray({0, 1}, {1, 0});
    auto s_v = ray({1, 0}, {0, 1});
    auto s_aff = ray({0, 1}, {1, -1});

    add("l1", n, pcv(n, {L1}), s_l1);
    add("l2", n, pcv(n, {L2}), s_l2);
    add("diag", n, pcv(n, {D}), s_d);
    add("anti", n, pcv(n, {A}), s_a);
    add("steep", n, pcv(n, {St}), s_st);
    add("h", n, pcv(n, {H}), s_h);
    add("v", n, pcv(n, {Vv}), s_v);
    add("aff", n, pcv(n, {Aff}), s_aff);

    auto minus = [&](PcSet T, std::vector<Component> cut) {
      T.S.push_back({n, std::move(cut)});
      return T;
    };
    add("l1-o", n, minus(pcv(n, {L1}), {O}), s_l1);
    add("l2-o", n, minus(pcv(n, {L2}), {O}), s_l2);
    add("diag-o", n, minus(pcv(n, {D}), {O}), s_d);
    add("anti-o", n, minus(pcv(n, {A}), {O}), s_a);
    add("diag-u", n, minus(pcv(n, {D}), {U}), s_d);
    add("l1-2pts", n, minus(minus(pcv(n, {L1}), {O}), {E1}), s_l1);

    add("axes", n, pcv(n, {L1, L2}), cat(s_l1, s_l2));
    add("axes-o", n, minus(pcv(n, {L1, L2}), {O}), cat(s_l1, s_l2));
    add("cross", n, pcv(n, {D, A}), cat(s_d, s_a));
    add("cross-o", n, minus(pcv(n, {D, A}), {O}), cat(s_d, s_a));
    add("par-h", n, pcv(n, {L1, H}), cat(s_l1, s_h));
    add("par-v", n, pcv(n, {L2, Vv}), cat(s_l2, s_v));

    add("plane", n, pcv(n, {Plane}), grid);
    add("plane-l1", n, minus(pcv(n, {Plane}), {L1}), cat(grid, s_l1));
    add("plane-o", n, minus(pcv(n, {Plane}), {O}), grid);
    add("plane-axes", n, minus(minus(pcv(n, {Plane}), {L1}), {L2}),
        cat(grid, cat(s_l1, s_l2)));

    add("pt-o", n, pcv(n, {O}), pts({{0, 0}}));
    add("pt-u", n, pcv(n, {U}), pts({{1, 1}}));
    add("3pts", n, pcv(n, {O, E1, E2}), pts({{0, 0}, {1, 0}, {0, 1}}));
    add("3pts-o", n, minus(pcv(n, {O, E1, E2}), {O}),
        pts({{0, 0}, {1, 0}, {0, 1}}));

    add("tri", n, pcv(n, {L1, L2, D}), cat(s_l1, cat(s_l2, s_d)));
    add("tri-o", n, minus(pcv(n, {L1, L2, D}), {O}),
        cat(s_l1, cat(s_l2, s_d)));
    add("empty", n, minus(pcv(n, {O}), {L1}), pts({{0, 0}}));
  }

  // ---- ambient dimension 3 ----
  {
    long n = 3;
    QPoly x1 = QPoly::var(n, 0, Rat(1)), x2 = QPoly::var(n, 1, Rat(1)),
          x3 = QPoly::var(n, 2, Rat(1));
    QPoly one = QPoly::constant(n, Rat(1));
    Component P3 = lincomp(n, {x3});                 // x3 = 0
    Component P1 = lincomp(n, {x1});                 // x1 = 0
    Component Psum = lincomp(n, {x1 + x2 + x3});     // x1+x2+x3 = 0
    Component Ph = lincomp(n, {x3 - one});           // x3 = 1
    Component Z = lincomp(n, {x1, x2});              // z-axis
    Component Dg = lincomp(n, {x1 - x2, x2 - x3});   // main diagonal line
    Component Lx = lincomp(n, {x2, x3});             // x-axis line
    Component Lsh = lincomp(n, {x2, x3 - one});      // shifted line
    Component Yax = lincomp(n, {x1, x3});            // y-axis line
    Component Space = lincomp(n, {});
    Component O3 = lincomp(n, {x1, x2, x3});
    Component U3 = lincomp(n, {x1 - one, x2 - one, x3 - one});
    auto grid3 = [&](long fixed_axis, long value) {
      std::vector<Pt> g;
      for (long a = -1; a <= 2; ++a)
        for (long b = -1; b <= 2; ++b) {
          Pt p(3, Rat(0));
          long idx = 0;
          for (long i = 0; i < 3; ++i)
            if (i != fixed_axis) p[i] = Rat(idx++ == 0 ? a : b);
          p[fixed_axis] = Rat(value);
          g.push_back(std::move(p));
        }
      return g;
    };
    std::vector<Pt> s_psum;
    for (long a = -1; a <= 2; ++a)
      for (long b = -1; b <= 2; ++b)
        s_psum.push_back({Rat(a), Rat(b), Rat(-a - b)});
    auto s_z = ray({0, 0, 0}, {0, 0, 1});
    auto s_dg = ray({0, 0, 0}, {1, 1, 1});
    auto s_lx = ray({0, 0, 0}, {1, 0, 0});
    auto s_lsh = ray({0, 0, 1}, {1, 0, 0});
    auto s_yax = ray({0, 0, 0}, {0, 1, 0});

    auto minus = [&](PcSet T, std::vector<Component> cut) {
      T.S.push_back({n, std::move(cut)});
      return T;
    };

    add("p3", n, pcv(n, {P3}), grid3(2, 0));
    add("p1", n, pcv(n, {P1}), grid3(0, 0));
    add("psum", n, pcv(n, {Psum}), s_psum);
    add("ph", n, pcv(n, {Ph}), grid3(2, 1));
    add("p3-lx", n, minus(pcv(n, {P3}), {Lx}), cat(grid3(2, 0), s_lx));
    add("pp", n, pcv(n, {P3, P1}), cat(grid3(2, 0), grid3(0, 0)));
    add("pp-y", n, minus(pcv(n, {P3, P1}), {Yax}),
        cat(grid3(2, 0), cat(grid3(0, 0), s_yax)));
    add("par3", n, pcv(n, {P3, Ph}), cat(grid3(2, 0), grid3(2, 1)));
    add("zax", n, pcv(n, {Z}), s_z);
    add("zax-o", n, minus(pcv(n, {Z}), {O3}), s_z);
    add("lines3", n, pcv(n, {Z, Dg}), cat(s_z, s_dg));
    add("lines3-o", n, minus(pcv(n, {Z, Dg}), {O3}), cat(s_z, s_dg));
    add("space", n, pcv(n, {Space}), cat(grid3(2, 0), grid3(2, 1)));
    add("space-p3", n, minus(pcv(n, {Space}), {P3}),
        cat(grid3(2, 0), grid3(2, 1)));
    add("pt3-o", n, pcv(n, {O3}), pts({{0, 0, 0}}));
    add("pt3-u", n, pcv(n, {U3}), pts({{1, 1, 1}}));
    add("2pts3", n, pcv(n, {O3, U3}), pts({{0, 0, 0}, {1, 1, 1}}));
    add("dg", n, pcv(n, {Dg}), s_dg);
    add("lsh", n, pcv(n, {Lsh}), s_lsh);
  }
  return C;
}

// ---------- law bookkeeping ------------------------------------------

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string witness;
};

void note(Tally& t, bool ok, const std::string& w) {
  ++t.checked;
  if (!ok) {
    ++t.failed;
    if (t.witness.empty()) t.witness = w;
  }
}

CheckResult tally_result(const std::string& name, const Tally& t) {
  CheckResult c{name, t.failed == 0, ""};
  std::ostringstream os;
  if (t.failed == 0)
    os << t.checked << " checked";
  else
    os << t.failed << "/" << t.checked << " failed, e.g. " << t.witness;
  c.detail = os.str();
  return c;
}

}  // namespace

const std::vector<CorpusSet>& lies_corpus() {
  static const std::vector<CorpusSet> corpus = build_corpus();
  return corpus;
}

// ---------------------------------------------------------------------
// suite: character
// ---------------------------------------------------------------------

SuiteReport suite_character(long p, long n_max) {
  SuiteReport R{"character"};
  CharContext ctx{p};
  CharReport rep = verify_character(ctx, n_max);
  {
    std::ostringstream os;
    os << "p=" << p << " n<=" << n_max << ", " << rep.checked << " checked";
    if (!rep.pass && !rep.failures.empty()) os << ", e.g. " << rep.failures[0];
    R.checks.push_back({"laws", rep.pass, os.str()});
  }
  R.checks.push_back({"chi-zero", chi(ctx, fq_zero(p)).is_zero(), ""});
  R.checks.push_back(
      {"chi-one", chi(ctx, fq_one(p)) == Cyclo::one(), ""});
  {
    Tally t;
    for (long m = 1; m <= std::min<long>(n_max, 2); ++m) {
      for (auto& a : fq_all_elements(p, m)) {
        if (a.is_zero()) continue;
        auto r = chi(ctx, a).as_root_of_unity();
        bool ok = r.has_value();
        if (ok) {
          auto back = chi_preimage(ctx, *r);
          ok = back && *back == a;
        }
        note(t, ok, a.str());
      }
    }
    R.checks.push_back(tally_result("preimage-roundtrip", t));
  }
  R.checks.push_back({"preimage-p-torsion",
                      !chi_preimage(ctx, RootOfUnity(1, p)).has_value(), ""});
  return R;
}

// ---------------------------------------------------------------------
// suite: mann
// ---------------------------------------------------------------------

namespace {

// All non-degenerate solutions of c.x = 1 over root tuples with orders up
// to max_order: numeric prefilter, every candidate confirmed exactly.
std::vector<std::vector<RootOfUnity>> mann_brute(const std::vector<Rat>& c,
                                                 long max_order) {
  long n = (long)c.size();
  std::vector<RootOfUnity> roots;
  for (long m = 1; m <= max_order; ++m)
    for (long a = 0; a < m; ++a)
      if (std::gcd(a, m) == 1) roots.push_back(RootOfUnity(a, m));
  std::vector<std::complex<double>> rv;
  for (auto& r : roots)
    rv.push_back(std::polar(1.0, 2.0 * M_PI * (double)r.num / (double)r.den));
  std::vector<double> cd;
  for (auto& q : c) cd.push_back(q.get_d());

  std::vector<std::vector<RootOfUnity>> out;
  std::vector<long> idx(n, 0);
  auto exact_ok = [&](const std::vector<long>& ix) {
    std::vector<Cyclo> terms;
    for (long i = 0; i < n; ++i)
      terms.push_back(Rat(c[i]) * Cyclo::root(roots[ix[i]]));
    Cyclo sum = Cyclo::zero();
    for (auto& t : terms) sum = sum + t;
    if (!(sum == Cyclo::one())) return false;
    for (long mask = 1; mask < (1L << n) - 1; ++mask) {
      Cyclo sub = Cyclo::zero();
      for (long i = 0; i < n; ++i)
        if ((mask >> i) & 1) sub = sub + terms[i];
      if (sub.is_zero()) return false;
    }
    return true;
  };
  std::vector<std::complex<double>> partial(n + 1);
  partial[0] = {0.0, 0.0};
  std::function<void(long)> rec = [&](long d) {
    if (d == n) {
      if (std::abs(partial[n] - std::complex<double>(1.0, 0.0)) < 1e-6 &&
          exact_ok(idx)) {
        std::vector<RootOfUnity> sol;
        for (long i = 0; i < n; ++i) sol.push_back(roots[idx[i]]);
        out.push_back(std::move(sol));
      }
      return;
    }
    for (long k = 0; k < (long)roots.size(); ++k) {
      idx[d] = k;
      partial[d + 1] = partial[d] + cd[d] * rv[k];
      rec(d + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SuiteReport suite_mann(long n_max_arity) {
  SuiteReport R{"mann"};
  const std::vector<Rat> vals = {Rat(1),  Rat(-1), Rat(2),       Rat(-2),
                                 Rat(1, 2), Rat(-1, 2), Rat(1, 3), Rat(-1, 3)};
  for (long n = 1; n <= n_max_arity; ++n) {
    Tally complete, sound;
    long max_order = 2 * d_bound(n);
    std::vector<long> ix(n, 0);
    bool more = true;
    while (more) {
      std::vector<Rat> c;
      for (long i = 0; i < n; ++i) c.push_back(vals[ix[i]]);
      MannSolutionSet got = mann_solve(c);
      std::ostringstream cw;
      cw << "c=(";
      for (long i = 0; i < n; ++i) cw << (i ? "," : "") << rat_str(c[i]);
      cw << ")";
      // soundness: exact equation + non-degeneracy + order bound
      for (auto& sol : got.solutions) {
        Cyclo sum = Cyclo::zero();
        std::vector<Cyclo> terms;
        for (long i = 0; i < n; ++i) {
          terms.push_back(c[i] * Cyclo::root(sol[i]));
          sum = sum + terms.back();
        }
        bool ok = sum == Cyclo::one();
        for (long mask = 1; ok && mask < (1L << n) - 1; ++mask) {
          Cyclo sub = Cyclo::zero();
          for (long i = 0; i < n; ++i)
            if ((mask >> i) & 1) sub = sub + terms[i];
          if (sub.is_zero()) ok = false;
        }
        for (long i = 0; i < n; ++i)
          if (d_bound(n) % sol[i].order() != 0) ok = false;
        note(sound, ok, cw.str());
      }
      // completeness against the over-enumeration
      auto brute = mann_brute(c, max_order);
      note(complete, got.solutions == brute, cw.str());
      // advance the pool index
      long d = 0;
      while (d < n && ++ix[d] == (long)vals.size()) ix[d++] = 0;
      more = d < n;
    }
    std::ostringstream nm;
    nm << "complete-n" << n;
    R.checks.push_back(tally_result(nm.str(), complete));
    nm.str("");
    nm << "sound-n" << n;
    R.checks.push_back(tally_result(nm.str(), sound));
  }
  {
    MannSolutionSet s = mann_solve({Rat(1), Rat(1)});
    std::vector<std::vector<RootOfUnity>> want = {
        {RootOfUnity(1, 6), RootOfUnity(5, 6)},
        {RootOfUnity(5, 6), RootOfUnity(1, 6)}};
    R.checks.push_back({"instance-1-1", s.solutions == want, "c=(1,1)"});
  }
  return R;
}

// ---------------------------------------------------------------------
// suite: lies
// ---------------------------------------------------------------------

SuiteReport suite_lies() {
  SuiteReport R{"lies"};
  const auto& corpus = lies_corpus();

  struct SetData {
    const CorpusSet* cs;
    std::vector<Component> cl;
    RankDeg rd;
    const PcSet& T() const { return cs->T; }
  };
  // groups by ambient dimension; empty sets are kept out of the law pairs
  std::map<long, std::vector<SetData>> groups;
  std::vector<SetData> all;
  for (auto& s : corpus) {
    SetData d{&s, closure_of(s.T), pc_rank_deg(s.T)};
    all.push_back(d);
    if (d.rd.r_K) groups[s.n].push_back(d);
  }

  Tally law[13];  // 1-based
  Tally refl, relcons;

  for (auto& [amb, g] : groups) {
    long G = (long)g.size();
    struct PD {
      PcSet cap, capdot, dotminus;
      RankDeg rcap, rcd, rdm;
    };
    std::vector<PD> pd(G * G);
    std::vector<char> asub_mat(G * G, 0), eqrank(G * G, 0);

    for (long i = 0; i < G; ++i) {
      note(refl, p_aeq(g[i].T(), g[i].T()), g[i].cs->name);
    }

    for (long i = 0; i < G; ++i)
      for (long j = 0; j < G; ++j) {
        if (i == j) continue;
        PD& d = pd[i * G + j];
        d.cap = pc_op(g[i].T(), g[j].T(), PcOp::Cap);
        d.capdot = pc_op(g[i].T(), g[j].T(), PcOp::CapDot);
        d.dotminus = pc_op(g[i].T(), g[j].T(), PcOp::DotMinus);
        d.rcap = pc_rank_deg(d.cap);
        d.rcd = pc_rank_deg(d.capdot);
        d.rdm = pc_rank_deg(d.dotminus);
      }

    for (long i = 0; i < G; ++i)
      for (long j = 0; j < G; ++j) {
        if (i == j) continue;
        const PD& d = pd[i * G + j];
        const RankDeg &ri = g[i].rd, &rj = g[j].rd;
        std::string w = g[i].cs->name + "," + g[j].cs->name;

        // (1) monotonicity for the three constructed subsets of T_i
        for (const RankDeg* rs : {&d.rcap, &d.rcd, &d.rdm}) {
          bool ok = rk_lt(rs->r_K, ri.r_K) ||
                    (rs->r_K == ri.r_K && rs->d_K <= ri.d_K);
          note(law[1], ok, w);
        }

        if (i < j) {
          // (2) union rank is the max
          auto U = union_comps(g[i].cl, g[j].cl);
          RankDeg ru = comps_rank(U);
          std::optional<long> mx = ri.r_K;
          if (rk_lt(mx, rj.r_K)) mx = rj.r_K;
          note(law[2], ru.r_K == mx, w);
          // (3) degree additivity for almost-disjoint unions
          if (ri.r_K == rj.r_K && rk_lt(d.rcap.r_K, ri.r_K))
            note(law[3], ru.d_K == ri.d_K + rj.d_K, w);
        }

        if (ri.r_K != rj.r_K) continue;
        bool adisj = rk_lt(d.rcap.r_K, ri.r_K);
        bool asub = d.rcap.r_K == ri.r_K && d.rcap.d_K == ri.d_K;
        asub_mat[i * G + j] = asub;
        eqrank[i * G + j] = 1;

        // (5) cap ~ capdot ~ intersection of the closures
        if (d.rcap.r_K == ri.r_K) {
          PcSet Vi = pcv(amb, g[i].cl), Vj = pcv(amb, g[j].cl);
          PcSet VC = pc_op(Vi, Vj, PcOp::Cap);
          note(law[5], p_aeq(d.cap, d.capdot) && p_aeq(d.capdot, VC), w);
        }
        // (6) trichotomy
        {
          bool third = d.rcd.r_K == ri.r_K && d.rdm.r_K == ri.r_K;
          int cnt = (int)adisj + (int)asub + (int)third;
          note(law[6], cnt == 1, w);
        }
        // (7) almost-disjoint: capdot drops rank, dotminus ~ T_i
        if (adisj)
          note(law[7],
               rk_lt(d.rcd.r_K, ri.r_K) && p_aeq(d.dotminus, g[i].T()), w);
        // (8) almost-subset: cap ~ capdot ~ T_i
        if (asub)
          note(law[8], p_aeq(d.cap, d.capdot) && p_aeq(d.capdot, g[i].T()),
               w);
        // (9) degree splits across capdot / dotminus
        if (d.rcd.r_K == ri.r_K && d.rdm.r_K == ri.r_K)
          note(law[9], d.rcd.d_K + d.rdm.d_K == ri.d_K, w);
        // (10) ~-invariance of the four operations
        if (i < j && d.rcap.r_K == ri.r_K) {
          PcSet Tip = punctured(*g[i].cs, ri);
          PcSet Tjp = punctured(*g[j].cs, rj);
          bool ok = p_aeq(Tip, g[i].T()) && p_aeq(Tjp, g[j].T());
          if (ok) {
            ok = p_aeq(pc_op(Tip, Tjp, PcOp::Cap), d.cap) &&
                 p_aeq(pc_op(Tip, Tjp, PcOp::CapDot), d.capdot) &&
                 p_aeq(pc_op(Tip, Tjp, PcOp::DotMinus), d.dotminus);
            auto u1 = tops_of(union_comps(closure_of(Tip), closure_of(Tjp)));
            auto u2 = tops_of(union_comps(g[i].cl, g[j].cl));
            ok = ok && comp_sets_equal(u1, u2);
          }
          note(law[10], ok, w);
        }
        // pc_rel agrees with the definitional classification
        {
          PcRel rel = pc_rel(g[i].T(), g[j].T());
          bool asub_back =
              pd[j * G + i].rcap.r_K == rj.r_K && pd[j * G + i].rcap.d_K == rj.d_K;
          PcRel want = adisj ? PcRel::AlmostDisjoint
                       : (asub && asub_back) ? PcRel::AlmostEq
                       : asub                ? PcRel::AlmostSub
                                             : PcRel::Mixed;
          note(relcons, rel == want, w);
        }
      }

    // (4) transitivity of almost-containment over triples
    for (long i = 0; i < G; ++i)
      for (long j = 0; j < G; ++j)
        for (long k = 0; k < G; ++k) {
          if (i == j || j == k || i == k) continue;
          if (!eqrank[i * G + j] || !eqrank[j * G + k] || !eqrank[i * G + k])
            continue;
          if (asub_mat[i * G + j] && asub_mat[j * G + k])
            note(law[4], asub_mat[i * G + k],
                 g[i].cs->name + "," + g[j].cs->name + "," + g[k].cs->name);
        }
  }

  // (11) rank adds, degree multiplies, under products (across ambients)
  {
    for (auto& a : all)
      for (auto& b : all) {
        PcSet P = pc_op(a.T(), b.T(), PcOp::Times);
        RankDeg rp = pc_rank_deg(P);
        std::string w = a.cs->name + "x" + b.cs->name;
        if (!a.rd.r_K || !b.rd.r_K) {
          note(law[11], !rp.r_K, w);
        } else {
          note(law[11],
               rp.r_K && *rp.r_K == *a.rd.r_K + *b.rd.r_K &&
                   rp.d_K == a.rd.d_K * b.rd.d_K,
               w);
        }
      }
  }

  // (12) products of ~-pairs and almost-disjoint pairs
  {
    struct Pair {
      const SetData *a, *b;
    };
    std::vector<Pair> eqs, diss;
    for (auto& [amb, g] : groups) {
      for (size_t i = 0; i < g.size() && (eqs.size() < 6 || diss.size() < 6);
           ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
          if (g[i].rd.r_K != g[j].rd.r_K) continue;
          if (eqs.size() < 6 && p_aeq(g[i].T(), g[j].T()))
            eqs.push_back({&g[i], &g[j]});
          else if (diss.size() < 6 && p_adisj(g[i].T(), g[j].T()))
            diss.push_back({&g[i], &g[j]});
        }
    }
    auto wname = [](const Pair& p, const Pair& q) {
      return p.a->cs->name + "~" + p.b->cs->name + " x " + q.a->cs->name +
             "," + q.b->cs->name;
    };
    for (auto& p : eqs)
      for (auto& q : eqs)
        note(law[12],
             p_aeq(pc_op(p.a->T(), q.a->T(), PcOp::Times),
                   pc_op(p.b->T(), q.b->T(), PcOp::Times)),
             wname(p, q));
    for (auto& p : eqs)
      for (auto& q : diss)
        note(law[12],
             p_adisj(pc_op(p.a->T(), q.a->T(), PcOp::Times),
                     pc_op(p.b->T(), q.b->T(), PcOp::Times)),
             wname(p, q));
    for (auto& p : diss)
      for (auto& q : diss)
        note(law[12],
             p_adisj(pc_op(p.a->T(), q.a->T(), PcOp::Times),
                     pc_op(p.b->T(), q.b->T(), PcOp::Times)),
             wname(p, q));
  }

  for (int i = 1; i <= 12; ++i) {
    std::ostringstream nm;
    nm << "law" << i;
    R.checks.push_back(tally_result(nm.str(), law[i]));
  }
  R.checks.push_back(tally_result("reflexivity", refl));
  R.checks.push_back(tally_result("rel-consistency", relcons));
  return R;
}

// ---------------------------------------------------------------------
// suite: refine
// ---------------------------------------------------------------------

namespace {

bool pres_member(const FinitePresentation& P, const Pt& pt) {
  for (auto& f : P.fibers)
    if (in_pcset(f.T, pt)) return true;
  return false;
}

std::vector<Component> pres_tops(const FinitePresentation& P) {
  std::vector<Component> u;
  for (auto& f : P.fibers) u = union_comps(u, closure_of(f.T));
  return tops_of(u);
}

}  // namespace

SuiteReport suite_refine() {
  SuiteReport R{"refine"};
  const auto& corpus = lies_corpus();

  // presentations: consecutive chunks of the corpus per ambient dimension
  std::vector<std::pair<std::string, FinitePresentation>> cases;
  {
    std::map<long, std::vector<const CorpusSet*>> by_n;
    for (auto& s : corpus) by_n[s.n].push_back(&s);
    for (auto& [n, sets] : by_n) {
      for (size_t base = 0; base < sets.size(); base += 4) {
        FinitePresentation P;
        P.n = n;
        for (size_t i = base; i < std::min(base + 4, sets.size()); ++i)
          P.fibers.push_back({sets[i]->name, sets[i]->T});
        std::ostringstream nm;
        nm << "n" << n << "-chunk" << (base / 4);
        cases.push_back({nm.str(), std::move(P)});
      }
    }
  }

  Tally essdisj, geom, points, closures;
  for (auto& [name, P] : cases) {
    // sample points: all samples of the participating sets plus probes
    std::vector<Pt> probes;
    for (auto& s : corpus) {
      if (s.n != P.n) continue;
      bool in_case = false;
      for (auto& f : P.fibers)
        if (f.label == s.name) in_case = true;
      if (!in_case) continue;
      for (auto& pt : s.samples) probes.push_back(pt);
    }
    {
      Pt far1(P.n, Rat(5)), far2(P.n, Rat(0));
      far1[0] = Rat(5);
      far2[0] = Rat(7);
      if (P.n > 1) far2[1] = Rat(11);
      probes.push_back(far1);
      probes.push_back(far2);
    }
    std::vector<char> before;
    for (auto& pt : probes) before.push_back(pres_member(P, pt));
    auto tops0 = pres_tops(P);

    FinitePresentation R1 = refine_essentially_disjoint(P);
    note(essdisj, is_essentially_disjoint(R1), name);
    FinitePresentation R2 = refine_geometric(R1);
    note(geom, is_geometric(R2) && is_essentially_disjoint(R2), name);

    for (auto* Q : {&R1, &R2}) {
      bool ok = true;
      for (size_t i = 0; i < probes.size(); ++i)
        if ((char)pres_member(*Q, probes[i]) != before[i]) ok = false;
      note(points, ok, name);
      note(closures, comp_sets_equal(pres_tops(*Q), tops0), name);
    }
  }
  R.checks.push_back(tally_result("essentially-disjoint", essdisj));
  R.checks.push_back(tally_result("geometric", geom));
  R.checks.push_back(tally_result("union-points-preserved", points));
  R.checks.push_back(tally_result("union-closure-preserved", closures));

  // the two-line example: refine {L1 u L2} to gr = w, gd = 2
  {
    long n = 2;
    QPoly x1 = QPoly::var(n, 0, Rat(1)), x2 = QPoly::var(n, 1, Rat(1));
    FinitePresentation P;
    P.n = n;
    P.fibers.push_back({"a", pcv(n, {lincomp(n, {x2}), lincomp(n, {x1})})});
    FinitePresentation G = refine_geometric(refine_essentially_disjoint(P));
    auto [gr, gd] = presentation_gr_gd(G);
    bool ok = is_geometric(G) && gr == Ordinal2::of(1, 0) && gd == 2;
    R.checks.push_back({"two-line-example", ok,
                        "gr=" + gr.str() + " gd=" + std::to_string(gd)});
  }
  return R;
}

// ---------------------------------------------------------------------
// suite: rank
// ---------------------------------------------------------------------

namespace {

RankDescriptorPtr rnd_desc(std::mt19937_64& g, int depth) {
  auto r = [&](long m) { return (long)(g() % m); };
  long kind = depth <= 0 ? 0 : r(8);
  if (kind <= 3) return rd_atom(r(4), 1 + r(4), r(4), 1 + r(4));
  if (kind == 4) return rd_empty();
  if (kind <= 6) {
    std::vector<RankDescriptorPtr> ch;
    long k = 2 + r(2);
    for (long i = 0; i < k; ++i) ch.push_back(rnd_desc(g, depth - 1));
    return kind == 5 ? rd_union(std::move(ch), 0)
                     : rd_disjoint_union(std::move(ch));
  }
  return rd_product(rnd_desc(g, depth - 1), rnd_desc(g, depth - 1));
}

Ordinal2 ord_prod(const Ordinal2& a, const Ordinal2& b) {
  if (a.bottom || b.bottom) return Ordinal2::bot();
  return Ordinal2::of(a.rho_K + b.rho_K, a.rho_F + b.rho_F);
}

}  // namespace

SuiteReport suite_rank(long trials, unsigned long seed) {
  SuiteReport R{"rank"};
  std::mt19937_64 gen(seed);

  Tally prod, uni;
  for (long t = 0; t < trials; ++t) {
    RankDescriptorPtr a = rnd_desc(gen, 2), b = rnd_desc(gen, 2);
    Ordinal2 pa = gr_eval(a), pb = gr_eval(b);
    Ordinal2 gp = gr_eval(rd_product(a, b));
    bool ok = gp == ord_prod(pa, pb) && gp == gr_eval(rd_product(b, a));
    note(prod, ok, "trial " + std::to_string(t));

    std::vector<RankDescriptorPtr> ch;
    long k = 2 + (long)(gen() % 3);
    Ordinal2 mx = Ordinal2::bot();
    for (long i = 0; i < k; ++i) {
      ch.push_back(rnd_desc(gen, 2));
      mx = ord_max(mx, gr_eval(ch.back()));
    }
    note(uni, gr_eval(rd_union(ch, 0)) == mx, "trial " + std::to_string(t));
  }
  R.checks.push_back(tally_result("product-law", prod));
  R.checks.push_back(tally_result("union-max", uni));

  {
    Tally cr;
    for (long m = 1; m <= 3; ++m)
      for (long k = 0; k <= 3; ++k) {
        Ordinal2 got =
            gr_eval(rd_product(rd_atom(m - 1, 1, 0, 1), rd_atom(0, 1, k, 1)));
        std::ostringstream w;
        w << "m=" << m << ",k=" << k;
        note(cr, got == Ordinal2::of(m - 1, k), w.str());
      }
    R.checks.push_back(tally_result("cr-identity", cr));
  }

  // concrete vs symbolic on the corpus: refine each set, then compare the
  // presentation's (gr, gd) with the induced disjoint-union descriptor
  {
    Tally agree;
    for (auto& s : lies_corpus()) {
      FinitePresentation P;
      P.n = s.n;
      P.fibers.push_back({s.name, s.T});
      FinitePresentation G = refine_geometric(refine_essentially_disjoint(P));
      auto [gr, gd] = presentation_gr_gd(G);
      RankDescriptorPtr d;
      if (G.fibers.empty()) {
        d = rd_empty();
      } else {
        std::optional<long> rmax;
        for (auto& f : G.fibers) {
          auto r = pc_rank_deg(f.T).r_K;
          if (r && (!rmax || *r > *rmax)) rmax = r;
        }
        std::vector<RankDescriptorPtr> ch;
        for (size_t i = 0; i < primary_quotient(G).size(); ++i)
          ch.push_back(rd_atom(rmax ? *rmax : 0, 1, 0, 1));
        d = rd_disjoint_union(std::move(ch));
      }
      bool ok = gr_eval(d) == gr && (gr.bottom || gd_eval(d) == gd);
      note(agree, ok, s.name);
    }
    R.checks.push_back(tally_result("corpus-agreement", agree));
  }
  return R;
}

}  // namespace charkit
