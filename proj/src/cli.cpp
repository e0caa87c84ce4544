#include "charkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charkit/character.hpp"
#include "charkit/ideal.hpp"
#include "charkit/mann.hpp"
#include "charkit/ordinal.hpp"
#include "charkit/parse.hpp"
#include "charkit/pcset.hpp"
#include "charkit/units.hpp"
#include "charkit/verify.hpp"
#include "json.hpp"

namespace charkit {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  std::vector<std::string> trimmed;
  for (auto& p : out) {
    size_t a = p.find_first_not_of(" \t");
    size_t b = p.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    trimmed.push_back(p.substr(a, b - a + 1));
  }
  return trimmed;
}

Unit parse_unit(const std::string& s) {
  if (s.rfind("z(", 0) == 0) return parse_root(s);
  if (s.rfind("fq(", 0) == 0) return parse_fq(s);
  if (!s.empty() && (std::isdigit((unsigned char)s[0]) || s[0] == '-')) {
    Rat q = parse_rat(s);
    if (q == 0) throw std::invalid_argument("zero is not a unit");
    return q;
  }
  // formal unit: name[:order][:t]
  auto parts = split(s, ':');
  if (parts.empty()) throw std::invalid_argument("empty unit token");
  FormalUnit u{parts[0], 0, false};
  for (size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] == "t")
      u.transcendental = true;
    else
      u.order = std::stol(parts[i]);
  }
  return u;
}

std::vector<Unit> parse_units(const std::string& s) {
  std::vector<Unit> out;
  for (auto& p : split(s, ',')) out.push_back(parse_unit(p));
  return out;
}

std::vector<RootOfUnity> parse_roots(const std::string& s) {
  std::vector<RootOfUnity> out;
  for (auto& p : split(s, ',')) out.push_back(parse_root(p));
  return out;
}

std::vector<Rat> parse_rats(const std::string& s) {
  std::vector<Rat> out;
  for (auto& p : split(s, ',')) out.push_back(parse_rat(p));
  return out;
}

Expo parse_expo(const std::string& s) {
  Expo e;
  for (auto& p : split(s, ',')) e.push_back((int)std::stol(p));
  return e;
}

// Parse a ';'-separated polynomial system with a shared variable count.
std::vector<QPoly> parse_qsystem(const std::string& s, long nvars) {
  auto parts = split(s, ';');
  long n = nvars;
  if (n == 0)
    for (auto& p : parts) n = std::max(n, parse_qpoly(p).nvars);
  if (n == 0) n = 1;
  std::vector<QPoly> out;
  for (auto& p : parts) out.push_back(parse_qpoly(p, n));
  return out;
}

std::vector<CPoly> parse_csystem(const std::string& s, long& k) {
  auto parts = split(s, ';');
  if (k == 0)
    for (auto& p : parts) k = std::max(k, parse_cpoly(p).nvars);
  if (k == 0) k = 1;
  std::vector<CPoly> out;
  for (auto& p : parts) out.push_back(parse_cpoly(p, k));
  return out;
}

Ideal make_ideal(const std::string& gens, long nvars) {
  Ideal I;
  I.gens = parse_qsystem(gens, nvars);
  I.nvars = I.gens.empty() ? std::max<long>(nvars, 1) : I.gens[0].nvars;
  return I;
}

std::string comp_str(const Component& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.ideal.gens.size(); ++i)
    s += (i ? ", " : "") + poly_str(c.ideal.gens[i]);
  return s + "}";
}

FinitePresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

void apply_limits(const char* spec) {
  if (!spec || !*spec) return;
  for (auto& kv : split(spec, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("CHARKIT_LIMITS: expected key=value");
    std::string k = kv.substr(0, eq);
    long v = std::stol(kv.substr(eq + 1));
    if (k == "gb_pairs")
      groebner_limits.max_pairs = v;
    else if (k == "gb_basis")
      groebner_limits.max_basis = v;
    else if (k == "gb_degree")
      groebner_limits.max_degree = (int)v;
    else if (k == "conductor")
      Cyclo::max_conductor = v;
    else if (k == "fq_max")
      fq_max_size = v;
    else if (k == "factor_bound")
      unit_factor_bound = v;
    else if (k == "mann_arity")
      mann_arity_budget = v;
    else
      throw std::invalid_argument("CHARKIT_LIMITS: unknown key " + k);
  }
}

std::string rep_str(const FqRep& r) {
  std::string s = "fq(" + std::to_string(r.p) + "," + std::to_string(r.n) + ",[";
  for (size_t i = 0; i < r.c.size(); ++i)
    s += (i ? "," : "") + std::to_string(r.c[i]);
  return s + "])";
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> cmds = {
      "chi",   "fq",       "cyclo", "mtp",   "mcl",  "mann", "generic",
      "axiom", "pullback", "ideal", "pcset", "rank", "verify"};
  return cmds;
}

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"charkit: exact character, unit, ideal and rank computations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured (JSON) output");

  std::vector<std::string> lines;
  json data;
  int rc = 0;

  // ---- chi ----
  auto* c_chi = app.add_subcommand("chi", "evaluate the character / preimage");
  long chi_p = 0;
  std::string chi_elem, chi_root;
  c_chi->add_option("--p", chi_p, "characteristic")->required();
  c_chi->add_option("--elem", chi_elem, "field element fq(p,n,[...])");
  c_chi->add_option("--root", chi_root, "root of unity z(a/m) for preimage");
  c_chi->callback([&] {
    CharContext ctx{chi_p};
    if (!chi_root.empty()) {
      auto a = chi_preimage(ctx, parse_root(chi_root));
      lines.push_back(a ? a->str() : "none");
      data = {{"preimage", a ? json(a->str()) : json(nullptr)}};
    } else if (!chi_elem.empty()) {
      Cyclo v = chi(ctx, parse_fq(chi_elem));
      std::string s = v.is_zero() ? "0" : v.as_root_of_unity()->str();
      lines.push_back(s);
      data = {{"value", s}};
    } else {
      throw CLI::ValidationError("chi: need --elem or --root");
    }
  });

  // ---- fq ----
  auto* c_fq = app.add_subcommand("fq", "finite-field arithmetic");
  c_fq->require_subcommand(1);
  std::string fq_a, fq_b, fq_elem;
  long fq_p = 2, fq_n = 1, fq_to = 1;
  auto* fq_mul = c_fq->add_subcommand("mul", "a * b");
  fq_mul->add_option("--a", fq_a)->required();
  fq_mul->add_option("--b", fq_b)->required();
  fq_mul->callback([&] {
    lines.push_back((parse_fq(fq_a) * parse_fq(fq_b)).str());
    data = {{"value", lines.back()}};
  });
  auto* fq_add = c_fq->add_subcommand("add", "a + b");
  fq_add->add_option("--a", fq_a)->required();
  fq_add->add_option("--b", fq_b)->required();
  fq_add->callback([&] {
    lines.push_back((parse_fq(fq_a) + parse_fq(fq_b)).str());
    data = {{"value", lines.back()}};
  });
  auto* fq_inv = c_fq->add_subcommand("inv", "multiplicative inverse");
  fq_inv->add_option("--elem", fq_elem)->required();
  fq_inv->callback([&] {
    lines.push_back(parse_fq(fq_elem).inverse().str());
    data = {{"value", lines.back()}};
  });
  auto* fq_dl = c_fq->add_subcommand("dlog", "discrete log in the minimal field");
  fq_dl->add_option("--elem", fq_elem)->required();
  fq_dl->callback([&] {
    lines.push_back(fq_dlog(parse_fq(fq_elem)).get_str());
    data = {{"value", lines.back()}};
  });
  auto* fq_em = c_fq->add_subcommand("embed", "embed into F_{p^n}");
  fq_em->add_option("--elem", fq_elem)->required();
  fq_em->add_option("--n", fq_to, "target degree")->required();
  fq_em->callback([&] {
    lines.push_back(rep_str(fq_embed(parse_fq(fq_elem), fq_to)));
    data = {{"value", lines.back()}};
  });
  auto* fq_gn = c_fq->add_subcommand("gen", "Conway generator of F_{p^n}");
  fq_gn->add_option("--p", fq_p)->required();
  fq_gn->add_option("--n", fq_n)->required();
  fq_gn->callback([&] {
    lines.push_back(fq_gen(fq_p, fq_n).str());
    data = {{"value", lines.back()}};
  });
  auto* fq_cw = c_fq->add_subcommand("conway", "Conway polynomial coefficients");
  fq_cw->add_option("--p", fq_p)->required();
  fq_cw->add_option("--n", fq_n)->required();
  fq_cw->callback([&] {
    std::string s;
    for (long c : conway_poly(fq_p, fq_n)) s += (s.empty() ? "" : ",") + std::to_string(c);
    lines.push_back(s);
    data = {{"coeffs", conway_poly(fq_p, fq_n)}};
  });
  auto* fq_el = c_fq->add_subcommand("elements", "all elements of F_{p^n}");
  fq_el->add_option("--p", fq_p)->required();
  fq_el->add_option("--n", fq_n)->required();
  fq_el->callback([&] {
    json arr = json::array();
    for (auto& a : fq_all_elements(fq_p, fq_n)) {
      lines.push_back(a.str());
      arr.push_back(a.str());
    }
    data = {{"elements", arr}};
  });

  // ---- cyclo ----
  auto* c_cy = app.add_subcommand("cyclo", "cyclotomic arithmetic");
  c_cy->require_subcommand(1);
  std::string cy_expr;
  long cy_k = 1;
  auto* cy_ev = c_cy->add_subcommand("eval", "canonical form of an expression");
  cy_ev->add_option("--expr", cy_expr)->required();
  cy_ev->callback([&] {
    CPoly p = parse_cpoly(cy_expr);
    if (p.nvars != 0) throw std::invalid_argument("cyclo eval: not constant");
    Cyclo v = p.is_zero() ? Cyclo::zero() : p.terms.begin()->second;
    lines.push_back(v.str());
    data = {{"value", lines.back()}};
  });
  auto* cy_po = c_cy->add_subcommand("poly", "k-th cyclotomic polynomial");
  cy_po->add_option("--k", cy_k)->required();
  cy_po->callback([&] {
    lines.push_back(poly_str(cyclotomic_poly(cy_k)));
    data = {{"value", lines.back()}};
  });
  auto* cy_ph = c_cy->add_subcommand("phi", "Euler phi");
  cy_ph->add_option("--k", cy_k)->required();
  cy_ph->callback([&] {
    lines.push_back(std::to_string(euler_phi(cy_k)));
    data = {{"value", euler_phi(cy_k)}};
  });

  // ---- mtp ----
  auto* c_mtp = app.add_subcommand("mtp", "multiplicative type: relation lattice");
  std::string mtp_units, mtp_over;
  c_mtp->add_option("--units", mtp_units, "comma-separated unit list")->required();
  c_mtp->add_option("--over", mtp_over, "base group generators");
  c_mtp->callback([&] {
    IntMatrix h = relation_lattice(parse_units(mtp_units), parse_units(mtp_over));
    lines.push_back(h.str());
    data = {{"hnf", lines.back()}};
  });

  // ---- mcl ----
  auto* c_mcl = app.add_subcommand("mcl", "multiplicative closure queries");
  std::string mcl_elem, mcl_set, mcl_base;
  bool mcl_basis = false, mcl_indep = false;
  c_mcl->add_option("--elem", mcl_elem, "membership: is elem in mcl(set)?");
  c_mcl->add_option("--set", mcl_set)->required();
  c_mcl->add_option("--base", mcl_base, "base group generators");
  c_mcl->add_flag("--basis", mcl_basis, "greedy multiplicative basis of set");
  c_mcl->add_flag("--indep", mcl_indep, "is set multiplicatively independent?");
  c_mcl->callback([&] {
    auto A = parse_units(mcl_set);
    auto B = parse_units(mcl_base);
    if (mcl_basis) {
      std::string s;
      for (auto& u : mult_basis(A, B)) s += (s.empty() ? "" : ",") + unit_str(u);
      lines.push_back(s);
      data = {{"basis", s}};
    } else if (mcl_indep) {
      bool r = is_mult_independent(A, B);
      lines.push_back(r ? "true" : "false");
      data = {{"independent", r}};
    } else if (!mcl_elem.empty()) {
      bool r = mcl_member(parse_unit(mcl_elem), A, B);
      lines.push_back(r ? "true" : "false");
      data = {{"member", r}};
    } else {
      throw CLI::ValidationError("mcl: need --elem, --basis or --indep");
    }
  });

  // ---- mann ----
  auto* c_mann = app.add_subcommand("mann", "unit-equation solving");
  c_mann->require_subcommand(1);
  auto* mn_solve = c_mann->add_subcommand("solve", "solve c.x = 1 in roots of unity");
  std::string mn_coeffs;
  mn_solve->add_option("--coeffs", mn_coeffs, "rational coefficients, comma separated")
      ->required();
  mn_solve->callback([&] {
    MannSolutionSet s = mann_solve(parse_rats(mn_coeffs));
    json arr = json::array();
    for (auto& sol : s.solutions) {
      std::string line;
      json jt = json::array();
      for (auto& r : sol) {
        line += (line.empty() ? "" : ",") + r.str();
        jt.push_back(r.str());
      }
      lines.push_back(line);
      arr.push_back(jt);
    }
    data = {{"solutions", arr}, {"bound", s.bound_used}};
  });

  // ---- generic ----
  auto* c_gen = app.add_subcommand("generic", "genericity of <G> over <H>");
  std::string gn_g, gn_h;
  c_gen->add_option("--g", gn_g, "generators of G")->required();
  c_gen->add_option("--over", gn_h, "generators of the base group H");
  c_gen->callback([&] {
    GenericityResult r = genericity_check(parse_units(gn_g), parse_units(gn_h));
    if (r.generic) {
      lines.push_back("generic");
      data = {{"generic", true}};
    } else {
      std::string w = r.witness ? unit_str(*r.witness) : "";
      lines.push_back("not generic (witness: " + w + ")");
      data = {{"generic", false}, {"witness", w}};
    }
  });

  // ---- axiom ----
  auto* c_ax = app.add_subcommand("axiom", "verify an axiom-scheme instance");
  long ax_p = 2, ax_n = 1, ax_nmax = 2;
  std::string ax_coeffs;
  c_ax->add_option("--p", ax_p)->required();
  c_ax->add_option("--n", ax_n, "arity")->required();
  c_ax->add_option("--nmax", ax_nmax, "restrict chi to degrees <= nmax");
  c_ax->add_option("--coeffs", ax_coeffs, "single coefficient vector (default: pool)");
  c_ax->callback([&] {
    std::vector<std::vector<Rat>> pool;
    if (!ax_coeffs.empty()) {
      pool.push_back(parse_rats(ax_coeffs));
      if ((long)pool[0].size() != ax_n)
        throw std::invalid_argument("axiom: coefficient arity mismatch");
    } else {
      const std::vector<Rat> vals = {Rat(1),    Rat(-1),   Rat(2),    Rat(-2),
                                     Rat(1, 2), Rat(-1, 2), Rat(1, 3), Rat(-1, 3)};
      std::vector<long> ix(ax_n, 0);
      bool more = true;
      while (more) {
        std::vector<Rat> c;
        for (long i = 0; i < ax_n; ++i) c.push_back(vals[ix[i]]);
        pool.push_back(std::move(c));
        long d = 0;
        while (d < ax_n && ++ix[d] == (long)vals.size()) ix[d++] = 0;
        more = d < ax_n;
      }
    }
    std::vector<RootOfUnity> wit;
    bool ok = axiom_instance(CharContext{ax_p}, ax_n, pool, ax_nmax, &wit);
    if (ok) {
      lines.push_back("true");
      data = {{"holds", true}};
    } else {
      std::string w;
      for (auto& r : wit) w += (w.empty() ? "" : ",") + r.str();
      lines.push_back("false (witness: " + w + ")");
      data = {{"holds", false}, {"witness", w}};
    }
  });

  // ---- pullback ----
  auto* c_pb = app.add_subcommand("pullback", "pull a system back through chi");
  long pb_p = 2, pb_k = 0;
  std::string pb_sys;
  c_pb->add_option("--p", pb_p)->required();
  c_pb->add_option("--system", pb_sys, "';'-separated system in w1..wk")->required();
  c_pb->add_option("--k", pb_k, "variable count (default: inferred)");
  c_pb->callback([&] {
    auto P = parse_csystem(pb_sys, pb_k);
    auto Q = char_pullback(CharContext{pb_p}, P, pb_k);
    json arr = json::array();
    for (auto& q : Q) {
      lines.push_back(fpoly_str(q));
      arr.push_back(lines.back());
    }
    data = {{"system", arr}};
  });

  // ---- ideal ----
  auto* c_id = app.add_subcommand("ideal", "Groebner-based ideal computations");
  c_id->require_subcommand(1);
  std::string id_gens, id_poly, id_roots, id_m, id_n;
  long id_nvars = 0, id_k = 1;
  bool id_radical = false;
  auto* id_mem = c_id->add_subcommand("member", "ideal / radical membership");
  id_mem->add_option("--gens", id_gens, "';'-separated generators")->required();
  id_mem->add_option("--poly", id_poly)->required();
  id_mem->add_option("--nvars", id_nvars);
  id_mem->add_flag("--radical", id_radical);
  id_mem->callback([&] {
    Ideal I = make_ideal(id_gens, id_nvars);
    QPoly p = parse_qpoly(id_poly, I.nvars);
    bool r = id_radical ? radical_member(p, I) : ideal_member(p, I);
    lines.push_back(r ? "true" : "false");
    data = {{"member", r}};
  });
  auto* id_gb = c_id->add_subcommand("gb", "reduced Groebner basis");
  id_gb->add_option("--gens", id_gens)->required();
  id_gb->add_option("--nvars", id_nvars);
  id_gb->callback([&] {
    Ideal I = make_ideal(id_gens, id_nvars);
    json arr = json::array();
    for (auto& g : groebner(I)) {
      lines.push_back(poly_str(g));
      arr.push_back(lines.back());
    }
    data = {{"basis", arr}};
  });
  auto* id_dim = c_id->add_subcommand("dim", "Krull dimension");
  id_dim->add_option("--gens", id_gens)->required();
  id_dim->add_option("--nvars", id_nvars);
  id_dim->callback([&] {
    Ideal I = make_ideal(id_gens, id_nvars);
    auto d = ideal_dim(I);
    lines.push_back(d ? std::to_string(*d) : "-inf");
    data = {{"dim", d ? json(*d) : json(nullptr)}};
  });
  auto* id_sp = c_id->add_subcommand("special", "special polynomial for monomials");
  id_sp->add_option("--m", id_m, "exponent vector of M")->required();
  id_sp->add_option("--n", id_n, "exponent vector of N")->required();
  id_sp->add_option("--k", id_k)->required();
  id_sp->callback([&] {
    lines.push_back(poly_str(special_poly(parse_expo(id_m), parse_expo(id_n), id_k)));
    data = {{"poly", lines.back()}};
  });
  auto* id_ty = c_id->add_subcommand("type", "type ideals of a torsion tuple");
  id_ty->add_option("--roots", id_roots, "comma-separated roots of unity")->required();
  id_ty->callback([&] {
    auto g = parse_roots(id_roots);
    auto [Ig, Jg] = type_ideals(g);
    std::vector<std::string> names;
    for (long i = 1; i < Ig.nvars; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("t");
    json ji = json::array(), jj = json::array();
    for (auto& p : Ig.gens) {
      lines.push_back("I: " + poly_str(p, names));
      ji.push_back(poly_str(p, names));
    }
    for (auto& p : Jg.gens) {
      lines.push_back("J: " + poly_str(p));
      jj.push_back(poly_str(p));
    }
    data = {{"I", ji}, {"J", jj}};
  });
  auto* id_tm = c_id->add_subcommand("typemember", "membership in the type ideals");
  id_tm->add_option("--roots", id_roots)->required();
  id_tm->add_option("--poly", id_poly)->required();
  id_tm->callback([&] {
    auto g = parse_roots(id_roots);
    auto [Ig, Jg] = type_ideals(g);
    QPoly p = parse_qpoly(id_poly, (long)g.size());
    bool in_i = type_ideal_member(p, Ig);
    bool in_j = radical_member(p, Jg);
    lines.push_back(std::string("I:") + (in_i ? "true" : "false") + " J:" +
                    (in_j ? "true" : "false"));
    data = {{"I", in_i}, {"J", in_j}};
  });

  // ---- pcset ----
  auto* c_pc = app.add_subcommand("pcset", "pseudo-constructible set calculus");
  c_pc->require_subcommand(1);
  std::string pc_file;
  bool pc_geometric = false;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("--file", pc_file, "presentation JSON file")->required();
  };
  auto* pc_cl = c_pc->add_subcommand("closure", "K-closure per fiber");
  add_file(pc_cl);
  pc_cl->callback([&] {
    FinitePresentation P = load_presentation(pc_file);
    json obj = json::object();
    for (auto& f : P.fibers) {
      PcSet T = f.T;
      AlgSet C = pc_closure(T);
      std::string s;
      json arr = json::array();
      for (auto& c : C.comps) {
        s += (s.empty() ? "" : " ") + comp_str(c);
        arr.push_back(comp_str(c));
      }
      lines.push_back(f.label + ": " + (s.empty() ? "{}" : s));
      obj[f.label] = arr;
    }
    data = {{"closure", obj}};
  });
  auto* pc_rk = c_pc->add_subcommand("rank", "K-rank and degree per fiber");
  add_file(pc_rk);
  pc_rk->callback([&] {
    FinitePresentation P = load_presentation(pc_file);
    json obj = json::object();
    for (auto& f : P.fibers) {
      RankDeg r = pc_rank_deg(f.T);
      std::string rs = r.r_K ? std::to_string(*r.r_K) : "-inf";
      lines.push_back(f.label + ": r=" + rs + " d=" + std::to_string(r.d_K));
      obj[f.label] = {{"r", r.r_K ? json(*r.r_K) : json(nullptr)}, {"d", r.d_K}};
    }
    data = {{"rank", obj}};
  });
  auto* pc_rel2 = c_pc->add_subcommand("rel", "compare the first two fibers");
  add_file(pc_rel2);
  pc_rel2->callback([&] {
    FinitePresentation P = load_presentation(pc_file);
    if (P.fibers.size() < 2)
      throw std::invalid_argument("pcset rel: need at least two fibers");
    PcRel r = pc_rel(P.fibers[0].T, P.fibers[1].T);
    lines.push_back(pc_rel_str(r));
    data = {{"rel", pc_rel_str(r)}};
  });
  auto* pc_rf = c_pc->add_subcommand("refine", "refine the presentation");
  add_file(pc_rf);
  pc_rf->add_flag("--geometric", pc_geometric,
                  "also split to a geometric presentation");
  pc_rf->callback([&] {
    FinitePresentation P = load_presentation(pc_file);
    FinitePresentation R = refine_essentially_disjoint(P);
    if (pc_geometric) R = refine_geometric(R);
    std::string j = presentation_json(R);
    lines.push_back(j);
    data = json::parse(j);
  });
  auto* pc_q = c_pc->add_subcommand("quotient", "primary index quotient");
  add_file(pc_q);
  pc_q->callback([&] {
    FinitePresentation P = refine_essentially_disjoint(load_presentation(pc_file));
    json arr = json::array();
    for (auto& cls : primary_quotient(P)) {
      std::string s;
      json jc = json::array();
      for (auto& l : cls) {
        s += (s.empty() ? "" : " ") + l;
        jc.push_back(l);
      }
      lines.push_back(s);
      arr.push_back(jc);
    }
    data = {{"classes", arr}};
  });
  auto* pc_g = c_pc->add_subcommand("grgd", "geometric rank and degree");
  add_file(pc_g);
  pc_g->callback([&] {
    FinitePresentation P =
        refine_geometric(refine_essentially_disjoint(load_presentation(pc_file)));
    auto [gr, gd] = presentation_gr_gd(P);
    lines.push_back("gr=" + gr.str() + " gd=" + std::to_string(gd));
    data = {{"gr", gr.str()}, {"gd", gd}};
  });

  // ---- rank ----
  auto* c_rk = app.add_subcommand("rank", "ordinal rank calculus");
  c_rk->require_subcommand(1);
  std::string rk_expr;
  auto* rk_ev = c_rk->add_subcommand("eval", "geometric rank of a descriptor");
  rk_ev->add_option("--expr", rk_expr)->required();
  rk_ev->callback([&] {
    lines.push_back(gr_eval(parse_rank_expr(rk_expr)).str());
    data = {{"gr", lines.back()}};
  });
  auto* rk_gd = c_rk->add_subcommand("gd", "geometric degree of a descriptor");
  rk_gd->add_option("--expr", rk_expr)->required();
  rk_gd->callback([&] {
    lines.push_back(std::to_string(gd_eval(parse_rank_expr(rk_expr))));
    data = {{"gd", gd_eval(parse_rank_expr(rk_expr))}};
  });

  // ---- verify ----
  auto* c_vf = app.add_subcommand("verify", "run an acceptance suite");
  std::string vf_name;
  long vf_p = 2, vf_nmax = 4, vf_n = 2, vf_trials = 1000, vf_seed = 20260823;
  c_vf->add_option("name", vf_name, "character|mann|lies|refine|rank")->required();
  c_vf->add_option("--p", vf_p);
  c_vf->add_option("--nmax", vf_nmax);
  c_vf->add_option("--n", vf_n);
  c_vf->add_option("--trials", vf_trials);
  c_vf->add_option("--seed", vf_seed);
  c_vf->callback([&] {
    SuiteReport r;
    if (vf_name == "character")
      r = suite_character(vf_p, vf_nmax);
    else if (vf_name == "mann")
      r = suite_mann(vf_n);
    else if (vf_name == "lies")
      r = suite_lies();
    else if (vf_name == "refine")
      r = suite_refine();
    else if (vf_name == "rank")
      r = suite_rank(vf_trials, (unsigned long)vf_seed);
    else
      throw CLI::ValidationError("verify: unknown suite " + vf_name);
    std::istringstream ss(suite_text(r));
    json arr = json::array();
    std::string line;
    while (std::getline(ss, line)) {
      lines.push_back(line);
      arr.push_back(line);
    }
    data = {{"suite", r.suite}, {"pass", r.pass()}, {"report", arr}};
    if (!r.pass()) rc = 1;
  });

  std::vector<const char*> argv;
  argv.push_back("charkit");
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (as_json) {
    if (data.is_null()) data = {{"lines", lines}};
    out << data.dump() << "\n";
  } else {
    for (auto& l : lines) out << l << "\n";
  }
  return rc;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace charkit
