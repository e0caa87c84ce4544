#pragma once

#include <string>
#include <vector>

#include "charkit/pcset.hpp"
#include "charkit/rat.hpp"

namespace charkit {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // counts, or the first counterexample witness
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

std::string suite_text(const SuiteReport& r);

// Exhaustive character laws over all F_{p^m}, m <= n_max, plus edge cases
// and preimage round trips.
SuiteReport suite_character(long p, long n_max);

// mann_solve vs brute-force enumeration over root tuples with orders up to
// 2*d_bound(n), for arities 1..n_max_arity, coefficients from the pool
// {+-1, +-2, +-1/2, +-1/3}^n.  Exact set equality plus soundness.
SuiteReport suite_mann(long n_max_arity);

// The twelve rank/degree laws of the almost-containment calculus over the
// linear-arrangement corpus (all applicable pairs and triples).
SuiteReport suite_lies();

// Refinement algorithms: predicates hold on the output, the presented union
// is preserved (closure comparison plus exhaustive sampled points), and the
// two-line example has gr = w, gd = 2.
SuiteReport suite_refine();

// Rank calculus: product/union laws on random descriptors, the
// cr = w*(m-1)+k family, and concrete/symbolic agreement on the corpus.
SuiteReport suite_rank(long trials = 1000, unsigned long seed = 20260823);

// Shared corpus: ~50 pseudo-constructible sets cut out by linear
// arrangements (and points) in ambient dimension 2 and 3, with exact
// rational sample points on every component.
struct CorpusSet {
  std::string name;
  long n = 0;
  PcSet T;
  std::vector<std::vector<Rat>> samples;
};
const std::vector<CorpusSet>& lies_corpus();

}  // namespace charkit
