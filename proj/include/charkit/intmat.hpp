#pragma once

#include <optional>
#include <vector>

#include "charkit/rat.hpp"

namespace charkit {

// Dense matrix of arbitrary-precision integers, row-major.
struct IntMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<Int> e;

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), e(r * c) {}
  IntMatrix(std::vector<std::vector<long>> m);

  Int& at(long i, long j) { return e[i * cols + j]; }
  const Int& at(long i, long j) const { return e[i * cols + j]; }

  bool operator==(const IntMatrix& o) const = default;
  std::string str() const;
};

// Row Hermite normal form of the lattice spanned by the rows: row echelon,
// positive pivots, entries above each pivot reduced into [0, pivot),
// zero rows dropped.
IntMatrix hnf(const IntMatrix& m);

// HNF together with a unimodular U such that U * m has the HNF as its
// leading rows and zero rows below.  Used for kernel extraction.
struct HnfResult {
  IntMatrix h;  // hnf, zero rows dropped
  IntMatrix u;  // full square transform, u * input = (h ; 0)
  long rank = 0;
};
HnfResult hnf_transform(const IntMatrix& m);

// Basis (HNF rows) of { x : x * m = 0 }, x a row vector of length m.rows.
IntMatrix left_kernel(const IntMatrix& m);

// HNF basis of { v in Z^n : sum a_i v_i = 0 (mod m) }, m >= 1.
// Always full rank n with index dividing m.
IntMatrix kernel_mod(const std::vector<Int>& a, const Int& m);

// Is v in the row lattice of h? h must be in HNF.
bool lattice_contains(const IntMatrix& h, const std::vector<Int>& v);

// Lattice of all integer vectors of length n (identity basis).
IntMatrix full_lattice(long n);

}  // namespace charkit
