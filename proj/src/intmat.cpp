#include "charkit/intmat.hpp"

#include <sstream>
#include <stdexcept>

namespace charkit {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

IntMatrix::IntMatrix(std::vector<std::vector<long>> m) {
  rows = (long)m.size();
  cols = rows ? (long)m[0].size() : 0;
  for (auto& r : m) {
    if ((long)r.size() != cols) throw std::invalid_argument("ragged matrix");
    for (long x : r) e.emplace_back(x);
  }
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows; ++i) {
    os << (i ? ",[" : "[");
    for (long j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// In-place row HNF on mat; tracks the same row ops on u if given.
long hnf_inplace(IntMatrix& a, IntMatrix* u) {
  long r = 0;  // current pivot row
  for (long c = 0; c < a.cols && r < a.rows; ++c) {
    // gcd out column c below row r
    long piv = -1;
    for (long i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (long j = 0; j < a.cols; ++j) swap(a.at(piv, j), a.at(r, j));
      if (u)
        for (long j = 0; j < u->cols; ++j) swap(u->at(piv, j), u->at(r, j));
    }
    for (long i = r + 1; i < a.rows; ++i) {
      while (a.at(i, c) != 0) {
        Int q = a.at(r, c) / a.at(i, c);  // truncated division is fine here
        for (long j = 0; j < a.cols; ++j) a.at(r, j) -= q * a.at(i, j);
        if (u)
          for (long j = 0; j < u->cols; ++j) u->at(r, j) -= q * u->at(i, j);
        for (long j = 0; j < a.cols; ++j) swap(a.at(r, j), a.at(i, j));
        if (u)
          for (long j = 0; j < u->cols; ++j) swap(u->at(r, j), u->at(i, j));
      }
    }
    if (a.at(r, c) < 0) {
      for (long j = 0; j < a.cols; ++j) a.at(r, j) = -a.at(r, j);
      if (u)
        for (long j = 0; j < u->cols; ++j) u->at(r, j) = -u->at(r, j);
    }
    // reduce entries above the pivot into [0, pivot)
    for (long i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
      if (q != 0) {
        for (long j = 0; j < a.cols; ++j) a.at(i, j) -= q * a.at(r, j);
        if (u)
          for (long j = 0; j < u->cols; ++j) u->at(i, j) -= q * u->at(r, j);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix a = m;
  long rank = hnf_inplace(a, nullptr);
  IntMatrix out(rank, a.cols);
  for (long i = 0; i < rank; ++i)
    for (long j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  return out;
}

HnfResult hnf_transform(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u(m.rows, m.rows);
  for (long i = 0; i < m.rows; ++i) u.at(i, i) = 1;
  long rank = hnf_inplace(a, &u);
  HnfResult res;
  res.rank = rank;
  res.h = IntMatrix(rank, a.cols);
  for (long i = 0; i < rank; ++i)
    for (long j = 0; j < a.cols; ++j) res.h.at(i, j) = a.at(i, j);
  res.u = std::move(u);
  return res;
}

IntMatrix left_kernel(const IntMatrix& m) {
  HnfResult r = hnf_transform(m);
  IntMatrix k(m.rows - r.rank, m.rows);
  for (long i = r.rank; i < m.rows; ++i)
    for (long j = 0; j < m.rows; ++j) k.at(i - r.rank, j) = r.u.at(i, j);
  return hnf(k);
}

IntMatrix kernel_mod(const std::vector<Int>& a, const Int& m) {
  if (m < 1) throw std::invalid_argument("kernel_mod: modulus must be >= 1");
  long n = (long)a.size();
  // left kernel of the (n+1) x 1 column (a_1,...,a_n,m), projected to v.
  IntMatrix col(n + 1, 1);
  for (long i = 0; i < n; ++i) col.at(i, 0) = a[i];
  col.at(n, 0) = m;
  IntMatrix k = left_kernel(col);
  IntMatrix proj(k.rows, n);
  for (long i = 0; i < k.rows; ++i)
    for (long j = 0; j < n; ++j) proj.at(i, j) = k.at(i, j);
  return hnf(proj);
}

bool lattice_contains(const IntMatrix& h, const std::vector<Int>& v) {
  if ((long)v.size() != h.cols) throw std::invalid_argument("dim mismatch");
  std::vector<Int> w(v);
  long row = 0;
  for (long c = 0; c < h.cols; ++c) {
    bool is_pivot = row < h.rows && h.at(row, c) != 0;
    if (is_pivot) {
      if (w[c] % h.at(row, c) != 0) return false;
      Int q = w[c] / h.at(row, c);
      for (long j = c; j < h.cols; ++j) w[j] -= q * h.at(row, j);
      ++row;
    } else if (w[c] != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix full_lattice(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

}  // namespace charkit
