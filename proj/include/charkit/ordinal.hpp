#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace charkit {

// Ordinal below omega^2, or BOTTOM (= -infinity, rank of the empty set).
// A non-bottom value (rho_K, rho_F) denotes omega*rho_K + rho_F.
struct Ordinal2 {
  bool bottom = true;
  long rho_K = 0;
  long rho_F = 0;

  static Ordinal2 bot() { return {}; }
  static Ordinal2 of(long k, long f) { return {false, k, f}; }

  bool operator==(const Ordinal2& o) const {
    if (bottom != o.bottom) return false;
    return bottom || (rho_K == o.rho_K && rho_F == o.rho_F);
  }
  std::string str() const;  // "-inf" or "w*k+f"
};

int ord_compare(const Ordinal2& a, const Ordinal2& b);  // -1, 0, 1
Ordinal2 ord_max(const Ordinal2& a, const Ordinal2& b);

// Symbolic descriptor of a definable set's rank structure.
struct RankDescriptor;
using RankDescriptorPtr = std::shared_ptr<const RankDescriptor>;

struct RankDescriptor {
  enum Kind { Atom, Union, Product, DisjointUnion } kind = Atom;
  // Atom fields
  long rho_K = 0, d_K = 1, rho_F = 0, d_F = 1;
  bool empty = false;  // an empty atom evaluates to BOTTOM
  // children (Union/DisjointUnion: any number; Product: exactly 2)
  std::vector<RankDescriptorPtr> children;
  // Union only: declared gd of the pairwise overlap, needed when children
  // tie at the maximal rank (inclusion-exclusion input)
  std::optional<long> overlap_gd;
};

RankDescriptorPtr rd_atom(long rho_K, long d_K, long rho_F, long d_F);
RankDescriptorPtr rd_empty();
RankDescriptorPtr rd_union(std::vector<RankDescriptorPtr> children,
                           std::optional<long> overlap_gd = std::nullopt);
RankDescriptorPtr rd_product(RankDescriptorPtr a, RankDescriptorPtr b);
RankDescriptorPtr rd_disjoint_union(std::vector<RankDescriptorPtr> children);

// Geometric rank: Atom -> (rho_K, rho_F); Union/DisjointUnion -> max of
// children; Product -> componentwise sum; BOTTOM absorbing for products,
// neutral for unions.
Ordinal2 gr_eval(const RankDescriptorPtr& d);

// Geometric degree.  Atom -> d_F; DisjointUnion -> sum over children of
// maximal rank (lower ranks contribute 0); Union -> inclusion-exclusion
// with the declared overlap; Product -> std::invalid_argument (no proven
// law); missing overlap declaration -> std::invalid_argument.
long gd_eval(const RankDescriptorPtr& d);

}  // namespace charkit
