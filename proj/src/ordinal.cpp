#include "charkit/ordinal.hpp"

#include <stdexcept>

namespace charkit {

std::string Ordinal2::str() const {
  if (bottom) return "-inf";
  return "w*" + std::to_string(rho_K) + "+" + std::to_string(rho_F);
}

int ord_compare(const Ordinal2& a, const Ordinal2& b) {
  if (a.bottom && b.bottom) return 0;
  if (a.bottom) return -1;
  if (b.bottom) return 1;
  if (a.rho_K != b.rho_K) return a.rho_K < b.rho_K ? -1 : 1;
  if (a.rho_F != b.rho_F) return a.rho_F < b.rho_F ? -1 : 1;
  return 0;
}

Ordinal2 ord_max(const Ordinal2& a, const Ordinal2& b) {
  return ord_compare(a, b) >= 0 ? a : b;
}

RankDescriptorPtr rd_atom(long rho_K, long d_K, long rho_F, long d_F) {
  if (d_K < 1 || d_F < 1)
    throw std::invalid_argument("rank descriptor: degrees must be >= 1");
  if (rho_K < 0 || rho_F < 0)
    throw std::invalid_argument("rank descriptor: negative rank");
  auto d = std::make_shared<RankDescriptor>();
  d->kind = RankDescriptor::Atom;
  d->rho_K = rho_K;
  d->d_K = d_K;
  d->rho_F = rho_F;
  d->d_F = d_F;
  return d;
}

RankDescriptorPtr rd_empty() {
  auto d = std::make_shared<RankDescriptor>();
  d->kind = RankDescriptor::Atom;
  d->empty = true;
  return d;
}

RankDescriptorPtr rd_union(std::vector<RankDescriptorPtr> children,
                           std::optional<long> overlap_gd) {
  auto d = std::make_shared<RankDescriptor>();
  d->kind = RankDescriptor::Union;
  d->children = std::move(children);
  d->overlap_gd = overlap_gd;
  return d;
}

RankDescriptorPtr rd_product(RankDescriptorPtr a, RankDescriptorPtr b) {
  auto d = std::make_shared<RankDescriptor>();
  d->kind = RankDescriptor::Product;
  d->children = {std::move(a), std::move(b)};
  return d;
}

RankDescriptorPtr rd_disjoint_union(std::vector<RankDescriptorPtr> children) {
  auto d = std::make_shared<RankDescriptor>();
  d->kind = RankDescriptor::DisjointUnion;
  d->children = std::move(children);
  return d;
}

Ordinal2 gr_eval(const RankDescriptorPtr& d) {
  if (!d) throw std::invalid_argument("null rank descriptor");
  switch (d->kind) {
    case RankDescriptor::Atom:
      return d->empty ? Ordinal2::bot() : Ordinal2::of(d->rho_K, d->rho_F);
    case RankDescriptor::Union:
    case RankDescriptor::DisjointUnion: {
      Ordinal2 r = Ordinal2::bot();
      for (auto& c : d->children) r = ord_max(r, gr_eval(c));
      return r;
    }
    case RankDescriptor::Product: {
      Ordinal2 a = gr_eval(d->children.at(0));
      Ordinal2 b = gr_eval(d->children.at(1));
      if (a.bottom || b.bottom) return Ordinal2::bot();
      return Ordinal2::of(a.rho_K + b.rho_K, a.rho_F + b.rho_F);
    }
  }
  throw std::logic_error("unreachable");
}

long gd_eval(const RankDescriptorPtr& d) {
  if (!d) throw std::invalid_argument("null rank descriptor");
  switch (d->kind) {
    case RankDescriptor::Atom:
      return d->empty ? 0 : d->d_F;
    case RankDescriptor::DisjointUnion: {
      Ordinal2 top = gr_eval(d);
      if (top.bottom) return 0;
      long s = 0;
      for (auto& c : d->children)
        if (gr_eval(c) == top) s += gd_eval(c);
      return s;
    }
    case RankDescriptor::Union: {
      Ordinal2 top = gr_eval(d);
      if (top.bottom) return 0;
      std::vector<long> at_top;
      for (auto& c : d->children)
        if (gr_eval(c) == top) at_top.push_back(gd_eval(c));
      if (at_top.size() == 1) return at_top[0];
      if (!d->overlap_gd)
        throw std::invalid_argument(
            "gd_eval: union of rank-tied children needs a declared overlap");
      long s = 0;
      for (long g : at_top) s += g;
      return s - *d->overlap_gd;
    }
    case RankDescriptor::Product:
      throw std::invalid_argument(
          "gd_eval: no product law for geometric degree");
  }
  throw std::logic_error("unreachable");
}

}  // namespace charkit
