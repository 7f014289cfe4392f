#pragma once

// Closed-form tensor products of indecomposables given by descriptors.
//
//   band (x) band     Clebsch-Gordan on the Jordan sizes
//   string (x) band   m copies of the string, shifted by the twist
//   string (x) string basis pairs x_a (x) y_b of the covering walks modulo
//                     the literal relations x alpha (x) y = x (x) alpha y
//   split (x) any     absorbed into a one-sided module

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nakayama/descriptors.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/linalg.hpp"
#include "nakayama/realize.hpp"

namespace nakayama {

inline Multiset band_band(const BandDescriptor& a, const BandDescriptor& b, const AlgebraContext& ctx) {
  Multiset out;
  const int lo = std::abs(a.m - b.m) + 1, hi = a.m + b.m - 1;
  for (int s = lo; s <= hi; s += 2) out.add(make_band(a.k + b.k - 1, s, a.lambda * b.lambda, ctx));
  return out;
}

inline Multiset string_band(const StringDescriptor& x, const BandDescriptor& b, const AlgebraContext& ctx) {
  Multiset out;
  out.add(make_string(x.type, x.vertex.i, x.vertex.j - (b.k - 1), x.valleys, ctx), b.m);
  return out;
}

inline Multiset band_string(const BandDescriptor& b, const StringDescriptor& x, const AlgebraContext& ctx) {
  Multiset out;
  out.add(make_string(x.type, x.vertex.i + (b.k - 1), x.vertex.j, x.valleys, ctx), b.m);
  return out;
}

namespace detail {

struct WalkArrows {
  std::vector<CoveringVertex> nodes;
  std::vector<int> hout;  // index of the target of the horizontal arrow, or -1
  std::vector<int> vout;  // index of the target of the vertical arrow, or -1
};

inline WalkArrows walk_arrows(const StringDescriptor& s) {
  WalkArrows w;
  w.nodes = walk_nodes(s);
  const int len = static_cast<int>(w.nodes.size());
  w.hout.assign(w.nodes.size(), -1);
  w.vout.assign(w.nodes.size(), -1);
  for (int t = 1; t < len; ++t) {
    const bool right = w.nodes[static_cast<std::size_t>(t)].q == w.nodes[static_cast<std::size_t>(t - 1)].q + 1;
    if (right)
      w.hout[static_cast<std::size_t>(t)] = t - 1;
    else
      w.vout[static_cast<std::size_t>(t - 1)] = t;
  }
  return w;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), zero_(n, false) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    zero_[a] = zero_[a] || zero_[b];
  }
  void kill(std::size_t a) { zero_[find(a)] = true; }
  bool dead(std::size_t a) { return zero_[find(a)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<bool> zero_;
};

/// Reads one connected monomial component on the covering as a descriptor.
inline Descriptor read_component(const std::vector<CoveringVertex>& pos,
                                 const std::vector<std::pair<int, int>>& out,  // (vertical, horizontal)
                                 const std::vector<std::size_t>& members, const AlgebraContext& ctx) {
  if (members.size() == 4) {
    for (std::size_t c : members) {
      const auto [v, h] = out[c];
      if (v < 0 || h < 0) continue;
      const auto vv = static_cast<std::size_t>(v), hh = static_cast<std::size_t>(h);
      if (out[vv].second >= 0 && out[vv].second == out[hh].first)
        return P(pos[c].p, pos[c].q, ctx);
    }
  }
  std::vector<std::size_t> order = members;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair{pos[a].p + pos[a].q, pos[a].p} < std::pair{pos[b].p + pos[b].q, pos[b].p};
  });
  for (std::size_t t = 1; t < order.size(); ++t) {
    const CoveringVertex a = pos[order[t - 1]], b = pos[order[t]];
    const bool right = b.p == a.p && b.q == a.q + 1;
    const bool down = b.q == a.q && b.p == a.p + 1;
    const bool linked = right ? out[order[t]].second == static_cast<int>(order[t - 1])
                              : down && out[order[t - 1]].first == static_cast<int>(order[t]);
    if (!linked) throw std::logic_error("tensor component is neither a string nor a square");
    if (t >= 2) {
      const CoveringVertex z = pos[order[t - 2]];
      if ((a.q == z.q + 1) == right) throw std::logic_error("tensor component is not alternating");
    }
  }
  const int length = static_cast<int>(order.size()) - 1;
  Course course = Course::right;
  if (length > 0) course = pos[order[1]].q == pos[order[0]].q + 1 ? Course::right : Course::down;
  return walk_descriptor(pos[order.front()], course, length, ctx);
}

}  // namespace detail

inline Multiset string_string(const StringDescriptor& x, const StringDescriptor& y, const AlgebraContext& ctx) {
  const int n = ctx.n;
  const auto wx = detail::walk_arrows(x);
  const auto wy = detail::walk_arrows(y);
  const std::size_t nx = wx.nodes.size(), ny = wy.nodes.size();
  const auto congruent = [n](long long a, long long b) { return ((a - b) % n + n) % n == 0; };
  // pair ids for basis pairs x_a (x) y_b with col(a) = row(b) mod n
  std::vector<int> id(nx * ny, -1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      if (congruent(wx.nodes[a].q, wy.nodes[b].p)) {
        id[a * ny + b] = static_cast<int>(pairs.size());
        pairs.emplace_back(a, b);
      }
  const auto pid = [&](std::size_t a, std::size_t b) { return id[a * ny + b]; };
  detail::UnionFind uf(pairs.size());
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b) {
      if (!congruent(wx.nodes[a].q, wy.nodes[b].p + 1)) continue;
      const int ha = wx.hout[a], vb = wy.vout[b];
      const int lhs = ha >= 0 ? pid(static_cast<std::size_t>(ha), b) : -1;
      const int rhs = vb >= 0 ? pid(a, static_cast<std::size_t>(vb)) : -1;
      if (lhs >= 0 && rhs >= 0)
        uf.unite(static_cast<std::size_t>(lhs), static_cast<std::size_t>(rhs));
      else if (lhs >= 0)
        uf.kill(static_cast<std::size_t>(lhs));
      else if (rhs >= 0)
        uf.kill(static_cast<std::size_t>(rhs));
    }
  // surviving classes, their covering positions and actions
  std::map<std::size_t, std::size_t> cls;  // root -> class index
  std::vector<CoveringVertex> pos;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (uf.dead(p)) continue;
    const std::size_t r = uf.find(p);
    if (cls.contains(r)) continue;
    cls.emplace(r, pos.size());
    const auto [a, b] = pairs[p];
    pos.push_back({wx.nodes[a].p, wy.nodes[b].q + wx.nodes[a].q - wy.nodes[b].p});
  }
  const auto class_of = [&](int a, int b) -> int {
    if (a < 0 || b < 0) return -1;
    const int p = pid(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    if (p < 0 || uf.dead(static_cast<std::size_t>(p))) return -1;
    return static_cast<int>(cls.at(uf.find(static_cast<std::size_t>(p))));
  };
  std::vector<std::pair<int, int>> out(pos.size(), {-1, -1});
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int c = class_of(static_cast<int>(pairs[p].first), static_cast<int>(pairs[p].second));
    if (c < 0) continue;
    const auto [a, b] = pairs[p];
    const int v = class_of(wx.vout[a], static_cast<int>(b));
    const int h = class_of(static_cast<int>(a), wy.hout[b]);
    auto& o = out[static_cast<std::size_t>(c)];
    if (v >= 0) {
      if (o.first >= 0 && o.first != v) throw std::logic_error("left action is not monomial");
      o.first = v;
    }
    if (h >= 0) {
      if (o.second >= 0 && o.second != h) throw std::logic_error("right action is not monomial");
      o.second = h;
    }
  }
  // connected components
  detail::UnionFind comp(pos.size());
  for (std::size_t c = 0; c < pos.size(); ++c) {
    if (out[c].first >= 0) comp.unite(c, static_cast<std::size_t>(out[c].first));
    if (out[c].second >= 0) comp.unite(c, static_cast<std::size_t>(out[c].second));
  }
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t c = 0; c < pos.size(); ++c) members[comp.find(c)].push_back(c);
  Multiset result;
  for (const auto& [root, m] : members) result.add(detail::read_component(pos, out, m, ctx));
  return result;
}

// ---- k-split absorption ----------------------------------------------------

namespace detail {

/// Multiplicities of indecomposable one-sided modules in a graded module
/// with spaces `dims[t]` and maps of rank `ranks[t]` from t to t + step.
inline Multiset one_sided_split(const OneSidedModule& fixed, Side side, const std::vector<long long>& dims,
                                const std::vector<long long>& ranks, const AlgebraContext& ctx) {
  const int n = ctx.n;
  const int step = side == Side::left ? 1 : -1;
  Multiset out;
  for (int t = 1; t <= n; ++t) {
    const auto idx = static_cast<std::size_t>(t - 1);
    const auto prev = static_cast<std::size_t>(ctx.wrap(t - step) - 1);
    const long long projectives = ranks[idx];
    const long long simples = dims[idx] - ranks[idx] - ranks[prev];
    if (simples < 0) throw std::logic_error("negative multiplicity in one-sided decomposition");
    for (auto [kind, count] : {std::pair{ModuleKind::projective, projectives}, std::pair{ModuleKind::simple, simples}}) {
      if (count == 0) continue;
      OneSidedModule m{side, kind, t};
      SplitDescriptor d = side == Side::right ? SplitDescriptor{fixed, m} : SplitDescriptor{m, fixed};
      out.add(d, count);
    }
  }
  return out;
}

/// Dimension and rank data of the one-sided module obtained from spaces
/// W_t with maps f_t : W_t -> W_{t+step}, modulo subspaces U_t (columns).
inline std::pair<std::vector<long long>, std::vector<long long>> quotient_data(
    const std::vector<std::size_t>& wdim, const std::vector<Matrix>& maps, const std::vector<Matrix>& sub,
    int step, const AlgebraContext& ctx) {
  const int n = ctx.n;
  std::vector<long long> dims(static_cast<std::size_t>(n)), ranks(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) {
    const auto i = static_cast<std::size_t>(t - 1);
    const auto j = static_cast<std::size_t>(ctx.wrap(t + step) - 1);
    const long long u_next = static_cast<long long>(linalg::rank(sub[j]));
    dims[i] = static_cast<long long>(wdim[i]) - static_cast<long long>(linalg::rank(sub[i]));
    const Matrix img = maps[i];
    ranks[i] = static_cast<long long>(linalg::rank(hstack(img, sub[j]))) - u_next;
  }
  return {dims, ranks};
}

}  // namespace detail

/// (M (x) N) (x)_A Y = M (x) (N (x)_A Y), and symmetrically for a split right
/// factor: the one-sided module is read off the concrete realization.
inline Multiset split_absorb(const Descriptor& x, const Descriptor& y, const AlgebraContext& ctx) {
  const int n = ctx.n;
  const auto nn = static_cast<std::size_t>(n);
  if (auto sx = std::get_if<SplitDescriptor>(&x)) {
    if (auto sy = std::get_if<SplitDescriptor>(&y)) {
      // dim of N (x)_A M'
      const auto& r = sx->right;
      const auto& l = sy->left;
      long long d = 0;
      if (r.kind == ModuleKind::projective && l.kind == ModuleKind::projective) {
        d = (r.vertex == l.vertex ? 1 : 0) + (r.vertex == ctx.wrap(l.vertex + 1) ? 1 : 0);
      } else {
        d = r.vertex == l.vertex ? 1 : 0;
      }
      Multiset out;
      out.add(SplitDescriptor{sx->left, sy->right}, d);
      return out;
    }
    // row j of Y as a right module, possibly modulo the image of row j-1
    const ConcreteBimodule ry = realize(y, ctx);
    const int j = sx->right.vertex;
    std::vector<std::size_t> wdim(nn);
    std::vector<Matrix> maps(nn), sub(nn);
    for (int t = 1; t <= n; ++t) {
      const auto i = static_cast<std::size_t>(t - 1);
      wdim[i] = ry.dim(j, t);
      maps[i] = ry.hmap(j, t);
      sub[i] = sx->right.kind == ModuleKind::simple ? ry.vmap(j - 1, t) : Matrix(ry.dim(j, t), 0);
    }
    const auto [dims, ranks] = detail::quotient_data(wdim, maps, sub, -1, ctx);
    return detail::one_sided_split(sx->left, Side::right, dims, ranks, ctx);
  }
  const auto& sy = std::get<SplitDescriptor>(y);
  // column i of X as a left module, possibly modulo the image of column i+1
  const ConcreteBimodule rx = realize(x, ctx);
  const int i0 = sy.left.vertex;
  std::vector<std::size_t> wdim(nn);
  std::vector<Matrix> maps(nn), sub(nn);
  for (int s = 1; s <= n; ++s) {
    const auto i = static_cast<std::size_t>(s - 1);
    wdim[i] = rx.dim(s, i0);
    maps[i] = rx.vmap(s, i0);
    sub[i] = sy.left.kind == ModuleKind::simple ? rx.hmap(s, i0 + 1) : Matrix(rx.dim(s, i0), 0);
  }
  const auto [dims, ranks] = detail::quotient_data(wdim, maps, sub, 1, ctx);
  return detail::one_sided_split(sy.right, Side::left, dims, ranks, ctx);
}

inline Multiset symbolic_tensor(const Descriptor& x, const Descriptor& y, const AlgebraContext& ctx) {
  for (const Descriptor* d : {&x, &y})
    if (canonical(*d, ctx) != *d)
      throw std::invalid_argument(to_string(*d) + " is not a descriptor for n=" + std::to_string(ctx.n));
  if (is_split(x) || is_split(y)) return split_absorb(x, y, ctx);
  if (auto bx = std::get_if<BandDescriptor>(&x)) {
    if (auto by = std::get_if<BandDescriptor>(&y)) return band_band(*bx, *by, ctx);
    return band_string(*bx, std::get<StringDescriptor>(y), ctx);
  }
  const auto& sx = std::get<StringDescriptor>(x);
  if (auto by = std::get_if<BandDescriptor>(&y)) return string_band(sx, *by, ctx);
  return string_string(sx, std::get<StringDescriptor>(y), ctx);
}

}  // namespace nakayama
