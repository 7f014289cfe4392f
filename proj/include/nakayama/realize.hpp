#pragma once

// Concrete bimodules for descriptors: strings are pushed down from walks on
// the covering quiver, k-split bimodules are outer tensor products and bands
// are twists of the regular bimodule with one Jordan cell.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "nakayama/bimodule.hpp"
#include "nakayama/descriptors.hpp"

namespace nakayama {

/// Basis bookkeeping for a pushed-down walk: for every torus vertex, the
/// covering vertices whose spaces are stacked there, in walk order.
using WalkBasis = std::vector<std::vector<CoveringVertex>>;

inline ConcreteBimodule pushdown_walk(const std::vector<CoveringVertex>& nodes, int n,
                                      WalkBasis* basis = nullptr) {
  ConcreteBimodule x(n);
  std::vector<std::size_t> dims(x.vertex_count(), 0);
  std::vector<std::size_t> slot(nodes.size());
  WalkBasis names(x.vertex_count());
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    const std::size_t v = x.index(nodes[t].p, nodes[t].q);
    slot[t] = dims[v]++;
    names[v].push_back(nodes[t]);
  }
  x.set_dims(dims);
  for (std::size_t t = 1; t < nodes.size(); ++t) {
    const CoveringVertex a = nodes[t - 1], b = nodes[t];
    if (b.q == a.q + 1) {
      // horizontal arrow b -> a
      x.hmap_at(x.index(b.p, b.q))(slot[t - 1], slot[t]) += 1;
    } else {
      // vertical arrow a -> b
      x.vmap_at(x.index(a.p, a.q))(slot[t], slot[t - 1]) += 1;
    }
  }
  if (basis) *basis = std::move(names);
  return x;
}

inline ConcreteBimodule realize_string(const StringDescriptor& d, const AlgebraContext& ctx,
                                       WalkBasis* basis = nullptr) {
  if (!d.admissible())
    throw std::invalid_argument("string descriptor has length < 2; use the split form instead");
  return pushdown_walk(walk_nodes(d), ctx.n, basis);
}

struct OneSidedRealization {
  std::vector<std::size_t> dims;  // per vertex 1..n, stored at index vertex-1
  std::vector<Matrix> maps;       // left: vertex t -> t+1; right: vertex t -> t-1
};

/// Indecomposable one-sided modules: simples and the projectives A e_i, e_j A.
inline OneSidedRealization realize_one_sided(const OneSidedModule& m, const AlgebraContext& ctx) {
  const int n = ctx.n;
  OneSidedRealization r;
  r.dims.assign(static_cast<std::size_t>(n), 0);
  const auto idx = [&](long long v) { return static_cast<std::size_t>(ctx.wrap(v) - 1); };
  const int step = m.side == Side::left ? 1 : -1;
  r.dims[idx(m.vertex)] += 1;
  if (m.kind == ModuleKind::projective) r.dims[idx(m.vertex + step)] += 1;
  r.maps.resize(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t)
    r.maps[idx(t)] = Matrix(r.dims[idx(t + step)], r.dims[idx(t)]);
  if (m.kind == ModuleKind::projective) {
    // top basis vector is stored first, the socle vector second
    const std::size_t row = n == 1 ? 1 : 0;
    r.maps[idx(m.vertex)](row, 0) = 1;
  }
  return r;
}

inline ConcreteBimodule realize_split(const SplitDescriptor& d, const AlgebraContext& ctx) {
  const auto l = realize_one_sided(d.left, ctx);
  const auto r = realize_one_sided(d.right, ctx);
  const int n = ctx.n;
  ConcreteBimodule x(n);
  std::vector<std::size_t> dims(x.vertex_count());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      dims[x.index(i, j)] = l.dims[static_cast<std::size_t>(i - 1)] * r.dims[static_cast<std::size_t>(j - 1)];
  x.set_dims(dims);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto li = static_cast<std::size_t>(i - 1), rj = static_cast<std::size_t>(j - 1);
      x.vmap_at(x.index(i, j)) = kron(l.maps[li], Matrix::identity(r.dims[rj]));
      x.hmap_at(x.index(i, j)) = kron(Matrix::identity(l.dims[li]), r.maps[rj]);
    }
  return x;
}

/// Torus positions of the band B(k,m,lambda) for n >= 2: tops t_i and
/// bottoms b_i, i = 1..n.
struct BandLayout {
  std::vector<TorusVertex> tops, bottoms;
};

inline BandLayout band_layout(int k, const AlgebraContext& ctx) {
  BandLayout lay;
  for (int i = 1; i <= ctx.n; ++i) {
    lay.tops.push_back(torus_vertex(i, i - k + 1, ctx));
    lay.bottoms.push_back(torus_vertex(i + 1, i - k + 1, ctx));
  }
  return lay;
}

inline ConcreteBimodule realize_band(const BandDescriptor& d, const AlgebraContext& ctx) {
  if (d.lambda.is_zero()) throw std::invalid_argument("band parameter lambda must be nonzero");
  if (d.m < 1) throw std::invalid_argument("band needs Jordan size m >= 1");
  const int n = ctx.n;
  const auto m = static_cast<std::size_t>(d.m);
  const Matrix jm = jordan_cell(m, d.lambda);
  ConcreteBimodule x(n);
  if (n == 1) {
    x.set_dims({2 * m});
    Matrix psi(2 * m, 2 * m), phi(2 * m, 2 * m);
    psi.set_block(m, 0, Matrix::identity(m));
    phi.set_block(m, 0, jm);
    x.set_vmap(1, 1, psi);
    x.set_hmap(1, 1, phi);
    return x;
  }
  const BandLayout lay = band_layout(d.k, ctx);
  std::vector<std::size_t> dims(x.vertex_count(), 0);
  for (int i = 0; i < n; ++i) {
    dims[x.index(lay.tops[static_cast<std::size_t>(i)].i, lay.tops[static_cast<std::size_t>(i)].j)] = m;
    dims[x.index(lay.bottoms[static_cast<std::size_t>(i)].i, lay.bottoms[static_cast<std::size_t>(i)].j)] = m;
  }
  x.set_dims(dims);
  for (int i = 1; i <= n; ++i) {
    const TorusVertex t = lay.tops[static_cast<std::size_t>(i - 1)];
    x.set_vmap(t.i, t.j, Matrix::identity(m));
    x.set_hmap(t.i, t.j, i == 2 ? jm : Matrix::identity(m));
  }
  return x;
}

inline ConcreteBimodule realize(const Descriptor& d, const AlgebraContext& ctx) {
  if (auto s = std::get_if<StringDescriptor>(&d)) return realize_string(*s, ctx);
  if (auto b = std::get_if<BandDescriptor>(&d)) return realize_band(*b, ctx);
  return realize_split(std::get<SplitDescriptor>(d), ctx);
}

inline ConcreteBimodule realize(const Multiset& m, const AlgebraContext& ctx) {
  ConcreteBimodule x(ctx.n);
  for (const auto& [d, c] : m.entries()) {
    const ConcreteBimodule y = realize(d, ctx);
    for (long long k = 0; k < c; ++k) x = direct_sum(x, y);
  }
  return x;
}

/// The regular bimodule A = B(1,1,1).
inline ConcreteBimodule regular_bimodule(const AlgebraContext& ctx) {
  return realize_band({1, 1, Rational(1)}, ctx);
}

/// Dimension grid of a descriptor without building its maps.
inline std::vector<std::size_t> dimension_grid(const Descriptor& d, const AlgebraContext& ctx) {
  return realize(d, ctx).dims();
}

}  // namespace nakayama
