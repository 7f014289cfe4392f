#pragma once

// Brute-force tensor product over A: at each vertex i|j take
// (+)_s X_{i|s} (x) Y_{s|j} and factor out xa (x) y - x (x) ay.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nakayama/bimodule.hpp"
#include "nakayama/linalg.hpp"

namespace nakayama {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultOracleCap = 5000;

/// Dimension of (+)_{i,j,s} X_{i|s} (x) Y_{s|j} before factoring out relations.
inline std::size_t pre_quotient_dimension(const ConcreteBimodule& x, const ConcreteBimodule& y) {
  std::size_t total = 0;
  const int n = x.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 1; s <= n; ++s) total += x.dim(i, s) * y.dim(s, j);
  return total;
}

inline ConcreteBimodule tensor(const ConcreteBimodule& x, const ConcreteBimodule& y,
                               std::size_t cap = kDefaultOracleCap) {
  if (x.n() != y.n()) throw std::invalid_argument("tensor: bimodules over different n");
  const int n = x.n();
  const std::size_t pre = pre_quotient_dimension(x, y);
  if (pre > cap)
    throw ResourceLimit("oracle tensor needs " + std::to_string(pre) +
                        " dimensions before the quotient, above the cap of " + std::to_string(cap));

  const auto nn = static_cast<std::size_t>(n);
  // block offsets of X_{i|s} (x) Y_{s|j} inside the space at i|j
  std::vector<std::vector<std::size_t>> offset(nn * nn, std::vector<std::size_t>(nn + 1, 0));
  std::vector<linalg::Cokernel> quotient(nn * nn);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::size_t v = x.index(i, j);
      auto& off = offset[v];
      for (int s = 1; s <= n; ++s)
        off[static_cast<std::size_t>(s)] = off[static_cast<std::size_t>(s - 1)] + x.dim(i, s) * y.dim(s, j);
      std::size_t rel_count = 0;
      for (int t = 1; t <= n; ++t) rel_count += x.dim(i, t + 1) * y.dim(t, j);
      Matrix rel(off[nn], rel_count);
      std::size_t col = 0;
      for (int t = 1; t <= n; ++t) {
        const std::size_t dx = x.dim(i, t + 1), dy = y.dim(t, j);
        if (dx * dy == 0) continue;
        // xi alpha_t (x) eta lands in block t, xi (x) alpha_t eta in block t+1
        const Matrix a = kron(x.hmap(i, t + 1), Matrix::identity(dy));
        const Matrix b = kron(Matrix::identity(dx), y.vmap(t, j));
        rel.add_block(off[static_cast<std::size_t>(wrap(t, n) - 1)], col, a);
        rel.add_block(off[static_cast<std::size_t>(wrap(t + 1, n) - 1)], col, b, Rational(-1));
        col += dx * dy;
      }
      quotient[v] = linalg::cokernel(rel);
    }

  std::vector<std::size_t> dims(nn * nn);
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = quotient[v].dimension;
  ConcreteBimodule out(n, dims);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::size_t v = x.index(i, j);
      if (dims[v] == 0) continue;
      const std::size_t vu = x.index(i + 1, j), vl = x.index(i, j - 1);
      Matrix left(offset[vu][nn], offset[v][nn]);
      Matrix right(offset[vl][nn], offset[v][nn]);
      for (int s = 1; s <= n; ++s) {
        const auto si = static_cast<std::size_t>(s - 1);
        if (x.dim(i, s) * y.dim(s, j) == 0) continue;
        left.set_block(offset[vu][si], offset[v][si], kron(x.vmap(i, s), Matrix::identity(y.dim(s, j))));
        right.set_block(offset[vl][si], offset[v][si], kron(Matrix::identity(x.dim(i, s)), y.hmap(s, j)));
      }
      out.vmap_at(v) = quotient[vu].projection * (left * quotient[v].section);
      out.hmap_at(v) = quotient[vl].projection * (right * quotient[v].section);
    }
  return out;
}

}  // namespace nakayama
