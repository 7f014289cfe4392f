#pragma once

// Explicit representations of the torus quiver: a vector space at each vertex
// i|j, a vertical map (left action of alpha_i) to i+1|j and a horizontal map
// (right action of alpha_{j-1}) to i|j-1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nakayama/algebra.hpp"
#include "nakayama/descriptors.hpp"
#include "nakayama/linalg.hpp"
#include "nakayama/matrix.hpp"

namespace nakayama {

class ConcreteBimodule {
 public:
  ConcreteBimodule() : ConcreteBimodule(1) {}
  explicit ConcreteBimodule(int n) : n_(n), dims_(cells(n), 0), vmaps_(cells(n)), hmaps_(cells(n)) {
    if (n < 1) throw std::invalid_argument("bimodule needs n >= 1");
  }

  /// Zero maps between the given spaces; `dims` is indexed by vertex_index.
  ConcreteBimodule(int n, std::vector<std::size_t> dims) : ConcreteBimodule(n) {
    if (dims.size() != cells(n)) throw std::invalid_argument("dimension grid has wrong size");
    dims_ = std::move(dims);
    reset_maps();
  }

  int n() const { return n_; }
  std::size_t vertex_count() const { return dims_.size(); }

  std::size_t index(long long i, long long j) const {
    return static_cast<std::size_t>(wrap(i, n_) - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(wrap(j, n_) - 1);
  }
  TorusVertex vertex(std::size_t idx) const {
    return {static_cast<int>(idx / static_cast<std::size_t>(n_)) + 1,
            static_cast<int>(idx % static_cast<std::size_t>(n_)) + 1};
  }
  std::size_t up(std::size_t idx) const {  // target of the vertical arrow
    auto v = vertex(idx);
    return index(v.i + 1, v.j);
  }
  std::size_t left(std::size_t idx) const {  // target of the horizontal arrow
    auto v = vertex(idx);
    return index(v.i, v.j - 1);
  }

  std::size_t dim(long long i, long long j) const { return dims_[index(i, j)]; }
  std::size_t dim_at(std::size_t idx) const { return dims_[idx]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t total_dimension() const {
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
  }

  const Matrix& vmap(long long i, long long j) const { return vmaps_[index(i, j)]; }
  const Matrix& hmap(long long i, long long j) const { return hmaps_[index(i, j)]; }
  const Matrix& vmap_at(std::size_t idx) const { return vmaps_[idx]; }
  const Matrix& hmap_at(std::size_t idx) const { return hmaps_[idx]; }
  Matrix& vmap_at(std::size_t idx) { return vmaps_[idx]; }
  Matrix& hmap_at(std::size_t idx) { return hmaps_[idx]; }

  void set_vmap(long long i, long long j, Matrix m) { set_map(vmaps_, index(i, j), up(index(i, j)), std::move(m)); }
  void set_hmap(long long i, long long j, Matrix m) { set_map(hmaps_, index(i, j), left(index(i, j)), std::move(m)); }

  /// Replaces the dimension grid and zeroes every map.
  void set_dims(std::vector<std::size_t> dims) {
    if (dims.size() != cells(n_)) throw std::invalid_argument("dimension grid has wrong size");
    dims_ = std::move(dims);
    reset_maps();
  }

  friend bool operator==(const ConcreteBimodule&, const ConcreteBimodule&) = default;

 private:
  static std::size_t cells(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }

  void reset_maps() {
    for (std::size_t v = 0; v < dims_.size(); ++v) {
      vmaps_[v] = Matrix(dims_[up(v)], dims_[v]);
      hmaps_[v] = Matrix(dims_[left(v)], dims_[v]);
    }
  }

  void set_map(std::vector<Matrix>& maps, std::size_t from, std::size_t to, Matrix m) {
    if (m.rows() != dims_[to] || m.cols() != dims_[from])
      throw std::invalid_argument("action matrix has wrong shape at vertex " + vertex(from).str());
    maps[from] = std::move(m);
  }

  int n_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> vmaps_;
  std::vector<Matrix> hmaps_;
};

/// A bimodule homomorphism: one matrix per vertex, target dim x source dim.
using Morphism = std::vector<Matrix>;

struct ValidationReport {
  bool ok = true;
  std::string message;
  std::optional<TorusVertex> vertex;
};

inline ValidationReport validate(const ConcreteBimodule& x) {
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    const std::size_t u = x.up(v), l = x.left(v);
    const auto fail = [&](const std::string& what) {
      return ValidationReport{false, what + " at vertex " + x.vertex(v).str(), x.vertex(v)};
    };
    if (x.vmap_at(v).rows() != x.dim_at(u) || x.vmap_at(v).cols() != x.dim_at(v))
      return fail("vertical map has wrong shape");
    if (x.hmap_at(v).rows() != x.dim_at(l) || x.hmap_at(v).cols() != x.dim_at(v))
      return fail("horizontal map has wrong shape");
  }
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    const std::size_t u = x.up(v), l = x.left(v);
    const auto fail = [&](const std::string& what) {
      return ValidationReport{false, what + " at vertex " + x.vertex(v).str(), x.vertex(v)};
    };
    if (!(x.vmap_at(u) * x.vmap_at(v)).is_zero()) return fail("two vertical arrows compose to nonzero");
    if (!(x.hmap_at(l) * x.hmap_at(v)).is_zero()) return fail("two horizontal arrows compose to nonzero");
    if (x.vmap_at(l) * x.hmap_at(v) != x.hmap_at(u) * x.vmap_at(v)) return fail("square does not commute");
  }
  return {};
}

inline ConcreteBimodule direct_sum(const ConcreteBimodule& a, const ConcreteBimodule& b) {
  if (a.n() != b.n()) throw std::invalid_argument("direct sum of bimodules over different n");
  std::vector<std::size_t> dims(a.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim_at(v) + b.dim_at(v);
  ConcreteBimodule s(a.n(), dims);
  for (std::size_t v = 0; v < dims.size(); ++v) {
    s.vmap_at(v) = direct_sum(a.vmap_at(v), b.vmap_at(v));
    s.hmap_at(v) = direct_sum(a.hmap_at(v), b.hmap_at(v));
  }
  return s;
}

inline ConcreteBimodule zero_bimodule(int n) { return ConcreteBimodule(n); }

/// Left inverse of a matrix with independent columns, built from a set of
/// rows on which it is invertible.
inline Matrix left_inverse(const Matrix& u) {
  if (u.cols() == 0) return Matrix(0, u.rows());
  const auto e = linalg::rref(u.transpose());
  if (e.rank() != u.cols()) throw std::invalid_argument("left_inverse: dependent columns");
  Matrix square(u.cols(), u.cols());
  for (std::size_t r = 0; r < u.cols(); ++r)
    for (std::size_t c = 0; c < u.cols(); ++c) square(r, c) = u(e.pivots[r], c);
  const Matrix inv = linalg::inverse(square);
  Matrix l(u.cols(), u.rows());
  for (std::size_t c = 0; c < u.cols(); ++c)
    for (std::size_t r = 0; r < u.cols(); ++r) l(r, e.pivots[c]) = inv(r, c);
  return l;
}

/// The submodule spanned at each vertex by the columns of `basis[v]`, which
/// must be stable under both actions.
inline ConcreteBimodule restrict(const ConcreteBimodule& x, const std::vector<Matrix>& basis) {
  std::vector<std::size_t> dims(x.vertex_count());
  std::vector<Matrix> inv(x.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) {
    dims[v] = basis[v].cols();
    inv[v] = left_inverse(basis[v]);
  }
  ConcreteBimodule s(x.n(), dims);
  for (std::size_t v = 0; v < dims.size(); ++v) {
    s.vmap_at(v) = inv[x.up(v)] * (x.vmap_at(v) * basis[v]);
    s.hmap_at(v) = inv[x.left(v)] * (x.hmap_at(v) * basis[v]);
  }
  return s;
}

/// Twist of one action by an automorphism of A. Left theta^t gives
/// X_{i+t|j} at i|j; right theta^t gives X_{i|j+t}. eta_mu scales the action
/// of alpha_1 by mu.
inline ConcreteBimodule twist(const ConcreteBimodule& x, Side side, const Automorphism& aut) {
  const int n = x.n();
  if (aut.kind == Automorphism::Kind::eta) {
    if (aut.mu.is_zero()) throw std::invalid_argument("eta twist needs a nonzero scalar");
    ConcreteBimodule y = x;
    for (int k = 1; k <= n; ++k) {
      if (side == Side::left) {
        const std::size_t v = y.index(1, k);
        y.vmap_at(v) = aut.mu * y.vmap_at(v);
      } else {
        const std::size_t v = y.index(k, 2);
        y.hmap_at(v) = aut.mu * y.hmap_at(v);
      }
    }
    return y;
  }
  const int t = aut.t;
  std::vector<std::size_t> dims(x.vertex_count());
  const auto source = [&](int i, int j) {
    return side == Side::left ? x.index(i + t, j) : x.index(i, j + t);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) dims[x.index(i, j)] = x.dim_at(source(i, j));
  ConcreteBimodule y(n, dims);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      y.vmap_at(y.index(i, j)) = x.vmap_at(source(i, j));
      y.hmap_at(y.index(i, j)) = x.hmap_at(source(i, j));
    }
  return y;
}

// ---- JSON ----------------------------------------------------------------

inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix has wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw std::invalid_argument("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      if (e.is_string())
        m(r, c) = Rational::parse(e.get<std::string>());
      else if (e.is_number_integer())
        m(r, c) = Rational(e.get<long long>());
      else
        throw std::invalid_argument("matrix entries must be rational strings");
    }
  }
  return m;
}

inline nlohmann::json to_json(const ConcreteBimodule& x) {
  nlohmann::json out;
  const int n = x.n();
  out["n"] = n;
  nlohmann::json dims = nlohmann::json::array(), vm = nlohmann::json::array(),
                 hm = nlohmann::json::array();
  for (int i = 1; i <= n; ++i) {
    nlohmann::json drow = nlohmann::json::array(), vrow = nlohmann::json::array(),
                   hrow = nlohmann::json::array();
    for (int j = 1; j <= n; ++j) {
      drow.push_back(x.dim(i, j));
      vrow.push_back(matrix_to_json(x.vmap(i, j)));
      hrow.push_back(matrix_to_json(x.hmap(i, j)));
    }
    dims.push_back(drow);
    vm.push_back(vrow);
    hm.push_back(hrow);
  }
  out["dims"] = dims;
  out["vmaps"] = vm;
  out["hmaps"] = hm;
  return out;
}

inline ConcreteBimodule bimodule_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("dims") || !j.contains("vmaps") ||
      !j.contains("hmaps"))
    throw std::invalid_argument("bimodule JSON needs fields n, dims, vmaps, hmaps");
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("bimodule JSON: n must be positive");
  const auto grid = [&](const char* key) -> const nlohmann::json& {
    const auto& g = j.at(key);
    if (!g.is_array() || g.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument(std::string("bimodule JSON: ") + key + " must be an n x n grid");
    for (const auto& row : g)
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument(std::string("bimodule JSON: ") + key + " must be an n x n grid");
    return g;
  };
  const auto& dg = grid("dims");
  const auto& vg = grid("vmaps");
  const auto& hg = grid("hmaps");
  ConcreteBimodule x(n);
  std::vector<std::size_t> dims(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int jj = 1; jj <= n; ++jj) {
      const long long d = dg[i - 1][jj - 1].get<long long>();
      if (d < 0) throw std::invalid_argument("bimodule JSON: negative dimension");
      dims[x.index(i, jj)] = static_cast<std::size_t>(d);
    }
  x.set_dims(dims);
  for (int i = 1; i <= n; ++i)
    for (int jj = 1; jj <= n; ++jj) {
      x.set_vmap(i, jj, matrix_from_json(vg[i - 1][jj - 1], x.dim(i + 1, jj), x.dim(i, jj)));
      x.set_hmap(i, jj, matrix_from_json(hg[i - 1][jj - 1], x.dim(i, jj - 1), x.dim(i, jj)));
    }
  if (auto rep = validate(x); !rep.ok) throw std::invalid_argument("invalid bimodule: " + rep.message);
  return x;
}

/// FNV-1a over the canonical JSON text.
inline std::uint64_t content_hash(const ConcreteBimodule& x) {
  const std::string s = to_json(x).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace nakayama
