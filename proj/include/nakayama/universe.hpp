#pragma once

// Finite enumerations of descriptors, in the fixed order used by sweeps and
// witness searches.

#include <vector>

#include "nakayama/descriptors.hpp"

namespace nakayama {

/// All admissible strings with exactly `k` valleys, by type then vertex.
inline std::vector<Descriptor> strings_with_valleys(int k, const AlgebraContext& ctx) {
  std::vector<Descriptor> out;
  for (StringType t : {StringType::M, StringType::N, StringType::W, StringType::S}) {
    StringDescriptor probe{t, {1, 1}, k};
    if (!probe.admissible()) continue;
    for (int i = 1; i <= ctx.n; ++i)
      for (int j = 1; j <= ctx.n; ++j) out.push_back(make_string(t, i, j, k, ctx));
  }
  return out;
}

/// All (2n)^2 k-split indecomposables.
inline std::vector<Descriptor> all_splits(const AlgebraContext& ctx) {
  std::vector<Descriptor> out;
  for (ModuleKind lk : {ModuleKind::simple, ModuleKind::projective})
    for (ModuleKind rk : {ModuleKind::simple, ModuleKind::projective})
      for (int i = 1; i <= ctx.n; ++i)
        for (int j = 1; j <= ctx.n; ++j) out.push_back(make_split(lk, i, rk, j, ctx));
  return out;
}

inline std::vector<Descriptor> bands(int max_m, const std::vector<Rational>& lambdas, const AlgebraContext& ctx) {
  std::vector<Descriptor> out;
  for (int k = 1; k <= ctx.n; ++k)
    for (int m = 1; m <= max_m; ++m)
      for (const auto& l : lambdas) out.push_back(make_band(k, m, l, ctx));
  return out;
}

/// Splits, strings with at most `max_valleys` valleys, and bands.
inline std::vector<Descriptor> universe(int max_valleys, int max_m, const std::vector<Rational>& lambdas,
                                        const AlgebraContext& ctx) {
  std::vector<Descriptor> out = all_splits(ctx);
  for (int k = 0; k <= max_valleys; ++k)
    for (auto& d : strings_with_valleys(k, ctx)) out.push_back(d);
  for (auto& d : bands(max_m, lambdas, ctx)) out.push_back(d);
  return out;
}

}  // namespace nakayama
