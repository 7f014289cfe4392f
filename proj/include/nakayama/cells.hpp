#pragma once

// Two-sided, left and right cells of the multisemigroup of indecomposable
// bimodules: classification by descriptor invariants, strong regularity of
// the finite cells, and bounded witness searches for the preorders.
//
// [X] >=_L [Y] when [X] is a summand of Z (x) Y for some indecomposable Z;
// right uses Y (x) Z and two-sided Z (x) Y (x) Z'.

#include <compare>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nakayama/descriptors.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/tensor_rules.hpp"
#include "nakayama/universe.hpp"

namespace nakayama {

struct TwoSidedCellId {
  enum class Kind { split, string, band };
  Kind kind = Kind::split;
  int k = 0;  // valleys, for string cells

  static TwoSidedCellId split() { return {Kind::split, 0}; }
  static TwoSidedCellId J(int k) { return {Kind::string, k}; }
  static TwoSidedCellId band() { return {Kind::band, 0}; }

  std::string str() const {
    switch (kind) {
      case Kind::split: return "Split";
      case Kind::band: return "Band";
      case Kind::string: break;
    }
    return "J(" + std::to_string(k) + ")";
  }
  friend bool operator==(const TwoSidedCellId&, const TwoSidedCellId&) = default;
};

inline TwoSidedCellId two_sided_cell(const Descriptor& d) {
  if (is_split(d)) return TwoSidedCellId::split();
  if (is_band(d)) return TwoSidedCellId::band();
  return TwoSidedCellId::J(std::get<StringDescriptor>(d).valleys);
}

enum class Order { greater, equal, less };

inline const char* to_string(Order o) {
  switch (o) {
    case Order::greater: return "greater";
    case Order::equal: return "equal";
    case Order::less: return "less";
  }
  return "?";
}

/// Split > J(0) > J(1) > ... > Band.
inline Order j_order(const TwoSidedCellId& a, const TwoSidedCellId& b) {
  const auto rank = [](const TwoSidedCellId& c) -> long long {
    switch (c.kind) {
      case TwoSidedCellId::Kind::split: return -1;
      case TwoSidedCellId::Kind::string: return c.k;
      case TwoSidedCellId::Kind::band: break;
    }
    return std::numeric_limits<long long>::max();
  };
  const long long ra = rank(a), rb = rank(b);
  if (ra == rb) return Order::equal;
  return ra < rb ? Order::greater : Order::less;
}

/// Canonical printable key; equal text means equal key.
struct CellKey {
  std::string text;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

inline CellKey left_cell_key(const Descriptor& d) {
  if (is_band(d)) return {"band"};
  if (auto sp = std::get_if<SplitDescriptor>(&d)) return {sp->right.str()};
  const auto& s = std::get<StringDescriptor>(d);
  const bool mn = s.type == StringType::M || s.type == StringType::N;
  return {"(col " + std::to_string(s.vertex.j) + ", width " + std::to_string(width(s)) + ", " +
          (mn ? "MN" : "WS") + ")"};
}

inline CellKey right_cell_key(const Descriptor& d) {
  if (is_band(d)) return {"band"};
  if (auto sp = std::get_if<SplitDescriptor>(&d)) return {sp->left.str()};
  const auto& s = std::get<StringDescriptor>(d);
  const bool ms = s.type == StringType::M || s.type == StringType::S;
  return {"(row " + std::to_string(s.vertex.i) + ", height " + std::to_string(height(s)) + ", " +
          (ms ? "MS" : "WN") + ")"};
}

/// One line, e.g. "J(0); left=(col 1, width 2, MN); right=(row 1, height 2, MS)".
inline std::string classify(const Descriptor& d) {
  return two_sided_cell(d).str() + "; left=" + left_cell_key(d).text + "; right=" + right_cell_key(d).text;
}

inline std::vector<Descriptor> enumerate_cell(const TwoSidedCellId& id, const AlgebraContext& ctx) {
  switch (id.kind) {
    case TwoSidedCellId::Kind::band: throw std::domain_error("infinite cell, enumeration refused");
    case TwoSidedCellId::Kind::split: return all_splits(ctx);
    case TwoSidedCellId::Kind::string: break;
  }
  return strings_with_valleys(id.k, ctx);
}

using KeyFunction = std::function<CellKey(const Descriptor&)>;

struct RegularityResult {
  bool ok = true;
  std::optional<std::pair<Descriptor, Descriptor>> counterexample;
  std::string message;
};

/// Every left cell meets every right cell of `id` in exactly one element.
inline RegularityResult check_strong_regularity(const TwoSidedCellId& id, const AlgebraContext& ctx,
                                                const KeyFunction& left = left_cell_key,
                                                const KeyFunction& right = right_cell_key) {
  const auto cell = enumerate_cell(id, ctx);
  std::map<std::pair<CellKey, CellKey>, std::vector<Descriptor>> boxes;
  std::set<CellKey> lefts, rights;
  for (const auto& d : cell) {
    const CellKey l = left(d), r = right(d);
    lefts.insert(l);
    rights.insert(r);
    boxes[{l, r}].push_back(d);
  }
  RegularityResult res;
  for (const auto& l : lefts)
    for (const auto& r : rights) {
      auto it = boxes.find({l, r});
      if (it == boxes.end()) {
        res.ok = false;
        res.message = "left cell " + l.text + " misses right cell " + r.text;
        return res;
      }
      if (it->second.size() > 1) {
        res.ok = false;
        res.counterexample = {it->second[0], it->second[1]};
        res.message = "left cell " + l.text + " meets right cell " + r.text + " in " + to_string(it->second[0]) +
                      " and " + to_string(it->second[1]);
        return res;
      }
    }
  res.message = std::to_string(lefts.size()) + " left cells x " + std::to_string(rights.size()) +
                " right cells, all intersections singletons";
  return res;
}

// ---- witness search --------------------------------------------------------

struct WitnessBudget {
  int valleys = 1;
  int max_m = 3;
  std::vector<Rational> lambdas{Rational(1), Rational(2), Rational(-1)};
};

inline int valleys_or_zero(const Descriptor& d) { return is_band(d) ? 0 : valleys(d); }

inline WitnessBudget default_budget(const Descriptor& x, const Descriptor& y) {
  WitnessBudget b;
  b.valleys = std::max(valleys_or_zero(x), valleys_or_zero(y)) + 1;
  return b;
}

/// Candidates in search order: the regular bimodule, splits, strings by
/// valleys, then the remaining bands.
inline std::vector<Descriptor> witness_candidates(const WitnessBudget& b, const AlgebraContext& ctx) {
  const Descriptor unit = make_band(1, 1, Rational(1), ctx);
  std::vector<Descriptor> out{unit};
  for (auto& d : all_splits(ctx)) out.push_back(d);
  for (int k = 0; k <= b.valleys; ++k)
    for (auto& d : strings_with_valleys(k, ctx)) out.push_back(d);
  for (auto& d : bands(b.max_m, b.lambdas, ctx))
    if (d != unit) out.push_back(d);
  return out;
}

/// Memoised symbolic products and reachability sets.
class WitnessSearch {
 public:
  explicit WitnessSearch(const AlgebraContext& ctx) : ctx_(ctx) {}

  const AlgebraContext& context() const { return ctx_; }

  const Multiset& product(const Descriptor& a, const Descriptor& b) {
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(std::move(key), symbolic_tensor(a, b, ctx_)).first->second;
  }

  /// Z with [x] in [Z] * [y].
  std::optional<Descriptor> find_left(const Descriptor& x, const Descriptor& y, const WitnessBudget& b) {
    for (const auto& z : witness_candidates(b, ctx_))
      if (product(z, y).contains(x)) return z;
    return std::nullopt;
  }
  std::optional<Descriptor> find_left(const Descriptor& x, const Descriptor& y) {
    return find_left(x, y, default_budget(x, y));
  }

  /// Z with [x] in [y] * [Z].
  std::optional<Descriptor> find_right(const Descriptor& x, const Descriptor& y, const WitnessBudget& b) {
    for (const auto& z : witness_candidates(b, ctx_))
      if (product(y, z).contains(x)) return z;
    return std::nullopt;
  }
  std::optional<Descriptor> find_right(const Descriptor& x, const Descriptor& y) {
    return find_right(x, y, default_budget(x, y));
  }

  /// (Z, Z') with [x] in [Z] * [y] * [Z'].
  std::optional<std::pair<Descriptor, Descriptor>> find_two_sided(const Descriptor& x, const Descriptor& y,
                                                                  const WitnessBudget& b) {
    const auto cands = witness_candidates(b, ctx_);
    for (const auto& z : cands)
      for (const auto& [w, c] : product(z, y).entries())
        for (const auto& z2 : cands)
          if (product(w, z2).contains(x)) return std::make_pair(z, z2);
    return std::nullopt;
  }
  std::optional<std::pair<Descriptor, Descriptor>> find_two_sided(const Descriptor& x, const Descriptor& y) {
    return find_two_sided(x, y, default_budget(x, y));
  }

  /// Everything reachable from y in one left (right) step within budget.
  std::set<Descriptor> left_reach(const Descriptor& y, const WitnessBudget& b) {
    std::set<Descriptor> out;
    for (const auto& z : witness_candidates(b, ctx_))
      for (const auto& [w, c] : product(z, y).entries()) out.insert(w);
    return out;
  }
  std::set<Descriptor> right_reach(const Descriptor& y, const WitnessBudget& b) {
    std::set<Descriptor> out;
    for (const auto& z : witness_candidates(b, ctx_))
      for (const auto& [w, c] : product(y, z).entries()) out.insert(w);
    return out;
  }
  std::set<Descriptor> two_sided_reach(const Descriptor& y, const WitnessBudget& b) {
    std::set<Descriptor> out;
    for (const auto& w : left_reach(y, b))
      for (const auto& v : right_reach(w, b)) out.insert(v);
    return out;
  }

 private:
  AlgebraContext ctx_;
  std::map<std::pair<Descriptor, Descriptor>, Multiset> memo_;
};

/// Compares the mutual-witness relation on a cell with a key partition.
struct PartitionCheck {
  bool ok = true;
  std::size_t pairs = 0;
  std::string message;
};

inline PartitionCheck check_partition(const TwoSidedCellId& id, Side side, WitnessSearch& search,
                                      const KeyFunction& key) {
  const auto cell = enumerate_cell(id, search.context());
  WitnessBudget b;
  b.valleys = (id.kind == TwoSidedCellId::Kind::string ? id.k : 0) + 1;
  std::vector<std::set<Descriptor>> reach;
  for (const auto& y : cell) reach.push_back(side == Side::left ? search.left_reach(y, b) : search.right_reach(y, b));
  PartitionCheck res;
  for (std::size_t a = 0; a < cell.size(); ++a)
    for (std::size_t c = 0; c < cell.size(); ++c) {
      ++res.pairs;
      const bool mutual = reach[c].contains(cell[a]) && reach[a].contains(cell[c]);
      const bool same = key(cell[a]) == key(cell[c]);
      if (mutual != same) {
        res.ok = false;
        res.message = to_string(cell[a]) + " and " + to_string(cell[c]) +
                      (same ? " share a key but lack mutual witnesses" : " have mutual witnesses but different keys");
        return res;
      }
    }
  res.message = std::to_string(res.pairs) + " ordered pairs agree with the key partition";
  return res;
}

// ---- reports ---------------------------------------------------------------

struct PartitionRow {
  Descriptor descriptor;
  TwoSidedCellId cell;
  CellKey left, right;
};

inline std::vector<PartitionRow> partition_rows(const std::vector<Descriptor>& ds) {
  std::vector<PartitionRow> rows;
  for (const auto& d : ds) rows.push_back({d, two_sided_cell(d), left_cell_key(d), right_cell_key(d)});
  return rows;
}

inline std::string to_csv(const std::vector<PartitionRow>& rows) {
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream os;
  os << "descriptor,two_sided_cell,left_key,right_key\n";
  for (const auto& r : rows)
    os << quote(to_string(r.descriptor)) << ',' << r.cell.str() << ',' << quote(r.left.text) << ','
       << quote(r.right.text) << '\n';
  return os.str();
}

inline nlohmann::json to_json(const std::vector<PartitionRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"descriptor", to_string(r.descriptor)},
                   {"two_sided_cell", r.cell.str()},
                   {"left_key", r.left.text},
                   {"right_key", r.right.text}});
  return out;
}

}  // namespace nakayama
