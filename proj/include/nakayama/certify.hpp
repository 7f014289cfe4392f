#pragma once

// Certification sweep: the symbolic calculus against the oracle, the summand
// fixtures, cell structure and structural laws. Each check yields one
// pass/fail line; the whole run exports as JSON.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "nakayama/cells.hpp"
#include "nakayama/decompose.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/realize.hpp"
#include "nakayama/tensor_oracle.hpp"
#include "nakayama/tensor_rules.hpp"
#include "nakayama/universe.hpp"

namespace nakayama {

struct CheckConfig {
  std::vector<int> ns{1, 2, 3};
  int max_valleys = 2;                                    // sweep universe
  int sweep_m = 2;                                        // band sizes in the sweep universe
  std::vector<Rational> lambdas{Rational(1), Rational(2)};  // band parameters in the sweep universe
  int max_m = 3;                                          // Jordan sizes for band products
  std::vector<Rational> band_lambdas{Rational(1), Rational(2), Rational(-1), Rational(1, 2)};
  std::vector<int> fixture_ns{1, 2, 3, 4};
  int max_cell_valleys = 3;
  std::size_t cap = kDefaultOracleCap;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  bool inject_fault = false;

  nlohmann::json to_json() const {
    const auto rats = [](const std::vector<Rational>& v) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& r : v) a.push_back(r.str());
      return a;
    };
    return {{"n", ns},
            {"max_valleys", max_valleys},
            {"sweep_m", sweep_m},
            {"lambdas", rats(lambdas)},
            {"max_m", max_m},
            {"band_lambdas", rats(band_lambdas)},
            {"fixture_n", fixture_ns},
            {"max_cell_valleys", max_cell_valleys},
            {"cap", cap},
            {"seed", seed},
            {"jobs", jobs},
            {"inject_fault", inject_fault}};
  }
};

struct CheckResult {
  std::string id;    // C1..C8
  std::string name;
  bool passed = false;
  std::string details;
  double seconds = 0;
};

/// Runs fn(i) for i < count on up to `jobs` threads.
inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Multiset oracle_multiset(const Descriptor& a, const Descriptor& b, const AlgebraContext& ctx,
                                std::uint64_t seed, std::size_t cap, bool* identified = nullptr) {
  const auto rep = decompose(tensor(realize(a, ctx), realize(b, ctx), cap), ctx, seed);
  if (identified) *identified = fully_identified(rep);
  return rep.multiset;
}

}  // namespace detail

// ---- sweep over descriptor pairs ---------------------------------------------

struct PairOutcome {
  int n = 1;
  Descriptor lhs, rhs;
  Multiset symbolic, oracle;
  bool capped = false;
  bool identified = true;
  std::string error;
};

struct Sweep {
  std::vector<PairOutcome> pairs;
  double seconds = 0;
};

inline Sweep run_sweep(const CheckConfig& cfg) {
  detail::Stopwatch clock;
  Sweep sw;
  for (int n : cfg.ns) {
    const AlgebraContext ctx(n);
    const auto u = universe(cfg.max_valleys, cfg.sweep_m, cfg.lambdas, ctx);
    for (const auto& a : u)
      for (const auto& b : u) sw.pairs.push_back({n, a, b, {}, {}, false, true, {}});
  }
  parallel_for(sw.pairs.size(), cfg.jobs, [&](std::size_t i) {
    auto& p = sw.pairs[i];
    const AlgebraContext ctx(p.n);
    try {
      p.symbolic = symbolic_tensor(p.lhs, p.rhs, ctx);
    } catch (const std::exception& e) {
      p.error = std::string("symbolic: ") + e.what();
    }
    try {
      p.oracle = detail::oracle_multiset(p.lhs, p.rhs, ctx, cfg.seed, cfg.cap, &p.identified);
    } catch (const ResourceLimit&) {
      p.capped = true;
    } catch (const std::exception& e) {
      p.error += std::string(" oracle: ") + e.what();
    }
  });
  if (cfg.inject_fault && !sw.pairs.empty()) sw.pairs.front().symbolic.add(L(1, 1, AlgebraContext(sw.pairs.front().n)));
  sw.seconds = clock.seconds();
  return sw;
}

inline std::string describe(const PairOutcome& p) {
  return "n=" + std::to_string(p.n) + " " + to_string(p.lhs) + " (x) " + to_string(p.rhs);
}

// ---- C1 ----------------------------------------------------------------------

inline CheckResult check_clebsch_gordan(const CheckConfig& cfg) {
  detail::Stopwatch clock;
  CheckResult r{"C1", "band-clebsch-gordan", true, {}, 0};
  struct Job {
    int n;
    BandDescriptor a, b;
  };
  std::vector<Job> jobs;
  for (int n : cfg.ns) {
    const AlgebraContext ctx(n);
    for (const auto& a : bands(cfg.max_m, cfg.band_lambdas, ctx))
      for (const auto& b : bands(cfg.max_m, cfg.band_lambdas, ctx))
        jobs.push_back({n, std::get<BandDescriptor>(a), std::get<BandDescriptor>(b)});
  }
  std::vector<std::string> failures(jobs.size());
  std::vector<char> literal(jobs.size(), 0);
  parallel_for(jobs.size(), cfg.jobs, [&](std::size_t i) {
    const auto& j = jobs[i];
    const AlgebraContext ctx(j.n);
    const Multiset expected = band_band(j.a, j.b, ctx);
    // the same Jordan sizes with band index k1+k2
    Multiset shifted;
    for (const auto& [d, c] : expected.entries()) {
      const auto& b = std::get<BandDescriptor>(d);
      shifted.add(make_band(b.k + 1, b.m, b.lambda, ctx), c);
    }
    const Multiset got = detail::oracle_multiset(j.a, j.b, ctx, cfg.seed, cfg.cap);
    literal[i] = got == shifted;
    if (!(got == expected))
      failures[i] = "n=" + std::to_string(j.n) + " " + to_string(Descriptor(j.a)) + " (x) " +
                    to_string(Descriptor(j.b)) + ": oracle " + to_string(got) + ", expected " + to_string(expected);
  });
  std::size_t bad = 0;
  for (const auto& f : failures)
    if (!f.empty() && bad++ == 0) r.details = f;
  r.passed = bad == 0;
  const auto agree = std::count(literal.begin(), literal.end(), 1);
  if (r.passed)
    r.details = std::to_string(jobs.size()) + " band products equal (+)_s B(k1+k2-1, s, l1*l2)";
  else
    r.details = std::to_string(bad) + " of " + std::to_string(jobs.size()) + " mismatched; first: " + r.details;
  r.details += "; index k1+k2 would agree in " + std::to_string(agree) + " of " + std::to_string(jobs.size());
  r.seconds = clock.seconds();
  return r;
}

// ---- C2 ----------------------------------------------------------------------

struct SummandFixture {
  Descriptor expected, lhs, rhs;
};

/// The five products with a named summand, for valley count k.
inline std::vector<SummandFixture> summand_fixtures(int k, const AlgebraContext& ctx) {
  using T = StringType;
  return {
      {make_string(T::M, 1, 2, k - 1, ctx), make_string(T::M, 1, 1, k, ctx), make_string(T::M, 1, 1, k, ctx)},
      {make_string(T::N, 1, 1, k, ctx), make_string(T::W, 1, 1, k, ctx), make_string(T::M, 1, 1, k, ctx)},
      {make_string(T::M, 1, 1, k, ctx), make_string(T::S, 1, 1, k, ctx), make_string(T::N, 1, 1, k, ctx)},
      {make_string(T::W, 1, 1, k, ctx), make_string(T::N, 1, 1, k, ctx), make_string(T::S, 2, 1, k, ctx)},
      {make_string(T::S, 1, 2, k, ctx), make_string(T::M, 1, 1, k, ctx), make_string(T::W, 2, 2, k, ctx)},
  };
}

inline CheckResult check_summand_fixtures(const CheckConfig& cfg) {
  detail::Stopwatch clock;
  CheckResult r{"C2", "named-summands", true, {}, 0};
  std::size_t count = 0, bad = 0;
  for (int n : cfg.fixture_ns) {
    const AlgebraContext ctx(n);
    for (int k = 1; k <= 3; ++k)
      for (const auto& f : summand_fixtures(k, ctx)) {
        ++count;
        const Multiset got = detail::oracle_multiset(f.lhs, f.rhs, ctx, cfg.seed, cfg.cap);
        const bool hit = got.contains(f.expected);
        if (!hit && bad++ == 0)
          r.details = "n=" + std::to_string(n) + " " + to_string(f.expected) + " missing from " + to_string(f.lhs) +
                      " (x) " + to_string(f.rhs) + " = " + to_string(got);
      }
  }
  r.passed = bad == 0;
  r.details = r.passed ? std::to_string(count) + " products contain their named summand"
                       : std::to_string(bad) + " of " + std::to_string(count) + " missing; first: " + r.details;
  r.seconds = clock.seconds();
  return r;
}

// ---- C3, C4 ------------------------------------------------------------------

inline CheckResult check_symbolic_vs_oracle(const Sweep& sw) {
  CheckResult r{"C3", "symbolic-equals-oracle", true, {}, sw.seconds};
  std::size_t compared = 0, capped = 0, bad = 0;
  for (const auto& p : sw.pairs) {
    if (p.capped) {
      ++capped;
      continue;
    }
    ++compared;
    const bool ok = p.error.empty() && p.identified && p.symbolic == p.oracle;
    if (!ok && bad++ == 0)
      r.details = describe(p) + ": symbolic " + to_string(p.symbolic) + ", oracle " + to_string(p.oracle) +
                  (p.identified ? "" : " (unidentified summands)") + (p.error.empty() ? "" : " " + p.error);
  }
  r.passed = bad == 0;
  std::ostringstream os;
  if (r.passed)
    os << compared << " pairs agree";
  else
    os << bad << " of " << compared << " pairs disagree; first: " << r.details;
  os << "; " << capped << " above the oracle cap";
  r.details = os.str();
  return r;
}

inline CheckResult check_string_band_shape(const Sweep& sw) {
  CheckResult r{"C4", "string-band-shape", true, {}, 0};
  std::size_t products = 0, summands = 0, bad = 0;
  for (const auto& p : sw.pairs) {
    const StringDescriptor* s = nullptr;
    if (is_string(p.lhs) && is_band(p.rhs)) s = &std::get<StringDescriptor>(p.lhs);
    if (is_band(p.lhs) && is_string(p.rhs)) s = &std::get<StringDescriptor>(p.rhs);
    if (!s || p.capped) continue;
    ++products;
    for (const auto& [d, c] : p.oracle.entries()) {
      summands += static_cast<std::size_t>(c);
      const auto* t = std::get_if<StringDescriptor>(&d);
      const bool ok = t && t->type == s->type && width(*t) == width(*s) && height(*t) == height(*s);
      if (!ok && bad++ == 0) r.details = describe(p) + " has summand " + to_string(d);
    }
    if (p.oracle.empty() && bad++ == 0) r.details = describe(p) + " vanished";
  }
  r.passed = bad == 0 && products > 0;
  r.details = r.passed ? std::to_string(summands) + " summands of " + std::to_string(products) +
                             " string/band products keep type, width and height"
                       : (products == 0 ? "no string/band products in the sweep" : r.details);
  return r;
}

// ---- C5 ----------------------------------------------------------------------

inline WitnessBudget sweep_budget(const CheckConfig& cfg) { return {cfg.max_valleys, cfg.sweep_m, cfg.lambdas}; }

inline CheckResult check_order_witnesses(const CheckConfig& cfg) {
  detail::Stopwatch clock;
  CheckResult r{"C5", "two-sided-order-witnesses", true, {}, 0};
  std::size_t positive = 0, searched = 0;
  std::string fail;
  for (int n : cfg.ns) {
    const AlgebraContext ctx(n);
    WitnessSearch ws(ctx);
    for (int k = 1; k <= cfg.max_cell_valleys && fail.empty(); ++k) {
      const Descriptor x = make_string(StringType::M, 1, 2, k - 1, ctx);
      const Descriptor y = make_string(StringType::M, 1, 1, k, ctx);
      const auto l = ws.find_left(x, y);
      const auto rr = ws.find_right(x, y);
      const auto j = ws.find_two_sided(x, y);
      if (!l || !rr || !j)
        fail = "n=" + std::to_string(n) + ": no witness for " + to_string(x) + " >= " + to_string(y);
      else
        positive += 3;
    }
    // bounded searches that must come back empty
    const WitnessBudget b = sweep_budget(cfg);
    for (const auto& y : strings_with_valleys(cfg.max_cell_valleys, ctx)) {
      if (!fail.empty()) break;
      ++searched;
      for (const auto& w : ws.two_sided_reach(y, b))
        if (is_band(w)) {
          fail = "n=" + std::to_string(n) + ": band " + to_string(w) + " reached from " + to_string(y);
          break;
        }
    }
    for (int k = 1; k <= cfg.max_cell_valleys && fail.empty(); ++k)
      for (const auto& y : strings_with_valleys(k - 1, ctx)) {
        ++searched;
        for (const auto& w : ws.two_sided_reach(y, b))
          if (two_sided_cell(w) == TwoSidedCellId::J(k)) {
            fail = "n=" + std::to_string(n) + ": " + to_string(w) + " in J(" + std::to_string(k) + ") reached from " +
                   to_string(y);
            break;
          }
        if (!fail.empty()) break;
      }
  }
  r.passed = fail.empty();
  r.details = r.passed ? std::to_string(positive) + " left/right/two-sided witnesses for J(k-1) >= J(k) found; " +
                             std::to_string(searched) +
                             " bounded searches for Band >= J(top) and J(k) >= J(k-1) found nothing (consistency, "
                             "not proof)"
                       : fail;
  r.seconds = clock.seconds();
  return r;
}

// ---- C6 ----------------------------------------------------------------------

inline CheckResult check_cell_partitions(const CheckConfig& cfg) {
  detail::Stopwatch clock;
  CheckResult r{"C6", "cell-partitions-strong-regularity", true, {}, 0};
  std::size_t cells = 0;
  std::string fail;
  for (int n : cfg.ns) {
    const AlgebraContext ctx(n);
    WitnessSearch ws(ctx);
    std::vector<TwoSidedCellId> ids{TwoSidedCellId::split()};
    for (int k = 0; k <= cfg.max_cell_valleys; ++k) ids.push_back(TwoSidedCellId::J(k));
    for (const auto& id : ids) {
      ++cells;
      const auto reg = check_strong_regularity(id, ctx);
      const auto lp = check_partition(id, Side::left, ws, left_cell_key);
      const auto rp = check_partition(id, Side::right, ws, right_cell_key);
      const std::string where = "n=" + std::to_string(n) + " " + id.str() + ": ";
      if (!reg.ok) fail = where + reg.message;
      else if (!lp.ok) fail = where + "left " + lp.message;
      else if (!rp.ok) fail = where + "right " + rp.message;
      if (!fail.empty()) break;
    }
    if (!fail.empty()) break;
  }
  r.passed = fail.empty();
  r.details = r.passed ? std::to_string(cells) +
                             " cells: mutual witnesses match the left and right keys, every left/right intersection "
                             "is a singleton"
                       : fail;
  r.seconds = clock.seconds();
  return r;
}

// ---- C7 ----------------------------------------------------------------------

/// 20 products with at least two summands, drawn from the sweep universe.
inline std::vector<PairOutcome> sample_products(const Sweep& sw, std::uint64_t seed, std::size_t count) {
  std::vector<const PairOutcome*> pool;
  for (const auto& p : sw.pairs)
    if (!p.capped && p.oracle.size() >= 2) pool.push_back(&p);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<PairOutcome> out;
  for (std::size_t i = 0; i < pool.size() && i < count; ++i) out.push_back(*pool[i]);
  return out;
}

inline CheckResult check_seed_determinism(const CheckConfig& cfg, const Sweep& sw) {
  detail::Stopwatch clock;
  CheckResult r{"C7", "krull-schmidt-seed-independence", true, {}, 0};
  const auto sample = sample_products(sw, cfg.seed, 20);
  std::vector<std::string> failures(sample.size());
  parallel_for(sample.size(), cfg.jobs, [&](std::size_t i) {
    const auto& p = sample[i];
    const AlgebraContext ctx(p.n);
    const ConcreteBimodule t = tensor(realize(p.lhs, ctx), realize(p.rhs, ctx), cfg.cap);
    std::optional<Multiset> first;
    for (std::uint64_t s = 0; s < 10; ++s) {
      auto rep = decompose(t, ctx, cfg.seed + s);
      if (!fully_identified(rep)) {
        failures[i] = describe(p) + ": unidentified summand at seed " + std::to_string(cfg.seed + s);
        return;
      }
      if (!first) first = rep.multiset;
      else if (!(*first == rep.multiset)) {
        failures[i] = describe(p) + ": seed " + std::to_string(cfg.seed + s) + " gives " + to_string(rep.multiset) +
                      " instead of " + to_string(*first);
        return;
      }
    }
  });
  std::string fail;
  for (const auto& f : failures)
    if (!f.empty()) {
      fail = f;
      break;
    }
  r.passed = fail.empty() && sample.size() == 20;
  r.details = !fail.empty()            ? fail
              : sample.size() < 20     ? "only " + std::to_string(sample.size()) + " decomposable products available"
                                       : "20 products, 10 seeds each, identical multisets";
  r.seconds = clock.seconds();
  return r;
}

// ---- C8 ----------------------------------------------------------------------

inline CheckResult check_unit_associativity(const CheckConfig& cfg) {
  detail::Stopwatch clock;
  CheckResult r{"C8", "unit-and-associativity", true, {}, 0};
  struct Item {
    int n;
    Descriptor x;
  };
  std::vector<Item> items;
  for (int n : cfg.ns) {
    const AlgebraContext ctx(n);
    for (const auto& d : universe(cfg.max_valleys, cfg.sweep_m, cfg.lambdas, ctx)) items.push_back({n, d});
  }
  std::vector<std::string> failures(items.size());
  parallel_for(items.size(), cfg.jobs, [&](std::size_t i) {
    const AlgebraContext ctx(items[i].n);
    const ConcreteBimodule a = regular_bimodule(ctx);
    const ConcreteBimodule x = realize(items[i].x, ctx);
    const Iso l = isomorphic(tensor(a, x, cfg.cap), x, cfg.seed);
    const Iso rr = isomorphic(tensor(x, a, cfg.cap), x, cfg.seed);
    if (l != Iso::yes || rr != Iso::yes)
      failures[i] = "n=" + std::to_string(items[i].n) + " " + to_string(items[i].x) + ": A(x)X " + to_string(l) +
                    ", X(x)A " + to_string(rr);
  });
  std::string fail;
  for (const auto& f : failures)
    if (!f.empty()) {
      fail = f;
      break;
    }
  // sampled triples, spread over the configured n
  struct Triple {
    int n;
    Descriptor x, y, z;
  };
  std::vector<Triple> triples;
  std::mt19937_64 rng(cfg.seed + 1);
  for (std::size_t t = 0; triples.size() < 30 && t < 30000 && !cfg.ns.empty(); ++t) {
    const int n = cfg.ns[triples.size() % cfg.ns.size()];
    const AlgebraContext ctx(n);
    const auto u = universe(cfg.max_valleys, cfg.sweep_m, cfg.lambdas, ctx);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    Triple tr{n, u[pick(rng)], u[pick(rng)], u[pick(rng)]};
    // keep triples whose product is nonzero and within the cap
    const Multiset xy = symbolic_tensor(tr.x, tr.y, ctx);
    if (xy.empty()) continue;
    bool nonzero = false;
    for (const auto& [d, c] : xy.entries()) nonzero = nonzero || !symbolic_tensor(d, tr.z, ctx).empty();
    if (!nonzero) continue;
    if (xy.total_dimension(ctx) * dimension(tr.z, ctx) > cfg.cap) continue;
    triples.push_back(tr);
  }
  std::vector<std::string> tfail(triples.size());
  parallel_for(triples.size(), cfg.jobs, [&](std::size_t i) {
    const auto& tr = triples[i];
    const AlgebraContext ctx(tr.n);
    const auto x = realize(tr.x, ctx), y = realize(tr.y, ctx), z = realize(tr.z, ctx);
    try {
      const auto lhs = tensor(tensor(x, y, cfg.cap), z, cfg.cap);
      const auto rhs = tensor(x, tensor(y, z, cfg.cap), cfg.cap);
      const Iso res = isomorphic(lhs, rhs, cfg.seed);
      if (res != Iso::yes)
        tfail[i] = "n=" + std::to_string(tr.n) + " (" + to_string(tr.x) + " (x) " + to_string(tr.y) + ") (x) " +
                   to_string(tr.z) + ": " + to_string(res);
    } catch (const ResourceLimit& e) {
      tfail[i] = e.what();
    }
  });
  for (const auto& f : tfail)
    if (!f.empty() && fail.empty()) fail = f;
  r.passed = fail.empty() && triples.size() == 30;
  r.details = !fail.empty()            ? fail
              : triples.size() < 30    ? "only " + std::to_string(triples.size()) + " nonzero triples found"
                                       : std::to_string(items.size()) +
                                             " bimodules satisfy A(x)X = X = X(x)A; 30 triples associate";
  r.seconds = clock.seconds();
  return r;
}

// ---- driver ------------------------------------------------------------------

inline std::vector<CheckResult> run_checks(const CheckConfig& cfg,
                                           const std::function<void(const CheckResult&)>& on_result = {}) {
  std::vector<CheckResult> out;
  const auto emit = [&](CheckResult r) {
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  emit(check_clebsch_gordan(cfg));
  emit(check_summand_fixtures(cfg));
  const Sweep sw = run_sweep(cfg);
  emit(check_symbolic_vs_oracle(sw));
  emit(check_string_band_shape(sw));
  emit(check_order_witnesses(cfg));
  emit(check_cell_partitions(cfg));
  emit(check_seed_determinism(cfg, sw));
  emit(check_unit_associativity(cfg));
  return out;
}

inline std::string summary_line(const CheckResult& r) {
  std::ostringstream os;
  os << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << r.name << " (" << std::fixed;
  os.precision(1);
  os << r.seconds << "s): " << r.details;
  return os.str();
}

inline nlohmann::json report_json(const CheckConfig& cfg, const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    checks.push_back({{"name", r.id + " " + r.name},
                      {"status", r.passed ? "pass" : "fail"},
                      {"details", r.details},
                      {"seconds", r.seconds}});
  }
  return {{"config", cfg.to_json()},
          {"checks", checks},
          {"summary",
           {{"total", results.size()},
            {"passed", passed},
            {"failed", results.size() - passed},
            {"all_passed", passed == results.size()}}}};
}

}  // namespace nakayama
