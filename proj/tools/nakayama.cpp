// Command-line front end.
//
// Exit codes: 0 success or match, 1 usage or parse error, 2 verification
// mismatch, 3 oracle size cap exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nakayama/cells.hpp"
#include "nakayama/certify.hpp"
#include "nakayama/decompose.hpp"
#include "nakayama/dot.hpp"
#include "nakayama/grammar.hpp"
#include "nakayama/realize.hpp"
#include "nakayama/tensor_oracle.hpp"
#include "nakayama/tensor_rules.hpp"

namespace {

using namespace nakayama;

constexpr int kOk = 0, kUsage = 1, kMismatch = 2, kCapAbort = 3;

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(Rational::parse(t));
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

int cmd_tensor(int n, const std::string& lhs, const std::string& rhs, const std::string& mode, std::size_t cap,
               std::uint64_t seed) {
  const AlgebraContext ctx(n);
  const Descriptor x = parse_descriptor(lhs, ctx), y = parse_descriptor(rhs, ctx);
  Multiset sym, orc;
  bool identified = true;
  if (mode != "oracle") sym = symbolic_tensor(x, y, ctx);
  if (mode != "symbolic") {
    const auto rep = decompose(tensor(realize(x, ctx), realize(y, ctx), cap), ctx, seed);
    orc = rep.multiset;
    identified = fully_identified(rep);
    if (!identified)
      for (std::size_t i = 0; i < rep.flags.size(); ++i)
        if (rep.flags[i] != "indecomposable") std::cerr << "warning: summand " << i << " " << rep.flags[i] << "\n";
  }
  if (mode == "symbolic") {
    std::cout << sym << "\n";
    return kOk;
  }
  if (mode == "oracle") {
    std::cout << orc << "\n";
    return identified ? kOk : kMismatch;
  }
  if (identified && sym == orc) {
    std::cout << sym << "\nMATCH\n";
    return kOk;
  }
  std::cout << "symbolic: " << sym << "\noracle:   " << orc << "\nMISMATCH\n";
  return kMismatch;
}

int cmd_check(CheckConfig cfg, bool json, const std::string& report_path) {
  bool all = true;
  const auto results = run_checks(cfg, [&](const CheckResult& r) {
    all = all && r.passed;
    if (!json) std::cout << summary_line(r) << std::endl;
  });
  const auto report = report_json(cfg, results);
  if (json) std::cout << report.dump(2) << "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::invalid_argument("cannot write " + report_path);
    out << report.dump(2) << "\n";
  }
  if (!json) std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kMismatch;
}

int cmd_cells(int n, int max_valleys, const std::string& format) {
  const AlgebraContext ctx(n);
  std::vector<Descriptor> ds = enumerate_cell(TwoSidedCellId::split(), ctx);
  for (int k = 0; k <= max_valleys; ++k)
    for (auto& d : enumerate_cell(TwoSidedCellId::J(k), ctx)) ds.push_back(d);
  const auto rows = partition_rows(ds);
  if (format == "json")
    std::cout << to_json(rows).dump(2) << "\n";
  else
    std::cout << to_csv(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor products and cells of bimodules over radical square zero Nakayama algebras"};
  app.require_subcommand(1);

  int n = 2;
  std::size_t cap = kDefaultOracleCap;
  std::uint64_t seed = kDefaultSeed;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "number of vertices of the cyclic quiver")->check(CLI::PositiveNumber);
  };

  auto* tensor_cmd = app.add_subcommand("tensor", "decompose X (x)_A Y");
  std::string lhs, rhs, mode = "symbolic";
  add_common(tensor_cmd);
  tensor_cmd->add_option("lhs", lhs, "left factor")->required();
  tensor_cmd->add_option("rhs", rhs, "right factor")->required();
  tensor_cmd->add_option("--mode", mode, "symbolic, oracle or both")
      ->check(CLI::IsMember({"symbolic", "oracle", "both"}));
  tensor_cmd->add_option("--cap", cap, "largest pre-quotient dimension for the oracle");
  tensor_cmd->add_option("--seed", seed, "seed for randomized decomposition");

  auto* cell_cmd = app.add_subcommand("cell", "two-sided cell and left/right cell keys");
  std::string desc;
  add_common(cell_cmd);
  cell_cmd->add_option("descriptor", desc)->required();

  auto* check_cmd = app.add_subcommand("check", "run the certification sweep");
  CheckConfig cfg;
  std::vector<int> ns;
  std::vector<std::string> lambdas, band_lambdas;
  bool json = false;
  std::string report_path;
  check_cmd->add_option("--n", ns, "values of n (comma separated)")->delimiter(',')->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-valleys", cfg.max_valleys, "valleys in the sweep universe")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--sweep-m", cfg.sweep_m, "Jordan sizes in the sweep universe")->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-m", cfg.max_m, "Jordan sizes for band products")->check(CLI::PositiveNumber);
  check_cmd->add_option("--lambdas", lambdas, "band parameters in the sweep universe")->delimiter(',');
  check_cmd->add_option("--band-lambdas", band_lambdas, "band parameters for band products")->delimiter(',');
  check_cmd->add_option("--max-cell-valleys", cfg.max_cell_valleys, "largest J(k) for cell checks")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--cap", cfg.cap, "largest pre-quotient dimension for the oracle");
  check_cmd->add_option("--seed", cfg.seed, "base seed");
  check_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--inject-fault", cfg.inject_fault, "corrupt one symbolic result (negative control)");
  check_cmd->add_flag("--json", json, "print the JSON report instead of the summary");
  check_cmd->add_option("--report", report_path, "also write the JSON report to this file");

  auto* graph_cmd = app.add_subcommand("graph", "action graph of a descriptor");
  std::string format = "dot";
  add_common(graph_cmd);
  graph_cmd->add_option("descriptor", desc)->required();
  graph_cmd->add_option("--format", format, "output format (dot)");

  auto* realize_cmd = app.add_subcommand("realize", "concrete bimodule of a descriptor as JSON");
  add_common(realize_cmd);
  realize_cmd->add_option("descriptor", desc)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a bimodule given as JSON");
  std::string input;
  bool decompose_json = false;
  decompose_cmd->add_option("input", input, "JSON file, or - for stdin")->required();
  decompose_cmd->add_option("--seed", seed, "seed for randomized decomposition");
  decompose_cmd->add_flag("--json", decompose_json, "print the full report");

  auto* cells_cmd = app.add_subcommand("cells", "partition report for the finite two-sided cells");
  int cells_valleys = 3;
  std::string cells_format = "csv";
  add_common(cells_cmd);
  cells_cmd->add_option("--max-valleys", cells_valleys, "largest J(k) listed")->check(CLI::NonNegativeNumber);
  cells_cmd->add_option("--format", cells_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tensor_cmd) return cmd_tensor(n, lhs, rhs, mode, cap, seed);
    if (*cell_cmd) {
      const AlgebraContext ctx(n);
      std::cout << classify(parse_descriptor(desc, ctx)) << "\n";
      return kOk;
    }
    if (*check_cmd) {
      if (!ns.empty()) cfg.ns = cfg.fixture_ns = ns;
      if (!lambdas.empty()) cfg.lambdas = parse_rationals(lambdas);
      if (!band_lambdas.empty()) cfg.band_lambdas = parse_rationals(band_lambdas);
      return cmd_check(cfg, json, report_path);
    }
    if (*graph_cmd) {
      if (format != "dot") {
        std::cerr << "error: unsupported format " << format << "\n";
        return kUsage;
      }
      const AlgebraContext ctx(n);
      std::cout << to_dot(parse_descriptor(desc, ctx), ctx);
      return kOk;
    }
    if (*realize_cmd) {
      const AlgebraContext ctx(n);
      std::cout << to_json(realize(parse_descriptor(desc, ctx), ctx)).dump(2) << "\n";
      return kOk;
    }
    if (*decompose_cmd) {
      const ConcreteBimodule x = bimodule_from_json(nlohmann::json::parse(read_input(input)));
      const AlgebraContext ctx(x.n());
      const auto rep = decompose(x, ctx, seed);
      if (decompose_json)
        std::cout << to_json(rep, ctx).dump(2) << "\n";
      else
        std::cout << rep.multiset << "\n";
      return fully_identified(rep) ? kOk : kMismatch;
    }
    if (*cells_cmd) return cmd_cells(n, cells_valleys, cells_format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kCapAbort;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
