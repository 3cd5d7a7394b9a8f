// Copyright 2026 The spindla authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spindla/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "spindla/decomposition.hpp"
#include "spindla/verify.hpp"

namespace spindla {

namespace {

struct CliConfig {
  int nc = 1;
  int np = 1;
  double gamma_c = 1.0;
  double gamma_p = 2.0;
  uint64_t seed = 42;
  bool json = false;
  int max_n = 5;
  std::string suite = "all";
  std::vector<std::string> inputs;
  int n = 2;
};

int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.nc < 1 || cfg.nc > 2 || cfg.np < 1 ||
      cfg.nc + cfg.np > max_qubits()) {
    err << "analyze: need nc in {1,2}, np >= 1, nc+np <= " << max_qubits()
        << "\n";
    return 2;
  }
  ModelParams p{RegisterSpec(cfg.nc, cfg.np), cfg.gamma_c, cfg.gamma_p};
  ControllabilityReport report = analyze(p, cfg.seed);
  if (cfg.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    out << "register nc=" << cfg.nc << " np=" << cfg.np << "  gamma=("
        << cfg.gamma_c << "," << cfg.gamma_p << ")  dla_dim="
        << report.dla_dim << "\n";
    if (report.outside_assumption) {
      out << "warning: |gamma_c| == |gamma_p|, outside the supported regime\n";
    }
    out << std::left << std::setw(10) << "shape_C" << std::setw(5) << "idx"
        << std::setw(10) << "shape_P" << std::setw(5) << "idx" << std::right
        << std::setw(5) << "m" << std::setw(7) << "dim" << "  " << std::left
        << std::setw(11) << "verdict" << "leakage\n";
    for (const BlockReport& b : report.blocks) {
      std::ostringstream leak;
      leak << std::scientific << std::setprecision(2) << b.leakage;
      out << std::left << std::setw(10) << b.shape_c.str() << std::setw(5)
          << b.idx_c << std::setw(10) << b.shape_p.str() << std::setw(5)
          << b.idx_p << std::right << std::setw(5) << b.m << std::setw(7)
          << b.restricted_dim << "  " << std::left << std::setw(11)
          << b.verdict << leak.str() << "\n";
    }
    out << "subspace_controllable: "
        << (report.subspace_controllable ? "yes" : "no") << "\n";
  }
  return report.subspace_controllable ? 0 : 1;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_n < 2 || cfg.max_n > max_qubits()) {
    err << "verify: need 2 <= max-n <= " << max_qubits() << "\n";
    return 2;
  }
  std::vector<CheckResult> results;
  try {
    results = run_all(cfg.max_n, cfg.seed, cfg.suite);
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  }
  int fails = 0;
  if (cfg.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
      arr.push_back({{"name", r.name},
                     {"params", r.params},
                     {"passed", r.passed},
                     {"residual", r.residual},
                     {"elapsed", r.elapsed}});
      if (!r.passed) ++fails;
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::ostringstream res;
      res << std::scientific << std::setprecision(2) << r.residual;
      out << std::left << std::setw(26) << r.name << std::setw(14) << r.params
          << (r.passed ? "pass" : "FAIL") << "  residual=" << res.str()
          << "\n";
      if (!r.passed) ++fails;
    }
    out << results.size() - fails << "/" << results.size() << " checks pass\n";
  }
  return fails == 0 ? 0 : 1;
}

int cmd_dims(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1 || cfg.n > 20) {
    err << "dims: need 1 <= n <= 20\n";
    return 2;
  }
  long total = 0;
  int largest = 0;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (!cfg.json) {
    out << "n=" << cfg.n << "\n"
        << std::left << std::setw(14) << "shape" << std::right << std::setw(9)
        << "tableaux" << std::setw(6) << "dim" << "\n";
  }
  for (const Partition& shape : partitions(cfg.n)) {
    long count = tableau_count(shape);
    int dim = subspace_dim(shape);
    total += count * dim;
    largest = std::max(largest, dim);
    if (cfg.json) {
      rows.push_back(
          {{"shape", shape.str()}, {"tableaux", count}, {"dim", dim}});
    } else {
      out << std::left << std::setw(14) << shape.str() << std::right
          << std::setw(9) << count << std::setw(6) << dim << "\n";
    }
  }
  bool complete = total == (1L << cfg.n);
  if (cfg.json) {
    out << nlohmann::ordered_json{{"n", cfg.n},
                                  {"rows", rows},
                                  {"largest", largest},
                                  {"total", total},
                                  {"complete", complete}}
               .dump(2)
        << "\n";
  } else {
    out << "largest = " << largest << " (n+1)\n";
    out << "sum tableaux*dim = " << total << (complete ? " = " : " != ")
        << "2^n\n";
  }
  return complete ? 0 : 1;
}

int cmd_closure(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Operator> gens;
  for (const std::string& path : cfg.inputs) {
    std::ifstream in(path);
    if (!in) {
      err << "closure: cannot open " << path << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      Operator a = parse_operator(buf.str());
      if (!gens.empty() && !(a.reg() == gens.front().reg())) {
        err << "closure: " << path << " uses a different register size\n";
        return 2;
      }
      gens.push_back(std::move(a));
    } catch (const ParseError& e) {
      err << "closure: " << path << ": " << e.what() << "\n";
      return 2;
    }
  }
  if (gens.empty()) {
    err << "closure: need at least one --input file\n";
    return 2;
  }
  if (gens.front().reg().n() > max_qubits()) {
    err << "closure: register exceeds the " << max_qubits() << "-qubit cap\n";
    return 2;
  }
  LieBasis basis = closure(gens);
  // Quadratic-cost closedness witness; past ~120 dims rely on the closure
  // loop's own fixed point.
  bool checked = basis.dim() <= 120;
  bool closed = !checked || bracket_closure_residual(basis) < 1e-8;
  std::map<int, int> hist = basis.depth_histogram();
  if (cfg.json) {
    nlohmann::ordered_json depths = nlohmann::ordered_json::object();
    for (const auto& [d, c] : hist) depths[std::to_string(d)] = c;
    out << nlohmann::ordered_json{{"generators", gens.size()},
                                  {"dim", basis.dim()},
                                  {"closed", closed},
                                  {"depths", depths}}
               .dump(2)
        << "\n";
  } else {
    out << "generators: " << gens.size() << "\n";
    out << "dim: " << basis.dim() << "\n";
    out << "closed: " << (closed ? "yes" : "no") << "\n";
    out << "depth histogram:";
    for (const auto& [d, c] : hist) out << " " << d << ":" << c;
    out << "\n";
  }
  return closed ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"dynamical Lie algebras of centrally coupled spin networks"};
  app.require_subcommand(1);
  CliConfig cfg;

  CLI::App* analyze_cmd = app.add_subcommand(
      "analyze", "decompose the model DLA and certify each block");
  analyze_cmd->add_option("--nc", cfg.nc, "central spins (1 or 2)");
  analyze_cmd->add_option("--np", cfg.np, "peripheral spins");
  analyze_cmd->add_option("--gamma-c", cfg.gamma_c, "central gyromagnetic");
  analyze_cmd->add_option("--gamma-p", cfg.gamma_p, "peripheral gyromagnetic");
  analyze_cmd->add_option("--seed", cfg.seed, "symmetrizer seed");
  analyze_cmd->add_flag("--json", cfg.json, "JSON output");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the verification checks");
  verify_cmd->add_option("--suite", cfg.suite,
                         "all | lemmas | theorems | identities");
  verify_cmd->add_option("--max-n", cfg.max_n, "size cap");
  verify_cmd->add_option("--seed", cfg.seed, "random seed");
  verify_cmd->add_flag("--json", cfg.json, "JSON output");

  CLI::App* dims_cmd =
      app.add_subcommand("dims", "invariant-subspace dimension table");
  dims_cmd->add_option("--n", cfg.n, "number of sites")->required();
  dims_cmd->add_flag("--json", cfg.json, "JSON output");

  CLI::App* closure_cmd =
      app.add_subcommand("closure", "Lie closure of operators from files");
  closure_cmd
      ->add_option("--input", cfg.inputs, "operator file, one term per line")
      ->expected(-1);
  closure_cmd->add_flag("--json", cfg.json, "JSON output");

  std::vector<const char*> argv;
  argv.push_back("spindla");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (dims_cmd->parsed()) return cmd_dims(cfg, out, err);
    return cmd_closure(cfg, out, err);
  } catch (const DimensionError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace spindla
