#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncpoisson/error.hpp"
#include "ncpoisson_tools/commands.hpp"

namespace {

using ncpoisson::tools::ConfigError;
using ncpoisson::tools::Record;
using ncpoisson::tools::Report;
using ncpoisson::tools::RunConfig;
using ncpoisson::tools::Status;

void add_common(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--n", config.n_list, "Matrix sizes, comma separated")->delimiter(',');
  cmd->add_option("--vars", config.vars, "Number of polynomial variables (1 or 2)");
  cmd->add_option("--cap", config.cap, "Total degree cap");
  cmd->add_option("--tol", config.tol, "Residual tolerance");
  cmd->add_option("--seed", config.seed, "PRNG seed (NCPOISSON_SEED overrides)");
  cmd->add_option("--samples", config.samples, "Random samples per property");
  cmd->add_option("--json", config.json_path, "Also write the report to this file");
  cmd->add_flag("--timings", config.timings, "Include per-check runtime_ms");
}

void summarize(const Report& report) {
  for (const auto& [name, r] : report.records()) {
    if (r.status == Status::Pass) continue;
    std::cerr << (r.status == Status::Fail ? "FAIL  " : "ERROR ") << name << "  residual=" << r.residual;
    if (!r.diagnostic.empty()) std::cerr << "  " << r.diagnostic;
    std::cerr << '\n';
  }
  std::cerr << report.count(Status::Pass) << " passed, " << report.count(Status::Fail) << " failed, "
            << report.count(Status::Error) << " errors\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Poisson structure verifier"};
  app.require_subcommand(1);
  RunConfig config;
  auto* verify = app.add_subcommand("verify", "Run every property suite");
  auto* classify = app.add_subcommand("classify", "Classify Hamiltonian brackets");
  add_common(verify, config);
  add_common(classify, config);
  classify->add_flag("--bundle", config.bundle, "Round-trip random polynomial brackets on the bundle model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("NCPOISSON_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "invalid NCPOISSON_SEED: " << env << '\n';
      return 2;
    }
  }

  try {
    const Report report = verify->parsed() ? ncpoisson::tools::cmd_verify(config)
                                           : ncpoisson::tools::cmd_classify(config);
    const std::string text = report.to_json(config).dump(2) + "\n";
    std::cout << text;
    if (config.json_path) {
      std::ofstream out(*config.json_path);
      if (!out) {
        std::cerr << "cannot write " << *config.json_path << '\n';
        return 2;
      }
      out << text;
    }
    summarize(report);
    return report.ok() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const ncpoisson::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
