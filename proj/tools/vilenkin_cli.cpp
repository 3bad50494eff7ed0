// Command-line harness: transforms, kernels and the Lebesgue-constant,
// Hardy-space and divergence experiments.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "vilenkin/experiments.hpp"

namespace {

struct Cli {
  std::optional<std::string> radix;
  std::optional<int> depth;
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<double> tolerance;
  std::string config_file;
  std::map<std::string, std::string> params;
};

void add_param(CLI::App* sub, Cli& cli, const std::string& flag, const std::string& help) {
  std::string key = flag.substr(2);
  std::replace(key.begin(), key.end(), '-', '_');
  sub->add_option_function<std::string>(flag, [&cli, key](const std::string& v) { cli.params[key] = v; }, help);
}

void add_switch(CLI::App* sub, Cli& cli, const std::string& flag, const std::string& help) {
  std::string key = flag.substr(2);
  std::replace(key.begin(), key.end(), '-', '_');
  sub->add_flag_callback(flag, [&cli, key] { cli.params[key] = "1"; }, help);
}

vilenkin::ExperimentConfig build_config(const Cli& cli, const std::string& experiment) {
  vilenkin::ExperimentConfig config;
  if (!cli.config_file.empty()) {
    std::ifstream in(cli.config_file);
    if (!in) throw vilenkin::Error(vilenkin::ErrorCode::invalid_argument, "cannot open config " + cli.config_file);
    config.apply_file(in);
  }
  config.experiment = experiment;
  if (cli.radix) config.radix = *cli.radix;
  if (cli.depth) config.depth = *cli.depth;
  if (cli.threads) config.threads = *cli.threads;
  if (cli.seed) config.seed = *cli.seed;
  if (cli.out) config.out = *cli.out;
  if (cli.format) config.format = *cli.format;
  if (cli.tolerance) config.tolerance = *cli.tolerance;
  for (const auto& [k, v] : cli.params) config.params[k] = v;
  if (config.format != "csv" && config.format != "json") {
    throw vilenkin::Error(vilenkin::ErrorCode::invalid_argument, "format must be csv or json");
  }
  if (config.threads < 1) throw vilenkin::Error(vilenkin::ErrorCode::invalid_argument, "threads must be >= 1");
  return config;
}

int run_transform(const vilenkin::ExperimentConfig& config) {
  const auto input = config.param("in");
  if (input.empty()) throw vilenkin::Error(vilenkin::ErrorCode::invalid_argument, "transform needs --in");
  const bool verify = config.flag("verify");
  const auto result = vilenkin::run_transform(vilenkin::read_field_file(input), config.flag("inverse"), verify);
  vilenkin::write_json_file(config.out, result.document);
  if (!result.verified) return 0;
  std::cerr << "verify: max_deviation=" << vilenkin::format_cell(result.max_deviation)
            << " roundtrip_error=" << vilenkin::format_cell(result.roundtrip_error) << '\n';
  const bool ok = result.max_deviation <= config.oracle_tolerance && result.roundtrip_error <= config.oracle_tolerance;
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic analysis on bounded Vilenkin groups"};
  app.require_subcommand(1);
  Cli cli;
  app.add_option_function<std::string>("--radix", [&](const std::string& v) { cli.radix = v; },
                                       "radix sequence, \"2,3,4\" or \"2^10\" (default 2^10)");
  app.add_option_function<int>("--depth", [&](int v) { cli.depth = v; }, "truncation depth N");
  app.add_option_function<int>("--threads", [&](int v) { cli.threads = v; }, "worker threads");
  app.add_option_function<std::uint64_t>("--seed", [&](std::uint64_t v) { cli.seed = v; }, "corpus seed");
  app.add_option_function<std::string>("--out", [&](const std::string& v) { cli.out = v; }, "output path (- = stdout)");
  app.add_option_function<std::string>("--format", [&](const std::string& v) { cli.format = v; }, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option_function<double>("--tolerance", [&](double v) { cli.tolerance = v; }, "equality tolerance");
  app.add_option("--config", cli.config_file, "key=value config file");

  auto* transform = app.add_subcommand("transform", "forward or inverse transform of a JSON field")->fallthrough();
  add_param(transform, cli, "--in", "input field JSON");
  add_switch(transform, cli, "--inverse", "spectral -> step instead of step -> spectral");
  add_switch(transform, cli, "--verify", "cross-check against the naive transform");

  auto* kernel = app.add_subcommand("kernel", "Dirichlet or Fejer kernel values")->fallthrough();
  add_param(kernel, cli, "--n", "kernel index");
  add_param(kernel, cli, "--kind", "dirichlet (default) or fejer");

  auto* scan = app.add_subcommand("lebesgue-scan", "Lebesgue constants against the two-sided v/v* bound")->fallthrough();
  add_param(scan, cli, "--first", "first n (default 1)");
  add_param(scan, cli, "--last", "last n (default M_N - 1)");

  app.add_subcommand("lemma1", "averages of v(k) over k < M_n")->fallthrough();

  auto* divergence = app.add_subcommand("divergence", "counterexample window averages")->fallthrough();
  add_param(divergence, cli, "--alphas", "explicit alphas, e.g. 1,4,9");
  add_param(divergence, cli, "--alpha-rule", "power rule, e.g. k4 (default)");
  add_param(divergence, cli, "--terms", "number of terms for the rule");
  add_param(divergence, cli, "--fejer-max", "largest n in the Fejer sup");
  add_param(divergence, cli, "--cesaro-max", "largest n in the Cesaro curve");

  auto* gat = app.add_subcommand("gat", "logarithmic means and Fejer ratios on a random corpus")->fallthrough();
  add_param(gat, cli, "--count", "corpus size (default 50)");
  add_param(gat, cli, "--max-rank", "ranks cycle through 1..max-rank (default min(N,4))");

  auto* equiv = app.add_subcommand("equiv-check", "maximal function vs sup of S_{M_n} f")->fallthrough();
  add_param(equiv, cli, "--in", "input field JSON (default: random corpus)");
  add_param(equiv, cli, "--count", "corpus size (default 100)");
  add_param(equiv, cli, "--rank", "corpus rank (default N)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string experiment = app.get_subcommands().front()->get_name();
  try {
    const auto config = build_config(cli, experiment);
    const auto start = std::chrono::steady_clock::now();
    int status = 0;
    if (experiment == "transform") {
      status = run_transform(config);
    } else {
      const auto report = vilenkin::run_experiment(config);
      report.write(config);
      status = report.violations > 0 ? 2 : 0;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << experiment << ": runtime_s=" << elapsed.count() << '\n';
    return status;
  } catch (const vilenkin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
