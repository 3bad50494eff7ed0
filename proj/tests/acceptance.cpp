// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance [artifact-dir]   (default: acceptance_artifacts)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vilenkin/experiments.hpp"
#include "vilenkin/hardy.hpp"
#include "vilenkin/random.hpp"

using namespace vilenkin;
using cd = std::complex<double>;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

fs::path artifacts = "acceptance_artifacts";

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", v);
  return buffer;
}

double max_abs(const ComplexVector<double>& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double column(const Table& table, std::size_t row, const std::string& name) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (table.columns[i] != name) continue;
    const auto& cell = table.rows.at(row)[i];
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* n = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*n);
  }
  throw std::runtime_error("no numeric column " + name + " in " + table.name);
}

ExperimentReport run(const std::string& experiment, const std::string& radix, int threads = 1, std::uint64_t seed = 1,
                     std::map<std::string, std::string> params = {}) {
  ExperimentConfig config;
  config.experiment = experiment;
  config.radix = radix;
  config.threads = threads;
  config.seed = seed;
  config.params = std::move(params);
  return run_experiment(config);
}

const std::vector<std::string> kLemmaSystems = {"2^12", "3^7", "2,3,4,2,3,4,2,3,4"};

// D_n through the inverse transform of the indicator of [0, n), independent of the closed form.
StepFunction dirichlet_by_transform(std::uint64_t n, const CharacterTable<double>& table) {
  auto c = SpectralVector::zero(table.sys());
  for (std::uint64_t k = 0; k < n; ++k) c[static_cast<Eigen::Index>(k)] = 1.0;
  return inverse(c, table);
}

Outcome kernel_identities() {
  double worst = 0;
  std::size_t checked = 0;
  for (const auto& radix : kLemmaSystems) {
    const auto sys = RadixSystem::parse(radix);
    const CharacterTable<double> table(sys);
    const auto size = static_cast<Eigen::Index>(sys.size());
    for (int n = 0; n <= sys.depth(); ++n) {
      const auto m = sys.product(n);
      const auto closed = dirichlet_kernel(m, table);
      const auto spectral = dirichlet_by_transform(m, table);
      for (Eigen::Index t = 0; t < size; ++t) {
        const double want = static_cast<std::uint64_t>(t) % m == 0 ? static_cast<double>(m) : 0.0;
        worst = std::max({worst, std::abs(closed[t] - want), std::abs(spectral[t] - want)});
      }
      ++checked;
      if (n == sys.depth()) break;
      const int radix_n = sys.radix(n);
      for (int s = 1; s < radix_n; ++s) {
        const auto lhs_closed = dirichlet_kernel(static_cast<std::uint64_t>(s) * m, table);
        const auto lhs_spectral = dirichlet_by_transform(static_cast<std::uint64_t>(s) * m, table);
        for (Eigen::Index t = 0; t < size; ++t) {
          const auto digit = (static_cast<std::uint64_t>(t) / m) % static_cast<std::uint64_t>(radix_n);
          cd geometric{0, 0};
          for (int q = 0; q < s; ++q) {
            geometric += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(digit * static_cast<std::uint64_t>(q) % static_cast<std::uint64_t>(radix_n)) / radix_n);
          }
          const cd rhs = spectral[t] * geometric;
          worst = std::max({worst, std::abs(lhs_closed[t] - rhs), std::abs(lhs_spectral[t] - rhs)});
        }
        ++checked;
      }
    }
  }
  return {worst <= 1e-9, std::to_string(checked) + " kernels, max deviation " + fmt(worst)};
}

Outcome transform_equivalence() {
  double fast_naive = 0, roundtrip = 0, vs_oracle = 0;
  CorpusGenerator rng(2024);
  for (const auto& radix : {"2^10", "2,3,4,2,3,4", "3^6", "2^12"}) {
    const auto sys = RadixSystem::parse(radix);
    const CharacterTable<double> table(sys);
    const int count = sys.size() > 2048 ? 10 : 100;
    for (int i = 0; i < count; ++i) {
      const auto f = rng.step_function(sys);
      const auto fast = forward_fast(f, table);
      const auto naive = forward_naive(f);
      fast_naive = std::max(fast_naive, max_abs(fast.values() - naive.values()));
      roundtrip = std::max(roundtrip, max_abs(inverse(fast, table).values() - f.values()));
      if (i == 0) {
        // spot a few coefficients against the defining sum
        for (std::uint64_t k : {std::uint64_t{1}, sys.size() / 3, sys.size() - 1}) {
          cd sum{0, 0};
          for (std::uint64_t t = 0; t < sys.size(); ++t) sum += f[static_cast<Eigen::Index>(t)] * std::conj(oracle::character(k, t, sys));
          vs_oracle = std::max(vs_oracle, std::abs(sum / static_cast<double>(sys.size()) - fast[static_cast<Eigen::Index>(k)]));
        }
      }
    }
  }
  const bool pass = fast_naive <= 1e-10 && roundtrip <= 1e-10 && vs_oracle <= 1e-10;
  return {pass, "fast-naive " + fmt(fast_naive) + ", roundtrip " + fmt(roundtrip) + ", oracle " + fmt(vs_oracle)};
}

Outcome lemma2_exhaustive() {
  fs::create_directories(artifacts);
  Outcome outcome;
  for (const auto& radix : kLemmaSystems) {
    const auto report = run("lebesgue-scan", radix);
    const auto rows = report.table("lebesgue").rows.size();
    const auto size = RadixSystem::parse(radix).size();
    auto name = radix;
    for (auto& ch : name) {
      if (ch == ',' || ch == '^') ch = '_';
    }
    std::ofstream out(artifacts / ("lebesgue_bound_" + name + ".csv"));
    report.write_csv(out);
    if (report.violations != 0 || rows != size - 1) outcome.pass = false;
    outcome.detail += (outcome.detail.empty() ? "" : "; ") + radix + ": " + std::to_string(rows) + " n, " +
                      std::to_string(report.violations) + " violations, min slack " +
                      fmt(std::min(report.summary_number("min_lower_slack"), report.summary_number("min_upper_slack")));
  }
  outcome.detail += "; slacks in " + artifacts.string();
  return outcome;
}

Outcome lemma1_averages() {
  Outcome outcome;
  const auto dyadic = lemma1_scan(RadixSystem::constant(2, 12));
  double min_average = 1e300;
  for (const auto& row : dyadic.rows) min_average = std::min(min_average, row.average);
  if (dyadic.rows.size() != 12 || min_average < 0.25) outcome.pass = false;
  // 2/3 exactly: integer sum 16 over 3 * 8
  const auto& three = dyadic.rows.at(2);
  if (three.level != 3 || three.variation_sum * 3 != 2 * 3 * three.size || three.average != 2.0 / 3.0) outcome.pass = false;
  outcome.detail = "dyadic min " + fmt(min_average) + ", n=3 sum " + std::to_string(three.variation_sum) + "/(3*8)";
  for (const auto& radix : kLemmaSystems) {
    const auto scan = lemma1_scan(RadixSystem::parse(radix));
    if (!(scan.c_estimate > 0)) outcome.pass = false;
    outcome.detail += ", c[" + radix + "] " + fmt(scan.c_estimate);
  }
  return outcome;
}

Outcome coefficient_structure() {
  double worst = 0;
  const std::vector<CounterexampleSpec> specs = {CounterexampleSpec({1, 2}, RadixSystem::constant(2, 10)),
                                                 CounterexampleSpec({1, 3}, RadixSystem::parse("2,3,4", 6)),
                                                 CounterexampleSpec({1, 3}, RadixSystem::parse("2,3,4", 9))};
  for (const auto& spec : specs) {
    const auto c = forward_fast(build_counterexample(spec));
    for (Eigen::Index j = 0; j < c.size(); ++j) {
      // block k holds [M_a, M_{a+1}) with value a^{-1/2}
      double want = 0;
      for (int alpha : spec.alphas) {
        const auto u = static_cast<std::uint64_t>(j);
        if (u >= spec.sys.product(alpha) && u < spec.sys.product(alpha + 1)) want = 1 / std::sqrt(static_cast<double>(alpha));
      }
      worst = std::max(worst, std::abs(c[j] - want));
    }
  }
  return {worst <= 1e-12, "3 systems, max coefficient deviation " + fmt(worst)};
}

Outcome decomposition() {
  double reconstruct = 0, lebesgue = 0;
  std::size_t trials = 0;
  struct Case {
    CounterexampleSpec spec;
    bool brute;
  };
  const std::vector<Case> cases = {{CounterexampleSpec({1, 3, 5}, RadixSystem::parse("2,3,4", 6)), true},
                                   {CounterexampleSpec({1, 4, 9}, RadixSystem::constant(2, 10)), false}};
  CorpusGenerator rng(77);
  for (const auto& [spec, brute] : cases) {
    const CharacterTable<double> table(spec.sys);
    const auto c = forward_fast(build_counterexample(spec), table);
    for (int trial = 0; trial < 200; ++trial) {
      const int block = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.terms())));
      const int alpha = spec.alphas[static_cast<std::size_t>(block)];
      const auto start = spec.sys.product(alpha);
      const auto j = start + rng.below(spec.sys.product(alpha + 1) - start);
      const auto parts = partial_sum_decomposition(spec, c, j, table);
      const auto reference = brute ? oracle::partial_sum(c, j) : partial_sum(c, j, table);
      reconstruct = std::max(reconstruct, max_abs((parts.first + parts.second).values() - reference.values()));
      const auto offset = j - start;
      double l = 0;  // D_0 = 0
      if (offset > 0) l = brute ? oracle::l1(oracle::dirichlet(offset, spec.sys)) : lebesgue_constant(offset, spec.sys);
      lebesgue = std::max(lebesgue, std::abs(l1_norm(parts.second) - l / std::sqrt(static_cast<double>(alpha))));
      ++trials;
    }
  }
  return {reconstruct <= 1e-10 && lebesgue <= 1e-9,
          std::to_string(trials) + " in-block j, reconstruction " + fmt(reconstruct) + ", norm " + fmt(lebesgue)};
}

Outcome norm_equivalence() {
  double worst = 0, worst_oracle = 0;
  CorpusGenerator rng(31);
  int count = 0;
  for (const auto& radix : {"2^10", "2,3,4,2,3", "3^6"}) {
    const auto sys = RadixSystem::parse(radix);
    for (int i = 0; i < 100; ++i, ++count) {
      const auto f = rng.step_function(sys);
      worst = std::max(worst, check_norm_equivalence(f).max_deviation);
      if (i < 3) {
        // brute cylinder averages on a handful of points
        const auto star = maximal_function(f);
        for (std::uint64_t t : {std::uint64_t{0}, sys.size() / 2 + 1, sys.size() - 1}) {
          double sup = 0;
          for (int n = 0; n <= sys.depth(); ++n) sup = std::max(sup, std::abs(oracle::cylinder_average(f, n, t)));
          worst_oracle = std::max(worst_oracle, std::abs(sup - star[static_cast<Eigen::Index>(t)].real()));
        }
      }
    }
  }
  return {worst <= 1e-9 && worst_oracle <= 1e-9,
          std::to_string(count) + " functions, max |f* - sup|S_Mn f|| " + fmt(worst) + ", oracle " + fmt(worst_oracle)};
}

Outcome divergence_signature() {
  std::string timings;
  bool pass = true;
  ExperimentReport report;
  for (int threads : {1, 8}) {
    const auto start = std::chrono::steady_clock::now();
    report = run("divergence", "2^10", threads, 1, {{"alphas", "1,4,9"}});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    pass = pass && seconds < (threads == 1 ? 600.0 : 120.0);
    timings += " t" + std::to_string(threads) + "=" + fmt(seconds) + "s";
  }
  const auto& table = report.table("divergence");
  std::string b;
  bool increasing = true;
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    b += (k ? "," : "") + fmt(column(table, k, "B_k"));
    if (k > 0 && !(column(table, k, "B_k") > column(table, k - 1, "B_k"))) increasing = false;
  }
  const double ratio_min = report.summary_number("ratio_min");
  const double factor = report.summary_number("h1_variation_factor");
  pass = pass && table.rows.size() == 3 && increasing && ratio_min > 0 && factor < 2;
  return {pass, "B " + b + ", ratio_min " + fmt(ratio_min) + ", h1 factor " + fmt(factor) + "," + timings};
}

Outcome gat_and_fejer() {
  const auto first = run("gat", "2^10", 1, 1);
  const auto second = run("gat", "2^10", 1, 2);
  const double a = first.summary_number("max_bounded_ratio");
  const double b = second.summary_number("max_bounded_ratio");
  const bool stable = std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= 0.1 * std::min(a, b);
  const bool decreasing = first.summary_number("convergence_checked") > 0 &&
                          first.summary_number("convergence_decreasing") == first.summary_number("convergence_checked") &&
                          second.summary_number("convergence_decreasing") == second.summary_number("convergence_checked");
  const double corpus_fejer = std::max(first.summary_number("fejer_max_ratio"), second.summary_number("fejer_max_ratio"));

  // the contrast on the shared counterexample
  const auto divergence = run("divergence", "2^10", 1, 1, {{"alphas", "1,4,9"}});
  const auto& truncations = divergence.table("truncations");
  bool growing = true;
  double counter_fejer = 0;
  std::string strong;
  for (std::size_t k = 0; k < truncations.rows.size(); ++k) {
    counter_fejer = std::max(counter_fejer, column(truncations, k, "fejer_ratio"));
    strong += (k ? "," : "") + fmt(column(truncations, k, "strong_average_2M"));
    if (k > 0 && !(column(truncations, k, "strong_average_2M") > column(truncations, k - 1, "strong_average_2M"))) growing = false;
  }
  const bool pass = stable && decreasing && corpus_fejer <= 2 && counter_fejer <= 2 && growing;
  return {pass, "bounded ratio " + fmt(a) + "/" + fmt(b) + ", convergence decreasing " +
                    std::to_string(static_cast<int>(first.summary_number("convergence_decreasing"))) + "/" +
                    std::to_string(static_cast<int>(first.summary_number("convergence_checked"))) + ", Fejer ratio corpus " +
                    fmt(corpus_fejer) + " counterexample " + fmt(counter_fejer) + ", strong averages " + strong};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) artifacts = argv[1];
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"kernel identities", 60, kernel_identities},
      {"fast transform equals naive", 60, transform_equivalence},
      {"two-sided Lebesgue bound, exhaustive", 300, lemma2_exhaustive},
      {"variation averages", 60, lemma1_averages},
      {"counterexample coefficients", 60, coefficient_structure},
      {"partial sum decomposition", 60, decomposition},
      {"maximal function equals sup of S_Mn", 60, norm_equivalence},
      {"divergence signature", 600, divergence_signature},
      {"logarithmic means and Fejer contrast", 600, gat_and_fejer},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criteria[i].limit_s) {
      outcome.pass = false;
      outcome.detail += ", over time limit";
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("%s %zu %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
