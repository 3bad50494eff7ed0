#include "vilenkin/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "vilenkin/hardy.hpp"
#include "vilenkin/random.hpp"

namespace vilenkin {

// ---------------------------------------------------------------- config

std::string ExperimentConfig::param(const std::string& key, const std::string& fallback) const {
  auto it = params.find(key);
  return it == params.end() || it->second.empty() ? fallback : it->second;
}

std::int64_t ExperimentConfig::param_int(const std::string& key, std::int64_t fallback) const {
  const auto text = param(key);
  if (text.empty()) return fallback;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::parse_error, "parameter " + key + " = '" + text + "' is not an integer");
  }
  return value;
}

bool ExperimentConfig::flag(const std::string& key) const {
  const auto text = param(key);
  return text == "1" || text == "true" || text == "yes";
}

std::string ExperimentConfig::canonical() const {
  std::map<std::string, std::string> all = params;
  all["experiment"] = experiment;
  all["radix"] = system().to_string();
  all["seed"] = std::to_string(seed);
  all["threads"] = std::to_string(threads);
  all["tolerance"] = format_cell(tolerance);
  all["oracle_tolerance"] = format_cell(oracle_tolerance);
  std::string text;
  for (const auto& [k, v] : all) text += k + "=" + v + "\n";
  return text;
}

std::uint64_t ExperimentConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void ExperimentConfig::apply_file(std::istream& in) {
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    const auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
  };
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash_pos = line.find('#'); hash_pos != std::string::npos) line.erase(hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::parse_error, "config line " + std::to_string(line_number) + ": expected key=value");
    }
    auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '-', '_');
    try {
      if (key == "experiment") experiment = value;
      else if (key == "radix") radix = value;
      else if (key == "depth") depth = std::stoi(value);
      else if (key == "threads") threads = std::stoi(value);
      else if (key == "seed") seed = std::stoull(value);
      else if (key == "out") out = value;
      else if (key == "format") format = value;
      else if (key == "tolerance") tolerance = std::stod(value);
      else if (key == "oracle_tolerance") oracle_tolerance = std::stod(value);
      else params[key] = value;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::parse_error, "config line " + std::to_string(line_number) + ": bad value for " + key);
    }
  }
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"transform", "kernel", "lebesgue-scan", "lemma1",
                                                 "divergence", "gat", "equiv-check"};
  return names;
}

// ---------------------------------------------------------------- report

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double d = std::get<double>(cell);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, d);
  return std::string(buffer, ptr);
}

const Table& ExperimentReport::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  throw Error(ErrorCode::invalid_argument, "no table " + name);
}

const Cell& ExperimentReport::summary_value(const std::string& key) const {
  for (const auto& [k, v] : summary) {
    if (k == key) return v;
  }
  throw Error(ErrorCode::invalid_argument, "no summary entry " + key);
}

double ExperimentReport::summary_number(const std::string& key) const {
  const auto& cell = summary_value(key);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  return std::get<double>(cell);
}

void ExperimentReport::write_csv(std::ostream& out) const {
  out << "# vilenkin " << kToolVersion << " experiment=" << experiment << " radix=" << radix << " depth=" << depth
      << " config_hash=" << std::hex << config_hash << std::dec << '\n';
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& t = tables[i];
    if (i > 0) out << '\n';
    out << "# table: " << t.name << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << t.columns[c];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_cell(row[c]);
      out << '\n';
    }
  }
  out << '\n';
  for (const auto& [k, v] : summary) out << "# summary " << k << "=" << format_cell(v) << '\n';
}

namespace {

nlohmann::json cell_json(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double d = std::get<double>(cell);
  if (!std::isfinite(d)) return format_cell(cell);
  return d;
}

}  // namespace

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json doc;
  std::ostringstream hash;
  hash << std::hex << config_hash;
  doc["meta"] = {{"tool", "vilenkin"},   {"version", kToolVersion}, {"experiment", experiment},
                 {"radix", radix},       {"depth", depth},          {"config_hash", hash.str()}};
  auto tables_json = nlohmann::json::array();
  for (const auto& t : tables) {
    auto rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
      auto r = nlohmann::json::array();
      for (const auto& cell : row) r.push_back(cell_json(cell));
      rows.push_back(std::move(r));
    }
    tables_json.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}});
  }
  doc["tables"] = std::move(tables_json);
  auto summary_json = nlohmann::json::object();
  for (const auto& [k, v] : summary) summary_json[k] = cell_json(v);
  doc["summary"] = std::move(summary_json);
  return doc;
}

void ExperimentReport::write(const ExperimentConfig& config) const {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!config.out.empty() && config.out != "-") {
    file.open(config.out);
    if (!file) throw Error(ErrorCode::invalid_argument, "cannot write " + config.out);
    out = &file;
  }
  if (config.format == "json") {
    *out << to_json().dump(1) << '\n';
  } else {
    write_csv(*out);
  }
}

namespace {

ExperimentReport start_report(const ExperimentConfig& config, const RadixSystem& sys) {
  ExperimentReport report;
  report.experiment = config.experiment;
  report.radix = sys.to_string();
  report.depth = sys.depth();
  report.config_hash = config.hash();
  return report;
}

Cell as_cell(std::uint64_t v) { return static_cast<std::int64_t>(v); }
Cell as_cell(int v) { return static_cast<std::int64_t>(v); }
Cell as_cell(std::int64_t v) { return v; }

}  // namespace

// ---------------------------------------------------------------- experiments

ExperimentReport run_lebesgue_scan(const ExperimentConfig& config) {
  const auto sys = config.system();
  const auto first = static_cast<std::uint64_t>(config.param_int("first", 1));
  const auto last = static_cast<std::uint64_t>(config.param_int("last", static_cast<std::int64_t>(sys.size() - 1)));
  if (first < 1 || last >= sys.size() || first > last) {
    throw Error(ErrorCode::out_of_range, "scan range must lie in [1, M_N)");
  }
  const auto scan = lebesgue_scan(sys, first, last, config.threads, config.tolerance);

  auto report = start_report(config, sys);
  Table table{"lebesgue",
              {"n", "v", "v_star", "L_n", "lower_bound", "upper_bound", "lower_slack", "upper_slack"},
              {}};
  double best_log_ratio = 0;
  std::uint64_t best_log_index = 0;
  for (const auto& row : scan.rows) {
    table.rows.push_back({as_cell(row.n), as_cell(row.v), as_cell(row.v_star), row.lebesgue, row.lower_bound,
                          row.upper_bound, row.lower_slack(), row.upper_slack()});
    if (row.n >= 2) {
      const double ratio = row.lebesgue / std::log(static_cast<double>(row.n));
      if (ratio > best_log_ratio) {
        best_log_ratio = ratio;
        best_log_index = row.n;
      }
    }
  }
  report.tables.push_back(std::move(table));
  report.violations = scan.report.violations.size();
  report.summary = {{"rows", as_cell(scan.rows.size())},
                    {"violations", as_cell(report.violations)},
                    {"min_lower_slack", scan.report.min_lower_slack},
                    {"min_upper_slack", scan.report.min_upper_slack},
                    {"max_L_over_log_n", best_log_ratio},
                    {"argmax_L_over_log_n", as_cell(best_log_index)}};
  return report;
}

ExperimentReport run_lemma1(const ExperimentConfig& config) {
  const auto sys = config.system();
  const auto scan = lemma1_scan(sys);
  auto report = start_report(config, sys);
  Table table{"lemma1", {"n", "M_n", "sum_v", "average_n_M_n", "average_M_n"}, {}};
  for (const auto& row : scan.rows) {
    table.rows.push_back({as_cell(row.level), as_cell(row.size), as_cell(row.variation_sum), row.average,
                          row.average_size_only});
  }
  report.tables.push_back(std::move(table));
  if (!(scan.c_estimate > 0)) report.violations = 1;
  report.summary = {{"c_estimate", scan.c_estimate},
                    {"c_estimate_size_only", scan.c_estimate_size_only},
                    {"violations", as_cell(report.violations)}};
  return report;
}

namespace {

std::vector<int> divergence_alphas(const ExperimentConfig& config, const RadixSystem& sys) {
  const auto list = config.param("alphas");
  const auto rule = config.param("alpha_rule", "k4");
  auto terms = static_cast<int>(config.param_int("terms", 0));
  if (list.empty() && terms == 0) {
    // largest K with K^p + 1 <= N
    for (int k = 1; k <= sys.depth(); ++k) {
      std::vector<int> alphas;
      try {
        alphas = CounterexampleSpec::parse_alphas("", rule, k);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::depth_insufficient) throw;
        break;
      }
      if (alphas.back() + 1 > sys.depth()) break;
      terms = k;
    }
    if (terms == 0) throw Error(ErrorCode::depth_insufficient, "depth too small for any term of rule " + rule);
  }
  return CounterexampleSpec::parse_alphas(list, rule, terms);
}

}  // namespace

ExperimentReport run_divergence(const ExperimentConfig& config) {
  const auto sys = config.system();
  const CounterexampleSpec spec(divergence_alphas(config, sys), sys);
  const CharacterTable<double> table(sys);
  const auto f = build_counterexample<double>(spec);
  const auto coeffs = forward_fast(f, table);

  double coefficient_deviation = 0;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    const int block = spec.block_of(static_cast<std::uint64_t>(j));
    const double expected =
        block < 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(spec.alphas[static_cast<std::size_t>(block)]));
    coefficient_deviation = std::max(coefficient_deviation, std::abs(coeffs[j] - std::complex<double>(expected, 0)));
  }

  auto report = start_report(config, sys);
  Table blocks{"divergence", {"k", "alpha_k", "M_alpha_k", "B_k", "alpha_k_sqrt", "ratio"}, {}};
  std::vector<double> b_values, roots;
  for (int k = 0; k < spec.terms(); ++k) {
    const int alpha = spec.alphas[static_cast<std::size_t>(k)];
    const double b = window_average(spec, coeffs, k, table, config.threads);
    const double root = std::sqrt(static_cast<double>(alpha));
    b_values.push_back(b);
    roots.push_back(root);
    blocks.rows.push_back({as_cell(k + 1), as_cell(alpha), as_cell(sys.product(alpha)), b, root, b / root});
  }

  const auto fejer_max = static_cast<std::uint64_t>(
      config.param_int("fejer_max", static_cast<std::int64_t>(std::min<std::uint64_t>(sys.size(), 4096))));
  Table truncations{"truncations",
                    {"K", "alpha_K", "summability", "h1_norm", "strong_average_2M", "fejer_sup", "fejer_ratio"},
                    {}};
  double h1_min = std::numeric_limits<double>::infinity(), h1_max = 0, fejer_max_ratio = 0;
  for (int terms = 1; terms <= spec.terms(); ++terms) {
    const auto partial_spec = spec.truncated(terms);
    const auto fk = build_counterexample<double>(partial_spec);
    const int alpha = partial_spec.alphas.back();
    const double h1 = h1_norm(fk);
    const auto ck = forward_fast(fk, table);
    const double strong = strong_sum_average(ck, 2 * sys.product(alpha), table, config.threads);
    const auto fejer = fejer_maximal_check(fk, std::min(fejer_max, sys.size()));
    h1_min = std::min(h1_min, h1);
    h1_max = std::max(h1_max, h1);
    fejer_max_ratio = std::max(fejer_max_ratio, fejer.ratio());
    truncations.rows.push_back({as_cell(terms), as_cell(alpha), partial_spec.summability(), h1, strong,
                                fejer.sup_norm, fejer.ratio()});
  }

  const auto cesaro_max = static_cast<std::uint64_t>(
      config.param_int("cesaro_max", static_cast<std::int64_t>(std::min<std::uint64_t>(sys.size(), 1 << 14))));
  const auto cesaro_last = std::min(cesaro_max, sys.size());
  const auto norms = partial_sum_norms(coeffs, table, 1, cesaro_last, config.threads);
  Table cesaro{"cesaro", {"n", "cesaro_average"}, {}};
  CompensatedSum<double> running;
  std::vector<std::uint64_t> samples;
  for (int j = 0; j <= sys.depth(); ++j) {
    samples.push_back(sys.product(j));
    if (j < sys.depth()) samples.push_back(2 * sys.product(j));
  }
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= cesaro_last && next < samples.size(); ++n) {
    running.add(norms[n - 1]);
    if (n == samples[next]) {
      cesaro.rows.push_back({as_cell(n), running.value() / static_cast<double>(n)});
      ++next;
    }
  }

  // least-squares line B = c sqrt(alpha) - C
  double slope = 0, intercept = 0;
  if (roots.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      mx += roots[i];
      my += b_values[i];
    }
    mx /= static_cast<double>(roots.size());
    my /= static_cast<double>(roots.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      sxy += (roots[i] - mx) * (b_values[i] - my);
      sxx += (roots[i] - mx) * (roots[i] - mx);
    }
    slope = sxy / sxx;
    intercept = my - slope * mx;
  }
  bool increasing = true;
  double ratio_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < b_values.size(); ++i) {
    if (i > 0 && !(b_values[i] > b_values[i - 1])) increasing = false;
    ratio_min = std::min(ratio_min, b_values[i] / roots[i]);
  }

  report.tables.push_back(std::move(blocks));
  report.tables.push_back(std::move(truncations));
  report.tables.push_back(std::move(cesaro));
  report.violations = coefficient_deviation > config.oracle_tolerance ? 1 : 0;
  report.summary = {{"terms", as_cell(spec.terms())},
                    {"coefficient_max_deviation", coefficient_deviation},
                    {"b_strictly_increasing", as_cell(increasing ? 1 : 0)},
                    {"ratio_min", ratio_min},
                    {"fit_slope", slope},
                    {"fit_intercept", intercept},
                    {"h1_min", h1_min},
                    {"h1_max", h1_max},
                    {"h1_variation_factor", h1_max / h1_min},
                    {"fejer_max_ratio", fejer_max_ratio},
                    {"violations", as_cell(report.violations)}};
  return report;
}

ExperimentReport run_gat(const ExperimentConfig& config) {
  const auto sys = config.system();
  const auto count = config.param_int("count", 50);
  const int max_rank = static_cast<int>(config.param_int("max_rank", std::min(sys.depth(), 4)));
  if (count < 1 || max_rank < 1 || max_rank > sys.depth()) throw Error(ErrorCode::invalid_argument, "corpus shape");
  if (sys.depth() < 2) throw Error(ErrorCode::depth_insufficient, "gat needs depth >= 2");
  std::vector<std::uint64_t> points;
  for (int j = 2; j <= sys.depth(); ++j) points.push_back(sys.product(j));

  CorpusGenerator generator(config.seed);
  auto report = start_report(config, sys);
  Table curves{"curves", {"function", "rank", "n", "convergence", "bounded", "bounded_over_h1"}, {}};
  Table functions{"functions",
                  {"function", "rank", "h1_norm", "max_bounded_ratio", "fejer_ratio", "convergence_decreasing"},
                  {}};
  double max_ratio = 0, fejer_max_ratio = 0;
  std::int64_t decreasing = 0, checked = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    const int rank = 1 + static_cast<int>(i % max_rank);
    const auto f = generator.step_function(sys, rank);
    const double h1 = h1_norm(f);
    const auto curve = gat_log_curve(f, points, config.threads);
    double function_max = 0;
    for (const auto& point : curve) {
      const double ratio = point.bounded / h1;
      function_max = std::max(function_max, ratio);
      curves.rows.push_back({as_cell(i), as_cell(rank), as_cell(point.n), point.convergence, point.bounded, ratio});
    }
    const auto fejer = fejer_maximal_check(f, sys.size());
    const bool down = curve.back().convergence < curve.front().convergence;
    if (rank <= 4) {
      ++checked;
      if (down) ++decreasing;
    }
    max_ratio = std::max(max_ratio, function_max);
    fejer_max_ratio = std::max(fejer_max_ratio, fejer.ratio());
    functions.rows.push_back({as_cell(i), as_cell(rank), h1, function_max, fejer.ratio(), as_cell(down ? 1 : 0)});
  }
  report.tables.push_back(std::move(curves));
  report.tables.push_back(std::move(functions));
  report.summary = {{"functions", as_cell(static_cast<std::uint64_t>(count))},
                    {"max_bounded_ratio", max_ratio},
                    {"fejer_max_ratio", fejer_max_ratio},
                    {"convergence_checked", as_cell(static_cast<std::uint64_t>(checked))},
                    {"convergence_decreasing", as_cell(static_cast<std::uint64_t>(decreasing))}};
  return report;
}

ExperimentReport run_equiv_check(const ExperimentConfig& config) {
  std::vector<StepFunction> corpus;
  const auto input = config.param("in");
  RadixSystem sys = input.empty() ? config.system() : RadixSystem({2}, 1);
  if (!input.empty()) {
    corpus.push_back(as_step_function(read_field_file(input)));
    sys = corpus.front().sys();
  } else {
    CorpusGenerator generator(config.seed);
    const auto count = config.param_int("count", 100);
    const int rank = static_cast<int>(config.param_int("rank", sys.depth()));
    for (std::int64_t i = 0; i < count; ++i) corpus.push_back(generator.step_function(sys, rank));
  }
  auto report = start_report(config, sys);
  Table table{"equivalence", {"function", "h1_norm", "partial_sup_norm", "max_deviation"}, {}};
  double worst = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto check = check_norm_equivalence(corpus[i]);
    worst = std::max(worst, check.max_deviation);
    if (!check.holds(config.tolerance)) ++report.violations;
    table.rows.push_back({as_cell(i), check.h1_norm, check.partial_sup_norm, check.max_deviation});
  }
  report.tables.push_back(std::move(table));
  report.summary = {{"functions", as_cell(corpus.size())},
                    {"max_deviation", worst},
                    {"violations", as_cell(report.violations)}};
  return report;
}

ExperimentReport run_kernel(const ExperimentConfig& config) {
  const auto sys = config.system();
  const auto n_param = config.param_int("n", -1);
  if (n_param < 0) throw Error(ErrorCode::invalid_argument, "kernel needs --n");
  const auto n = static_cast<std::uint64_t>(n_param);
  const auto kind = config.param("kind", "dirichlet");
  const CharacterTable<double> table(sys);
  StepFunction kernel = StepFunction::zero(sys);
  if (kind == "dirichlet") {
    kernel = dirichlet_kernel(n, table);
  } else if (kind == "fejer") {
    // K_n = sigma_n of the function whose coefficients are all 1
    kernel = fejer_mean(SpectralVector::constant(sys, 1.0), n, table);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown kernel kind " + kind);
  }
  auto report = start_report(config, sys);
  Table values{"kernel", {"t", "re", "im"}, {}};
  for (Eigen::Index t = 0; t < kernel.size(); ++t) {
    values.rows.push_back({as_cell(static_cast<std::uint64_t>(t)), kernel[t].real(), kernel[t].imag()});
  }
  report.tables.push_back(std::move(values));
  report.summary = {{"kind", kind}, {"n", as_cell(n)}, {"l1_norm", l1_norm(kernel)}};
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "lebesgue-scan") return run_lebesgue_scan(config);
  if (config.experiment == "lemma1") return run_lemma1(config);
  if (config.experiment == "divergence") return run_divergence(config);
  if (config.experiment == "gat") return run_gat(config);
  if (config.experiment == "equiv-check") return run_equiv_check(config);
  if (config.experiment == "kernel") return run_kernel(config);
  throw Error(ErrorCode::invalid_argument, "unknown experiment '" + config.experiment + "'");
}

TransformResult run_transform(const FieldDocument& input, bool inverse_direction, bool verify) {
  TransformResult result;
  const CharacterTable<double> table(input.sys);
  if (!inverse_direction) {
    const auto f = as_step_function(input);
    const auto coeffs = forward_fast(f, table);
    result.document = to_json(coeffs);
    if (verify) {
      result.verified = true;
      result.max_deviation = (coeffs.values() - forward_naive(f).values()).cwiseAbs().maxCoeff();
      result.roundtrip_error = (inverse(coeffs, table).values() - f.values()).cwiseAbs().maxCoeff();
    }
  } else {
    const auto coeffs = as_spectral_vector(input);
    const auto f = inverse(coeffs, table);
    result.document = to_json(f);
    if (verify) {
      result.verified = true;
      const auto back = forward_naive(f);
      result.max_deviation = (back.values() - coeffs.values()).cwiseAbs().maxCoeff();
      result.roundtrip_error = (forward_fast(f, table).values() - coeffs.values()).cwiseAbs().maxCoeff();
    }
  }
  return result;
}

}  // namespace vilenkin
