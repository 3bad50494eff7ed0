#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vilenkin/io.hpp"
#include "vilenkin/radix_system.hpp"

namespace vilenkin {

inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentConfig {
  std::string experiment;
  std::string radix = "2^10";
  int depth = 0;  // 0 keeps the depth implied by `radix`
  int threads = 1;
  std::uint64_t seed = 1;
  std::string out;  // empty or "-" writes to stdout
  std::string format = "csv";
  double tolerance = 1e-9;
  double oracle_tolerance = 1e-10;
  std::map<std::string, std::string> params;

  RadixSystem system() const { return RadixSystem::parse(radix, depth); }

  std::string param(const std::string& key, const std::string& fallback = {}) const;
  std::int64_t param_int(const std::string& key, std::int64_t fallback) const;
  bool flag(const std::string& key) const;

  /// Sorted key=value lines of everything that influences results.
  std::string canonical() const;
  /// FNV-1a 64 of canonical().
  std::uint64_t hash() const;

  /// Applies `key = value` lines ('#' starts a comment). Keys that are not
  /// global settings land in `params`; dashes in keys read as underscores.
  void apply_file(std::istream& in);
};

const std::vector<std::string>& experiment_names();

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct ExperimentReport {
  std::string experiment;
  std::string radix;
  int depth = 0;
  std::uint64_t config_hash = 0;
  std::vector<Table> tables;
  std::vector<std::pair<std::string, Cell>> summary;
  std::size_t violations = 0;

  const Table& table(const std::string& name) const;
  const Cell& summary_value(const std::string& key) const;
  double summary_number(const std::string& key) const;

  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;
  void write(const ExperimentConfig& config) const;
};

std::string format_cell(const Cell& cell);

ExperimentReport run_lebesgue_scan(const ExperimentConfig& config);
ExperimentReport run_lemma1(const ExperimentConfig& config);
ExperimentReport run_divergence(const ExperimentConfig& config);
ExperimentReport run_gat(const ExperimentConfig& config);
ExperimentReport run_equiv_check(const ExperimentConfig& config);
ExperimentReport run_kernel(const ExperimentConfig& config);

/// Dispatches on config.experiment (everything except transform).
ExperimentReport run_experiment(const ExperimentConfig& config);

struct TransformResult {
  nlohmann::json document;
  bool verified = false;
  double max_deviation = 0;     // fast vs naive, when verified
  double roundtrip_error = 0;   // inverse(forward(f)) vs f, when verified
};

/// Forward (step -> spectral) or inverse (spectral -> step) transform of a
/// field document; `verify` adds the naive-oracle comparison.
TransformResult run_transform(const FieldDocument& input, bool inverse, bool verify);

}  // namespace vilenkin
