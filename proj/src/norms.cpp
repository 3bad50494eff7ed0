#include "vilenkin/norms.hpp"

#include <algorithm>
#include <limits>

namespace vilenkin {

double lebesgue_constant(std::uint64_t n, const RadixSystem& sys) {
  if (n == 0 || n > sys.size()) {
    throw Error(ErrorCode::out_of_range, "Lebesgue constant index " + std::to_string(n));
  }
  if (n == sys.size()) return l1_norm(dirichlet_kernel<double>(n, sys));
  const int rank = decompose(n, sys).order + 1;
  return l1_norm(dirichlet_kernel<double>(n, sys.prefix(rank)));
}

VariationProfile variation_profile(std::uint64_t n, const RadixSystem& sys) {
  VariationProfile profile;
  profile.n = decompose(n, sys);
  const auto depth = static_cast<std::size_t>(sys.depth());
  profile.delta.resize(depth);
  profile.delta_star.resize(depth);
  for (std::size_t j = 0; j < depth; ++j) {
    const int m = sys.radix(static_cast<int>(j));
    const int digit = profile.n.digits[j];
    const int delta = digit != 0 ? 1 : 0;
    const int negated = (m - digit) % m;
    profile.delta[j] = delta;
    profile.delta_star[j] = std::abs(negated - 1) * delta;
  }
  // delta_j = 0 for j >= N
  profile.v = profile.delta.empty() ? 0 : profile.delta[0];
  for (std::size_t j = 0; j < depth; ++j) {
    const int next = j + 1 < depth ? profile.delta[j + 1] : 0;
    profile.v += std::abs(next - profile.delta[j]);
    profile.v_star += profile.delta_star[j];
  }
  return profile;
}

Lemma2Entry lemma2_entry(std::uint64_t n, double lebesgue, const RadixSystem& sys) {
  Lemma2Entry entry;
  entry.n = n;
  entry.lebesgue = lebesgue;
  if (n == 0 || n >= sys.size()) {
    // v*(M_N) depends on m_N, which lies beyond the truncation
    throw Error(ErrorCode::out_of_range, "Lebesgue bound index " + std::to_string(n) + " outside [1, M_N)");
  }
  const auto profile = variation_profile(n, sys);
  entry.v = profile.v;
  entry.v_star = profile.v_star;
  const double lambda = sys.lambda();
  entry.lower_bound = entry.v / (4 * lambda) + entry.v_star / lambda + 1 / (2 * lambda);
  entry.upper_bound = 1.5 * entry.v + 4.0 * entry.v_star - 1;
  return entry;
}

Lemma2Entry check_lemma2(std::uint64_t n, const RadixSystem& sys) {
  return lemma2_entry(n, lebesgue_constant(n, sys), sys);
}

std::vector<double> lebesgue_constants(const RadixSystem& sys, std::uint64_t first, std::uint64_t last, int threads,
                                       std::uint64_t chunk) {
  if (first == 0 || first > last || last > sys.size()) {
    throw Error(ErrorCode::out_of_range, "Lebesgue scan range [" + std::to_string(first) + ", " +
                                             std::to_string(last) + "]");
  }
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t count = last - first + 1;
  const std::uint64_t chunks = (count + chunk - 1) / chunk;
  std::vector<double> result(count);
  const CharacterTable<double> table(sys);
  parallel_chunks(chunks, threads, [&](std::size_t c) {
    const std::uint64_t start = first + c * chunk;
    const std::uint64_t stop = std::min(last, start + chunk - 1);
    auto kernel = dirichlet_kernel(start, table).values();
    ComplexVector<double> psi;
    for (std::uint64_t n = start;; ++n) {
      result[n - first] = l1_norm(kernel);
      if (n == stop) break;
      table.character_values(n, psi);
      kernel += psi;
    }
  });
  return result;
}

LebesgueScan lebesgue_scan(const RadixSystem& sys, std::uint64_t first, std::uint64_t last, int threads,
                           double tolerance) {
  const auto constants = lebesgue_constants(sys, first, last, threads);
  LebesgueScan scan;
  scan.rows.reserve(constants.size());
  auto& report = scan.report;
  report.first = first;
  report.last = last;
  report.min_lower_slack = report.min_upper_slack = std::numeric_limits<double>::infinity();
  report.max_lower_slack = report.max_upper_slack = -std::numeric_limits<double>::infinity();
  for (std::uint64_t n = first; n <= last; ++n) {
    const auto entry = lemma2_entry(n, constants[n - first], sys);
    if (entry.violated(tolerance)) report.violations.push_back(n);
    report.min_lower_slack = std::min(report.min_lower_slack, entry.lower_slack());
    report.min_upper_slack = std::min(report.min_upper_slack, entry.upper_slack());
    report.max_lower_slack = std::max(report.max_lower_slack, entry.lower_slack());
    report.max_upper_slack = std::max(report.max_upper_slack, entry.upper_slack());
    scan.rows.push_back(entry);
  }
  return scan;
}

namespace {

std::uint64_t variation_sum(int level, const RadixSystem& sys) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k < sys.product(level); ++k) total += static_cast<std::uint64_t>(variation_profile(k, sys).v);
  return total;
}

void check_level(int level, const RadixSystem& sys) {
  if (level < 1 || level > sys.depth()) throw Error(ErrorCode::out_of_range, "level " + std::to_string(level));
}

}  // namespace

double lemma1_average(int level, const RadixSystem& sys, Lemma1Normalization normalization) {
  check_level(level, sys);
  const auto size = static_cast<double>(sys.product(level));
  const double sum = static_cast<double>(variation_sum(level, sys));
  return normalization == Lemma1Normalization::level_times_size ? sum / (level * size) : sum / size;
}

Lemma1Scan lemma1_scan(const RadixSystem& sys) {
  Lemma1Scan scan;
  scan.c_estimate = scan.c_estimate_size_only = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= sys.depth(); ++level) {
    Lemma1Row row;
    row.level = level;
    row.size = sys.product(level);
    row.variation_sum = variation_sum(level, sys);
    row.average = static_cast<double>(row.variation_sum) / (level * static_cast<double>(row.size));
    row.average_size_only = static_cast<double>(row.variation_sum) / static_cast<double>(row.size);
    scan.c_estimate = std::min(scan.c_estimate, row.average);
    scan.c_estimate_size_only = std::min(scan.c_estimate_size_only, row.average_size_only);
    scan.rows.push_back(row);
  }
  return scan;
}

}  // namespace vilenkin
