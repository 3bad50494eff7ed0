#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "vilenkin/kernels.hpp"
#include "vilenkin/parallel.hpp"

namespace vilenkin {

/// ((1/M_N) sum_t |v_t|^p)^{1/p}; a quasi-norm for 0 < p < 1.
template <typename Scalar>
Scalar lp_norm(const ComplexVector<Scalar>& values, Scalar p) {
  if (!(p > 0)) throw Error(ErrorCode::invalid_argument, "p must be positive");
  CompensatedSum<Scalar> acc;
  if (p == Scalar(1)) {
    for (const auto& v : values) acc.add(std::abs(v));
    return acc.value() / static_cast<Scalar>(values.size());
  }
  for (const auto& v : values) acc.add(std::pow(std::abs(v), p));
  return std::pow(acc.value() / static_cast<Scalar>(values.size()), Scalar(1) / p);
}

template <typename Scalar, Domain D>
Scalar lp_norm(const Field<Scalar, D>& f, Scalar p) {
  return lp_norm(f.values(), p);
}

template <typename Scalar>
Scalar l1_norm(const ComplexVector<Scalar>& values) {
  return lp_norm(values, Scalar(1));
}

template <typename Scalar, Domain D>
Scalar l1_norm(const Field<Scalar, D>& f) {
  return lp_norm(f.values(), Scalar(1));
}

/// L_n = ||D_n||_1 for 1 <= n <= M_N. D_n is measurable with respect to
/// rank |n|+1 cylinders, so the kernel is realized on that prefix of `sys`.
double lebesgue_constant(std::uint64_t n, const RadixSystem& sys);

/// Digit statistics delta_j, delta*_j and the variations v(n), v*(n).
struct VariationProfile {
  VilenkinIndex n;
  std::vector<int> delta;
  std::vector<int> delta_star;
  int v = 0;
  int v_star = 0;
};

VariationProfile variation_profile(std::uint64_t n, const RadixSystem& sys);

/// Two-sided Lebesgue constant bound
///   v/(4 lambda) + v*/lambda + 1/(2 lambda) <= L_n <= 3v/2 + 4v* - 1.
struct Lemma2Entry {
  std::uint64_t n = 0;
  int v = 0;
  int v_star = 0;
  double lebesgue = 0;
  double lower_bound = 0;
  double upper_bound = 0;
  double lower_slack() const { return lebesgue - lower_bound; }
  double upper_slack() const { return upper_bound - lebesgue; }
  bool violated(double tolerance = 1e-9) const { return lower_slack() < -tolerance || upper_slack() < -tolerance; }
};

Lemma2Entry lemma2_entry(std::uint64_t n, double lebesgue, const RadixSystem& sys);
Lemma2Entry check_lemma2(std::uint64_t n, const RadixSystem& sys);

struct LemmaReport {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::vector<std::uint64_t> violations;
  double min_lower_slack = 0;
  double min_upper_slack = 0;
  double max_lower_slack = 0;
  double max_upper_slack = 0;
  double c_estimate = 0;
};

/// L_n for every n in [first, last] (inclusive). The range is split into
/// fixed chunks of `chunk` indices; each chunk starts from the closed-form
/// kernel and then steps D_{n+1} = D_n + psi_n, so results do not depend on
/// the thread count.
std::vector<double> lebesgue_constants(const RadixSystem& sys, std::uint64_t first, std::uint64_t last, int threads = 1,
                                       std::uint64_t chunk = 256);

struct LebesgueScan {
  std::vector<Lemma2Entry> rows;
  LemmaReport report;
};

LebesgueScan lebesgue_scan(const RadixSystem& sys, std::uint64_t first, std::uint64_t last, int threads = 1,
                           double tolerance = 1e-9);

enum class Lemma1Normalization { level_times_size, size_only };

/// (1/(n M_n)) sum_{k=1}^{M_n-1} v(k), or (1/M_n) sum ... with size_only.
double lemma1_average(int level, const RadixSystem& sys,
                      Lemma1Normalization normalization = Lemma1Normalization::level_times_size);

struct Lemma1Row {
  int level = 0;
  std::uint64_t size = 0;
  std::uint64_t variation_sum = 0;
  double average = 0;            // normalizer n M_n
  double average_size_only = 0;  // normalizer M_n
};

struct Lemma1Scan {
  std::vector<Lemma1Row> rows;
  double c_estimate = 0;  // running minimum of `average`
  double c_estimate_size_only = 0;
};

Lemma1Scan lemma1_scan(const RadixSystem& sys);

}  // namespace vilenkin
