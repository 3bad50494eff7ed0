#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "vilenkin/norms.hpp"

namespace vilenkin {

/// Cylinder means: entry n (0 <= n <= N) has length M_n and holds the
/// average of f over {t : t mod M_n = r}, i.e. over I_n(x) for x in cell r.
template <typename Scalar>
std::vector<ComplexVector<Scalar>> cylinder_averages(const BasicStepFunction<Scalar>& f) {
  const auto& sys = f.sys();
  std::vector<ComplexVector<Scalar>> levels(static_cast<std::size_t>(sys.depth() + 1));
  levels.back() = f.values();
  for (int n = sys.depth() - 1; n >= 0; --n) {
    const auto size = static_cast<Eigen::Index>(sys.product(n));
    const int m = sys.radix(n);
    const auto& finer = levels[static_cast<std::size_t>(n + 1)];
    auto& coarse = levels[static_cast<std::size_t>(n)];
    coarse = ComplexVector<Scalar>::Zero(size);
    for (int x = 0; x < m; ++x) coarse += finer.segment(x * size, size);
    coarse /= static_cast<Scalar>(m);
  }
  return levels;
}

/// f*(x) = max over ranks n = 0..N of |mean of f over I_n(x)|.
template <typename Scalar>
BasicStepFunction<Scalar> maximal_function(const BasicStepFunction<Scalar>& f) {
  const auto levels = cylinder_averages(f);
  auto result = BasicStepFunction<Scalar>::zero(f.sys());
  for (Eigen::Index t = 0; t < f.size(); ++t) {
    Scalar best = 0;
    for (const auto& level : levels) {
      best = std::max(best, std::abs(level[t % level.size()]));
    }
    result[t] = best;
  }
  return result;
}

template <typename Scalar>
Scalar h1_norm(const BasicStepFunction<Scalar>& f) {
  return l1_norm(maximal_function(f));
}

template <typename Scalar>
struct NormEquivalenceReport {
  Scalar h1_norm = 0;           // ||f*||_1
  Scalar partial_sup_norm = 0;  // || sup_n |S_{M_n} f| ||_1
  Scalar max_deviation = 0;     // max_t |f*(t) - sup_n |S_{M_n} f(t)||
  bool holds(Scalar tolerance = Scalar(1e-9)) const { return max_deviation <= tolerance; }
};

/// Compares the cylinder-average maximal function with sup_{n<=N} |S_{M_n} f|,
/// the latter computed through the spectrum.
template <typename Scalar>
NormEquivalenceReport<Scalar> check_norm_equivalence(const BasicStepFunction<Scalar>& f) {
  const CharacterTable<Scalar> table(f.sys());
  const auto coeffs = forward_fast(f, table);
  ComplexVector<Scalar> sup = ComplexVector<Scalar>::Zero(f.size());
  for (int n = 0; n <= f.sys().depth(); ++n) {
    const auto partial = partial_sum(coeffs, f.sys().product(n), table);
    for (Eigen::Index t = 0; t < f.size(); ++t) {
      sup[t] = std::max(sup[t].real(), std::abs(partial[t]));
    }
  }
  const auto maximal = maximal_function(f);
  NormEquivalenceReport<Scalar> report;
  report.h1_norm = l1_norm(maximal);
  report.partial_sup_norm = l1_norm(sup);
  report.max_deviation = (maximal.values() - sup).cwiseAbs().maxCoeff();
  return report;
}

/// K-term truncation of f = sum_k a_k / sqrt(alpha_k), a_k = D_{M_{alpha_k+1}} - D_{M_{alpha_k}}.
struct CounterexampleSpec {
  std::vector<int> alphas;
  RadixSystem sys;

  CounterexampleSpec(std::vector<int> alphas, RadixSystem sys);

  /// alpha_k = k^power for k = 1..terms.
  static CounterexampleSpec power_rule(int power, int terms, RadixSystem sys);

  /// "1,4,9" (explicit list) or "k4" (power rule, needs `terms`).
  static std::vector<int> parse_alphas(const std::string& list, const std::string& rule, int terms);

  int terms() const noexcept { return static_cast<int>(alphas.size()); }

  /// sum_k alpha_k^{-1/2}
  double summability() const;

  /// Block k (0-based) with M_{alpha_k} <= j < M_{alpha_k + 1}, or -1.
  int block_of(std::uint64_t j) const;

  /// The same construction keeping only the first `terms` alphas.
  CounterexampleSpec truncated(int terms) const;
};

template <typename Scalar = double>
BasicStepFunction<Scalar> build_counterexample(const CounterexampleSpec& spec) {
  const auto& sys = spec.sys;
  auto f = BasicStepFunction<Scalar>::zero(sys);
  for (int alpha : spec.alphas) {
    const Scalar weight = Scalar(1) / std::sqrt(static_cast<Scalar>(alpha));
    const auto inner = sys.product(alpha);      // D_{M_alpha} = M_alpha on I_alpha
    const auto outer = sys.product(alpha + 1);  // D_{M_{alpha+1}} = M_{alpha+1} on I_{alpha+1}
    for (std::uint64_t t = 0; t < sys.size(); t += inner) {
      const Scalar block = (t % outer == 0 ? static_cast<Scalar>(outer) : Scalar(0)) - static_cast<Scalar>(inner);
      f[static_cast<Eigen::Index>(t)] += weight * block;
    }
  }
  return f;
}

template <typename Scalar>
struct PartialSumDecomposition {
  int block = -1;
  BasicStepFunction<Scalar> first;   // S_{M_alpha} f
  BasicStepFunction<Scalar> second;  // alpha^{-1/2} psi_{M_alpha} D_{j - M_alpha}
};

/// S_j f = S_{M_alpha} f + alpha^{-1/2} psi_{M_alpha} D_{j - M_alpha} for j in
/// the coefficient block of alpha.
template <typename Scalar>
PartialSumDecomposition<Scalar> partial_sum_decomposition(const CounterexampleSpec& spec,
                                                          const BasicSpectralVector<Scalar>& coeffs, std::uint64_t j,
                                                          const CharacterTable<Scalar>& table) {
  require_same_system(spec.sys, coeffs.sys());
  const int block = spec.block_of(j);
  if (block < 0) throw Error(ErrorCode::invalid_argument, "index " + std::to_string(j) + " is outside every block");
  const int alpha = spec.alphas[static_cast<std::size_t>(block)];
  const auto start = spec.sys.product(alpha);
  auto second = hadamard(BasicStepFunction<Scalar>(spec.sys, table.character_values(start)),
                         dirichlet_kernel(j - start, table));
  second *= std::complex<Scalar>(Scalar(1) / std::sqrt(static_cast<Scalar>(alpha)), 0);
  return {block, partial_sum(coeffs, start, table), std::move(second)};
}

/// ||S_m f - g||_1 for m in [first, last], g = *offset or 0. Fixed chunks,
/// each seeded with an exact S_start, keep results independent of `threads`.
template <typename Scalar>
std::vector<Scalar> partial_sum_norms(const BasicSpectralVector<Scalar>& coeffs, const CharacterTable<Scalar>& table,
                                      std::uint64_t first, std::uint64_t last, int threads = 1,
                                      const BasicStepFunction<Scalar>* offset = nullptr, std::uint64_t chunk = 512) {
  if (first > last || last > coeffs.sys().size()) throw Error(ErrorCode::out_of_range, "partial sum range");
  const std::uint64_t count = last - first + 1;
  const std::uint64_t chunks = (count + chunk - 1) / chunk;
  std::vector<Scalar> norms(count);
  parallel_chunks(chunks, threads, [&](std::size_t c) {
    const std::uint64_t start = first + c * chunk;
    const std::uint64_t stop = std::min(last, start + chunk - 1);
    PartialSumScanner<Scalar> scan(coeffs, table, start, offset);
    for (;;) {
      norms[scan.index() - first] = l1_norm(scan.current());
      if (scan.index() == stop) break;
      scan.advance();
    }
  });
  return norms;
}

/// (1/n) sum_{m=1}^{n} ||S_m f||_1.
template <typename Scalar>
Scalar strong_sum_average(const BasicSpectralVector<Scalar>& coeffs, std::uint64_t n,
                          const CharacterTable<Scalar>& table, int threads = 1) {
  if (n == 0) throw Error(ErrorCode::out_of_range, "strong sum average needs n >= 1");
  const auto norms = partial_sum_norms(coeffs, table, 1, n, threads);
  CompensatedSum<Scalar> total;
  for (Scalar v : norms) total.add(v);
  return total.value() / static_cast<Scalar>(n);
}

/// B_k = (1/M_{alpha_k+1}) sum_{l=M_{alpha_k}}^{2 M_{alpha_k}} ||S_l f||_1.
template <typename Scalar>
Scalar window_average(const CounterexampleSpec& spec, const BasicSpectralVector<Scalar>& coeffs, int block,
                      const CharacterTable<Scalar>& table, int threads = 1) {
  if (block < 0 || block >= spec.terms()) throw Error(ErrorCode::out_of_range, "block " + std::to_string(block));
  const int alpha = spec.alphas[static_cast<std::size_t>(block)];
  const auto start = spec.sys.product(alpha);
  const auto norms = partial_sum_norms(coeffs, table, start, 2 * start, threads);
  CompensatedSum<Scalar> total;
  for (Scalar v : norms) total.add(v);
  return total.value() / static_cast<Scalar>(spec.sys.product(alpha + 1));
}

template <typename Scalar>
struct GatPoint {
  std::uint64_t n = 0;
  Scalar convergence = 0;  // (1/log n) sum_{k<=n} ||S_k f - f||_1 / k
  Scalar bounded = 0;      // (1/log n) sum_{k<=n} ||S_k f||_1 / k
};

/// Logarithmic means of partial-sum norms at every n in `points` (each >= 2).
template <typename Scalar>
std::vector<GatPoint<Scalar>> gat_log_curve(const BasicStepFunction<Scalar>& f, std::vector<std::uint64_t> points,
                                            int threads = 1) {
  if (points.empty()) return {};
  for (auto n : points) {
    if (n < 2) throw Error(ErrorCode::invalid_argument, "logarithmic mean needs n >= 2");
    check_partial_index(n, f.sys());
  }
  std::sort(points.begin(), points.end());
  const CharacterTable<Scalar> table(f.sys());
  const auto coeffs = forward_fast(f, table);
  const auto last = points.back();
  const auto residual = partial_sum_norms(coeffs, table, 1, last, threads, &f);
  const auto plain = partial_sum_norms(coeffs, table, 1, last, threads);
  std::vector<GatPoint<Scalar>> curve;
  CompensatedSum<Scalar> conv, bound;
  std::uint64_t k = 1;
  for (auto n : points) {
    for (; k <= n; ++k) {
      conv.add(residual[k - 1] / static_cast<Scalar>(k));
      bound.add(plain[k - 1] / static_cast<Scalar>(k));
    }
    const Scalar log_n = std::log(static_cast<Scalar>(n));
    curve.push_back({n, conv.value() / log_n, bound.value() / log_n});
  }
  return curve;
}

template <typename Scalar>
GatPoint<Scalar> gat_log_average(const BasicStepFunction<Scalar>& f, std::uint64_t n) {
  return gat_log_curve(f, {n}).front();
}

template <typename Scalar>
struct FejerReport {
  Scalar sup_norm = 0;  // max_{1<=n<=n_max} ||sigma_n f||_1
  std::uint64_t argmax = 0;
  Scalar h1_norm = 0;
  Scalar ratio() const { return h1_norm > 0 ? sup_norm / h1_norm : Scalar(0); }
};

/// sup_{n <= n_max} ||sigma_n f||_1 against ||f||_{H_1}, sigma_n built from
/// running sums of S_0 .. S_{n-1}.
template <typename Scalar>
FejerReport<Scalar> fejer_maximal_check(const BasicStepFunction<Scalar>& f, std::uint64_t n_max) {
  check_partial_index(n_max, f.sys());
  const CharacterTable<Scalar> table(f.sys());
  const auto coeffs = forward_fast(f, table);
  FejerReport<Scalar> report;
  report.h1_norm = h1_norm(f);
  PartialSumScanner<Scalar> scan(coeffs, table, 0);
  ComplexVector<Scalar> running = ComplexVector<Scalar>::Zero(f.size());
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    running += scan.current();  // adds S_{n-1}
    const Scalar norm = l1_norm(running) / static_cast<Scalar>(n);
    if (norm > report.sup_norm) {
      report.sup_norm = norm;
      report.argmax = n;
    }
    if (n < n_max) scan.advance();
  }
  return report;
}

}  // namespace vilenkin
