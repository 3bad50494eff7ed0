#pragma once

// Brute-force reference computations. They use only the defining formulas
// (digit expansions and exp(2 pi i x/m)), never the tables, fast transform
// or closed-form kernels they are compared against.

#include <cmath>
#include <complex>
#include <numbers>

#include "vilenkin/characters.hpp"

namespace oracle {

using vilenkin::RadixSystem;
using vilenkin::StepFunction;
using vilenkin::SpectralVector;

inline std::complex<double> character(std::uint64_t n, std::uint64_t t, const RadixSystem& sys) {
  double phase = 0;  // in turns
  for (int j = 0; j < sys.depth(); ++j) {
    const auto m = static_cast<std::uint64_t>(sys.radix(j));
    phase += static_cast<double>((n % m) * (t % m) % m) / static_cast<double>(m);
    n /= m;
    t /= m;
  }
  const double angle = 2 * std::numbers::pi * phase;
  return {std::cos(angle), std::sin(angle)};
}

inline StepFunction dirichlet(std::uint64_t n, const RadixSystem& sys) {
  auto d = StepFunction::zero(sys);
  for (Eigen::Index t = 0; t < d.size(); ++t) {
    for (std::uint64_t k = 0; k < n; ++k) d[t] += character(k, static_cast<std::uint64_t>(t), sys);
  }
  return d;
}

inline StepFunction partial_sum(const SpectralVector& c, std::uint64_t n) {
  auto s = StepFunction::zero(c.sys());
  for (Eigen::Index t = 0; t < s.size(); ++t) {
    for (std::uint64_t k = 0; k < n; ++k) {
      s[t] += c[static_cast<Eigen::Index>(k)] * character(k, static_cast<std::uint64_t>(t), c.sys());
    }
  }
  return s;
}

/// Mean of f over I_rank(x_t), scanning every cell.
inline std::complex<double> cylinder_average(const StepFunction& f, int rank, std::uint64_t t) {
  const auto period = f.sys().product(rank);
  std::complex<double> total{0, 0};
  std::uint64_t count = 0;
  for (std::uint64_t u = 0; u < f.sys().size(); ++u) {
    if (u % period == t % period) {
      total += f[static_cast<Eigen::Index>(u)];
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

inline double l1(const StepFunction& f) {
  double total = 0;
  for (const auto& v : f.values()) total += std::abs(v);
  return total / static_cast<double>(f.size());
}

}  // namespace oracle
