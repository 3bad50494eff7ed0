#pragma once

#include "vilenkin/transform.hpp"

namespace vilenkin {

inline void check_partial_index(std::uint64_t n, const RadixSystem& sys) {
  if (n > sys.size()) {
    throw Error(ErrorCode::out_of_range, "n = " + std::to_string(n) + " > M_N = " + std::to_string(sys.size()));
  }
}

/// S_n f = sum_{k<n} c_k psi_k; S_0 = 0.
template <typename Scalar>
BasicStepFunction<Scalar> partial_sum(const BasicSpectralVector<Scalar>& c, std::uint64_t n,
                                      const CharacterTable<Scalar>& table) {
  check_partial_index(n, c.sys());
  auto truncated = c;
  truncated.values().tail(c.size() - static_cast<Eigen::Index>(n)).setZero();
  return inverse(truncated, table);
}

template <typename Scalar>
BasicStepFunction<Scalar> partial_sum(const BasicSpectralVector<Scalar>& c, std::uint64_t n) {
  return partial_sum(c, n, CharacterTable<Scalar>(c.sys()));
}

/// Walks S_n, S_{n+1}, ... using S_{n+1} = S_n + c_n psi_n. An optional
/// offset g makes the scanner track S_n - g instead.
template <typename Scalar>
class PartialSumScanner {
 public:
  PartialSumScanner(const BasicSpectralVector<Scalar>& c, const CharacterTable<Scalar>& table, std::uint64_t start,
                    const BasicStepFunction<Scalar>* offset = nullptr)
      : coeffs_(c), table_(table), n_(start), current_(partial_sum(c, start, table).values()) {
    if (offset != nullptr) {
      require_same_system(c.sys(), offset->sys());
      current_ -= offset->values();
    }
  }

  std::uint64_t index() const noexcept { return n_; }
  const ComplexVector<Scalar>& current() const noexcept { return current_; }

  /// Moves from S_n to S_{n+1}.
  void advance() {
    check_partial_index(n_ + 1, coeffs_.sys());
    const auto coefficient = coeffs_[static_cast<Eigen::Index>(n_)];
    if (coefficient != std::complex<Scalar>(0, 0)) {
      table_.character_values(n_, psi_);
      current_ += coefficient * psi_;
    }
    ++n_;
  }

 private:
  const BasicSpectralVector<Scalar>& coeffs_;
  const CharacterTable<Scalar>& table_;
  std::uint64_t n_;
  ComplexVector<Scalar> current_;
  ComplexVector<Scalar> psi_;
};

/// D_n = sum_{k<n} psi_k, evaluated from the digits of n:
///   D_n = sum_j psi_{n^{(j+1)}} D_{M_j} sum_{q<n_j} r_j^q,  n^{(j+1)} = sum_{i>j} n_i M_i,
/// with D_{M_j} = M_j on I_j and 0 elsewhere. O(N M_N).
template <typename Scalar>
BasicStepFunction<Scalar> dirichlet_kernel(std::uint64_t n, const CharacterTable<Scalar>& table) {
  const auto& sys = table.sys();
  check_partial_index(n, sys);
  auto d = BasicStepFunction<Scalar>::zero(sys);
  if (n == 0) return d;
  if (n == sys.size()) {
    d[0] = static_cast<Scalar>(sys.size());
    return d;
  }
  const auto digits = decompose(n, sys).digits;
  std::vector<int> coords(static_cast<std::size_t>(sys.depth()));
  for (Eigen::Index t = 0; t < d.size(); ++t) {
    auto rest = static_cast<std::uint64_t>(t);
    int zeros = -1;
    for (int j = 0; j < sys.depth(); ++j) {
      const auto m = static_cast<std::uint64_t>(sys.radix(j));
      coords[static_cast<std::size_t>(j)] = static_cast<int>(rest % m);
      if (zeros < 0 && rest % m != 0) zeros = j;
      rest /= m;
    }
    if (zeros < 0) zeros = sys.depth();

    std::complex<Scalar> value{0, 0}, upper_char{1, 0};
    for (int j = sys.depth() - 1; j >= 0; --j) {
      const auto sj = static_cast<std::size_t>(j);
      if (digits[sj] != 0 && j <= zeros) {
        value += upper_char * static_cast<Scalar>(sys.product(j)) * table.geometric(j, digits[sj], coords[sj]);
      }
      if (digits[sj] != 0) upper_char *= table.root(j, static_cast<std::int64_t>(digits[sj]) * coords[sj]);
    }
    d[t] = value;
  }
  return d;
}

template <typename Scalar = double>
BasicStepFunction<Scalar> dirichlet_kernel(std::uint64_t n, const RadixSystem& sys) {
  return dirichlet_kernel(n, CharacterTable<Scalar>(sys));
}

/// sigma_n f = (1/n) sum_{k<n} S_k f via the weighted form
/// sum_{k<n} (1 - (k+1)/n) c_k psi_k (S_0 = 0, so c_k enters S_{k+1} .. S_{n-1}).
template <typename Scalar>
BasicStepFunction<Scalar> fejer_mean(const BasicSpectralVector<Scalar>& c, std::uint64_t n,
                                     const CharacterTable<Scalar>& table) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "Fejer mean needs n >= 1");
  check_partial_index(n, c.sys());
  auto weighted = BasicSpectralVector<Scalar>::zero(c.sys());
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    weighted[i] = c[i] * (Scalar(1) - static_cast<Scalar>(k + 1) / static_cast<Scalar>(n));
  }
  return inverse(weighted, table);
}

template <typename Scalar>
BasicStepFunction<Scalar> fejer_mean(const BasicSpectralVector<Scalar>& c, std::uint64_t n) {
  return fejer_mean(c, n, CharacterTable<Scalar>(c.sys()));
}

/// sigma_n f as the plain average (1/n) sum_{k<n} S_k f.
template <typename Scalar>
BasicStepFunction<Scalar> fejer_mean_direct(const BasicSpectralVector<Scalar>& c, std::uint64_t n,
                                            const CharacterTable<Scalar>& table) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "Fejer mean needs n >= 1");
  check_partial_index(n, c.sys());
  PartialSumScanner<Scalar> scan(c, table, 0);
  ComplexVector<Scalar> total = ComplexVector<Scalar>::Zero(c.size());
  for (std::uint64_t k = 0; k < n; ++k) {
    total += scan.current();
    if (k + 1 < n) scan.advance();
  }
  return BasicStepFunction<Scalar>(c.sys(), total / static_cast<Scalar>(n));
}

template <typename Scalar>
BasicStepFunction<Scalar> fejer_mean_direct(const BasicSpectralVector<Scalar>& c, std::uint64_t n) {
  return fejer_mean_direct(c, n, CharacterTable<Scalar>(c.sys()));
}

}  // namespace vilenkin
