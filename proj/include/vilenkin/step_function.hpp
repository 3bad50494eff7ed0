#pragma once

#include <complex>
#include <utility>

#include <Eigen/Core>

#include "vilenkin/radix_system.hpp"

namespace vilenkin {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

enum class Domain { cells, spectrum };

/// M_N complex samples attached to a radix system. In the cell domain entry t
/// is the value on the rank-N cell t; in the spectral domain entry k is the
/// Fourier coefficient with respect to psi_k.
template <typename Scalar, Domain D>
class Field {
 public:
  using scalar_type = Scalar;
  using vector_type = ComplexVector<Scalar>;

  Field(RadixSystem sys, vector_type values) : sys_(std::move(sys)), values_(std::move(values)) {
    if (static_cast<std::uint64_t>(values_.size()) != sys_.size()) {
      throw Error(ErrorCode::system_mismatch, "value count " + std::to_string(values_.size()) +
                                                  " != M_N = " + std::to_string(sys_.size()));
    }
  }

  static Field zero(const RadixSystem& sys) {
    return Field(sys, vector_type::Zero(static_cast<Eigen::Index>(sys.size())));
  }
  static Field constant(const RadixSystem& sys, std::complex<Scalar> c) {
    return Field(sys, vector_type::Constant(static_cast<Eigen::Index>(sys.size()), c));
  }

  const RadixSystem& sys() const noexcept { return sys_; }
  const vector_type& values() const noexcept { return values_; }
  vector_type& values() noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }

  const std::complex<Scalar>& operator[](Eigen::Index i) const { return values_[i]; }
  std::complex<Scalar>& operator[](Eigen::Index i) { return values_[i]; }

  Field& operator+=(const Field& other) {
    require_same_system(sys_, other.sys_);
    values_ += other.values_;
    return *this;
  }
  Field& operator-=(const Field& other) {
    require_same_system(sys_, other.sys_);
    values_ -= other.values_;
    return *this;
  }
  Field& operator*=(std::complex<Scalar> c) {
    values_ *= c;
    return *this;
  }

  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(std::complex<Scalar> c, Field a) { return a *= c; }
  friend Field operator*(Field a, std::complex<Scalar> c) { return a *= c; }

  /// Pointwise product (cell domain only makes sense, but harmless elsewhere).
  friend Field hadamard(const Field& a, const Field& b) {
    require_same_system(a.sys_, b.sys_);
    return Field(a.sys_, a.values_.cwiseProduct(b.values_));
  }

 private:
  RadixSystem sys_;
  vector_type values_;
};

template <typename Scalar>
using BasicStepFunction = Field<Scalar, Domain::cells>;
template <typename Scalar>
using BasicSpectralVector = Field<Scalar, Domain::spectrum>;

using StepFunction = BasicStepFunction<double>;
using SpectralVector = BasicSpectralVector<double>;

/// Integral (1/M_N) sum_t f(t).
template <typename Scalar>
std::complex<Scalar> integral(const BasicStepFunction<Scalar>& f) {
  return f.values().sum() / static_cast<Scalar>(f.sys().size());
}

/// Lifts a function given on rank-r cells (length M_r) to a rank-N step function.
template <typename Scalar>
BasicStepFunction<Scalar> lift_from_rank(const RadixSystem& sys, const ComplexVector<Scalar>& coarse) {
  const auto coarse_size = static_cast<std::uint64_t>(coarse.size());
  int rank = 0;
  while (rank <= sys.depth() && sys.product(rank) != coarse_size) ++rank;
  if (rank > sys.depth()) throw Error(ErrorCode::invalid_argument, "coarse length is not a product M_r");
  auto f = BasicStepFunction<Scalar>::zero(sys);
  for (Eigen::Index t = 0; t < f.size(); ++t) f[t] = coarse[static_cast<Eigen::Index>(static_cast<std::uint64_t>(t) % coarse_size)];
  return f;
}

}  // namespace vilenkin
