#pragma once

#include <vector>

#include "vilenkin/characters.hpp"

namespace vilenkin {

namespace detail {

/// Length-m_j DFT along every level j, in place. With `conjugate` the
/// kernel is conj(r_j^{k x}) (analysis), otherwise r_j^{k x} (synthesis).
template <typename Scalar>
void level_dfts(ComplexVector<Scalar>& data, const CharacterTable<Scalar>& table, bool conjugate) {
  const auto& sys = table.sys();
  std::vector<std::complex<Scalar>> in, out;
  for (int j = 0; j < sys.depth(); ++j) {
    const int m = sys.radix(j);
    const auto stride = static_cast<Eigen::Index>(sys.product(j));
    const auto block = static_cast<Eigen::Index>(sys.product(j + 1));
    const int sign = conjugate ? -1 : 1;
    in.resize(static_cast<std::size_t>(m));
    out.resize(static_cast<std::size_t>(m));
    for (Eigen::Index b = 0; b < data.size(); b += block) {
      for (Eigen::Index r = 0; r < stride; ++r) {
        for (int x = 0; x < m; ++x) in[static_cast<std::size_t>(x)] = data[b + x * stride + r];
        for (int k = 0; k < m; ++k) {
          std::complex<Scalar> acc = in[0];
          for (int x = 1; x < m; ++x) {
            acc += in[static_cast<std::size_t>(x)] * table.root(j, static_cast<std::int64_t>(sign) * k * x);
          }
          out[static_cast<std::size_t>(k)] = acc;
        }
        for (int k = 0; k < m; ++k) data[b + k * stride + r] = out[static_cast<std::size_t>(k)];
      }
    }
  }
}

}  // namespace detail

/// Reference transform: coeffs[k] = (1/M_N) sum_t f(t) conj(psi_k(t)). O(M_N^2).
template <typename Scalar>
BasicSpectralVector<Scalar> forward_naive(const BasicStepFunction<Scalar>& f) {
  const CharacterTable<Scalar> table(f.sys());
  const auto size = f.size();
  ComplexVector<Scalar> coeffs(size), psi;
  for (Eigen::Index k = 0; k < size; ++k) {
    table.character_values(static_cast<std::uint64_t>(k), psi);
    coeffs[k] = psi.dot(f.values()) / static_cast<Scalar>(size);  // dot conjugates its left operand
  }
  return BasicSpectralVector<Scalar>(f.sys(), std::move(coeffs));
}

/// Mixed-radix fast transform, O(M_N sum_j m_j).
template <typename Scalar>
BasicSpectralVector<Scalar> forward_fast(const BasicStepFunction<Scalar>& f, const CharacterTable<Scalar>& table) {
  require_same_system(f.sys(), table.sys());
  ComplexVector<Scalar> data = f.values();
  detail::level_dfts(data, table, true);
  data /= static_cast<Scalar>(f.size());
  return BasicSpectralVector<Scalar>(f.sys(), std::move(data));
}

template <typename Scalar>
BasicSpectralVector<Scalar> forward_fast(const BasicStepFunction<Scalar>& f) {
  return forward_fast(f, CharacterTable<Scalar>(f.sys()));
}

/// Full reconstruction sum_k c_k psi_k, i.e. S_{M_N}.
template <typename Scalar>
BasicStepFunction<Scalar> inverse(const BasicSpectralVector<Scalar>& c, const CharacterTable<Scalar>& table) {
  require_same_system(c.sys(), table.sys());
  ComplexVector<Scalar> data = c.values();
  detail::level_dfts(data, table, false);
  return BasicStepFunction<Scalar>(c.sys(), std::move(data));
}

template <typename Scalar>
BasicStepFunction<Scalar> inverse(const BasicSpectralVector<Scalar>& c) {
  return inverse(c, CharacterTable<Scalar>(c.sys()));
}

}  // namespace vilenkin
