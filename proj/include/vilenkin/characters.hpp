#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "vilenkin/step_function.hpp"

namespace vilenkin {

/// exp(2 pi i r / m). Quarter-turn multiples are returned exactly.
template <typename Scalar = double>
std::complex<Scalar> unit_root(std::int64_t r, int m) {
  r %= m;
  if (r < 0) r += m;
  if ((4 * r) % m == 0) {
    switch ((4 * r) / m) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  const Scalar angle = 2 * std::numbers::pi_v<Scalar> * static_cast<Scalar>(r) / static_cast<Scalar>(m);
  return {std::cos(angle), std::sin(angle)};
}

/// Per-level root-of-unity tables for one radix system. Every character value
/// is a product of table entries; no transcendental calls after construction.
template <typename Scalar = double>
class CharacterTable {
 public:
  using complex_type = std::complex<Scalar>;

  explicit CharacterTable(const RadixSystem& sys) : sys_(sys) {
    roots_.resize(static_cast<std::size_t>(sys.depth()));
    geometric_.resize(roots_.size());
    for (int j = 0; j < sys.depth(); ++j) {
      const int m = sys.radix(j);
      auto& roots = roots_[static_cast<std::size_t>(j)];
      roots.resize(static_cast<std::size_t>(m));
      for (int r = 0; r < m; ++r) roots[static_cast<std::size_t>(r)] = unit_root<Scalar>(r, m);

      // geometric(j, s, x) = sum_{q<s} r_j^q at x_j = x, for 0 <= s <= m
      auto& geo = geometric_[static_cast<std::size_t>(j)];
      geo.assign(static_cast<std::size_t>((m + 1) * m), complex_type{0, 0});
      for (int x = 0; x < m; ++x) {
        complex_type acc{0, 0};
        for (int s = 0; s <= m; ++s) {
          geo[static_cast<std::size_t>(s * m + x)] = acc;
          if (s < m) acc += root(j, static_cast<std::int64_t>(s) * x);
        }
        // the full sum over a complete period is exactly m or 0
        geo[static_cast<std::size_t>(m * m + x)] = x == 0 ? complex_type(m, 0) : complex_type(0, 0);
      }
    }
  }

  const RadixSystem& sys() const noexcept { return sys_; }

  complex_type root(int level, std::int64_t r) const {
    const auto& roots = roots_[static_cast<std::size_t>(level)];
    const auto m = static_cast<std::int64_t>(roots.size());
    return roots[static_cast<std::size_t>(((r % m) + m) % m)];
  }

  /// sum_{q<s} r_level^q evaluated at coordinate x.
  complex_type geometric(int level, int s, int x) const {
    const int m = sys_.radix(level);
    return geometric_[static_cast<std::size_t>(level)][static_cast<std::size_t>(s * m + x)];
  }

  /// psi_n at cell t.
  complex_type character(std::uint64_t n, std::uint64_t t) const {
    complex_type value{1, 0};
    for (int j = 0; j < sys_.depth() && n != 0; ++j) {
      const auto m = static_cast<std::uint64_t>(sys_.radix(j));
      const auto nj = n % m;
      if (nj != 0) value *= root(j, static_cast<std::int64_t>(nj * (t % m)));
      n /= m;
      t /= m;
    }
    return value;
  }

  /// psi_n over all cells, built as a tensor product level by level (O(M_N)).
  void character_values(std::uint64_t n, ComplexVector<Scalar>& out) const {
    out.resize(static_cast<Eigen::Index>(sys_.size()));
    out[0] = complex_type{1, 0};
    Eigen::Index filled = 1;
    for (int j = 0; j < sys_.depth(); ++j) {
      const auto m = static_cast<std::uint64_t>(sys_.radix(j));
      const auto nj = static_cast<std::int64_t>(n % m);
      n /= m;
      for (int x = static_cast<int>(m) - 1; x >= 0; --x) {
        const complex_type factor = root(j, nj * x);
        const Eigen::Index base = static_cast<Eigen::Index>(x) * filled;
        if (nj == 0) {
          out.segment(base, filled) = out.head(filled);
        } else {
          out.segment(base, filled) = out.head(filled) * factor;
        }
      }
      filled *= static_cast<Eigen::Index>(m);
    }
  }

  ComplexVector<Scalar> character_values(std::uint64_t n) const {
    ComplexVector<Scalar> out;
    character_values(n, out);
    return out;
  }

 private:
  RadixSystem sys_;
  std::vector<std::vector<complex_type>> roots_;
  std::vector<std::vector<complex_type>> geometric_;
};

/// Generalized Rademacher function r_k(x) = exp(2 pi i x_k / m_k).
template <typename Scalar = double>
std::complex<Scalar> rademacher(int k, const CellIndex& x, const RadixSystem& sys) {
  if (k < 0 || k >= sys.depth()) throw Error(ErrorCode::out_of_range, "Rademacher level " + std::to_string(k));
  if (x.coords.size() != static_cast<std::size_t>(sys.depth())) throw Error(ErrorCode::system_mismatch, "cell");
  return unit_root<Scalar>(x.coords[static_cast<std::size_t>(k)], sys.radix(k));
}

/// Vilenkin character psi_n(x) = prod_k r_k(x)^{n_k}.
template <typename Scalar = double>
std::complex<Scalar> vilenkin_char(const VilenkinIndex& n, const CellIndex& x, const RadixSystem& sys) {
  if (n.value >= sys.size()) throw Error(ErrorCode::out_of_range, "character index");
  if (x.coords.size() != static_cast<std::size_t>(sys.depth()) ||
      n.digits.size() != static_cast<std::size_t>(sys.depth())) {
    throw Error(ErrorCode::system_mismatch, "index or cell");
  }
  std::complex<Scalar> value{1, 0};
  for (int j = 0; j < sys.depth(); ++j) {
    const auto sj = static_cast<std::size_t>(j);
    if (n.digits[sj] != 0) {
      value *= unit_root<Scalar>(static_cast<std::int64_t>(n.digits[sj]) * x.coords[sj], sys.radix(j));
    }
  }
  return value;
}

/// psi_n as a step function.
template <typename Scalar = double>
BasicStepFunction<Scalar> character_function(std::uint64_t n, const RadixSystem& sys) {
  if (n >= sys.size()) throw Error(ErrorCode::out_of_range, "character index " + std::to_string(n));
  return BasicStepFunction<Scalar>(sys, CharacterTable<Scalar>(sys).character_values(n));
}

}  // namespace vilenkin
