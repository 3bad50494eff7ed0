#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vilenkin/error.hpp"

namespace vilenkin {

/// Truncated generating sequence m_0..m_{N-1} of a bounded Vilenkin group
/// together with the products M_0 = 1, M_{k+1} = m_k M_k.
///
/// Points of the truncated group and natural numbers below M_N share one
/// least-significant-first mixed-radix expansion: t = sum_j x_j M_j.
class RadixSystem {
 public:
  /// Builds a system of the given depth. A radix list shorter than `depth`
  /// is repeated periodically (so {2} with depth 10 is the dyadic 2^10).
  RadixSystem(std::vector<int> radices, int depth);

  /// Convenience: depth equals the list length.
  explicit RadixSystem(std::vector<int> radices);

  static RadixSystem constant(int radix, int depth) { return RadixSystem({radix}, depth); }

  /// Parses "2,3,4" (explicit list) or "2^10" (constant radix, depth 10).
  /// With `depth` > 0 the parsed list is extended/truncated to that depth.
  static RadixSystem parse(std::string_view spec, int depth = 0);

  int depth() const noexcept { return static_cast<int>(radices_.size()); }
  int radix(int k) const { return radices_.at(static_cast<std::size_t>(k)); }
  const std::vector<int>& radices() const noexcept { return radices_; }

  /// M_k for 0 <= k <= N.
  std::uint64_t product(int k) const { return products_.at(static_cast<std::size_t>(k)); }
  const std::vector<std::uint64_t>& products() const noexcept { return products_; }

  /// Number of rank-N cells, M_N.
  std::uint64_t size() const noexcept { return products_.back(); }

  int lambda() const noexcept { return lambda_; }

  /// The system restricted to its first `depth` levels.
  RadixSystem prefix(int depth) const;

  /// Canonical textual form, e.g. "2,3,4".
  std::string to_string() const;

  friend bool operator==(const RadixSystem& a, const RadixSystem& b) {
    return a.radices_ == b.radices_;
  }

 private:
  std::vector<int> radices_;
  std::vector<std::uint64_t> products_;
  int lambda_ = 0;
};

/// A natural number n < M_N with its digits n = sum_j n_j M_j.
struct VilenkinIndex {
  std::uint64_t value = 0;
  std::vector<int> digits;
  /// |n| = max{j : n_j != 0}; -1 for n = 0.
  int order = -1;
};

/// A rank-N cell (equivalently a point of the truncated group).
struct CellIndex {
  std::uint64_t t = 0;
  std::vector<int> coords;
};

VilenkinIndex decompose(std::uint64_t n, const RadixSystem& sys);
std::uint64_t compose(const std::vector<int>& digits, const RadixSystem& sys);

CellIndex make_cell(std::uint64_t t, const RadixSystem& sys);
CellIndex make_cell(const std::vector<int>& coords, const RadixSystem& sys);

/// Coordinatewise addition mod m_j.
CellIndex group_add(const CellIndex& x, const CellIndex& y, const RadixSystem& sys);
/// Coordinatewise inverse (m_j - x_j) mod m_j.
CellIndex group_neg(const CellIndex& x, const RadixSystem& sys);

/// Same operations on packed cell numbers.
std::uint64_t group_add(std::uint64_t x, std::uint64_t y, const RadixSystem& sys);
std::uint64_t group_neg(std::uint64_t x, const RadixSystem& sys);

/// Haar measure 1/M_n of a rank-n cylinder.
double cell_measure(int rank, const RadixSystem& sys);

/// Number of leading zero coordinates of cell t, i.e. the largest j <= N
/// with t in I_j.
int leading_zero_levels(std::uint64_t t, const RadixSystem& sys);

void require_same_system(const RadixSystem& a, const RadixSystem& b);

}  // namespace vilenkin
