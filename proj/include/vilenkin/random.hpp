#pragma once

#include <cstdint>
#include <random>

#include "vilenkin/step_function.hpp"

namespace vilenkin {

/// Corpus generator. std::mt19937_64 is fully specified by the standard, and
/// doubles are formed as (draw >> 11) * 2^-53 mapped to [-1, 1), so a seed
/// reproduces the same corpus on every conforming toolchain.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return 2.0 * static_cast<double>(engine_() >> 11) * 0x1.0p-53 - 1.0; }

  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// Step function measurable with respect to rank-`rank` cylinders: i.i.d.
  /// real and imaginary parts uniform on [-1, 1) for each of the M_rank cells.
  StepFunction step_function(const RadixSystem& sys, int rank) {
    if (rank < 0 || rank > sys.depth()) throw Error(ErrorCode::out_of_range, "rank " + std::to_string(rank));
    ComplexVector<double> coarse(static_cast<Eigen::Index>(sys.product(rank)));
    for (auto& v : coarse) {
      const double re = uniform();
      v = {re, uniform()};
    }
    return lift_from_rank(sys, coarse);
  }

  StepFunction step_function(const RadixSystem& sys) { return step_function(sys, sys.depth()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vilenkin
