#pragma once

#include <cstdint>
#include <vector>

#include "recten/tensor.hpp"

namespace recten {

struct RandomSpec {
  Shape shape;
  double density = 1.0;     // probability that a coordinate is stored
  double max_value = 10.0;  // magnitudes drawn uniformly from [0, max_value)
  bool allow_negative = false;
};

/// Deterministic for a given (spec, seed), independent of the standard
/// library's distribution implementations.
RectangularTensor random_tensor(const RandomSpec& spec, std::uint64_t seed);

/// Square nonnegative test corpus: p, q in {1, 2}, n in {2, 3, 4},
/// density uniform in [0.3, 1.0].
std::vector<RectangularTensor> random_corpus(std::uint64_t seed, std::size_t count);

}  // namespace recten
