#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "recten/tensor.hpp"

namespace recten {

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

/// Lower/upper bounds on the largest singular value of a nonnegative
/// tensor for one partition {S, S-bar}.
///   yang_qi    row/column sum extremes (subset independent)
///   lu         off-diagonal bounds (L^S, U^S)
///   theta_phi  partition-sum bounds (Theta^S, Phi^S); never looser than lu
struct BoundsReport {
  IndexSubset subset;
  BoundPair yang_qi;
  BoundPair lu;
  BoundPair theta_phi;
};

// All of the following require a nonnegative tensor with m == n and throw
// NonnegativityError / ShapeError otherwise.

BoundPair yang_qi_bounds(const RectangularTensor& a);
BoundPair lu_bounds(const RectangularTensor& a, const IndexSubset& s);
BoundPair theta_phi_bounds(const RectangularTensor& a, const IndexSubset& s);
BoundsReport bounds_report(const RectangularTensor& a, const IndexSubset& s);

enum class Objective { min_phi, max_theta, min_width };

std::string_view to_string(Objective o) noexcept;
std::optional<Objective> parse_objective(std::string_view text) noexcept;

/// Value minimized by the sweep: Phi, -Theta or Phi - Theta.
double objective_value(Objective o, const BoundPair& theta_phi) noexcept;

inline constexpr int kDefaultEnumerationCap = 16;

struct SweepOptions {
  int max_n = kDefaultEnumerationCap;
  unsigned threads = 1;
};

struct SubsetSweep {
  Objective objective;
  /// One row per unordered partition, represented by the side containing 1,
  /// in lexicographic order of that side.
  std::vector<BoundsReport> table;
  std::size_t best_index = 0;

  const BoundsReport& best() const { return table[best_index]; }
};

/// Evaluates all 2^(n-1) - 1 partitions. Ties resolve to the
/// lexicographically smallest representative. Throws CapacityError when
/// n exceeds options.max_n.
SubsetSweep sweep_subsets(const RectangularTensor& a, Objective objective, const SweepOptions& options = {});

BoundsReport best_subset(const RectangularTensor& a, Objective objective, const SweepOptions& options = {});

}  // namespace recten
