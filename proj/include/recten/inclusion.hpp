#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "recten/tensor.hpp"

namespace recten {

/// Which constraint family a disk belongs to. Declaration order is the
/// report order.
enum class DiskFamily {
  upsilon_hat,
  upsilon_tilde,
  psi_hat_s,
  psi_hat_sbar,
  psi_tilde_s,
  psi_tilde_sbar,
};

std::string_view to_string(DiskFamily f) noexcept;

/// The set {z : (|z| - a)|z| <= b} for a, b >= 0, which is exactly the
/// origin-centered disk |z| <= radius.
struct Disk {
  DiskFamily family;
  int i = 0;
  int j = 0;
  double a = 0.0;
  double b = 0.0;
  double radius = 0.0;
};

enum class SetMethod { upsilon, psi };

std::string_view to_string(SetMethod m) noexcept;

struct DiskReport {
  SetMethod method;
  IndexSubset subset;
  std::vector<Disk> disks;  // ordered by family, then (i, j)
  double union_radius = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Positive root of (r - a) r = b, i.e. (a + sqrt(a^2 + 4b)) / 2.
/// Throws DomainError for negative or non-finite arguments.
double disk_radius(double a, double b);

/// S-type set built from off-diagonal sums r_i^j, c_i^j and comb entries.
/// Requires m == n.
DiskReport upsilon_set(const RectangularTensor& a, const IndexSubset& s);

/// Tighter S-type set built from the Delta (row) and Omega (column)
/// partition sums. Requires m == n.
DiskReport psi_set(const RectangularTensor& a, const IndexSubset& s);

DiskReport inclusion_set(const RectangularTensor& a, const IndexSubset& s, SetMethod method);

/// |z| <= union_radius + tolerance.
bool contains(const DiskReport& report, double z, double tolerance = kDefaultTolerance);
bool contains(const DiskReport& report, std::complex<double> z, double tolerance = kDefaultTolerance);

}  // namespace recten
