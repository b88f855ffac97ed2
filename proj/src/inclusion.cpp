#include "recten/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "recten/error.hpp"

namespace recten {

std::string_view to_string(DiskFamily f) noexcept {
  switch (f) {
    case DiskFamily::upsilon_hat:
      return "upsilon-hat";
    case DiskFamily::upsilon_tilde:
      return "upsilon-tilde";
    case DiskFamily::psi_hat_s:
      return "psi-hat-S";
    case DiskFamily::psi_hat_sbar:
      return "psi-hat-Sbar";
    case DiskFamily::psi_tilde_s:
      return "psi-tilde-S";
    case DiskFamily::psi_tilde_sbar:
      return "psi-tilde-Sbar";
  }
  return "unknown";
}

std::string_view to_string(SetMethod m) noexcept { return m == SetMethod::psi ? "psi" : "upsilon"; }

double disk_radius(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a < 0.0 || b < 0.0)
    throw DomainError(fmt::format("disk_radius needs finite a, b >= 0, got a={} b={}", a, b));
  return 0.5 * (a + std::sqrt(a * a + 4.0 * b));
}

namespace {

void check_inputs(const RectangularTensor& a, const IndexSubset& s) {
  if (!a.shape().square())
    throw ShapeError(fmt::format("inclusion sets require m == n, got m={} n={}", a.m(), a.n()));
  if (s.universe() != a.n())
    throw SubsetError(fmt::format("subset over 1..{} used with n={}", s.universe(), a.n()));
}

double max_sum(const RectangularTensor& a, int k) { return std::max(row_sum(a, k), col_sum(a, k)); }

Disk make_disk(DiskFamily family, int i, int j, double a, double b) {
  return {family, i, j, a, b, disk_radius(a, b)};
}

DiskReport finish(SetMethod method, const IndexSubset& s, std::vector<Disk> disks) {
  std::stable_sort(disks.begin(), disks.end(), [](const Disk& x, const Disk& y) {
    return std::tie(x.family, x.i, x.j) < std::tie(y.family, y.i, y.j);
  });
  double radius = 0.0;
  for (const Disk& d : disks) radius = std::max(radius, d.radius);
  return {method, s, std::move(disks), radius};
}

}  // namespace

DiskReport upsilon_set(const RectangularTensor& a, const IndexSubset& s) {
  check_inputs(a, s);
  const IndexSubset sbar = s.complement();
  std::vector<Disk> disks;

  auto emit = [&](int i, int j) {
    const double weight = max_sum(a, j);
    disks.push_back(make_disk(DiskFamily::upsilon_hat, i, j, r_offdiag(a, i, j),
                              std::abs(row_comb_entry(a, i, j)) * weight));
    disks.push_back(make_disk(DiskFamily::upsilon_tilde, i, j, c_offdiag(a, i, j),
                              std::abs(col_comb_entry(a, i, j)) * weight));
  };
  for (int i : s.members())
    for (int j : sbar.members()) emit(i, j);
  for (int i : sbar.members())
    for (int j : s.members()) emit(i, j);
  return finish(SetMethod::upsilon, s, std::move(disks));
}

DiskReport psi_set(const RectangularTensor& a, const IndexSubset& s) {
  check_inputs(a, s);
  const IndexSubset sbar = s.complement();
  std::vector<Disk> disks;

  // i ranges over `from`, j over `to`; partitions are taken relative to `from`.
  auto emit = [&](const IndexSubset& from, const IndexSubset& to, DiskFamily hat, DiskFamily tilde) {
    for (int j : to.members()) {
      const PartitionSum row = r_partition(a, j, from);
      const PartitionSum col = c_partition(a, j, from);
      for (int i : from.members()) {
        const double weight = max_sum(a, i);
        disks.push_back(make_disk(hat, i, j, row.out, row.in * weight));
        disks.push_back(make_disk(tilde, i, j, col.out, col.in * weight));
      }
    }
  };
  emit(s, sbar, DiskFamily::psi_hat_s, DiskFamily::psi_tilde_s);
  emit(sbar, s, DiskFamily::psi_hat_sbar, DiskFamily::psi_tilde_sbar);
  return finish(SetMethod::psi, s, std::move(disks));
}

DiskReport inclusion_set(const RectangularTensor& a, const IndexSubset& s, SetMethod method) {
  return method == SetMethod::psi ? psi_set(a, s) : upsilon_set(a, s);
}

bool contains(const DiskReport& report, double z, double tolerance) {
  return std::abs(z) <= report.union_radius + tolerance;
}

bool contains(const DiskReport& report, std::complex<double> z, double tolerance) {
  return std::abs(z) <= report.union_radius + tolerance;
}

}  // namespace recten
