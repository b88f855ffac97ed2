#include "recten/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "parallel.hpp"
#include "recten/error.hpp"
#include "recten/inclusion.hpp"

namespace recten {

namespace {

void require_nonnegative_square(const RectangularTensor& a) {
  if (!a.shape().square())
    throw ShapeError(fmt::format("largest singular value bounds require m == n, got m={} n={}", a.m(), a.n()));
  if (!a.is_nonnegative()) throw NonnegativityError("largest singular value bounds require a nonnegative tensor");
}

void require_subset(const RectangularTensor& a, const IndexSubset& s) {
  if (s.universe() != a.n())
    throw SubsetError(fmt::format("subset over 1..{} used with n={}", s.universe(), a.n()));
}

// Tracks the min over the "small" roots and the max over the "large" roots.
struct Extremes {
  double lower = std::numeric_limits<double>::infinity();
  double upper = 0.0;

  void add(double a, double b_low, double b_high) {
    lower = std::min(lower, disk_radius(a, b_low));
    upper = std::max(upper, disk_radius(a, b_high));
  }
};

double min_sum(const RectangularTensor& a, int k) { return std::min(row_sum(a, k), col_sum(a, k)); }
double max_sum(const RectangularTensor& a, int k) { return std::max(row_sum(a, k), col_sum(a, k)); }

}  // namespace

std::string_view to_string(Objective o) noexcept {
  switch (o) {
    case Objective::min_phi:
      return "min-phi";
    case Objective::max_theta:
      return "max-theta";
    case Objective::min_width:
      return "min-width";
  }
  return "unknown";
}

std::optional<Objective> parse_objective(std::string_view text) noexcept {
  for (Objective o : {Objective::min_phi, Objective::max_theta, Objective::min_width})
    if (text == to_string(o)) return o;
  return std::nullopt;
}

double objective_value(Objective o, const BoundPair& theta_phi) noexcept {
  switch (o) {
    case Objective::min_phi:
      return theta_phi.upper;
    case Objective::max_theta:
      return -theta_phi.lower;
    case Objective::min_width:
      return theta_phi.upper - theta_phi.lower;
  }
  return 0.0;
}

BoundPair yang_qi_bounds(const RectangularTensor& a) {
  require_nonnegative_square(a);
  const auto& rows = a.row_sums();
  const auto& cols = a.col_sums();
  return {std::min(*std::min_element(rows.begin(), rows.end()), *std::min_element(cols.begin(), cols.end())),
          std::max(*std::max_element(rows.begin(), rows.end()), *std::max_element(cols.begin(), cols.end()))};
}

BoundPair lu_bounds(const RectangularTensor& a, const IndexSubset& s) {
  require_nonnegative_square(a);
  require_subset(a, s);
  Extremes ext;
  auto visit = [&](const IndexSubset& from, const IndexSubset& to) {
    for (int i : from.members()) {
      for (int j : to.members()) {
        const double row_comb = row_comb_entry(a, i, j);
        ext.add(r_offdiag(a, i, j), row_comb * min_sum(a, j), row_comb * max_sum(a, j));
        const double col_comb = col_comb_entry(a, i, j);
        ext.add(c_offdiag(a, i, j), col_comb * min_sum(a, j), col_comb * max_sum(a, j));
      }
    }
  };
  const IndexSubset sbar = s.complement();
  visit(s, sbar);
  visit(sbar, s);
  return {ext.lower, ext.upper};
}

BoundPair theta_phi_bounds(const RectangularTensor& a, const IndexSubset& s) {
  require_nonnegative_square(a);
  require_subset(a, s);
  Extremes ext;
  auto visit = [&](const IndexSubset& from, const IndexSubset& to) {
    for (int j : to.members()) {
      const PartitionSum row = r_partition(a, j, from);
      const PartitionSum col = c_partition(a, j, from);
      for (int i : from.members()) {
        ext.add(row.out, row.in * min_sum(a, i), row.in * max_sum(a, i));
        ext.add(col.out, col.in * min_sum(a, i), col.in * max_sum(a, i));
      }
    }
  };
  const IndexSubset sbar = s.complement();
  visit(s, sbar);
  visit(sbar, s);
  return {ext.lower, ext.upper};
}

BoundsReport bounds_report(const RectangularTensor& a, const IndexSubset& s) {
  return {s, yang_qi_bounds(a), lu_bounds(a, s), theta_phi_bounds(a, s)};
}

SubsetSweep sweep_subsets(const RectangularTensor& a, Objective objective, const SweepOptions& options) {
  require_nonnegative_square(a);
  const int n = a.n();
  if (n > options.max_n || n > 63)
    throw CapacityError(fmt::format(
        "n={} exceeds the subset enumeration cap of {}; supply the subset explicitly with --s", n, options.max_n));

  // Representatives contain element 1, i.e. odd masks below the full mask.
  std::vector<IndexSubset> subsets;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; mask += 2) subsets.push_back(IndexSubset::from_mask(mask, n));
  std::sort(subsets.begin(), subsets.end());

  std::vector<std::optional<BoundsReport>> rows(subsets.size());
  detail::parallel_for(subsets.size(), options.threads,
                       [&](std::size_t k) { rows[k] = bounds_report(a, subsets[k]); });

  SubsetSweep sweep{objective, {}, 0};
  sweep.table.reserve(rows.size());
  for (auto& row : rows) sweep.table.push_back(std::move(*row));
  for (std::size_t k = 1; k < sweep.table.size(); ++k)
    if (objective_value(objective, sweep.table[k].theta_phi) <
        objective_value(objective, sweep.table[sweep.best_index].theta_phi))
      sweep.best_index = k;
  return sweep;
}

BoundsReport best_subset(const RectangularTensor& a, Objective objective, const SweepOptions& options) {
  return sweep_subsets(a, objective, options).best();
}

}  // namespace recten
