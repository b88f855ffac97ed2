#include "recten/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "recten/error.hpp"

namespace recten {

std::string_view to_string(ErrorCategory c) noexcept {
  switch (c) {
    case ErrorCategory::validation:
      return "validation";
    case ErrorCategory::numeric:
      return "numeric";
    case ErrorCategory::capacity:
      return "capacity";
  }
  return "unknown";
}

bool MultiIndex::all_equal(int value) const noexcept {
  return std::all_of(components_.begin(), components_.end(), [value](int c) { return c == value; });
}

// ---------------------------------------------------------------------------
// IndexSubset

IndexSubset::IndexSubset(std::vector<int> members, int n) : members_(std::move(members)), n_(n) {
  if (n < 2) throw SubsetError(fmt::format("subset universe must have n >= 2, got {}", n));
  std::sort(members_.begin(), members_.end());
  if (members_.empty()) throw SubsetError("subset must be nonempty");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw SubsetError(fmt::format("subset {} has duplicate members", members_));
  if (members_.front() < 1 || members_.back() > n)
    throw SubsetError(fmt::format("subset {} has members outside 1..{}", members_, n));
  if (members_.size() == static_cast<std::size_t>(n))
    throw SubsetError(fmt::format("subset {} is not proper in 1..{}", members_, n));
  flags_.assign(static_cast<std::size_t>(n), 0);
  for (int k : members_) flags_[k - 1] = 1;
}

IndexSubset IndexSubset::from_mask(std::uint64_t mask, int n) {
  std::vector<int> members;
  for (int k = 0; k < n && k < 64; ++k)
    if ((mask >> k) & 1U) members.push_back(k + 1);
  return IndexSubset(std::move(members), n);
}

IndexSubset IndexSubset::complement() const {
  std::vector<int> rest;
  for (int k = 1; k <= n_; ++k)
    if (!contains(k)) rest.push_back(k);
  return IndexSubset(std::move(rest), n_);
}

// ---------------------------------------------------------------------------
// RectangularTensor

RectangularTensor::RectangularTensor(Shape shape, std::vector<Entry> entries) : shape_(shape) {
  if (shape.p < 1 || shape.q < 1)
    throw ShapeError(fmt::format("p and q must be positive, got p={} q={}", shape.p, shape.q));
  if (shape.m < 2 || shape.n < 2)
    throw ShapeError(fmt::format("m and n must be at least 2, got m={} n={}", shape.m, shape.n));

  const auto l = static_cast<std::size_t>(order());
  const std::size_t count = entries.size();
  std::vector<int> raw(count * l);
  for (std::size_t k = 0; k < count; ++k) {
    const Entry& e = entries[k];
    if (e.rows.size() != static_cast<std::size_t>(shape.p) || e.cols.size() != static_cast<std::size_t>(shape.q))
      throw ShapeError(fmt::format("entry {} has {} row and {} column indices, expected {} and {}", k,
                                   e.rows.size(), e.cols.size(), shape.p, shape.q));
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.rows[r] < 1 || e.rows[r] > shape.m)
        throw RangeError(fmt::format("entry {} row index {} outside 1..{}", k, e.rows.components(), shape.m));
      raw[k * l + r] = e.rows[r] - 1;
    }
    for (std::size_t c = 0; c < e.cols.size(); ++c) {
      if (e.cols[c] < 1 || e.cols[c] > shape.n)
        throw RangeError(fmt::format("entry {} column index {} outside 1..{}", k, e.cols.components(), shape.n));
      raw[k * l + e.rows.size() + c] = e.cols[c] - 1;
    }
    if (!std::isfinite(e.value)) throw ValidationError(fmt::format("entry {} has a non-finite value", k));
  }

  std::vector<std::size_t> perm(count);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto key = [&](std::size_t k) { return std::span<const int>(raw.data() + k * l, l); };
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    auto ka = key(a), kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  for (std::size_t k = 1; k < count; ++k) {
    auto prev = key(perm[k - 1]), cur = key(perm[k]);
    if (std::equal(prev.begin(), prev.end(), cur.begin()))
      throw ValidationError(fmt::format("entries {} and {} share the coordinate ({}; {})", perm[k - 1],
                                        perm[k], entries[perm[k]].rows.components(),
                                        entries[perm[k]].cols.components()));
  }

  coords_.reserve(count * l);
  values_.reserve(count);
  for (std::size_t k : perm) {
    auto c = key(k);
    coords_.insert(coords_.end(), c.begin(), c.end());
    values_.push_back(entries[k].value);
  }

  row_sums_.assign(static_cast<std::size_t>(shape.m), 0.0);
  col_sums_.assign(static_cast<std::size_t>(shape.n), 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    auto c = coords(k);
    row_sums_[c[0]] += std::abs(values_[k]);
    col_sums_[c[shape.p]] += std::abs(values_[k]);
  }
}

std::vector<Entry> RectangularTensor::entries() const {
  std::vector<Entry> out;
  out.reserve(nnz());
  for (std::size_t k = 0; k < nnz(); ++k) {
    auto c = coords(k);
    std::vector<int> rows, cols;
    for (int r = 0; r < p(); ++r) rows.push_back(c[r] + 1);
    for (int s = 0; s < q(); ++s) cols.push_back(c[p() + s] + 1);
    out.push_back({MultiIndex(std::move(rows)), MultiIndex(std::move(cols)), values_[k]});
  }
  return out;
}

double RectangularTensor::at0(std::span<const int> coord) const {
  const auto l = static_cast<std::size_t>(order());
  std::size_t lo = 0, hi = nnz();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto c = coords(mid);
    if (std::lexicographical_compare(c.begin(), c.end(), coord.begin(), coord.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < nnz() && std::equal(coord.begin(), coord.begin() + static_cast<std::ptrdiff_t>(l), coords(lo).begin()))
    return values_[lo];
  return 0.0;
}

double RectangularTensor::at(const MultiIndex& rows, const MultiIndex& cols) const {
  if (rows.size() != static_cast<std::size_t>(p()) || cols.size() != static_cast<std::size_t>(q()))
    throw ShapeError(fmt::format("coordinate needs {} row and {} column indices", p(), q()));
  std::vector<int> coord;
  coord.reserve(static_cast<std::size_t>(order()));
  for (int r : rows.components()) {
    if (r < 1 || r > m()) throw RangeError(fmt::format("row index {} outside 1..{}", r, m()));
    coord.push_back(r - 1);
  }
  for (int c : cols.components()) {
    if (c < 1 || c > n()) throw RangeError(fmt::format("column index {} outside 1..{}", c, n()));
    coord.push_back(c - 1);
  }
  return at0(coord);
}

bool RectangularTensor::is_nonnegative() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

// ---------------------------------------------------------------------------
// Sums

namespace {

void check_row(const RectangularTensor& a, int i) {
  if (i < 1 || i > a.m()) throw RangeError(fmt::format("row index {} outside 1..{}", i, a.m()));
}

void check_col(const RectangularTensor& a, int j) {
  if (j < 1 || j > a.n()) throw RangeError(fmt::format("column index {} outside 1..{}", j, a.n()));
}

void check_square(const RectangularTensor& a, const char* op) {
  if (!a.shape().square())
    throw ShapeError(fmt::format("{} requires m == n, got m={} n={}", op, a.m(), a.n()));
}

void check_subset(const RectangularTensor& a, const IndexSubset& s) {
  if (s.universe() != a.n())
    throw SubsetError(fmt::format("subset over 1..{} used with n={}", s.universe(), a.n()));
}

// Given in <= total, pick out close to total - in such that in + out == total
// in floating point. One ulp of adjustment covers the tie cases.
double complement_part(double total, double in) {
  double out = total - in;
  for (int step = 0; step < 4 && in + out != total; ++step)
    out = std::nextafter(out, in + out < total ? INFINITY : -INFINITY);
  return out;
}

// Splits `total` into the accumulated class sum `in` and its complement so
// that in + out == total holds in floating point. When in + out lands on a
// rounding tie for every candidate out, in itself moves by one ulp, which is
// below the round-off already present in the accumulated sum.
PartitionSum split_total(double total, double in) {
  if (in >= total) return {total, 0.0};
  for (double candidate : {in, std::nextafter(in, INFINITY), std::nextafter(in, -INFINITY)}) {
    const double out = complement_part(total, candidate);
    if (candidate + out == total && out >= 0.0) return {candidate, out};
  }
  return {in, total - in};
}

}  // namespace

double row_sum(const RectangularTensor& a, int i) {
  check_row(a, i);
  return a.row_sums()[static_cast<std::size_t>(i - 1)];
}

double col_sum(const RectangularTensor& a, int j) {
  check_col(a, j);
  return a.col_sums()[static_cast<std::size_t>(j - 1)];
}

double row_comb_entry(const RectangularTensor& a, int i, int j) {
  check_square(a, "row comb entry");
  check_row(a, i);
  check_col(a, j);
  std::vector<int> rows(static_cast<std::size_t>(a.p()), j);
  rows[0] = i;
  return a.at(MultiIndex(std::move(rows)), MultiIndex(std::vector<int>(static_cast<std::size_t>(a.q()), j)));
}

double col_comb_entry(const RectangularTensor& a, int j, int i) {
  check_square(a, "column comb entry");
  check_row(a, i);
  check_col(a, j);
  std::vector<int> cols(static_cast<std::size_t>(a.q()), i);
  cols[0] = j;
  return a.at(MultiIndex(std::vector<int>(static_cast<std::size_t>(a.p()), i)), MultiIndex(std::move(cols)));
}

double r_offdiag(const RectangularTensor& a, int i, int j) {
  const double comb = std::abs(row_comb_entry(a, i, j));
  return complement_part(row_sum(a, i), comb);
}

double c_offdiag(const RectangularTensor& a, int j, int i) {
  const double comb = std::abs(col_comb_entry(a, j, i));
  return complement_part(col_sum(a, j), comb);
}

PartitionSum r_partition(const RectangularTensor& a, int i, const IndexSubset& s) {
  check_square(a, "row partition");
  check_row(a, i);
  check_subset(a, s);
  double in = 0.0;
  for (std::size_t k = 0; k < a.nnz(); ++k) {
    auto c = a.coords(k);
    if (c[0] != i - 1) continue;
    if (std::all_of(c.begin() + 1, c.end(), [&](int idx) { return s.contains(idx + 1); })) in += std::abs(a.value(k));
  }
  return split_total(row_sum(a, i), in);
}

PartitionSum c_partition(const RectangularTensor& a, int j, const IndexSubset& s) {
  check_square(a, "column partition");
  check_col(a, j);
  check_subset(a, s);
  const int p = a.p();
  double in = 0.0;
  for (std::size_t k = 0; k < a.nnz(); ++k) {
    auto c = a.coords(k);
    if (c[p] != j - 1) continue;
    bool all_in = true;
    for (int t = 0; t < a.order() && all_in; ++t)
      if (t != p && !s.contains(c[t] + 1)) all_in = false;
    if (all_in) in += std::abs(a.value(k));
  }
  return split_total(col_sum(a, j), in);
}

// ---------------------------------------------------------------------------
// Contractions

namespace {

void check_vectors(const RectangularTensor& a, std::span<const double> x, std::span<const double> y) {
  if (x.size() != static_cast<std::size_t>(a.m()) || y.size() != static_cast<std::size_t>(a.n()))
    throw ShapeError(fmt::format("contraction needs x of length {} and y of length {}, got {} and {}", a.m(),
                                 a.n(), x.size(), y.size()));
}

// Product of the value with every vector component except the one at `skip`.
double product_except(const RectangularTensor& a, std::size_t k, int skip, std::span<const double> x,
                      std::span<const double> y) {
  auto c = a.coords(k);
  double prod = a.value(k);
  for (int t = 0; t < a.order(); ++t) {
    if (t == skip) continue;
    prod *= t < a.p() ? x[static_cast<std::size_t>(c[t])] : y[static_cast<std::size_t>(c[t])];
  }
  return prod;
}

}  // namespace

std::vector<double> contract_left(const RectangularTensor& a, std::span<const double> x,
                                  std::span<const double> y) {
  check_vectors(a, x, y);
  std::vector<double> out(static_cast<std::size_t>(a.m()), 0.0);
  for (std::size_t k = 0; k < a.nnz(); ++k)
    out[static_cast<std::size_t>(a.coords(k)[0])] += product_except(a, k, 0, x, y);
  return out;
}

std::vector<double> contract_right(const RectangularTensor& a, std::span<const double> x,
                                   std::span<const double> y) {
  check_vectors(a, x, y);
  std::vector<double> out(static_cast<std::size_t>(a.n()), 0.0);
  const int p = a.p();
  for (std::size_t k = 0; k < a.nnz(); ++k)
    out[static_cast<std::size_t>(a.coords(k)[p])] += product_except(a, k, p, x, y);
  return out;
}

}  // namespace recten
