#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace recten {

/// Ordered tuple of 1-based indices addressing either the row modes (length p)
/// or the column modes (length q) of a rectangular tensor.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> components) : components_(components) {}
  explicit MultiIndex(std::vector<int> components) : components_(std::move(components)) {}

  std::size_t size() const noexcept { return components_.size(); }
  int operator[](std::size_t k) const { return components_[k]; }
  const std::vector<int>& components() const noexcept { return components_; }

  /// True when every component equals `value`. Vacuously true when empty.
  bool all_equal(int value) const noexcept;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> components_;
};

/// Nonempty proper subset S of {1, ..., n}. Members are kept sorted.
class IndexSubset {
 public:
  /// Throws SubsetError if `members` is empty, covers all of {1..n}, has
  /// duplicates, or holds an element outside {1..n}. Input order is free.
  IndexSubset(std::vector<int> members, int n);

  /// Bit k of `mask` selects element k + 1.
  static IndexSubset from_mask(std::uint64_t mask, int n);

  const std::vector<int>& members() const noexcept { return members_; }
  int universe() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(int k) const noexcept { return k >= 1 && k <= n_ && flags_[k - 1] != 0; }
  IndexSubset complement() const;

  friend bool operator==(const IndexSubset& a, const IndexSubset& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }
  /// Lexicographic on the sorted member lists.
  friend bool operator<(const IndexSubset& a, const IndexSubset& b) { return a.members_ < b.members_; }

 private:
  IndexSubset() = default;
  std::vector<int> members_;
  std::vector<char> flags_;
  int n_ = 0;
};

struct Shape {
  int p = 1;  // row modes
  int q = 1;  // column modes
  int m = 2;  // row dimension
  int n = 2;  // column dimension

  int order() const noexcept { return p + q; }
  bool square() const noexcept { return m == n; }
  friend bool operator==(const Shape&, const Shape&) = default;
};

struct Entry {
  MultiIndex rows;
  MultiIndex cols;
  double value = 0.0;
};

/// Real (p,q)-th order m x n rectangular tensor in sparse coordinate form.
///
/// Entries are validated and sorted lexicographically by (rows, cols) on
/// construction; every sum and contraction walks them in that order, so
/// round-off is deterministic. Row and column absolute sums are cached.
/// Instances are immutable.
class RectangularTensor {
 public:
  RectangularTensor(Shape shape, std::vector<Entry> entries);

  static RectangularTensor zero(Shape shape) { return RectangularTensor(shape, {}); }

  const Shape& shape() const noexcept { return shape_; }
  int p() const noexcept { return shape_.p; }
  int q() const noexcept { return shape_.q; }
  int m() const noexcept { return shape_.m; }
  int n() const noexcept { return shape_.n; }
  int order() const noexcept { return shape_.order(); }

  std::size_t nnz() const noexcept { return values_.size(); }

  /// 0-based coordinates of stored entry k: p row indices then q column indices.
  std::span<const int> coords(std::size_t k) const {
    return {coords_.data() + k * static_cast<std::size_t>(order()), static_cast<std::size_t>(order())};
  }
  double value(std::size_t k) const { return values_[k]; }

  /// Entries in storage order with 1-based indices.
  std::vector<Entry> entries() const;

  /// Value at a 1-based coordinate; zero if not stored.
  double at(const MultiIndex& rows, const MultiIndex& cols) const;

  bool is_nonnegative() const noexcept;

  const std::vector<double>& row_sums() const noexcept { return row_sums_; }
  const std::vector<double>& col_sums() const noexcept { return col_sums_; }

  friend bool operator==(const RectangularTensor& a, const RectangularTensor& b) {
    return a.shape_ == b.shape_ && a.coords_ == b.coords_ && a.values_ == b.values_;
  }

 private:
  double at0(std::span<const int> coord) const;

  Shape shape_;
  std::vector<int> coords_;
  std::vector<double> values_;
  std::vector<double> row_sums_;
  std::vector<double> col_sums_;
};

/// Split of an absolute row or column sum into the part whose trailing
/// indices all lie in S and the remainder. `in + out` reproduces the full
/// sum bit-for-bit.
struct PartitionSum {
  double in = 0.0;
  double out = 0.0;
};

// All integer arguments below are 1-based.

/// R_i: sum of |a| over entries with first row index i.
double row_sum(const RectangularTensor& a, int i);
/// C_j: sum of |a| over entries with first column index j.
double col_sum(const RectangularTensor& a, int j);

/// a_{i j...j j...j}: first row index i, every other index j. Requires m == n.
double row_comb_entry(const RectangularTensor& a, int i, int j);
/// a_{i...i j i...i}: first column index j, every other index i. Requires m == n.
double col_comb_entry(const RectangularTensor& a, int j, int i);

/// r_i^j = R_i - |a_{i j...j j...j}|.
double r_offdiag(const RectangularTensor& a, int i, int j);
/// c_j^i = C_j - |a_{i...i j i...i}|.
double c_offdiag(const RectangularTensor& a, int j, int i);

/// Row i split by whether (i_2..i_p, j_1..j_q) all lie in S.
PartitionSum r_partition(const RectangularTensor& a, int i, const IndexSubset& s);
/// Column j split by whether (i_1..i_p, j_2..j_q) all lie in S.
PartitionSum c_partition(const RectangularTensor& a, int j, const IndexSubset& s);

/// (A x^{p-1} y^q)_i, accumulated into the slot of the first row index.
std::vector<double> contract_left(const RectangularTensor& a, std::span<const double> x,
                                  std::span<const double> y);
/// (A x^p y^{q-1})_j, accumulated into the slot of the first column index.
std::vector<double> contract_right(const RectangularTensor& a, std::span<const double> x,
                                   std::span<const double> y);

}  // namespace recten
