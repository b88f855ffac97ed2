#pragma once

#include <string>

#include "recten/tensor.hpp"

namespace recten::testing {

/// The 10-nonzero (2,2)-th order 3x3 example tensor shipped as data/a_ex.json.
inline RectangularTensor a_ex() {
  return RectangularTensor({2, 2, 3, 3}, {
                                             {{1, 1}, {2, 1}, 2},
                                             {{1, 1}, {3, 1}, 5},
                                             {{1, 2}, {2, 2}, 5},
                                             {{2, 1}, {1, 1}, 4},
                                             {{2, 2}, {1, 2}, 6},
                                             {{2, 2}, {3, 2}, 1},
                                             {{3, 1}, {1, 1}, 8},
                                             {{3, 2}, {2, 2}, 9},
                                             {{3, 3}, {1, 3}, 8},
                                             {{3, 3}, {2, 3}, 10},
                                         });
}

/// a_{i...i i...i} = 1, everything else zero.
inline RectangularTensor diagonal_identity(int p = 2, int q = 2, int n = 3) {
  std::vector<Entry> entries;
  for (int i = 1; i <= n; ++i)
    entries.push_back({MultiIndex(std::vector<int>(static_cast<std::size_t>(p), i)),
                       MultiIndex(std::vector<int>(static_cast<std::size_t>(q), i)), 1.0});
  return RectangularTensor({p, q, n, n}, std::move(entries));
}

/// H-singular values of a_ex (trusted fixture data, four decimals).
inline const std::vector<double>& a_ex_h_singular_values() {
  static const std::vector<double> values{-9.9319, -9.1950, -9.1673, -7.5415, -2.9723, -2.1787, -1.9725, -1.0403,
                                          0.0,     0.4172,  3.1373,  3.3683,  5.7147,  6.9150,  18.0755};
  return values;
}

inline std::string data_path(const std::string& name) { return std::string(RECTEN_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(RECTEN_GOLDEN_DIR) + "/" + name; }

}  // namespace recten::testing
