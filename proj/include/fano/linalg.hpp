#pragma once

#include "fano/numeric.hpp"

#include <utility>
#include <vector>

namespace fano {

/// Sparse system row: (column, coefficient) pairs with strictly increasing
/// columns and no stored zeros.
using SparseRow = std::vector<std::pair<int, Rat>>;

/// Exact Gaussian elimination over the rationals.  Pivot selection within a
/// column picks the candidate entry with the smallest |numerator*denominator|,
/// ties broken by the lowest row index, so elimination traces are
/// reproducible.
int row_rank(std::vector<SparseRow> rows, int ncols);

inline int kernel_dimension(std::vector<SparseRow> rows, int ncols) {
    return ncols - row_rank(std::move(rows), ncols);
}

}  // namespace fano
