#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qfrob/rational.hpp"

namespace qfrob {

/// A sparse row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Rat>>;

/// Exact rank over Q by incremental row echelon reduction. Rows are fed
/// sparsest first so fill-in stays low. Throws std::invalid_argument for an
/// unsorted row or a column outside [0, ncols).
std::size_t sparse_rank(int ncols, std::vector<SparseRow> rows);

/// Sorts by column, merges duplicates and drops zeros.
SparseRow normalize_row(std::vector<std::pair<int, Rat>> entries);

}  // namespace qfrob
