#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gorlab::catalog {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Label of the matrix variable at a cell, e.g. "x[2,5]". Symmetric cells use x[min,max].
std::string cell_label(Cell c, bool symmetric = false);
std::vector<std::string> cell_labels(const std::vector<Cell>& cells, bool symmetric = false);

/// Sorted complement of `R` in {1..n}.
std::vector<int> complement(const std::vector<int>& R, int n);

/// Subset order used to sort the row sets: lexicographic on increasing
/// sequences, a proper prefix coming first.
bool subset_order_less(const std::vector<int>& a, const std::vector<int>& b);

/// Nonempty proper subsets of {1..n}, sorted by subset_order_less.
std::vector<std::vector<int>> proper_subsets(int n);

}  // namespace gorlab::catalog
