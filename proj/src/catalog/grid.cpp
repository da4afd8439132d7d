#include "gorlab/catalog/grid.hpp"

#include <algorithm>

namespace gorlab::catalog {

std::string cell_label(Cell c, bool symmetric) {
  int a = c.row, b = c.col;
  if (symmetric && a > b) std::swap(a, b);
  return "x[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

std::vector<std::string> cell_labels(const std::vector<Cell>& cells, bool symmetric) {
  std::vector<std::string> out;
  for (Cell c : cells) out.push_back(cell_label(c, symmetric));
  return out;
}

std::vector<int> complement(const std::vector<int>& R, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (std::find(R.begin(), R.end(), i) == R.end()) out.push_back(i);
  return out;
}

bool subset_order_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::vector<int>> proper_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), subset_order_less);
  return out;
}

}  // namespace gorlab::catalog
