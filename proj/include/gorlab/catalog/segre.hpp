#pragma once

#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/catalog/grid.hpp"
#include "gorlab/groebner.hpp"
#include "gorlab/simplicial.hpp"

namespace gorlab::catalog {

/// Within-class ordering of the off-diagonal variables x[i,j], x[j,i] that share |i-j|.
enum class SegreTieBreak {
  MinIndexUpperFirst,  // by min(i,j), then upper (i<j) before lower
  UpperBlockFirst,     // all upper variables row-major, then all lower ones
  Reversed,            // MinIndexUpperFirst reversed inside each class
};

VariableTable segre_table(int n);  // generic n x n matrix
TermOrder segre_term_order(int n, SegreTieBreak tie = SegreTieBreak::MinIndexUpperFirst);
/// Lexicographic row-major order; its initial terms are the main diagonals of the 2-minors.
TermOrder diagonal_term_order(int n);
MonomialIdeal segre_initial_generators(int n);
MonomialIdeal classical_initial_generators(int n);

enum class Step { Up, Right };
enum class SegrePoint { LeftTurn, RightTurn, AloneInColumn, AloneInRow };

/// Monotone path in the grid rows x cols, from (max rows, min cols) to (min rows, max cols).
class GridPath {
 public:
  GridPath(std::vector<int> rows, std::vector<int> cols, std::vector<Step> steps);

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::vector<SegrePoint> types() const;
  SegrePoint type_at(std::size_t k) const;
  std::ptrdiff_t index_of(Cell c) const;
  bool contains(Cell c) const { return index_of(c) >= 0; }
  bool full_support() const;

  /// Standard shelling order within one grid: first differing step Up < Right.
  friend bool operator<(const GridPath& a, const GridPath& b) { return a.steps_ < b.steps_; }
  friend bool operator==(const GridPath& a, const GridPath& b) = default;

 private:
  std::vector<int> rows_, cols_;
  std::vector<Step> steps_;
  std::vector<Cell> cells_;
};

/// All paths of the grid in standard shelling order.
std::vector<GridPath> grid_paths(const std::vector<int>& rows, const std::vector<int>& cols);

GridPath flip(const GridPath& P, Cell x);

struct SegreFacet {
  GridPath path;
  std::vector<Cell> minus;  // F^-
  std::vector<Cell> plus;   // F^+
};

/// F^- / F^+ split of a path whose grid has row set R.
void segre_signs(const GridPath& P, std::vector<Cell>& minus, std::vector<Cell>& plus);

std::vector<SegreFacet> segre_shelling(int n);
SimplicialComplex segre_core_facets(int n);
/// Facets of `core` (a Segre core) listed in shelling order.
std::vector<Face> segre_shelling_faces(int n, const SimplicialComplex& core);

GridPath segre_adjacent_facet(int n, const GridPath& P, Cell x);

}  // namespace gorlab::catalog
