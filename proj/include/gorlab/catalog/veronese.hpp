#pragma once

#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/catalog/grid.hpp"
#include "gorlab/groebner.hpp"
#include "gorlab/simplicial.hpp"

namespace gorlab::catalog {

VariableTable veronese_table(int n);  // symmetric n x n matrix
TermOrder veronese_term_order(int n);
/// x[i, n+1-i] for i <= n/2.
std::vector<Cell> veronese_cone_cells(int n);
MonomialIdeal veronese_initial_generators(int n);
/// m-subsets of [n] with no two elements summing to n+1, lexicographic.
std::vector<std::vector<int>> veronese_families(int n);

enum class TriStep { Left, Down };
enum class TriPoint { LeftTurn, RightTurn, Isolated };

/// Path in the triangle {(a_i, a_j) : i <= j} of an index set A, from
/// (a_1, a_m) moving left or down until it reaches the diagonal.
class TrianglePath {
 public:
  TrianglePath(std::vector<int> A, std::vector<TriStep> steps);

  const std::vector<int>& indices() const { return A_; }
  const std::vector<TriStep>& steps() const { return steps_; }
  const std::vector<Cell>& cells() const { return cells_; }
  TriPoint type_at(std::size_t k) const;
  std::vector<TriPoint> types() const;
  /// Index carried by an isolated point.
  int isolated_index(std::size_t k) const;
  std::ptrdiff_t index_of(Cell c) const;
  bool contains(Cell c) const { return index_of(c) >= 0; }

  /// Standard shelling order: first differing step Left < Down.
  friend bool operator<(const TrianglePath& a, const TrianglePath& b) { return a.steps_ < b.steps_; }
  friend bool operator==(const TrianglePath& a, const TrianglePath& b) = default;

 private:
  std::vector<int> A_;
  std::vector<TriStep> steps_;
  std::vector<Cell> cells_;
};

std::vector<TrianglePath> triangle_paths(const std::vector<int>& A);
TrianglePath flip(const TrianglePath& P, Cell x);

struct VeroneseFacet {
  TrianglePath path;
  std::vector<Cell> minus;
  std::vector<Cell> plus;
};

std::vector<VeroneseFacet> veronese_shelling(int n);
SimplicialComplex veronese_core_facets(int n);
std::vector<Face> veronese_shelling_faces(int n, const SimplicialComplex& core);
TrianglePath veronese_adjacent_facet(int n, const TrianglePath& P, Cell x);

}  // namespace gorlab::catalog
