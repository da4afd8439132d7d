#pragma once

#include <string>
#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/catalog/grid.hpp"
#include "gorlab/groebner.hpp"
#include "gorlab/simplicial.hpp"

namespace gorlab::catalog {

/// Support of the n x n matrix Y: the diagonal, the superdiagonal and the corner (n,1).
struct CycleMatrixSpec {
  int n = 0;
  std::vector<Cell> V;  // in cycle order x11, x12, x22, x23, ..., xnn, xn1
  std::vector<Cell> W;  // remaining cells, row-major

  bool in_V(Cell c) const;
  /// True if the row/column adjacency graph on V is one cycle of length 2n.
  bool is_single_cycle() const;
};

CycleMatrixSpec cycle_matrix_spec(int n);
/// Revlex order with every V variable above every W variable.
TermOrder minors_term_order(int n);
/// Products over independent k-subsets of the 2n-cycle, in generic_matrix_table(n, n).
MonomialIdeal minors_cycle_ideal(int n, int k);

struct LemmaCheck {
  bool ok = false;
  std::size_t minors_checked = 0;
  std::size_t zero_minors = 0;
  std::size_t distinct_monomials = 0;
  std::string failure;
};

/// Expands every k-minor of Y and compares with the independent-set generators.
LemmaCheck minors_verify_lemma(int n, int k);

struct CyclicMatch {
  bool matches = false;
  std::size_t facets = 0;
  std::vector<std::pair<std::string, int>> relabeling;  // core vertex -> position on the cycle
};

CyclicMatch minors_core_is_cyclic(int n);

}  // namespace gorlab::catalog
