#pragma once

#include <utility>
#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/groebner.hpp"
#include "gorlab/simplicial.hpp"

namespace gorlab::catalog {

using Chord = std::pair<int, int>;  // (i, j), i < j

/// A set of chords of the convex n-gon.
struct ChordDiagram {
  int n = 0;
  std::vector<Chord> chords;

  bool has_crossing(int j) const;
};

bool chords_cross(Chord a, Chord b);

enum class PfaffTieBreak {
  Lexicographic,  // (i,j) lexicographic within each d-class; the n = 6 chain of the worked example is used verbatim
  ArcStart,       // within a class, by the starting point of the shorter arc
};

TermOrder pfaff_term_order(int n, PfaffTieBreak tie = PfaffTieBreak::Lexicographic);
/// x[j1, j_{r+1}] * ... * x[jr, j_{2r}] in skew_matrix_table(n).
Monomial predicted_pfaffian_leading_term(const std::vector<int>& J, const VariableTable& skew_table);
MonomialIdeal pfaff_initial_generators(int r, int n);
/// Subsets of the chords of the n-gon with no (k+1)-crossing.
SimplicialComplex crossing_complex(int n, int k);

struct PfaffInvariants {
  long long dim = 0;     // Krull dimension of K[X]/Pfaff(2(r+1), n)
  mpz_class degree;      // multiplicity
  long long a_invariant = 0;
};

/// Invariants of Pfaff(2(r+1), n).
PfaffInvariants pfaff_invariants(int r, int n);

}  // namespace gorlab::catalog
