#pragma once

#include <set>
#include <string>
#include <vector>

namespace gorlab::catalog {

/// Facets of a polytope, each given by the set of vertex labels it contains.
struct FacetIncidence {
  std::vector<std::string> vertices;
  std::vector<std::set<std::string>> facets;
  std::vector<std::string> facet_names;
};

struct SpecialSimplexResult {
  bool ok = false;
  std::string failing_facet;  // empty when ok
  std::size_t omitted = 0;    // elements of sigma missing from the failing facet
};

/// True iff every facet contains all but exactly one element of `sigma`.
SpecialSimplexResult special_simplex_check(const FacetIncidence& P, const std::set<std::string>& sigma);

/// Product of two (n-1)-simplices: vertices x[a,b], facets u_i (a != i) and v_j (b != j).
FacetIncidence segre_polytope(int n);
/// Second dilation of the (n-1)-simplex: vertices x[a,b] with a <= b, facets y_i (i not in {a,b}).
FacetIncidence veronese_polytope(int n);

std::set<std::string> segre_diagonal(int n);
/// {x[i, n+1-i] : i <= n/2}.
std::set<std::string> veronese_antidiagonal(int n);

}  // namespace gorlab::catalog
