#include <set>

#include "doctest.h"
#include "gorlab/catalog.hpp"

using namespace gorlab;
using namespace gorlab::catalog;

TEST_CASE("support of Y is a single 2n-cycle") {
  for (int n = 2; n <= 6; ++n) {
    CycleMatrixSpec s = cycle_matrix_spec(n);
    CHECK(s.V.size() == static_cast<std::size_t>(2 * n));
    CHECK(s.W.size() == static_cast<std::size_t>(n * n - 2 * n));
    CHECK(s.is_single_cycle());
    CHECK(s.in_V({n, 1}));
    CHECK(s.V.front() == Cell{1, 1});
    CHECK(s.V.back() == Cell{n, 1});
  }
}

TEST_CASE("minors of Y are signed independent-set monomials") {
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      LemmaCheck L = minors_verify_lemma(n, k);
      CHECK(L.ok);
      CHECK(L.minors_checked == static_cast<std::size_t>(binomial(n, k) * binomial(n, k)));
      // independent k-sets on a 2n-cycle: 2n/(2n-k) * C(2n-k, k)
      long long independent = 2 * n * binomial(2 * n - k, k) / (2 * n - k);
      CHECK(L.distinct_monomials == static_cast<std::size_t>(independent));
      CHECK(minors_cycle_ideal(n, k).size() == static_cast<std::size_t>(independent));
    }
}

TEST_CASE("initial ideal of the maximal-minus-one minors") {
  for (int n = 3; n <= 4; ++n) {
    Ideal I = generic_minor_ideal(n - 1, n, n, false);
    MonomialIdeal in = initial_ideal(buchberger(I, minors_term_order(n)));
    CHECK(in == minors_cycle_ideal(n, n - 1));
    SimplicialComplex D = complex_of(in, I.table());
    CHECK(D.is_pure());
    CHECK(D.dimension() + 1 == n * n - 4);
    CHECK(D.facets().size() == static_cast<std::size_t>(n * n * (n * n - 1) / 12));
    // W variables are the cone points
    CHECK(D.labels_of(cone_points(D)).size() == static_cast<std::size_t>(n * n - 2 * n));
    std::vector<long long> h(2 * n - 3);
    for (int i = 0; i < 2 * n - 3; ++i) h[i] = binomial(std::min(i, 2 * n - 4 - i) + 3, 3);
    CHECK(h_vector(D).h == h);
    CHECK(is_gorenstein(D).gorenstein);
  }
}

TEST_CASE("core is the boundary of a cyclic polytope") {
  const std::size_t facets[] = {6, 20, 50};
  for (int n = 3; n <= 5; ++n) {
    CyclicMatch c = minors_core_is_cyclic(n);
    CHECK(c.matches);
    CHECK(c.facets == facets[n - 3]);
    CHECK(c.relabeling.size() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("polytope facet incidences") {
  for (int n = 2; n <= 5; ++n) {
    FacetIncidence P = segre_polytope(n);
    CHECK(P.vertices.size() == static_cast<std::size_t>(n * n));
    CHECK(P.facets.size() == static_cast<std::size_t>(2 * n));
    for (const auto& f : P.facets) CHECK(f.size() == static_cast<std::size_t>(n * n - n));
  }
  for (int n = 3; n <= 8; ++n) {
    FacetIncidence P = veronese_polytope(n);
    CHECK(P.vertices.size() == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(P.facets.size() == static_cast<std::size_t>(n));
    // y_i omits the n vertices x[a,b] with i in {a,b}
    for (const auto& f : P.facets) CHECK(f.size() == static_cast<std::size_t>(n * (n + 1) / 2 - n));
  }
}

TEST_CASE("special simplices") {
  for (int n = 2; n <= 5; ++n) {
    FacetIncidence P = segre_polytope(n);
    CHECK(special_simplex_check(P, segre_diagonal(n)).ok);
    // any permutation matrix works
    std::set<std::string> anti;
    for (int i = 1; i <= n; ++i) anti.insert(cell_label({i, n + 1 - i}));
    CHECK(special_simplex_check(P, anti).ok);
    std::set<std::string> row;
    for (int j = 1; j <= n; ++j) row.insert(cell_label({1, j}));
    auto r = special_simplex_check(P, row);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failing_facet.empty());
  }
  for (int n = 2; n <= 8; n += 2) {
    FacetIncidence P = veronese_polytope(n);
    CHECK(special_simplex_check(P, veronese_antidiagonal(n)).ok);
    std::set<std::string> diag;
    for (int i = 1; i <= n / 2; ++i) diag.insert(cell_label({i, i}, true));
    CHECK_FALSE(special_simplex_check(P, diag).ok);
  }
  CHECK_THROWS(special_simplex_check(FacetIncidence{}, {"x"}));
}
