#include <algorithm>
#include <set>

#include "doctest.h"
#include "gorlab/catalog.hpp"

using namespace gorlab;
using namespace gorlab::catalog;

namespace {

constexpr Step U = Step::Up, R = Step::Right;

std::set<Cell> cell_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

// The path displayed with its point types, in a 4 x 5 grid.
GridPath typed_path() { return GridPath({1, 2, 3, 4}, {1, 2, 3, 4, 5}, {R, U, U, R, R, U, R}); }

}  // namespace

TEST_CASE("standard shelling of the 3x3 grid") {
  auto paths = grid_paths({1, 2, 3}, {1, 2, 3});
  const std::vector<std::set<Cell>> want = {
      {{3, 1}, {2, 1}, {1, 1}, {1, 2}, {1, 3}}, {{3, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}},
      {{3, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}}, {{3, 1}, {3, 2}, {2, 2}, {1, 2}, {1, 3}},
      {{3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}}, {{3, 1}, {3, 2}, {3, 3}, {2, 3}, {1, 3}},
  };
  REQUIRE(paths.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(cell_set(paths[k].cells()) == want[k]);
  CHECK(std::is_sorted(paths.begin(), paths.end()));
  // it is a shelling of the complex of all grid paths
  std::vector<std::vector<std::string>> facets;
  for (const auto& p : paths) facets.push_back(cell_labels(p.cells()));
  SimplicialComplex D = SimplicialComplex::from_label_sets(facets);
  std::vector<Face> order;
  for (const auto& f : facets) order.push_back(D.face_of(f));
  CHECK(verify_shelling(D, order).ok);
}

TEST_CASE("point types of the displayed path") {
  GridPath P = typed_path();
  using T = SegrePoint;
  const std::vector<std::pair<Cell, T>> want = {
      {{4, 1}, T::AloneInColumn}, {{4, 2}, T::LeftTurn},      {{3, 2}, T::AloneInRow}, {{2, 2}, T::RightTurn},
      {{2, 3}, T::AloneInColumn}, {{2, 4}, T::LeftTurn},      {{1, 4}, T::RightTurn},  {{1, 5}, T::AloneInColumn},
  };
  REQUIRE(P.cells().size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(P.cells()[k] == want[k].first);
    CHECK(P.type_at(k) == want[k].second);
  }
  CHECK(P.full_support());
}

TEST_CASE("flipping the left turn in the bottom row") {
  GridPath Q = flip(typed_path(), {4, 2});
  CHECK(cell_set(Q.cells()) == std::set<Cell>{{4, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {2, 4}, {1, 4}, {1, 5}});
  CHECK(flip(Q, {3, 1}) == typed_path());
}

TEST_CASE("turns are exactly the points whose removal keeps full support") {
  for (const auto& P : grid_paths({1, 2, 3, 4}, {1, 2, 3, 4, 5})) {
    auto paths = grid_paths({1, 2, 3, 4}, {1, 2, 3, 4, 5});
    for (std::size_t k = 0; k < P.cells().size(); ++k) {
      Cell x = P.cells()[k];
      std::size_t containing = 0;
      for (const auto& Q : paths) {
        bool all = true;
        for (Cell c : P.cells()) all = all && (c == x || Q.contains(c));
        containing += all;
      }
      bool turn = P.type_at(k) == SegrePoint::LeftTurn || P.type_at(k) == SegrePoint::RightTurn;
      CHECK(containing == (turn ? 2u : 1u));
    }
  }
}

TEST_CASE("adjacent facet across an isolated column point") {
  // n = 9, R = {1,4,6,9}, x = (4,5)
  GridPath P({1, 4, 6, 9}, {2, 3, 5, 7, 8}, {U, R, U, R, R, U, R});
  REQUIRE(cell_set(P.cells()) == std::set<Cell>{{9, 2}, {6, 2}, {6, 3}, {4, 3}, {4, 5}, {4, 7}, {1, 7}, {1, 8}});
  REQUIRE(P.type_at(P.index_of({4, 5})) == SegrePoint::AloneInColumn);
  GridPath Q = segre_adjacent_facet(9, P, {4, 5});
  CHECK(Q.rows() == std::vector<int>{1, 4, 5, 6, 9});
  CHECK(Q.cols() == std::vector<int>{2, 3, 7, 8});
  CHECK(cell_set(Q.cells()) == std::set<Cell>{{9, 2}, {6, 2}, {6, 3}, {5, 3}, {4, 3}, {4, 7}, {1, 7}, {1, 8}});
  CHECK(Q.type_at(Q.index_of({5, 3})) == SegrePoint::AloneInRow);
  CHECK(segre_adjacent_facet(9, Q, {5, 3}) == P);
}

TEST_CASE("plus and minus markings") {
  // n = 10, R = {1,4,6,8,9}
  GridPath P({1, 4, 6, 8, 9}, {2, 3, 5, 7, 10}, {U, U, R, U, R, R, U, R});
  std::vector<Cell> minus, plus;
  segre_signs(P, minus, plus);
  CHECK(cell_set(plus) == std::set<Cell>{{1, 7}, {1, 10}, {4, 3}, {6, 2}, {8, 2}});
  CHECK(cell_set(minus) == std::set<Cell>{{4, 5}, {4, 7}, {6, 3}, {9, 2}});
}

TEST_CASE("row sets are ordered lexicographically with prefixes first") {
  auto S = proper_subsets(3);
  const std::vector<std::vector<int>> want = {{1}, {1, 2}, {1, 3}, {2}, {2, 3}, {3}};
  CHECK(S == want);
  CHECK(subset_order_less({1, 4}, {1, 4, 5}));
  CHECK(subset_order_less({1, 4, 5}, {2}));
  CHECK(complement({2, 4}, 5) == std::vector<int>{1, 3, 5});
}

TEST_CASE("Segre core: counts, adjacency and both shelling directions") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    auto shelling = segre_shelling(n);
    SimplicialComplex C = segre_core_facets(n);
    CHECK(shelling.size() == static_cast<std::size_t>(binomial(2 * n - 2, n - 1)));
    CHECK(C.facets().size() == shelling.size());
    // core of the predicted initial complex
    SimplicialComplex D = complex_of(segre_initial_generators(n), segre_table(n));
    CHECK(core(D).same_as(C));
    CHECK(D.labels_of(cone_points(D)).size() == static_cast<std::size_t>(n));

    std::vector<Face> faces;
    for (const auto& f : shelling) faces.push_back(C.face_of(cell_labels(f.path.cells())));
    CHECK(faces == segre_shelling_faces(n, C));
    auto check = verify_shelling(C, faces);
    REQUIRE(check.ok);
    std::vector<Face> rev(faces.rbegin(), faces.rend());
    auto back = verify_shelling(C, rev);
    REQUIRE(back.ok);
    for (std::size_t k = 0; k < shelling.size(); ++k) {
      const auto& F = shelling[k];
      // restriction faces of the shelling are F^- forwards and F^+ backwards
      if (k > 0) CHECK(check.certificate.restrictions[k] == C.face_of(cell_labels(F.minus)));
      if (k + 1 < shelling.size())
        CHECK(back.certificate.restrictions[shelling.size() - 1 - k] == C.face_of(cell_labels(F.plus)));
      for (Cell x : F.path.cells()) {
        Face ridge = faces[k] & ~C.face_of({cell_label(x)});
        std::vector<std::size_t> over;
        for (std::size_t j = 0; j < faces.size(); ++j)
          if (is_subface(ridge, faces[j])) over.push_back(j);
        REQUIRE(over.size() == 2);
        std::size_t other = over[0] == k ? over[1] : over[0];
        CHECK(segre_adjacent_facet(n, F.path, x) == shelling[other].path);
        bool plus = std::find(F.plus.begin(), F.plus.end(), x) != F.plus.end();
        CHECK((other > k) == plus);
      }
    }
  }
}

TEST_CASE("Segre h-vector and a-invariant") {
  for (int n = 2; n <= 5; ++n) {
    SimplicialComplex D = complex_of(segre_initial_generators(n), segre_table(n));
    HVector h = h_vector(D);
    for (int i = 0; i < n; ++i) CHECK(h.h[i] == binomial(n - 1, i) * binomial(n - 1, i));
    CHECK(h.a_invariant() == -n);
  }
}

TEST_CASE("Segre tie-breaks give the same initial ideal for small n") {
  for (int n = 2; n <= 4; ++n)
    for (auto tie : {SegreTieBreak::MinIndexUpperFirst, SegreTieBreak::UpperBlockFirst, SegreTieBreak::Reversed}) {
      Ideal I = generic_minor_ideal(2, n, n, false);
      CHECK(initial_ideal(buchberger(I, segre_term_order(n, tie))) == segre_initial_generators(n));
    }
}
