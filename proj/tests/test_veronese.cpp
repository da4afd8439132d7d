#include <algorithm>
#include <set>

#include "doctest.h"
#include "gorlab/catalog.hpp"

using namespace gorlab;
using namespace gorlab::catalog;

namespace {

constexpr TriStep L = TriStep::Left, D = TriStep::Down;

std::set<Cell> cell_set(const std::vector<Cell>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("standard shelling of the triangle with four indices") {
  auto paths = triangle_paths({1, 2, 3, 4});
  const std::vector<std::set<Cell>> want = {
      {{1, 4}, {1, 3}, {1, 2}, {1, 1}}, {{1, 4}, {1, 3}, {1, 2}, {2, 2}}, {{1, 4}, {1, 3}, {2, 3}, {2, 2}},
      {{1, 4}, {1, 3}, {2, 3}, {3, 3}}, {{1, 4}, {2, 4}, {2, 3}, {2, 2}}, {{1, 4}, {2, 4}, {2, 3}, {3, 3}},
      {{1, 4}, {2, 4}, {3, 4}, {3, 3}}, {{1, 4}, {2, 4}, {3, 4}, {4, 4}},
  };
  REQUIRE(paths.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(cell_set(paths[k].cells()) == want[k]);
  std::vector<std::vector<std::string>> facets;
  for (const auto& p : paths) facets.push_back(cell_labels(p.cells(), true));
  SimplicialComplex C = SimplicialComplex::from_label_sets(facets);
  std::vector<Face> order;
  for (const auto& f : facets) order.push_back(C.face_of(f));
  CHECK(verify_shelling(C, order).ok);
}

TEST_CASE("point types of the displayed triangle path") {
  TrianglePath P({1, 2, 3, 4, 5, 6}, {D, L, L, D, D});
  using T = TriPoint;
  const std::vector<std::pair<Cell, T>> want = {
      {{1, 6}, T::Isolated}, {{2, 6}, T::RightTurn}, {{2, 5}, T::Isolated},
      {{2, 4}, T::LeftTurn}, {{3, 4}, T::Isolated},  {{4, 4}, T::RightTurn},
  };
  REQUIRE(P.cells().size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(P.cells()[k] == want[k].first);
    CHECK(P.type_at(k) == want[k].second);
  }
  CHECK(P.isolated_index(0) == 1);
  CHECK(P.isolated_index(2) == 5);
  CHECK(P.isolated_index(4) == 3);
  // a final horizontal step makes the last point a left turn
  CHECK(TrianglePath({1, 2, 3}, {D, L}).type_at(2) == T::LeftTurn);
}

TEST_CASE("index families") {
  for (int n = 2; n <= 8; n += 2) {
    auto fam = veronese_families(n);
    CHECK(fam.size() == (std::size_t{1} << (n / 2)));
    for (const auto& A : fam) {
      CHECK(A.size() == static_cast<std::size_t>(n / 2));
      for (int a : A)
        for (int b : A) CHECK(a + b != n + 1);
    }
    CHECK(std::is_sorted(fam.begin(), fam.end()));
  }
  CHECK(veronese_cone_cells(6) == std::vector<Cell>{{1, 6}, {2, 5}, {3, 4}});
}

TEST_CASE("Veronese core: counts, adjacency and both shelling directions") {
  for (int n = 2; n <= 8; n += 2) {
    CAPTURE(n);
    const int m = n / 2;
    auto shelling = veronese_shelling(n);
    SimplicialComplex C = veronese_core_facets(n);
    CHECK(shelling.size() == (std::size_t{1} << (n - 1)));
    SimplicialComplex Dl = complex_of(veronese_initial_generators(n), veronese_table(n));
    CHECK(core(Dl).same_as(C));
    CHECK(h_vector(Dl).a_invariant() == -m);

    std::vector<Face> faces;
    for (const auto& f : shelling) faces.push_back(C.face_of(cell_labels(f.path.cells(), true)));
    CHECK(faces == veronese_shelling_faces(n, C));
    auto fwd = verify_shelling(C, faces);
    REQUIRE(fwd.ok);
    std::vector<Face> rev(faces.rbegin(), faces.rend());
    auto back = verify_shelling(C, rev);
    REQUIRE(back.ok);
    for (std::size_t k = 0; k < shelling.size(); ++k) {
      const auto& F = shelling[k];
      if (k > 0) CHECK(fwd.certificate.restrictions[k] == C.face_of(cell_labels(F.minus, true)));
      if (k + 1 < shelling.size())
        CHECK(back.certificate.restrictions[shelling.size() - 1 - k] == C.face_of(cell_labels(F.plus, true)));
      for (Cell x : F.path.cells()) {
        Face ridge = faces[k] & ~C.face_of({cell_label(x, true)});
        std::vector<std::size_t> over;
        for (std::size_t j = 0; j < faces.size(); ++j)
          if (is_subface(ridge, faces[j])) over.push_back(j);
        REQUIRE(over.size() == 2);
        std::size_t other = over[0] == k ? over[1] : over[0];
        CHECK(veronese_adjacent_facet(n, F.path, x) == shelling[other].path);
        bool plus = std::find(F.plus.begin(), F.plus.end(), x) != F.plus.end();
        CHECK((other > k) == plus);
      }
    }
  }
}

TEST_CASE("Veronese initial ideals for n = 2, 4, 6") {
  for (int n = 2; n <= 6; n += 2) {
    Ideal I = generic_minor_ideal(2, n, n, true);
    CHECK(initial_ideal(buchberger(I, veronese_term_order(n))) == veronese_initial_generators(n));
  }
}
