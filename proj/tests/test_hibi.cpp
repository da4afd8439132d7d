#include <set>

#include "doctest.h"
#include "gorlab/catalog.hpp"
#include "gorlab/io.hpp"

using namespace gorlab;
using namespace gorlab::catalog;

namespace {

bool is_chain(const DistributiveLattice& L) {
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = a + 1; b < L.size(); ++b)
      if (!L.comparable(a, b)) return false;
  return true;
}

Poset grid(int a, int b) { return Poset::product(Poset::chain(a, "p"), Poset::chain(b, "")); }

}  // namespace

TEST_CASE("posets up to isomorphism") {
  const std::size_t counts[] = {1, 1, 2, 5, 16, 63, 318};
  for (int n = 1; n <= 6; ++n) CHECK(posets_up_to_isomorphism(n).size() == counts[n]);
  auto four = posets_up_to_isomorphism(4);
  for (std::size_t a = 0; a < four.size(); ++a)
    for (std::size_t b = a + 1; b < four.size(); ++b) CHECK_FALSE(isomorphic(four[a], four[b]));
}

TEST_CASE("poset basics") {
  Poset P = Poset::from_covers({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"d", "c"}});
  CHECK(P.less(P.index_of("a"), P.index_of("c")));
  CHECK_FALSE(P.covers(P.index_of("a"), P.index_of("c")));
  CHECK(P.ranks() == std::vector<int>{1, 2, 3, 1});
  CHECK_FALSE(P.is_graded());
  CHECK(P.width() == 2);
  // {}, a, d, ab, ad, abd, abcd
  CHECK(P.order_ideals().size() == 7);
  CHECK(grid(2, 3).is_graded());
  CHECK(grid(2, 3).width() == 2);
  CHECK(Poset::antichain(3).order_ideals().size() == 8);
  CHECK_THROWS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
}

TEST_CASE("order polytope vertices are indicator vectors of order ideals") {
  for (const Poset& P : posets_up_to_isomorphism(4)) {
    auto M = order_polytope_vertices(P);
    auto ideals = P.order_ideals();
    REQUIRE(M.size() == P.size());
    for (std::size_t p = 0; p < P.size(); ++p)
      for (std::size_t k = 0; k < ideals.size(); ++k) CHECK(M[p][k] == static_cast<int>(ideals[k] >> p & 1));
  }
}

TEST_CASE("Birkhoff round trip and the quadratic initial ideal, all posets up to 6 elements") {
  for (int n = 1; n <= 6; ++n)
    for (const Poset& P : posets_up_to_isomorphism(n)) {
      DistributiveLattice L = order_ideal_lattice(P);
      CHECK(isomorphic(join_irreducibles(L), P));
      CHECK(L.size() == P.order_ideals().size());
      if (is_chain(L)) {
        CHECK_THROWS(hibi_ideal(L));
        continue;
      }
      Ideal I = hibi_ideal(L);
      CHECK(initial_ideal(buchberger(I, linear_extension_order(L))) == incomparable_products(L));
    }
}

TEST_CASE("Gorenstein exactly for graded posets, up to 5 elements") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& P : posets_up_to_isomorphism(n)) {
      DistributiveLattice L = order_ideal_lattice(P);
      if (is_chain(L)) continue;
      MonomialIdeal in = initial_ideal(buchberger(hibi_ideal(L), rank_height_order(L)));
      CHECK(in.is_squarefree());
      SimplicialComplex D = complex_of(in, L.variables());
      CHECK(is_gorenstein(D).gorenstein == P.is_graded());
      if (P.is_graded()) {
        CHECK(equatorial_complex(L).same_as(core(D)));
        CHECK(initial_ideal(buchberger(hibi_ideal(L), rw_term_order(L))) == in);
      } else {
        CHECK_THROWS(rw_term_order(L));
      }
    }
}

TEST_CASE("Grassmannian lattices have grid posets of join-irreducibles") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {2, 6}, {3, 6}, {2, 7}}) {
    DistributiveLattice L = flag_minor_lattice({m}, n);
    CHECK(L.size() == static_cast<std::size_t>(binomial(n, m)));
    CHECK(isomorphic(join_irreducibles(L), grid(m, n - m)));
    CHECK(join_irreducibles(L).width() == static_cast<std::size_t>(std::min(m, n - m)));
  }
  DistributiveLattice L = flag_minor_lattice({2}, 5);
  std::vector<std::string> ji;
  for (std::size_t a : L.join_irreducible_elements()) ji.push_back(L.label(a));
  CHECK(ji == std::vector<std::string>{"[1,3]", "[1,4]", "[1,5]", "[2,3]", "[3,4]", "[4,5]"});
}

TEST_CASE("flag lattice {1,3,4,6}") {
  // The displayed array of join-irreducibles uses indices up to 8.
  const std::set<std::string> want = {
      "[8]",           "[2,3,4,5,6,7]", "[3,4,5,6,7,8]", "[4,5,6,7]",     "[5,6,7,8]",     "[6,7,8]",
      "[7]",           "[1,3,4,5,6,7]", "[1,4,5,6,7,8]", "[1,5,6,7]",     "[1,6,7,8]",     "[1,7,8]",
      "[1]",           "[1,2,4,5,6,7]", "[1,2,5,6,7,8]", "[1,2,6,7]",     "[1,2,7,8]",     "[1,2,8]",
      "[1,2,3,5,6,7]", "[1,2,3,6,7,8]", "[1,2,3,7]",     "[1,2,3,8]",     "[1,2,3]",       "[1,2,3,4,6,7]",
      "[1,2,3,4,7,8]", "[1,2,3,4]",     "[1,2,3,4,5,7]", "[1,2,3,4,5,8]",
  };
  REQUIRE(want.size() == 28);
  DistributiveLattice L = flag_minor_lattice({1, 3, 4, 6}, 8);
  std::set<std::string> ji;
  for (std::size_t a : L.join_irreducible_elements()) ji.insert(L.label(a));
  CHECK(ji == want);
  Poset P = join_irreducibles(L);
  CHECK(P.is_graded());
  CHECK(L.size() == 8 + 56 + 70 + 28);
}

TEST_CASE("Grass(2,5) chains") {
  DistributiveLattice L = flag_minor_lattice({2}, 5);
  std::vector<std::string> rc;
  for (std::size_t a : rank_constant_elements(L)) rc.push_back(L.label(a));
  CHECK(rc == std::vector<std::string>{"[1,2]", "[1,3]", "[2,4]", "[3,5]", "[4,5]"});
  auto c = equatorial_classify(L, {L.index_of("[1,4]"), L.index_of("[3,4]")});
  CHECK(c.equatorial);
  CHECK(c.kind == ChainKind::Equatorial);
  CHECK(to_string(ChainKind::RankConstant) == "rank-constant");
  CHECK_THROWS(equatorial_classify(L, {L.index_of("[1,4]"), L.index_of("[2,3]")}));
  SimplicialComplex E = equatorial_complex(L);
  CHECK(E.facets().size() == 5);
  CHECK(reduced_homology(E) == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("the grid poset file gives the Grass(2,5) Hibi ring") {
  Poset P = io::parse_poset(io::read_file("data/grid23.poset"));
  CHECK(isomorphic(P, grid(2, 3)));
  DistributiveLattice A = order_ideal_lattice(P), B = flag_minor_lattice({2}, 5);
  CHECK(A.size() == B.size());
  CHECK(incomparable_products(A).size() == incomparable_products(B).size());
  CHECK(hibi_ideal(A).generators().size() == 5);
}
