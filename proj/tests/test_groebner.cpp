#include <numeric>
#include <random>

#include "doctest.h"
#include "gorlab/catalog.hpp"
#include "gorlab/groebner.hpp"

using namespace gorlab;

namespace {

std::vector<Polynomial> monic(std::vector<Polynomial> F, const TermOrder& ord) {
  for (auto& f : F) f = f.scaled(Scalar(1) / f.leading_term(ord).coeff);
  return F;
}

std::size_t choose(std::size_t n, std::size_t k) { return static_cast<std::size_t>(binomial(n, k)); }

}  // namespace

TEST_CASE("Buchberger output is a reduced Groebner basis and is stable") {
  struct Case {
    Ideal I;
    TermOrder ord;
  };
  std::vector<Case> cases = {
      {generic_minor_ideal(2, 3, 3, false), catalog::segre_term_order(3)},
      {generic_minor_ideal(2, 3, 3, false), catalog::diagonal_term_order(3)},
      {generic_minor_ideal(2, 4, 4, true), catalog::veronese_term_order(4)},
      {pfaffian_ideal(4, 6), catalog::pfaff_term_order(6)},
      {generic_minor_ideal(2, 2, 4, false), TermOrder::grevlex_natural(8)},
  };
  for (const auto& c : cases) {
    GroebnerBasis G = buchberger(c.I, c.ord);
    CHECK(G.reduced);
    CHECK(is_groebner_basis(G.elements, c.ord));
    for (const auto& g : c.I.generators()) CHECK(normal_form(g, G.elements, c.ord).is_zero());
    Ideal again(c.I.table(), G.elements);
    GroebnerBasis H = buchberger(again, c.ord);
    CHECK(monic(H.elements, c.ord) == monic(G.elements, c.ord));
  }
}

TEST_CASE("a non-basis is detected") {
  // x^2 - y^2, xy: the S-polynomial y^3 does not reduce to zero under grevlex x > y
  Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  std::vector<Polynomial> F = {x * x - y * y, x * y};
  CHECK_FALSE(is_groebner_basis(F, TermOrder::grevlex_natural(2)));
  VariableTable t;
  t.add(var("x", {}));
  t.add(var("y", {}));
  GroebnerBasis G = buchberger(Ideal(t, F), TermOrder::grevlex_natural(2));
  CHECK(G.elements.size() == 3);
}

TEST_CASE("initial ideal has the Hilbert function of the ideal") {
  struct Case {
    Ideal I;
    TermOrder ord;
    std::uint32_t max_degree;
  };
  std::vector<Case> cases = {
      {generic_minor_ideal(2, 3, 3, false), catalog::segre_term_order(3), 5},
      {generic_minor_ideal(2, 3, 3, false), catalog::diagonal_term_order(3), 5},
      {generic_minor_ideal(2, 4, 4, true), catalog::veronese_term_order(4), 4},
      {generic_minor_ideal(3, 4, 4, false), catalog::minors_term_order(4), 4},
      {pfaffian_ideal(4, 6), catalog::pfaff_term_order(6), 3},
  };
  for (const auto& c : cases) {
    MonomialIdeal in = initial_ideal(buchberger(c.I, c.ord));
    for (std::uint32_t d = 0; d <= c.max_degree; ++d)
      CHECK(hilbert_function(c.I, d) == hilbert_function(in, c.I.table().size(), d));
  }
}

TEST_CASE("Hilbert functions of the Segre and Veronese rings") {
  Ideal segre = generic_minor_ideal(2, 3, 3, false);
  Ideal veronese = generic_minor_ideal(2, 4, 4, true);
  for (std::uint32_t d = 0; d <= 4; ++d) {
    CHECK(hilbert_function(segre, d) == choose(d + 2, 2) * choose(d + 2, 2));  // P2 x P2
    CHECK(hilbert_function(veronese, d) == choose(2 * d + 3, 3));              // degree-2d forms in 4 variables
  }
}

TEST_CASE("minimal generators") {
  CHECK(minimal_generator_degrees(generic_minor_ideal(2, 3, 3, false)) == std::map<std::uint32_t, std::size_t>{{2, 9}});
  CHECK(minimal_generator_degrees(generic_minor_ideal(2, 4, 4, true)) == std::map<std::uint32_t, std::size_t>{{2, 20}});
  CHECK(minimal_generator_degrees(pfaffian_ideal(4, 6)) == std::map<std::uint32_t, std::size_t>{{2, 15}});
  CHECK(monomials_of_degree(4, 3).size() == choose(6, 3));
}

TEST_CASE("random revlex orders give squarefree initial ideals of 2-minors") {
  std::mt19937 rng(7);
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      Ideal I = generic_minor_ideal(2, m, n, false);
      std::vector<VarId> prio(I.table().size());
      std::iota(prio.begin(), prio.end(), VarId{0});
      const int samples = m * n >= 16 ? 2 : 4;
      for (int k = 0; k < samples; ++k) {
        std::shuffle(prio.begin(), prio.end(), rng);
        MonomialIdeal in = initial_ideal(buchberger(I, TermOrder::grevlex(prio)));
        CAPTURE(m);
        CAPTURE(n);
        CHECK(in.is_squarefree());
      }
    }
}

TEST_CASE("pair budget") {
  GroebnerOptions opts;
  opts.pair_budget = 1;
  CHECK_THROWS_AS(buchberger(pfaffian_ideal(4, 7), catalog::pfaff_term_order(7), opts), BudgetExceeded);
}

TEST_CASE("Groebner bases over a prime field") {
  GroebnerOptions opts;
  opts.field = Field::prime(2);
  Ideal I = generic_minor_ideal(2, 3, 3, false);
  GroebnerBasis G = buchberger(I, catalog::segre_term_order(3), opts);
  CHECK(initial_ideal(G) == catalog::segre_initial_generators(3));
}

TEST_CASE("monomial ideals keep minimal generators") {
  VarId a[] = {0}, ab[] = {0, 1}, bc[] = {1, 2};
  MonomialIdeal M({Monomial::product_of(ab), Monomial::product_of(a), Monomial::product_of(bc)});
  CHECK(M.size() == 2);
  CHECK(M.contains(Monomial::product_of(ab)));
  CHECK(M.is_squarefree());
  CHECK(M.generator_degrees() == std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 1}});
}
