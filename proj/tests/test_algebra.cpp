#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gorlab/algebra.hpp"

using namespace gorlab;

namespace {

// Leibniz expansion, independent of the library's determinant.
Polynomial leibniz(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    Polynomial term = Polynomial::constant(inversions % 2 ? -1 : 1);
    for (std::size_t r = 0; r < n; ++r) term = term * m[r][perm[r]];
    sum = sum + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

PolyMatrix skew_matrix(const VariableTable& t, int n) {
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      m[i - 1][j - 1] = Polynomial::variable(t.id(var("x", {i, j})));
      m[j - 1][i - 1] = -m[i - 1][j - 1];
    }
  return m;
}

// Exponent vector listed in priority order, highest first.
std::vector<std::uint32_t> exponents(const Monomial& m, const TermOrder& ord) {
  std::vector<std::uint32_t> e;
  for (VarId v : ord.priority()) e.push_back(m.exponent(v));
  return e;
}

int grevlex_oracle(const Monomial& a, const Monomial& b, const TermOrder& ord) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  auto ea = exponents(a, ord), eb = exponents(b, ord);
  for (std::size_t k = ea.size(); k-- > 0;)
    if (ea[k] != eb[k]) return ea[k] < eb[k] ? 1 : -1;
  return 0;
}

int glex_oracle(const Monomial& a, const Monomial& b, const TermOrder& ord) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  auto ea = exponents(a, ord), eb = exponents(b, ord);
  for (std::size_t k = 0; k < ea.size(); ++k)
    if (ea[k] != eb[k]) return ea[k] > eb[k] ? 1 : -1;
  return 0;
}

Monomial random_monomial(std::mt19937& rng, std::size_t nvars, int max_degree) {
  std::vector<Monomial::Factor> f;
  std::uniform_int_distribution<int> exp(0, max_degree);
  for (VarId v = 0; v < nvars; ++v)
    if (int e = exp(rng) - max_degree / 2; e > 0) f.push_back({v, static_cast<std::uint32_t>(e)});
  return Monomial::from_factors(f);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  CHECK(f.reduce(Scalar(-1, 3)) == 2);
  CHECK(f.reduce(Scalar(15)) == 1);
  CHECK(f.is_zero(Scalar(14, 5)));
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(inverse_mod(2, 32003) * 2 % 32003 == 1);
  CHECK(Field::parse("gf2") == Field::prime(2));
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::prime(32003).name() == "gf32003");
  CHECK_THROWS(Field::prime(32004));
  CHECK_THROWS(Field::parse("r"));
  CHECK_THROWS(inverse_mod(7, 7));
}

TEST_CASE("monomial operations") {
  VarId ab[] = {0, 1}, bc[] = {1, 2};
  Monomial x = Monomial::product_of(ab), y = Monomial::product_of(bc);
  CHECK(x.degree() == 2);
  CHECK(x.is_squarefree());
  CHECK(x.lcm(y) == Monomial::from_factors({{0, 1}, {1, 1}, {2, 1}}));
  CHECK(x.divides(x * y));
  CHECK_FALSE(x.divides(y));
  CHECK((x * y).quotient(x) == y);
  CHECK_FALSE(x.coprime(y));
  CHECK((x * x).exponent(1) == 2);
  CHECK_FALSE((x * x).is_squarefree());
  CHECK(Monomial().is_one());
}

TEST_CASE("term orders agree with the textbook definitions") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VarId> prio(6);
    std::iota(prio.begin(), prio.end(), VarId{0});
    std::shuffle(prio.begin(), prio.end(), rng);
    TermOrder rev = TermOrder::grevlex(prio), lex = TermOrder::glex(prio);
    for (int k = 0; k < 50; ++k) {
      Monomial a = random_monomial(rng, 6, 4), b = random_monomial(rng, 6, 4);
      auto sign = [](std::strong_ordering o) { return o > 0 ? 1 : o < 0 ? -1 : 0; };
      CHECK(sign(rev.compare(a, b)) == grevlex_oracle(a, b, rev));
      CHECK(sign(lex.compare(a, b)) == glex_oracle(a, b, lex));
    }
  }
}

TEST_CASE("revlex and lex differ on x1*x4 versus x2*x2") {
  // priority x1 > x2 > x3 > x4
  TermOrder rev = TermOrder::grevlex_natural(4), lex = TermOrder::glex({0, 1, 2, 3});
  Monomial a = Monomial::from_factors({{0, 1}, {3, 1}}), b = Monomial::variable(1, 2);
  CHECK(rev.greater(b, a));
  CHECK(lex.greater(a, b));
}

TEST_CASE("polynomial arithmetic combines like terms") {
  Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  Polynomial p = (x + y) * (x - y);
  CHECK(p.size() == 2);
  CHECK(p == x * x - y * y);
  CHECK((p - p).is_zero());
  CHECK(p.is_homogeneous());
  CHECK((p + Polynomial::constant(1)).degree() == 2);
  CHECK_FALSE((p + Polynomial::constant(1)).is_homogeneous());
  Polynomial q = Polynomial::from_terms({{Monomial::variable(0), Scalar(9)}}, Field::prime(7));
  CHECK(q.terms().front().coeff == 2);
}

TEST_CASE("determinant matches the Leibniz expansion") {
  for (int n = 2; n <= 4; ++n) {
    VariableTable t = generic_matrix_table(n, n);
    PolyMatrix m = variable_matrix(t, n, n, false);
    Polynomial d = determinant(m);
    CHECK(d == leibniz(m));
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(d.size() == static_cast<std::size_t>(fact));
  }
  VariableTable s = symmetric_matrix_table(3);
  PolyMatrix sm = variable_matrix(s, 3, 3, true);
  CHECK(determinant(sm) == leibniz(sm));
}

TEST_CASE("Pfaffian squared is the determinant of the skew-symmetric matrix") {
  for (int n : {2, 4, 6}) {
    VariableTable t = skew_matrix_table(n);
    std::vector<int> J(n);
    std::iota(J.begin(), J.end(), 1);
    Polynomial pf = pfaffian(J, t);
    CHECK(pf * pf == leibniz(skew_matrix(t, n)));
    long long dfact = 1;
    for (int k = n - 1; k > 1; k -= 2) dfact *= k;
    CHECK(pf.size() == static_cast<std::size_t>(dfact));
  }
  CHECK(pfaffian(std::vector<int>{1, 2, 3, 4}, 4) == pfaffian(std::vector<int>{1, 2, 3, 4}, skew_matrix_table(4)));
}

TEST_CASE("minors and generator counts") {
  VariableTable t = generic_matrix_table(3, 4);
  auto ms = minors(variable_matrix(t, 3, 4, false), 2);
  CHECK(ms.size() == 18);
  CHECK(ms.front().rows == std::vector<int>{1, 2});
  CHECK(ms.front().cols == std::vector<int>{1, 2});
  CHECK(generic_minor_ideal(2, 3, 3, false).generators().size() == 9);
  CHECK(pfaffian_ideal(4, 6).generators().size() == 15);
  CHECK(subsets_of_size(6, 3).size() == 20);
  CHECK(subsets_of_size(4, 2).front() == std::vector<int>{1, 2});
}

TEST_CASE("variable tables") {
  VariableTable t = skew_matrix_table(4);
  CHECK(t.size() == 6);
  CHECK(t.name(0) == "x[1,2]");
  CHECK(t.find(var("x", {2, 1})) == std::nullopt);
  CHECK(symmetric_matrix_table(4).size() == 10);
  VariableTable u;
  u.add(var("y", {}));
  CHECK(u.name(0) == "y");
  CHECK_THROWS(u.add(var("y", {})));
}
