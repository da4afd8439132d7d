#include "gorlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "gorlab/catalog.hpp"
#include "gorlab/verify.hpp"

namespace gorlab {

namespace {

using namespace catalog;

class Checker {
 public:
  bool operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 12) failures.push_back(what);
    if (!ok) failed = true;
    return ok;
  }
  std::size_t count = 0;
  bool failed = false;
  std::vector<std::string> failures;
};

// Complexes built along the way, re-examined by the structural criterion.
struct Produced {
  std::string name;
  SimplicialComplex complex;
  std::optional<std::vector<Face>> core_shelling;
};

using Registry = std::vector<Produced>;

std::vector<std::size_t> row(std::initializer_list<std::size_t> v) { return v; }

std::string join_labels(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + v[k];
  return s;
}

// ---------------------------------------------------------------- 1

void betti_reproduction(Checker& check, Registry& reg) {
  Ideal I = generic_minor_ideal(2, 3, 3, false);
  const VariableTable& t = I.table();
  MonomialIdeal revlex = initial_ideal(buchberger(I, segre_term_order(3)));
  MonomialIdeal classical = initial_ideal(buchberger(I, diagonal_term_order(3)));
  check(classical == classical_initial_generators(3), "classical initial ideal is the diagonal-term ideal");
  check(revlex == segre_initial_generators(3), "revlex initial ideal is the predicted one");
  SimplicialComplex Dr = complex_of(revlex, t), Dc = complex_of(classical, t);
  reg.push_back({"I(2,3) revlex", Dr, std::nullopt});
  reg.push_back({"I(2,3) classical", Dc, std::nullopt});
  BettiDiagram br = hochster_betti(Dr), bc = hochster_betti(Dc);
  std::map<int, std::vector<std::size_t>> want_r{{2, row({9, 16, 9, 0})}, {3, row({0, 0, 0, 1})}};
  std::map<int, std::vector<std::size_t>> want_c{{2, row({9, 16, 10, 2})}, {3, row({0, 1, 2, 1})}};
  check(br.rows() == want_r, "revlex diagram is (9,16,9,0 / 0,0,0,1), got\n" + br.str());
  check(bc.rows() == want_c, "classical diagram is (9,16,10,2 / 0,1,2,1), got\n" + bc.str());
  auto cmp = betti_compare(bc, br);
  check(!cmp.equal && cmp.i == 1 && cmp.j == 4 && cmp.left == 1 && cmp.right == 0,
        "classical and revlex diagrams first differ at beta_{1,4} (1 vs 0)");
  check(betti_compare(br, br).equal, "a diagram equals itself");
  check(!is_gorenstein(Dc).gorenstein, "classical initial complex is not Gorenstein");
  check(is_gorenstein(Dr).gorenstein, "revlex initial complex is Gorenstein");
}

// ---------------------------------------------------------------- 2

void segre_pipeline(Checker& check, Registry& reg) {
  for (int n : {3, 4, 5}) {
    const std::string tag = "segre n=" + std::to_string(n) + ": ";
    FamilyParams p;
    p.family = Family::Segre;
    p.n = n;
    FamilyReport rep = family_report(p);
    check(rep.route == (n <= 4 ? "groebner" : "witness"), tag + "route is " + rep.route);
    check(rep.predicted_match, tag + "leading terms equal the prediction");
    check(rep.all_ok(), tag + "every pipeline stage passes");
    VariableTable t = segre_table(n);
    SimplicialComplex D = complex_of(segre_initial_generators(n), t);
    SimplicialComplex C = core(D);
    check(C.is_pure() && C.dimension() == n - 2, tag + "core is pure of dimension n-2");
    check(C.facets().size() == static_cast<std::size_t>(binomial(2 * n - 2, n - 1)), tag + "core facet count");
    check(C.same_as(segre_core_facets(n)), tag + "core equals the path facets");
    std::map<std::vector<int>, std::size_t> by_R;
    for (const auto& f : segre_shelling(n)) ++by_R[f.path.rows()];
    bool counts_ok = by_R.size() == static_cast<std::size_t>((1 << n) - 2);
    for (const auto& [R, c] : by_R) counts_ok = counts_ok && c == static_cast<std::size_t>(binomial(n - 2, R.size() - 1));
    check(counts_ok, tag + "each row set R carries C(n-2,|R|-1) facets");
    auto order = segre_shelling_faces(n, C);
    check(verify_two_way(C, order), tag + "the catalog order is a two-way shelling");
    check(is_gorenstein(D).gorenstein, tag + "Gorenstein");
    std::vector<long long> want;
    for (int i = 0; i < n; ++i) want.push_back(binomial(n - 1, i) * binomial(n - 1, i));
    check(h_vector(D).h == want, tag + "h-vector is (C(n-1,i)^2)");
    reg.push_back({tag + "initial complex", D, order});
  }
}

// ---------------------------------------------------------------- 3

void segre_adjacency(Checker& check, Registry&) {
  const int n = 4;
  auto shelling = segre_shelling(n);
  SimplicialComplex C = segre_core_facets(n);
  std::map<std::set<std::string>, std::size_t> position;
  std::vector<Face> faces;
  for (std::size_t k = 0; k < shelling.size(); ++k) {
    auto ls = cell_labels(shelling[k].path.cells());
    position[{ls.begin(), ls.end()}] = k;
    faces.push_back(C.face_of(ls));
  }
  for (std::size_t k = 0; k < shelling.size(); ++k) {
    const auto& F = shelling[k];
    for (Cell x : F.path.cells()) {
      const std::string tag = "facet " + std::to_string(k + 1) + ", point " + cell_label(x) + ": ";
      Face ridge = faces[k] & ~C.face_of({cell_label(x)});
      std::size_t containing = 0;
      for (Face g : C.facets()) containing += is_subface(ridge, g);
      check(containing == 2, tag + "ridge lies in exactly two facets");
      GridPath Q = segre_adjacent_facet(n, F.path, x);
      auto ql = cell_labels(Q.cells());
      std::set<std::string> qs(ql.begin(), ql.end());
      auto it = position.find(qs);
      if (!check(it != position.end(), tag + "adjacent facet is a facet")) continue;
      Face qf = C.face_of(ql);
      check(qf != faces[k] && is_subface(ridge, qf), tag + "adjacent facet contains the ridge");
      bool plus = std::find(F.plus.begin(), F.plus.end(), x) != F.plus.end();
      check((it->second > k) == plus, tag + "adjacent facet is later iff the point is in F+");
    }
  }
}

// ---------------------------------------------------------------- 4

void veronese_pipeline(Checker& check, Registry& reg) {
  for (int n : {4, 6}) {
    const int m = n / 2;
    const std::string tag = "veronese n=" + std::to_string(n) + ": ";
    FamilyParams p;
    p.family = Family::Veronese;
    p.n = n;
    FamilyReport rep = family_report(p);
    check(rep.route == "groebner" && rep.predicted_match, tag + "Groebner leading terms equal the prediction");
    check(rep.all_ok(), tag + "every pipeline stage passes");
    VariableTable t = veronese_table(n);
    SimplicialComplex D = complex_of(veronese_initial_generators(n), t);
    SimplicialComplex C = core(D);
    bool sizes = C.facets().size() == (std::size_t{1} << (n - 1));
    for (Face f : C.facets()) sizes = sizes && face_size(f) == m;
    check(sizes, tag + "2^(n-1) core facets with m vertices");
    std::vector<std::string> want_cp;
    for (int i = 1; i <= m; ++i) want_cp.push_back(cell_label({i, n + 1 - i}, true));
    auto cp = D.labels_of(cone_points(D));
    std::sort(cp.begin(), cp.end());
    std::sort(want_cp.begin(), want_cp.end());
    check(cp == want_cp, tag + "cone points are the anti-diagonal, got " + join_labels(cp));
    auto order = veronese_shelling_faces(n, C);
    check(verify_two_way(C, order), tag + "the catalog order is a two-way shelling");
    check(is_gorenstein(D).gorenstein, tag + "Gorenstein by link homology");
    auto hom = reduced_homology(C);
    std::vector<std::size_t> sphere(m + 1, 0);
    sphere[m] = 1;  // H~_{m-1}
    check(hom == sphere, tag + "core has the homology of an (m-1)-sphere");
    check(sphere_certificate(C, order).sphere, tag + "sphere certificate");
    std::vector<long long> want;
    for (int i = 0; 2 * i <= n; ++i) want.push_back(binomial(n, 2 * i));
    check(h_vector(D).h == want, tag + "h-vector is (C(n,2i))");
    reg.push_back({tag + "initial complex", D, order});
  }
}

// ---------------------------------------------------------------- 5

Polynomial monic(const Polynomial& f, const TermOrder& ord) {
  return f.scaled(Scalar(1) / f.leading_term(ord).coeff);
}

void pfaffian_example(Checker& check, Registry& reg) {
  const int n = 6;
  Ideal I = pfaffian_ideal(4, n);
  const VariableTable& t = I.table();
  TermOrder ord = pfaff_term_order(n);
  check(I.generators().size() == 15, "Pfaff(4,6) has 15 generators");
  GroebnerBasis gb = buchberger(I, ord);
  std::set<std::string> basis, gens;
  for (const auto& g : gb.elements) basis.insert(monic(g, ord).str(t));
  for (const auto& g : I.generators()) gens.insert(monic(g, ord).str(t));
  check(basis == gens, "the reduced Groebner basis is the 15 Pfaffians themselves");
  // leading terms of the worked example, as (a,b)(c,d) pairs
  const int lt[15][4] = {{3, 6, 2, 5}, {3, 6, 1, 4}, {2, 5, 1, 4}, {1, 4, 2, 6}, {3, 6, 1, 5},
                         {2, 6, 1, 5}, {2, 5, 4, 6}, {1, 5, 4, 6}, {1, 4, 3, 5}, {4, 6, 3, 5},
                         {3, 6, 2, 4}, {3, 5, 2, 4}, {2, 5, 1, 3}, {2, 6, 1, 3}, {2, 4, 1, 3}};
  std::set<Monomial> want, got;
  for (const auto& q : lt) {
    VarId vs[2] = {t.id(var("x", {q[0], q[1]})), t.id(var("x", {q[2], q[3]}))};
    want.insert(Monomial::product_of(vs));
  }
  for (const auto& g : gb.elements) got.insert(g.leading_monomial(ord));
  check(got == want, "leading terms are the 15 listed monomials");
  MonomialIdeal in = initial_ideal(gb);
  check(in == pfaff_initial_generators(2, n), "initial ideal equals the predicted crossing monomials");
  SimplicialComplex D = complex_of(in, t);
  auto cp = D.labels_of(cone_points(D));
  std::set<std::string> cps(cp.begin(), cp.end());
  std::set<std::string> edges;
  for (int i = 1; i < n; ++i) edges.insert(cell_label({i, i + 1}));
  edges.insert(cell_label({1, n}));
  check(cps == edges, "cone points are the 6 polygon edges, got " + join_labels(cp));
  SimplicialComplex C = core(D);
  auto inv = pfaff_invariants(1, n);
  check(inv.degree == 14 && C.facets().size() == 14, "14 core facets = degree product formula");
  check(is_gorenstein(D).gorenstein, "Gorenstein");
  reg.push_back({"Pfaff(4,6) initial complex", D, std::nullopt});
  for (auto [nn, k] : std::vector<std::pair<int, int>>{{5, 1}, {6, 1}, {7, 1}, {6, 2}}) {
    SimplicialComplex X = crossing_complex(nn, k);
    auto want_deg = pfaff_invariants(k, nn).degree;
    check(mpz_class(static_cast<unsigned long>(X.facets().size())) == want_deg,
          "crossing complex (" + std::to_string(nn) + "," + std::to_string(k) + ") facet count " +
              std::to_string(X.facets().size()) + " vs product formula " + want_deg.get_str());
    check(X.is_pure() && X.dimension() + 1 == pfaff_invariants(k, nn).dim,
          "crossing complex (" + std::to_string(nn) + "," + std::to_string(k) + ") is pure of the expected dimension");
    reg.push_back({"crossing complex (" + std::to_string(nn) + "," + std::to_string(k) + ")", X, std::nullopt});
  }
}

// ---------------------------------------------------------------- 6

void pfaffian_leading_terms(Checker& check, Registry&) {
  for (int n = 2; n <= 8; ++n) {
    VariableTable t = skew_matrix_table(n);
    TermOrder ord = pfaff_term_order(n);
    for (int r = 1; 2 * r <= n; ++r)
      for (const auto& J : subsets_of_size(n, 2 * r)) {
        Polynomial p = pfaffian(J, t);
        Monomial want = predicted_pfaffian_leading_term(J, t);
        if (!check(p.leading_monomial(ord) == want, "n=" + std::to_string(n) + " J=" + std::to_string(J.size()) +
                                                         "-set: leading term " + p.leading_monomial(ord).str(t) +
                                                         " vs " + want.str(t)))
          return;
      }
  }
}

// ---------------------------------------------------------------- 7

void minors_cycle(Checker& check, Registry& reg) {
  for (int n : {3, 4}) {
    const std::string tag = "minors n=" + std::to_string(n) + ": ";
    for (int k = 2; k < n; ++k) {
      auto L = minors_verify_lemma(n, k);
      check(L.ok, tag + "k=" + std::to_string(k) + " minors of Y are 0 or signed independent-set monomials" +
                      (L.failure.empty() ? "" : " (" + L.failure + ")"));
    }
    Ideal I = generic_minor_ideal(n - 1, n, n, false);
    GroebnerBasis gb = buchberger(I, minors_term_order(n));
    MonomialIdeal in = initial_ideal(gb);
    check(in == minors_cycle_ideal(n, n - 1), tag + "initial ideal equals the independent-set ideal");
    auto cyc = minors_core_is_cyclic(n);
    check(cyc.matches, tag + "core is the boundary of the cyclic polytope C(2n, 2n-4)");
    check(cyc.facets == static_cast<std::size_t>(cyclic_polytope_facets(2 * n, 2 * n - 4).facets().size()),
          tag + "facet counts agree");
    SimplicialComplex D = complex_of(in, I.table());
    check(static_cast<int>(I.table().size()) - (D.dimension() + 1) == 4, tag + "codimension 4");
    reg.push_back({tag + "initial complex", D, std::nullopt});
    reg.push_back({tag + "cyclic polytope", cyclic_polytope_facets(2 * n, 2 * n - 4), std::nullopt});
  }
  check(cyclic_polytope_facets(8, 4).facets().size() == 20, "cyclic polytope C(8,4) has 20 facets");
}

// ---------------------------------------------------------------- 8

VarLabel plv(const char* ab) { return var("t", {ab[0] - '0', ab[1] - '0'}); }
std::string plu(const char* ab) { return plv(ab).str(); }
std::string bracket(const char* ab) { return "[" + std::string(1, ab[0]) + "," + std::string(1, ab[1]) + "]"; }

void hibi_grassmannian(Checker& check, Registry& reg) {
  DistributiveLattice L = flag_minor_lattice({2}, 5);
  const VariableTable& t = L.variables();
  const std::vector<std::vector<int>> matrix = {
      {0, 1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
      {0, 0, 0, 0, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}};
  check(order_polytope_vertices(L) == matrix, "order polytope vertex matrix");
  Poset grid = Poset::product(Poset::chain(2, "p"), Poset::chain(3, ""));
  check(isomorphic(join_irreducibles(L), grid), "join-irreducibles form a 2x3 grid");
  check(order_polytope_vertices(grid).size() == 6 && order_ideal_lattice(grid).size() == 10, "J(2x3 grid) has 10 elements");

  Ideal I = hibi_ideal(L);
  auto poly = [&](const char* a, const char* b, const char* c, const char* d) {
    VarId x[2] = {t.id(plv(a)), t.id(plv(b))};
    VarId y[2] = {t.id(plv(c)), t.id(plv(d))};
    return Polynomial::from_terms({{Monomial::product_of(x), Scalar(1)}, {Monomial::product_of(y), Scalar(-1)}});
  };
  std::set<std::string> want_rel, got_rel;
  for (const auto& p : {poly("14", "23", "13", "24"), poly("15", "23", "13", "25"), poly("15", "24", "14", "25"),
                        poly("15", "34", "14", "35"), poly("25", "34", "24", "35")})
    want_rel.insert(p.str(t));
  for (const auto& g : I.generators()) got_rel.insert(g.str(t));
  check(want_rel == got_rel, "Hibi ideal is the 5 listed relations");

  TermOrder ord = rw_term_order(L);
  const char* low_to_high[] = {"12", "13", "24", "35", "45", "14", "23", "15", "25", "34"};
  std::vector<VarId> prio;
  for (int k = 9; k >= 0; --k) prio.push_back(t.id(plv(low_to_high[k])));
  check(ord.priority() == prio, "term order is " + ord.str(t));

  MonomialIdeal in = initial_ideal(buchberger(I, ord));
  std::vector<Monomial> want_in;
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"14", "23"}, {"14", "25"}, {"15", "23"}, {"15", "34"}, {"25", "34"}}) {
    VarId x[2] = {t.id(plv(a)), t.id(plv(b))};
    want_in.push_back(Monomial::product_of(x));
  }
  check(in == MonomialIdeal(want_in), "initial ideal is the 5 listed monomials, got " + in.str(t));
  SimplicialComplex D = complex_of(in, t);
  auto cp = D.labels_of(cone_points(D));
  std::set<std::string> cps(cp.begin(), cp.end());
  std::set<std::string> want_cp;
  for (const char* a : {"12", "13", "24", "35", "45"}) want_cp.insert(plu(a));
  check(cps == want_cp, "cone points are the rank-constant chain, got " + join_labels(cp));
  std::vector<std::size_t> rc = rank_constant_elements(L);
  std::set<std::string> rcs;
  for (std::size_t a : rc) rcs.insert(t.name(L.var_of(a)));
  check(rcs == want_cp, "rank-constant elements are the listed chain");
  std::vector<std::size_t> chain;
  for (const char* a : {"12", "13", "24", "35", "45"}) chain.push_back(L.index_of(bracket(a)));
  check(equatorial_classify(L, chain).kind == ChainKind::RankConstant, "the chain [12]<[13]<[24]<[35]<[45] is rank-constant");
  check(equatorial_classify(L, {L.index_of("[2,3]")}).kind == ChainKind::Equatorial, "{[23]} is equatorial");

  SimplicialComplex C = core(D);
  const char* cyc[] = {"14", "34", "23", "25", "15"};
  std::set<std::set<std::string>> pentagon;
  for (int k = 0; k < 5; ++k) pentagon.insert({plu(cyc[k]), plu(cyc[(k + 1) % 5])});
  check(C.facet_label_sets() == pentagon, "core is the pentagon [14],[34],[23],[25],[15]");
  check(equatorial_complex(L).same_as(C), "equatorial complex equals the core");
  reg.push_back({"Grass(2,5) Hibi initial complex", D, std::nullopt});
}

// ---------------------------------------------------------------- 9

bool is_chain(const DistributiveLattice& L) {
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = a + 1; b < L.size(); ++b)
      if (!L.comparable(a, b)) return false;
  return true;
}

void hibi_posets(Checker& check, Registry& reg) {
  std::size_t graded = 0, total = 0;
  for (int n = 1; n <= 5; ++n)
    for (const Poset& P : posets_up_to_isomorphism(n)) {
      ++total;
      const std::string tag = "poset #" + std::to_string(total) + " (" + std::to_string(n) + " elements): ";
      DistributiveLattice L = order_ideal_lattice(P);
      check(isomorphic(join_irreducibles(L), P), tag + "Birkhoff round trip");
      bool g = P.is_graded();
      graded += g;
      if (is_chain(L)) {
        check(g, tag + "a chain is graded");
        continue;
      }
      Ideal I = hibi_ideal(L);
      MonomialIdeal in_le = initial_ideal(buchberger(I, linear_extension_order(L)));
      check(in_le == incomparable_products(L), tag + "linear-extension revlex initial ideal is the incomparable products");
      MonomialIdeal in_rw = initial_ideal(buchberger(I, rank_height_order(L)));
      SimplicialComplex D = complex_of(in_rw, L.variables());
      bool gor = is_gorenstein(D).gorenstein;
      check(gor == g, tag + "Gorenstein (" + std::to_string(gor) + ") iff graded (" + std::to_string(g) + ")");
      if (g) check(equatorial_complex(L).same_as(core(D)), tag + "core equals the equatorial complex");
      reg.push_back({tag + "rank-height initial complex", D, std::nullopt});
      reg.push_back({tag + "chain complex", complex_of(in_le, L.variables()), std::nullopt});
    }
  check(total == 87, "87 posets with 1..5 elements up to isomorphism, got " + std::to_string(total));
  (void)graded;
}

// ---------------------------------------------------------------- 10

void structural(Checker& check, const Registry& reg) {
  const Field gf2 = Field::prime(2), gfp = Field::prime(32003);
  for (const auto& item : reg) {
    const std::string tag = item.name + ": ";
    const SimplicialComplex& D = item.complex;
    Face cpf = cone_points(D);
    SimplicialComplex C = core(D);
    auto cp = D.labels_of(cpf);
    check(join_with_simplex(C, cp).same_as(D), tag + "complex = core * simplex(cone points)");
    HVector h = h_vector(D);
    check(h.h == h_vector(C).h, tag + "cone points do not change h");
    std::optional<std::vector<Face>> order = item.core_shelling;
    if (!order && C.is_pure()) order = find_shelling(C);
    if (order) {
      auto sc = verify_shelling(C, *order);
      check(sc.ok && sc.certificate.h_vector() == h.h, tag + "shelling h-vector equals the combinatorial h-vector");
    }
    auto g2 = is_gorenstein(D, gf2), gp = is_gorenstein(D, gfp);
    check(g2.gorenstein == gp.gorenstein, tag + "Gorenstein answer agrees over GF(2) and GF(32003)");
    check(reduced_homology(C, gf2) == reduced_homology(C, gfp), tag + "core homology agrees over GF(2) and GF(32003)");
    if (gp.gorenstein) {
      check(-h.a_invariant() == static_cast<int>(cp.size()), tag + "Gorenstein implies -a = |CP|");
      check(h.symmetric() && h.h.back() == 1, tag + "Gorenstein implies symmetric h with last entry 1");
    }
    if (C.is_pure()) {
      auto sphere = sphere_certificate(C, order);
      if (sphere.sphere) check(gp.gorenstein, tag + "sphere certificate implies Gorenstein");
    }
  }
  check(reg.size() > 100, "structural checks ran on " + std::to_string(reg.size()) + " complexes");
}

// ---------------------------------------------------------------- 11

void special_simplex(Checker& check, Registry&) {
  for (int n = 2; n <= 5; ++n) {
    auto P = segre_polytope(n);
    auto S = segre_diagonal(n);
    check(special_simplex_check(P, S).ok, "Segre n=" + std::to_string(n) + ": the diagonal is a special simplex");
    auto bad = S;
    bad.erase(cell_label({1, 1}));
    bad.insert(cell_label({1, 2}));
    check(!special_simplex_check(P, bad).ok, "Segre n=" + std::to_string(n) + ": a perturbed diagonal fails");
    bad = S;
    bad.erase(cell_label({n, n}));
    check(!special_simplex_check(P, bad).ok, "Segre n=" + std::to_string(n) + ": a truncated diagonal fails");
  }
  for (int n = 2; n <= 8; n += 2) {
    auto P = veronese_polytope(n);
    auto S = veronese_antidiagonal(n);
    check(special_simplex_check(P, S).ok, "Veronese n=" + std::to_string(n) + ": the anti-diagonal is a special simplex");
    auto bad = S;
    bad.erase(cell_label({1, n}, true));
    bad.insert(cell_label({1, 1}, true));
    check(!special_simplex_check(P, bad).ok, "Veronese n=" + std::to_string(n) + ": a perturbed anti-diagonal fails");
    if (n >= 4) {
      bad = S;
      bad.insert(cell_label({1, 2}, true));
      check(!special_simplex_check(P, bad).ok, "Veronese n=" + std::to_string(n) + ": an enlarged set fails");
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  void (*run)(Checker&, Registry&);
};

void structural_entry(Checker& c, Registry& r) { structural(c, r); }

const Criterion kCriteria[] = {
    {1, "Betti diagrams of the two initial ideals of I(2,3)", 5, betti_reproduction},
    {2, "Segre pipeline n=3,4 (Groebner) and n=5 (dimension/degree route)", 60, segre_pipeline},
    {3, "Segre ridge adjacency, exhaustive for n=4", 10, segre_adjacency},
    {4, "Veronese pipeline n=4,6", 60, veronese_pipeline},
    {5, "Pfaffian Pfaff(4,6) basis, cone points, core and crossing counts", 30, pfaffian_example},
    {6, "Pfaffian leading terms for n<=8", 30, pfaffian_leading_terms},
    {7, "Maximal-minus-one minors and the cyclic polytope core, n=3,4", 60, minors_cycle},
    {8, "Hibi ring of Grass(2,5)", 10, hibi_grassmannian},
    {9, "Hibi rings of all posets with at most 5 elements", 120, hibi_posets},
    {10, "Structural invariants on every complex built above", 120, structural_entry},
    {11, "Special simplices of the Segre and Veronese polytopes", 5, special_simplex},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  Registry reg;
  for (const auto& c : kCriteria) {
    Checker check;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(check, reg);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.budget_seconds = c.budget;
    r.checks = check.count;
    r.failures = check.failures;
    if (r.seconds > c.budget) r.failures.push_back("runtime exceeded the budget");
    r.pass = !check.failed && r.seconds <= c.budget;
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.name << " (" << r.checks
     << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s of " << std::setprecision(0)
     << r.budget_seconds << " s)";
  for (const auto& f : r.failures) os << "\n        " << f;
  return os.str();
}

}  // namespace gorlab
