#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gorlab/catalog.hpp"
#include "gorlab/simplicial.hpp"

using namespace gorlab;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> v;
  for (int k = 1; k <= n; ++k) v.push_back(std::to_string(k));
  return v;
}

SimplicialComplex complex(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Face> fs;
  for (const auto& f : facets) {
    Face m = 0;
    for (int v : f) m |= Face{1} << (v - 1);
    fs.push_back(m);
  }
  return SimplicialComplex::generated_by(names(n), fs);
}

// Six-vertex real projective plane.
SimplicialComplex rp2() {
  return complex(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6},
                     {3, 4, 6}, {3, 5, 6}});
}

// Seven-vertex torus.
SimplicialComplex torus() {
  std::vector<std::vector<int>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    f.push_back({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return complex(7, f);
}

SimplicialComplex simplex_boundary(int n) {
  std::vector<std::vector<int>> f;
  for (int skip = 1; skip <= n; ++skip) {
    std::vector<int> g;
    for (int v = 1; v <= n; ++v)
      if (v != skip) g.push_back(v);
    f.push_back(g);
  }
  return complex(n, f);
}

// Faces of the Stanley-Reisner complex by enumerating every vertex subset.
std::set<Face> brute_force_faces(const MonomialIdeal& M, std::size_t nvars) {
  std::set<Face> faces;
  for (Face W = 0; W < (Face{1} << nvars); ++W) {
    bool ok = true;
    for (const auto& g : M.generators()) ok = ok && (g.support_mask() & ~W) != 0;
    if (ok) faces.insert(W);
  }
  return faces;
}

std::set<Face> maximal(const std::set<Face>& faces) {
  std::set<Face> out;
  for (Face f : faces) {
    bool top = true;
    for (Face g : faces) top = top && !(g != f && is_subface(f, g));
    if (top) out.insert(f);
  }
  return out;
}

MonomialIdeal random_squarefree_ideal(std::mt19937& rng, std::size_t nvars, int gens, int max_degree) {
  std::vector<Monomial> g;
  std::uniform_int_distribution<int> deg(2, max_degree);
  for (int k = 0; k < gens; ++k) {
    std::vector<VarId> vs(nvars);
    for (VarId v = 0; v < nvars; ++v) vs[v] = v;
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(deg(rng));
    g.push_back(Monomial::product_of(vs));
  }
  return MonomialIdeal(g);
}

VariableTable plain_table(std::size_t n) {
  VariableTable t;
  for (std::size_t k = 1; k <= n; ++k) t.add(var(std::to_string(k), {}));
  return t;
}

long long rank_mod(std::vector<std::vector<long long>> a, long long p) {
  long long rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long long>(rows); ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    long long inv = 1, base = ((a[rank][c] % p) + p) % p;
    for (long long e = p - 2; e; e >>= 1, base = base * base % p)
      if (e & 1) inv = inv * base % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      long long f = ((a[r][c] % p) + p) % p * inv % p;
      if (!f) continue;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Betti numbers of the ideal from the Taylor complex tensored with the field:
// in each multidegree only the faces with exactly that lcm survive, and the
// differential keeps the terms whose lcm does not drop.
std::map<std::pair<int, int>, std::size_t> taylor_betti(const MonomialIdeal& M, long long p) {
  const auto& g = M.generators();
  const std::size_t s = g.size();
  std::map<std::uint64_t, std::vector<std::vector<std::uint32_t>>> by_lcm;  // lcm mask -> subsets by size
  for (std::uint32_t S = 1; S < (1u << s); ++S) {
    std::uint64_t l = 0;
    for (std::size_t k = 0; k < s; ++k)
      if (S >> k & 1) l |= g[k].support_mask();
    auto& v = by_lcm[l];
    std::size_t size = __builtin_popcount(S);
    if (v.size() <= size) v.resize(size + 1);
    v[size].push_back(S);
  }
  std::map<std::pair<int, int>, std::size_t> out;
  for (auto& [l, bysize] : by_lcm) {
    auto boundary_rank = [&](std::size_t k) -> long long {  // rank of C_k -> C_{k-1}
      if (k < 2 || k >= bysize.size() || bysize[k].empty() || bysize[k - 1].empty()) return 0;
      std::vector<std::vector<long long>> m(bysize[k].size(), std::vector<long long>(bysize[k - 1].size(), 0));
      for (std::size_t a = 0; a < bysize[k].size(); ++a) {
        std::uint32_t S = bysize[k][a];
        int sign = 1;
        for (std::size_t bit = 0; bit < s; ++bit) {
          if (!(S >> bit & 1)) continue;
          auto it = std::find(bysize[k - 1].begin(), bysize[k - 1].end(), S & ~(1u << bit));
          if (it != bysize[k - 1].end()) m[a][it - bysize[k - 1].begin()] = sign;
          sign = -sign;
        }
      }
      return rank_mod(m, p);
    };
    const int degree = __builtin_popcountll(l);
    for (std::size_t k = 1; k < bysize.size(); ++k) {
      long long dim = static_cast<long long>(bysize[k].size());
      long long h = dim - boundary_rank(k) - boundary_rank(k + 1);
      if (h > 0) out[{static_cast<int>(k) - 1, degree}] += static_cast<std::size_t>(h);
    }
  }
  return out;
}

// Facets of the cyclic d-polytope on the moment curve at t = 1..n, from hyperplane signs.
std::set<std::set<std::string>> moment_curve_facets(int n, int d) {
  auto point = [&](int t) {
    std::vector<mpq_class> row{1};
    mpq_class x = 1;
    for (int k = 1; k <= d; ++k) row.push_back(x *= t);
    return row;
  };
  auto det = [](std::vector<std::vector<mpq_class>> a) {
    mpq_class r = 1;
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a[p][c] == 0) ++p;
      if (p == n) return mpq_class(0);
      if (p != c) std::swap(a[p], a[c]), r = -r;
      r *= a[c][c];
      for (std::size_t i = c + 1; i < n; ++i) {
        mpq_class f = a[i][c] / a[c][c];
        for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      }
    }
    return r;
  };
  std::set<std::set<std::string>> out;
  for (const auto& S : subsets_of_size(n, d)) {
    int side = 0;
    bool facet = true;
    for (int q = 1; q <= n && facet; ++q) {
      if (std::find(S.begin(), S.end(), q) != S.end()) continue;
      std::vector<std::vector<mpq_class>> m;
      for (int v : S) m.push_back(point(v));
      m.push_back(point(q));
      int s = sgn(det(m));
      if (side == 0) side = s;
      facet = s == side;
    }
    if (facet) {
      std::set<std::string> f;
      for (int v : S) f.insert(std::to_string(v));
      out.insert(f);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("complex_of agrees with subset enumeration") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 5 + trial % 4;
    MonomialIdeal M = random_squarefree_ideal(rng, n, 2 + trial % 5, 3);
    VariableTable t = plain_table(n);
    SimplicialComplex D = complex_of(M, t);
    std::set<Face> faces = brute_force_faces(M, n);
    std::set<std::set<std::string>> want;
    for (Face f : maximal(faces)) {
      std::set<std::string> s;
      for (std::size_t v = 0; v < n; ++v)
        if (f >> v & 1) s.insert(t.name(static_cast<VarId>(v)));
      want.insert(s);
    }
    CHECK(D.facet_label_sets() == want);
    auto f = f_vector(D);
    std::vector<std::size_t> count(f.size(), 0);
    for (Face x : faces) ++count[face_size(x)];
    CHECK(f == count);
  }
}

TEST_CASE("h-vectors") {
  CHECK(h_vector(simplex_boundary(4)).h == std::vector<long long>{1, 1, 1, 1});
  CHECK(h_vector(simplex_boundary(4)).symmetric());
  HVector hex = h_vector(catalog::crossing_complex(6, 1));
  CHECK(h_from_f({1, 6, 6}).h == std::vector<long long>{1, 4, 1});
  CHECK(h_vector(rp2()).h == std::vector<long long>{1, 3, 6});
  CHECK(hex.d == 9);
  CHECK(hex.a_invariant() == -6);
}

TEST_CASE("reduced homology depends on the field for RP2") {
  CHECK(reduced_homology(rp2(), Field::prime(2)) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(reduced_homology(rp2(), Field::rationals()) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(reduced_homology(rp2(), Field::prime(32003)) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK_FALSE(is_gorenstein(rp2(), Field::prime(2)).gorenstein);  // H~_1 survives mod 2
  CHECK_FALSE(is_gorenstein(rp2(), Field::rationals()).gorenstein);
  CHECK_FALSE(is_gorenstein(rp2(), Field::prime(32003)).gorenstein);
}

TEST_CASE("homology of spheres, torus and the empty complex") {
  for (int n = 2; n <= 6; ++n) {
    auto h = reduced_homology(simplex_boundary(n));
    std::vector<std::size_t> want(n, 0);
    want[n - 1] = 1;  // H~_{n-2}
    CHECK(h == want);
  }
  CHECK(reduced_homology(torus()) == std::vector<std::size_t>{0, 0, 2, 1});
  CHECK(reduced_homology(SimplicialComplex()) == std::vector<std::size_t>{1});
  CHECK(reduced_homology(SimplicialComplex::simplex(names(4))) == std::vector<std::size_t>{0, 0, 0, 0, 0});
}

TEST_CASE("Gorenstein via links") {
  CHECK(is_gorenstein(simplex_boundary(5)).gorenstein);
  CHECK(is_gorenstein(torus()).gorenstein == false);  // h = (1,4,10,-1) is not symmetric
  CHECK(is_gorenstein(complex(4, {{1, 2}, {2, 3}, {3, 4}})).gorenstein == false);
  // a simplex is a cone over the empty complex, hence Gorenstein
  CHECK(is_gorenstein(SimplicialComplex::simplex(names(3))).gorenstein);
  // hexagon joined with a point
  SimplicialComplex hex = complex(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  CHECK(is_gorenstein(join_with_simplex(hex, {"c"})).gorenstein);
  CHECK(cone_points(join_with_simplex(hex, {"c"})) != 0);
  CHECK(core(join_with_simplex(hex, {"c"})).same_as(hex));
}

TEST_CASE("classical initial complex of I(2,3) is not Gorenstein") {
  Ideal I = generic_minor_ideal(2, 3, 3, false);
  SimplicialComplex D = complex_of(initial_ideal(buchberger(I, catalog::diagonal_term_order(3))), I.table());
  CHECK(D.is_pure());
  CHECK_FALSE(is_gorenstein(D).gorenstein);
  CHECK(h_vector(D).h == std::vector<long long>{1, 4, 1});
}

TEST_CASE("Hochster's formula agrees with the Taylor complex") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5 + trial % 3;
    MonomialIdeal M = random_squarefree_ideal(rng, n, 2 + trial % 6, 3);
    SimplicialComplex D = complex_of(M, plain_table(n));
    for (long long p : {2LL, 32003LL}) {
      BettiDiagram B = hochster_betti(D, Field::prime(static_cast<std::uint32_t>(p)));
      CHECK(B.values() == taylor_betti(M, p));
    }
  }
  // the two initial ideals of I(2,3)
  Ideal I = generic_minor_ideal(2, 3, 3, false);
  for (const auto& ord : {catalog::segre_term_order(3), catalog::diagonal_term_order(3)}) {
    MonomialIdeal in = initial_ideal(buchberger(I, ord));
    CHECK(hochster_betti(complex_of(in, I.table())).values() == taylor_betti(in, 32003));
  }
}

TEST_CASE("Hochster cap") {
  CHECK_THROWS(hochster_betti(simplex_boundary(6), Field::prime(2), 5));
}

TEST_CASE("cyclic polytopes agree with the moment curve") {
  for (int d = 2; d <= 5; ++d)
    for (int n = d + 1; n <= 9; ++n) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(cyclic_polytope_facets(n, d).facet_label_sets() == moment_curve_facets(n, d));
    }
  CHECK(cyclic_polytope_facets(8, 4).facets().size() == 20);
}

TEST_CASE("shellings") {
  SimplicialComplex hex = complex(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  auto order = find_shelling(hex);
  REQUIRE(order);
  auto check = verify_shelling(hex, *order);
  CHECK(check.ok);
  CHECK(check.certificate.h_vector() == h_vector(hex).h);
  CHECK(verify_two_way(hex, *order));
  CHECK(sphere_certificate(hex, order).sphere);
  CHECK(pseudomanifold_check(hex));

  SimplicialComplex path = complex(4, {{1, 2}, {2, 3}, {3, 4}});
  std::vector<Face> bad = {path.face_of({"1", "2"}), path.face_of({"3", "4"}), path.face_of({"2", "3"})};
  CHECK_FALSE(verify_shelling(path, bad).ok);
  std::vector<Face> good = {path.face_of({"1", "2"}), path.face_of({"2", "3"}), path.face_of({"3", "4"})};
  CHECK(verify_shelling(path, good).ok);
  CHECK(verify_two_way(path, good));
  CHECK_FALSE(pseudomanifold_check(path));

  // two triangles sharing only a vertex
  SimplicialComplex bowtie = complex(5, {{1, 2, 3}, {3, 4, 5}});
  CHECK_FALSE(find_shelling(bowtie).has_value());
  CHECK_FALSE(sphere_certificate(simplex_boundary(4)).sphere == false);
}

TEST_CASE("links and restrictions") {
  SimplicialComplex oct = complex(6, {{1, 2, 3}, {1, 2, 6}, {1, 5, 3}, {1, 5, 6}, {4, 2, 3}, {4, 2, 6}, {4, 5, 3}, {4, 5, 6}});
  SimplicialComplex lk = oct.link(oct.face_of({"1"}));
  CHECK(lk.facets().size() == 4);
  CHECK(reduced_homology(lk) == std::vector<std::size_t>{0, 0, 1});
  CHECK(oct.restriction(oct.face_of({"1", "4"})).facets().size() == 2);
  CHECK_THROWS(oct.link(oct.face_of({"1", "4"})));
  CHECK(is_gorenstein(oct).gorenstein);
}
