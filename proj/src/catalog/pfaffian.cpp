#include "gorlab/catalog/pfaffian.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorlab::catalog {

bool chords_cross(Chord p, Chord q) {
  auto [a, b] = p;
  auto [c, d] = q;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool ChordDiagram::has_crossing(int j) const {
  if (j <= 0) return true;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(pick.size()) == j) return true;
    for (std::size_t k = from; k < chords.size(); ++k) {
      bool ok = true;
      for (auto p : pick)
        if (!chords_cross(chords[p], chords[k])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(k);
      if (self(self, k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

TermOrder pfaff_term_order(int n, PfaffTieBreak tie) {
  if (n < 2) throw std::invalid_argument("pfaff_term_order needs n >= 2");
  VariableTable t = skew_matrix_table(n);
  // ascending list: x_a < x_b
  std::vector<Chord> ascending;
  if (n == 6 && tie == PfaffTieBreak::Lexicographic) {
    ascending = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}, {2, 4},
                 {3, 5}, {4, 6}, {1, 5}, {2, 6}, {1, 4}, {2, 5}, {3, 6}};
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) ascending.push_back({i, j});
    auto arc_start = [n](Chord c) { return c.second - c.first <= n + c.first - c.second ? c.first : c.second; };
    std::stable_sort(ascending.begin(), ascending.end(), [&](Chord a, Chord b) {
      int da = d_value(a.first, a.second, n), db = d_value(b.first, b.second, n);
      if (da != db) return da < db;
      if (tie == PfaffTieBreak::ArcStart) return arc_start(a) < arc_start(b);
      return a < b;
    });
  }
  std::vector<VarId> prio;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) prio.push_back(t.id(var("x", {it->first, it->second})));
  return TermOrder::grevlex(std::move(prio));
}

Monomial predicted_pfaffian_leading_term(const std::vector<int>& J, const VariableTable& skew_table) {
  if (J.size() % 2) throw std::invalid_argument("odd index set");
  const std::size_t r = J.size() / 2;
  std::vector<VarId> vs;
  for (std::size_t k = 0; k < r; ++k) vs.push_back(skew_table.id(var("x", {J[k], J[k + r]})));
  return Monomial::product_of(vs);
}

MonomialIdeal pfaff_initial_generators(int r, int n) {
  if (r < 2 || 2 * r > n) throw std::invalid_argument("pfaff_initial_generators needs 2 <= r and 2r <= n");
  VariableTable t = skew_matrix_table(n);
  std::vector<Monomial> gens;
  for (const auto& J : subsets_of_size(n, 2 * r)) gens.push_back(predicted_pfaffian_leading_term(J, t));
  return MonomialIdeal(std::move(gens));
}

SimplicialComplex crossing_complex(int n, int k) {
  if (n < 3 || k < 1) throw std::invalid_argument("crossing_complex needs n >= 3 and k >= 1");
  VariableTable t = skew_matrix_table(n);
  if (2 * (k + 1) > n) {
    std::vector<std::string> labels;
    for (const auto& l : t.labels()) labels.push_back(l.str());
    return SimplicialComplex::simplex(std::move(labels));
  }
  // The (k+1)-crossings are exactly the chord sets {(j_t, j_{t+k+1})} on 2(k+1) points.
  return complex_of(pfaff_initial_generators(k + 1, n), t);
}

PfaffInvariants pfaff_invariants(int r, int n) {
  if (r < 0 || 2 * (r + 1) > n) throw std::invalid_argument("pfaff_invariants needs 2(r+1) <= n");
  PfaffInvariants inv;
  inv.dim = static_cast<long long>(r) * (2 * n - 2 * r - 1);
  mpq_class deg = 1;
  const int top = n - 2 * r - 1;
  for (int i = 1; i <= top; ++i)
    for (int j = i; j <= top; ++j) deg *= mpq_class(2 * r + i + j, i + j);
  deg.canonicalize();
  if (deg.get_den() != 1) throw std::logic_error("Pfaffian degree formula is not integral");
  inv.degree = deg.get_num();
  inv.a_invariant = -static_cast<long long>(r) * n;
  return inv;
}

}  // namespace gorlab::catalog
