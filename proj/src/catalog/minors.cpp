#include "gorlab/catalog/minors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gorlab::catalog {

bool CycleMatrixSpec::in_V(Cell c) const { return std::find(V.begin(), V.end(), c) != V.end(); }

bool CycleMatrixSpec::is_single_cycle() const {
  const std::size_t m = V.size();
  if (m < 3) return false;
  auto adjacent = [](Cell a, Cell b) { return !(a == b) && (a.row == b.row || a.col == b.col); };
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t deg = 0;
    for (std::size_t b = 0; b < m; ++b) deg += adjacent(V[a], V[b]);
    if (deg != 2) return false;
  }
  // walk from V[0]; a 2-regular graph is one cycle iff the walk visits every vertex
  std::vector<bool> seen(m, false);
  std::size_t cur = 0, prev = m, count = 0;
  while (!seen[cur]) {
    seen[cur] = true;
    ++count;
    std::size_t next = m;
    for (std::size_t b = 0; b < m; ++b)
      if (b != prev && adjacent(V[cur], V[b])) {
        next = b;
        break;
      }
    prev = cur;
    cur = next;
  }
  return count == m;
}

CycleMatrixSpec cycle_matrix_spec(int n) {
  if (n < 2) throw std::invalid_argument("cycle matrix needs n >= 2");
  CycleMatrixSpec s;
  s.n = n;
  for (int i = 1; i <= n; ++i) {
    s.V.push_back({i, i});
    if (i < n) s.V.push_back({i, i + 1});
  }
  s.V.push_back({n, 1});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!s.in_V({i, j})) s.W.push_back({i, j});
  return s;
}

TermOrder minors_term_order(int n) {
  CycleMatrixSpec s = cycle_matrix_spec(n);
  VariableTable t = generic_matrix_table(n, n);
  std::vector<VarId> prio;
  for (Cell c : s.V) prio.push_back(t.id(var("x", {c.row, c.col})));
  for (Cell c : s.W) prio.push_back(t.id(var("x", {c.row, c.col})));
  return TermOrder::grevlex(std::move(prio));
}

MonomialIdeal minors_cycle_ideal(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("minors_cycle_ideal needs 1 <= k < n");
  CycleMatrixSpec s = cycle_matrix_spec(n);
  VariableTable t = generic_matrix_table(n, n);
  const int len = static_cast<int>(s.V.size());
  std::vector<Monomial> gens;
  for (const auto& S : subsets_of_size(len, k)) {
    bool independent = true;
    for (std::size_t a = 0; a < S.size() && independent; ++a)
      for (std::size_t b = a + 1; b < S.size(); ++b) {
        int d = S[b] - S[a];
        if (d == 1 || d == len - 1) {
          independent = false;
          break;
        }
      }
    if (!independent) continue;
    std::vector<VarId> vs;
    for (int p : S) vs.push_back(t.id(var("x", {s.V[p - 1].row, s.V[p - 1].col})));
    gens.push_back(Monomial::product_of(vs));
  }
  return MonomialIdeal(std::move(gens));
}

LemmaCheck minors_verify_lemma(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("minors_verify_lemma needs 1 <= k < n");
  CycleMatrixSpec s = cycle_matrix_spec(n);
  VariableTable t = generic_matrix_table(n, n);
  PolyMatrix Y(n, std::vector<Polynomial>(n));
  for (Cell c : s.V) Y[c.row - 1][c.col - 1] = Polynomial::variable(t.id(var("x", {c.row, c.col})));
  MonomialIdeal expected = minors_cycle_ideal(n, k);
  std::set<Monomial> expected_set(expected.generators().begin(), expected.generators().end());
  std::set<Monomial> hit;
  LemmaCheck res;
  for (const auto& mi : minors(Y, k)) {
    ++res.minors_checked;
    if (mi.value.is_zero()) {
      ++res.zero_minors;
      continue;
    }
    const auto& terms = mi.value.terms();
    if (terms.size() != 1 || (terms[0].coeff != 1 && terms[0].coeff != -1)) {
      res.failure = "a " + std::to_string(k) + "-minor is not a signed monomial: " + mi.value.str(t);
      return res;
    }
    if (!expected_set.count(terms[0].monomial)) {
      res.failure = "minor " + terms[0].monomial.str(t) + " is not an independent-set monomial";
      return res;
    }
    hit.insert(terms[0].monomial);
  }
  res.distinct_monomials = hit.size();
  if (hit.size() != expected_set.size()) {
    res.failure = std::to_string(expected_set.size() - hit.size()) + " independent-set monomials are not minors";
    return res;
  }
  res.ok = true;
  return res;
}

CyclicMatch minors_core_is_cyclic(int n) {
  if (n < 3) throw std::invalid_argument("minors_core_is_cyclic needs n >= 3");
  CycleMatrixSpec s = cycle_matrix_spec(n);
  VariableTable t = generic_matrix_table(n, n);
  SimplicialComplex C = core(complex_of(minors_cycle_ideal(n, n - 1), t));
  CyclicMatch res;
  std::vector<std::vector<std::string>> relabeled;
  for (Face f : C.facets()) {
    std::vector<std::string> ls;
    for (const auto& l : C.labels_of(f)) {
      int pos = 0;
      for (std::size_t p = 0; p < s.V.size(); ++p)
        if (cell_label(s.V[p]) == l) pos = static_cast<int>(p) + 1;
      if (pos == 0) return res;  // a W variable survived in the core
      ls.push_back(std::to_string(pos));
    }
    relabeled.push_back(std::move(ls));
  }
  for (std::size_t p = 0; p < s.V.size(); ++p) res.relabeling.push_back({cell_label(s.V[p]), static_cast<int>(p) + 1});
  SimplicialComplex cyc = cyclic_polytope_facets(2 * n, 2 * n - 4);
  res.facets = C.facets().size();
  res.matches = SimplicialComplex::from_label_sets(relabeled).same_as(cyc);
  return res;
}

}  // namespace gorlab::catalog
