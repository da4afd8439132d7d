#include "gorlab/catalog/veronese.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gorlab::catalog {

namespace {

void require_even(int n) {
  if (n < 2 || n % 2) throw std::invalid_argument("Veronese family needs an even n >= 2");
}

VarId sid(const VariableTable& t, int i, int j) {
  if (i > j) std::swap(i, j);
  return t.id(var("x", {i, j}));
}

bool is_cone_cell(int i, int j, int n) { return i + j == n + 1; }

}  // namespace

VariableTable veronese_table(int n) {
  require_even(n);
  return symmetric_matrix_table(n);
}

TermOrder veronese_term_order(int n) {
  VariableTable t = veronese_table(n);
  std::vector<VarId> prio;
  for (int c = 0; c < n; ++c)
    for (int i = 1; i + c <= n; ++i)
      if (!is_cone_cell(i, i + c, n)) prio.push_back(sid(t, i, i + c));
  for (int i = n / 2; i >= 1; --i) prio.push_back(sid(t, i, n + 1 - i));
  return TermOrder::grevlex(std::move(prio));
}

std::vector<Cell> veronese_cone_cells(int n) {
  require_even(n);
  std::vector<Cell> out;
  for (int i = 1; i <= n / 2; ++i) out.push_back({i, n + 1 - i});
  return out;
}

MonomialIdeal veronese_initial_generators(int n) {
  VariableTable t = veronese_table(n);
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (!is_cone_cell(i, j, n)) cells.push_back({i, j});
  auto type1 = [&](Cell p, Cell q) {
    for (int a : {p.row, p.col})
      for (int b : {q.row, q.col})
        if (a + b == n + 1) return true;
    return false;
  };
  auto type2 = [](Cell p, Cell q) { return p.row < q.row && p.col < q.col; };
  std::vector<Monomial> gens;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      Cell p = cells[a], q = cells[b];
      if (type1(p, q) || type2(p, q) || type2(q, p)) {
        std::vector<VarId> vs = {sid(t, p.row, p.col), sid(t, q.row, q.col)};
        gens.push_back(Monomial::product_of(vs));
      }
    }
  return MonomialIdeal(std::move(gens));
}

std::vector<std::vector<int>> veronese_families(int n) {
  require_even(n);
  const int m = n / 2;
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> A;
    for (int i = 1; i <= m; ++i) A.push_back(mask >> (i - 1) & 1 ? n + 1 - i : i);
    std::sort(A.begin(), A.end());
    out.push_back(std::move(A));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- triangle paths

TrianglePath::TrianglePath(std::vector<int> A, std::vector<TriStep> steps) : A_(std::move(A)), steps_(std::move(steps)) {
  if (A_.empty() || !std::is_sorted(A_.begin(), A_.end())) throw std::invalid_argument("triangle index set must be increasing");
  if (steps_.size() != A_.size() - 1) throw std::invalid_argument("triangle path has the wrong number of steps");
  std::size_t i = 0, j = A_.size() - 1;
  cells_.push_back({A_[i], A_[j]});
  for (TriStep s : steps_) {
    if (s == TriStep::Left)
      --j;
    else
      ++i;
    cells_.push_back({A_[i], A_[j]});
  }
}

TriPoint TrianglePath::type_at(std::size_t k) const {
  const bool has_in = k > 0;
  const bool has_out = k < steps_.size();
  if (has_in && !has_out) return steps_[k - 1] == TriStep::Left ? TriPoint::LeftTurn : TriPoint::RightTurn;
  if (has_in && has_out && steps_[k - 1] != steps_[k])
    return steps_[k - 1] == TriStep::Down ? TriPoint::RightTurn : TriPoint::LeftTurn;
  return TriPoint::Isolated;
}

std::vector<TriPoint> TrianglePath::types() const {
  std::vector<TriPoint> out;
  for (std::size_t k = 0; k < cells_.size(); ++k) out.push_back(type_at(k));
  return out;
}

int TrianglePath::isolated_index(std::size_t k) const {
  if (type_at(k) != TriPoint::Isolated) throw std::invalid_argument("point is not isolated");
  if (steps_.empty()) return A_.front();
  // A horizontal run leaves the column alone; a vertical run leaves the row alone.
  TriStep s = k < steps_.size() ? steps_[k] : steps_[k - 1];
  return s == TriStep::Left ? cells_[k].col : cells_[k].row;
}

std::ptrdiff_t TrianglePath::index_of(Cell c) const {
  auto it = std::find(cells_.begin(), cells_.end(), c);
  return it == cells_.end() ? -1 : it - cells_.begin();
}

std::vector<TrianglePath> triangle_paths(const std::vector<int>& A) {
  std::vector<TrianglePath> out;
  const std::size_t len = A.size() - 1;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::vector<TriStep> s;
    for (std::size_t b = 0; b < len; ++b) s.push_back(mask >> (len - 1 - b) & 1 ? TriStep::Down : TriStep::Left);
    out.emplace_back(A, std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TrianglePath flip(const TrianglePath& P, Cell x) {
  auto k = P.index_of(x);
  if (k < 0) throw std::invalid_argument("flip: cell is not on the path");
  if (P.type_at(k) == TriPoint::Isolated) throw std::invalid_argument("flip: cell is not a turn");
  std::vector<TriStep> s = P.steps();
  if (static_cast<std::size_t>(k) == s.size())
    s.back() = s.back() == TriStep::Left ? TriStep::Down : TriStep::Left;
  else
    std::swap(s[k - 1], s[k]);
  return TrianglePath(P.indices(), std::move(s));
}

namespace {

void veronese_signs(const TrianglePath& P, int m, std::vector<Cell>& minus, std::vector<Cell>& plus) {
  for (std::size_t k = 0; k < P.cells().size(); ++k) {
    bool neg = false;
    switch (P.type_at(k)) {
      case TriPoint::RightTurn: neg = true; break;
      case TriPoint::LeftTurn: neg = false; break;
      case TriPoint::Isolated: neg = P.isolated_index(k) > m; break;
    }
    (neg ? minus : plus).push_back(P.cells()[k]);
  }
}

}  // namespace

std::vector<VeroneseFacet> veronese_shelling(int n) {
  std::vector<VeroneseFacet> out;
  for (const auto& A : veronese_families(n))
    for (auto& P : triangle_paths(A)) {
      VeroneseFacet f{std::move(P), {}, {}};
      veronese_signs(f.path, n / 2, f.minus, f.plus);
      out.push_back(std::move(f));
    }
  return out;
}

SimplicialComplex veronese_core_facets(int n) {
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : veronese_shelling(n)) facets.push_back(cell_labels(f.path.cells(), true));
  return SimplicialComplex::from_label_sets(facets);
}

std::vector<Face> veronese_shelling_faces(int n, const SimplicialComplex& core) {
  std::vector<Face> out;
  for (const auto& f : veronese_shelling(n)) out.push_back(core.face_of(cell_labels(f.path.cells(), true)));
  return out;
}

TrianglePath veronese_adjacent_facet(int n, const TrianglePath& P, Cell x) {
  require_even(n);
  auto k = P.index_of(x);
  if (k < 0) throw std::invalid_argument("adjacent_facet: cell is not on the path");
  if (P.type_at(k) != TriPoint::Isolated) return flip(P, x);
  int i = P.isolated_index(k);
  std::vector<int> A2 = P.indices();
  A2.erase(std::find(A2.begin(), A2.end(), i));
  A2.insert(std::upper_bound(A2.begin(), A2.end(), n + 1 - i), n + 1 - i);
  // cells are compared as symmetric positions
  auto norm = [](Cell c) { return c.row <= c.col ? c : Cell{c.col, c.row}; };
  for (auto& Q : triangle_paths(A2)) {
    bool ok = true;
    for (Cell c : P.cells()) {
      if (c == x) continue;
      if (!Q.contains(norm(c))) {
        ok = false;
        break;
      }
    }
    if (ok) return Q;
  }
  throw std::logic_error("no facet covers the ridge; the path is not a Veronese core facet");
}

}  // namespace gorlab::catalog
