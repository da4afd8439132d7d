#include "gorlab/catalog/segre.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gorlab::catalog {

namespace {

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("Segre family needs n >= 2");
}

VarId xid(const VariableTable& t, int i, int j) { return t.id(var("x", {i, j})); }

}  // namespace

VariableTable segre_table(int n) {
  require_n(n);
  return generic_matrix_table(n, n);
}

TermOrder segre_term_order(int n, SegreTieBreak tie) {
  VariableTable t = segre_table(n);
  std::vector<VarId> prio;
  for (int c = 1; c < n; ++c) {
    std::vector<Cell> cls;
    if (tie == SegreTieBreak::UpperBlockFirst) {
      for (int i = 1; i + c <= n; ++i) cls.push_back({i, i + c});
      for (int i = 1; i + c <= n; ++i) cls.push_back({i + c, i});
    } else {
      for (int i = 1; i + c <= n; ++i) {
        cls.push_back({i, i + c});
        cls.push_back({i + c, i});
      }
      if (tie == SegreTieBreak::Reversed) std::reverse(cls.begin(), cls.end());
    }
    for (Cell x : cls) prio.push_back(xid(t, x.row, x.col));
  }
  for (int i = n; i >= 1; --i) prio.push_back(xid(t, i, i));
  return TermOrder::grevlex(std::move(prio));
}

TermOrder diagonal_term_order(int n) {
  VariableTable t = segre_table(n);
  std::vector<VarId> prio;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) prio.push_back(xid(t, i, j));
  return TermOrder::glex(std::move(prio));
}

MonomialIdeal segre_initial_generators(int n) {
  VariableTable t = segre_table(n);
  std::vector<Monomial> gens;
  for (int i = 1; i <= n; ++i)
    for (int h = i + 1; h <= n; ++h)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          std::vector<VarId> vs;
          if (i == j || h == k)
            vs = {xid(t, i, k), xid(t, h, j)};
          else
            vs = {xid(t, i, j), xid(t, h, k)};
          gens.push_back(Monomial::product_of(vs));
        }
  return MonomialIdeal(std::move(gens));
}

MonomialIdeal classical_initial_generators(int n) {
  VariableTable t = segre_table(n);
  std::vector<Monomial> gens;
  for (int i = 1; i <= n; ++i)
    for (int h = i + 1; h <= n; ++h)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          std::vector<VarId> vs = {xid(t, i, j), xid(t, h, k)};
          gens.push_back(Monomial::product_of(vs));
        }
  return MonomialIdeal(std::move(gens));
}

// ---------------------------------------------------------------- grid paths

GridPath::GridPath(std::vector<int> rows, std::vector<int> cols, std::vector<Step> steps)
    : rows_(std::move(rows)), cols_(std::move(cols)), steps_(std::move(steps)) {
  if (rows_.empty() || cols_.empty()) throw std::invalid_argument("grid path needs nonempty rows and columns");
  if (!std::is_sorted(rows_.begin(), rows_.end()) || !std::is_sorted(cols_.begin(), cols_.end()))
    throw std::invalid_argument("grid rows and columns must be increasing");
  std::size_t ups = std::count(steps_.begin(), steps_.end(), Step::Up);
  if (ups != rows_.size() - 1 || steps_.size() - ups != cols_.size() - 1)
    throw std::invalid_argument("grid path has the wrong number of steps");
  std::size_t r = rows_.size() - 1, c = 0;
  cells_.push_back({rows_[r], cols_[c]});
  for (Step s : steps_) {
    if (s == Step::Up)
      --r;
    else
      ++c;
    cells_.push_back({rows_[r], cols_[c]});
  }
}

SegrePoint GridPath::type_at(std::size_t k) const {
  const bool has_in = k > 0;
  const bool has_out = k < steps_.size();
  if (has_in && has_out && steps_[k - 1] != steps_[k])
    return steps_[k - 1] == Step::Right ? SegrePoint::LeftTurn : SegrePoint::RightTurn;
  bool vertical = (has_in && steps_[k - 1] == Step::Up) || (has_out && steps_[k] == Step::Up);
  return vertical ? SegrePoint::AloneInRow : SegrePoint::AloneInColumn;
}

std::vector<SegrePoint> GridPath::types() const {
  std::vector<SegrePoint> out;
  for (std::size_t k = 0; k < cells_.size(); ++k) out.push_back(type_at(k));
  return out;
}

std::ptrdiff_t GridPath::index_of(Cell c) const {
  auto it = std::find(cells_.begin(), cells_.end(), c);
  return it == cells_.end() ? -1 : it - cells_.begin();
}

bool GridPath::full_support() const {
  for (int r : rows_)
    if (std::none_of(cells_.begin(), cells_.end(), [&](Cell c) { return c.row == r; })) return false;
  for (int c : cols_)
    if (std::none_of(cells_.begin(), cells_.end(), [&](Cell x) { return x.col == c; })) return false;
  return true;
}

std::vector<GridPath> grid_paths(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<GridPath> out;
  std::vector<Step> cur;
  const std::size_t ups = rows.size() - 1, rights = cols.size() - 1;
  auto rec = [&](auto&& self, std::size_t u, std::size_t r) -> void {
    if (u == ups && r == rights) {
      out.emplace_back(rows, cols, cur);
      return;
    }
    if (u < ups) {
      cur.push_back(Step::Up);
      self(self, u + 1, r);
      cur.pop_back();
    }
    if (r < rights) {
      cur.push_back(Step::Right);
      self(self, u, r + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

GridPath flip(const GridPath& P, Cell x) {
  auto k = P.index_of(x);
  if (k < 0) throw std::invalid_argument("flip: cell is not on the path");
  auto t = P.type_at(static_cast<std::size_t>(k));
  if (t != SegrePoint::LeftTurn && t != SegrePoint::RightTurn)
    throw std::invalid_argument("flip: cell (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                                ") is not a turn");
  std::vector<Step> s = P.steps();
  std::swap(s[k - 1], s[k]);
  return GridPath(P.rows(), P.cols(), std::move(s));
}

void segre_signs(const GridPath& P, std::vector<Cell>& minus, std::vector<Cell>& plus) {
  minus.clear();
  plus.clear();
  const int maxR = P.rows().back();
  for (std::size_t k = 0; k < P.cells().size(); ++k) {
    Cell c = P.cells()[k];
    bool neg = false;
    switch (P.type_at(k)) {
      case SegrePoint::LeftTurn: neg = true; break;
      case SegrePoint::RightTurn: neg = false; break;
      case SegrePoint::AloneInColumn: neg = c.col < maxR; break;
      case SegrePoint::AloneInRow: neg = c.row == maxR; break;
    }
    (neg ? minus : plus).push_back(c);
  }
}

std::vector<SegreFacet> segre_shelling(int n) {
  require_n(n);
  std::vector<SegreFacet> out;
  for (const auto& R : proper_subsets(n)) {
    for (auto& P : grid_paths(R, complement(R, n))) {
      SegreFacet f{std::move(P), {}, {}};
      segre_signs(f.path, f.minus, f.plus);
      out.push_back(std::move(f));
    }
  }
  return out;
}

SimplicialComplex segre_core_facets(int n) {
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : segre_shelling(n)) facets.push_back(cell_labels(f.path.cells()));
  return SimplicialComplex::from_label_sets(facets);
}

std::vector<Face> segre_shelling_faces(int n, const SimplicialComplex& core) {
  std::vector<Face> out;
  for (const auto& f : segre_shelling(n)) out.push_back(core.face_of(cell_labels(f.path.cells())));
  return out;
}

namespace {

// The facet of the grid (rows, cols) containing all cells of P except x.
GridPath covering_path(const std::vector<int>& rows, const std::vector<int>& cols, const GridPath& P, Cell x) {
  for (auto& Q : grid_paths(rows, cols)) {
    bool ok = true;
    for (Cell c : P.cells())
      if (!(c == x) && !Q.contains(c)) {
        ok = false;
        break;
      }
    if (ok) return Q;
  }
  throw std::logic_error("no facet covers the ridge; the path is not a Segre core facet");
}

}  // namespace

GridPath segre_adjacent_facet(int n, const GridPath& P, Cell x) {
  auto k = P.index_of(x);
  if (k < 0) throw std::invalid_argument("adjacent_facet: cell is not on the path");
  if (P.rows() != complement(P.cols(), n)) throw std::invalid_argument("adjacent_facet: path is not a Segre core facet");
  if (n == 2) {
    std::vector<int> R = complement(P.rows(), n);
    return grid_paths(R, P.rows()).front();
  }
  switch (P.type_at(static_cast<std::size_t>(k))) {
    case SegrePoint::LeftTurn:
    case SegrePoint::RightTurn:
      return flip(P, x);
    case SegrePoint::AloneInColumn: {
      std::vector<int> R = P.rows();
      R.insert(std::upper_bound(R.begin(), R.end(), x.col), x.col);
      return covering_path(R, complement(R, n), P, x);
    }
    case SegrePoint::AloneInRow: {
      std::vector<int> R = P.rows();
      R.erase(std::find(R.begin(), R.end(), x.row));
      return covering_path(R, complement(R, n), P, x);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace gorlab::catalog
