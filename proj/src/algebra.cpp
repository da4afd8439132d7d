#include "gorlab/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gorlab {

// ---------------------------------------------------------------- labels

std::string VarLabel::str() const {
  std::string s = symbol;
  if (!index.empty()) {
    s += '[';
    for (std::size_t k = 0; k < index.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(index[k]);
    }
    s += ']';
  }
  return s;
}

VarLabel var(std::string symbol, std::vector<int> index) { return VarLabel{std::move(symbol), std::move(index)}; }

VarId VariableTable::add(VarLabel label) {
  if (index_.count(label)) throw std::invalid_argument("duplicate variable " + label.str());
  VarId v = static_cast<VarId>(labels_.size());
  index_.emplace(label, v);
  labels_.push_back(std::move(label));
  return v;
}

VarId VariableTable::id(const VarLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::out_of_range("unregistered variable " + label.str());
  return it->second;
}

std::optional<VarId> VariableTable::find(const VarLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const VarLabel& VariableTable::label(VarId v) const {
  if (v >= labels_.size()) throw std::out_of_range("unregistered variable #" + std::to_string(v));
  return labels_[v];
}

// ---------------------------------------------------------------- monomials

void Monomial::finish() {
  degree_ = 0;
  mask_ = 0;
  for (const auto& f : factors_) {
    degree_ += f.exp;
    mask_ |= std::uint64_t{1} << (f.var % 64);
  }
}

Monomial Monomial::variable(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.factors_.push_back({v, e});
  m.finish();
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var)
      m.factors_.back().exp += f.exp;
    else
      m.factors_.push_back(f);
  }
  m.finish();
  return m;
}

Monomial Monomial::product_of(std::span<const VarId> vars) {
  std::vector<Factor> fs;
  for (VarId v : vars) fs.push_back({v, 1});
  return from_factors(std::move(fs));
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId x) { return f.var < x; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

bool Monomial::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp == 1; });
}

std::vector<VarId> Monomial::support() const {
  std::vector<VarId> s;
  for (const auto& f : factors_) s.push_back(f.var);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  if ((mask_ & ~other.mask_) != 0) return false;
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->var == b->var) return false;
    if (a->var < b->var)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  m.finish();
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m;
  auto b = divisor.factors_.begin();
  for (const auto& f : factors_) {
    std::uint32_t e = f.exp;
    if (b != divisor.factors_.end() && b->var == f.var) {
      if (b->exp > e) throw std::invalid_argument("monomial quotient: divisor does not divide");
      e -= b->exp;
      ++b;
    }
    if (e) m.factors_.push_back({f.var, e});
  }
  if (b != divisor.factors_.end()) throw std::invalid_argument("monomial quotient: divisor does not divide");
  m.finish();
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.push_back({a->var, std::max(a->exp, b->exp)});
      ++a;
      ++b;
    }
  }
  m.finish();
  return m;
}

std::string Monomial::str(const VariableTable& table) const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += '*';
    s += table.name(factors_[k].var);
    if (factors_[k].exp > 1) s += '^' + std::to_string(factors_[k].exp);
  }
  return s;
}

bool operator<(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
      [](const Monomial::Factor& x, const Monomial::Factor& y) {
        return x.var != y.var ? x.var < y.var : x.exp < y.exp;
      });
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& f : m.factors()) {
    h ^= (static_cast<std::size_t>(f.var) << 8) ^ f.exp;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------- term orders

TermOrder::TermOrder(OrderKind kind, std::vector<VarId> priority) : kind_(kind), priority_(std::move(priority)) {
  rank_.assign(priority_.size(), UINT32_MAX);
  for (std::size_t r = 0; r < priority_.size(); ++r) {
    VarId v = priority_[r];
    if (v >= priority_.size() || rank_[v] != UINT32_MAX)
      throw std::invalid_argument("term order priority is not a permutation of the variables");
    rank_[v] = static_cast<std::uint32_t>(r);
  }
}

TermOrder TermOrder::grevlex_natural(std::size_t n) {
  std::vector<VarId> p(n);
  std::iota(p.begin(), p.end(), VarId{0});
  return grevlex(std::move(p));
}

std::uint32_t TermOrder::rank(VarId v) const {
  if (v >= rank_.size())
    throw std::out_of_range("variable #" + std::to_string(v) + " is not registered in the term order");
  return rank_[v];
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  // Among variables with different exponents, find the decisive one:
  // lowest priority for revlex, highest priority for lex.
  bool revlex = kind_ == OrderKind::GradedRevLex;
  std::uint32_t best_rank = 0;
  bool found = false;
  bool a_has_more = false;
  auto consider = [&](VarId v, std::uint32_t ea, std::uint32_t eb) {
    std::uint32_t r = rank(v);
    if (!found || (revlex ? r > best_rank : r < best_rank)) {
      found = true;
      best_rank = r;
      a_has_more = ea > eb;
    }
  };
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() || ib != fb.end()) {
    if (ib == fb.end() || (ia != fa.end() && ia->var < ib->var)) {
      consider(ia->var, ia->exp, 0);
      ++ia;
    } else if (ia == fa.end() || ib->var < ia->var) {
      consider(ib->var, 0, ib->exp);
      ++ib;
    } else {
      if (ia->exp != ib->exp) consider(ia->var, ia->exp, ib->exp);
      ++ia;
      ++ib;
    }
  }
  if (!found) return std::strong_ordering::equal;
  if (revlex) return a_has_more ? std::strong_ordering::less : std::strong_ordering::greater;
  return a_has_more ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string TermOrder::str(const VariableTable& table) const {
  std::string s = kind_ == OrderKind::GradedRevLex ? "grevlex" : "glex";
  for (VarId v : priority_) s += ' ' + table.name(v);
  return s;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord) { return ord.compare(a, b); }

// ---------------------------------------------------------------- polynomials

Polynomial Polynomial::constant(const Scalar& c) { return from_monomial(Monomial(), c); }

Polynomial Polynomial::from_monomial(const Monomial& m, const Scalar& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(VarId v) { return from_monomial(Monomial::variable(v)); }

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Field& field) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
  }
  std::vector<Term> kept;
  kept.reserve(p.terms_.size());
  for (auto& t : p.terms_) {
    Scalar c = field.reduce(t.coeff);
    if (c != 0) kept.push_back({std::move(t.monomial), std::move(c)});
  }
  p.terms_ = std::move(kept);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

const Polynomial::Term& Polynomial::leading_term(const TermOrder& ord) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p;
  p.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->monomial < b->monomial)) {
      p.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->monomial < a->monomial) {
      p.terms_.push_back(*b++);
    } else {
      Scalar c = a->coeff + b->coeff;
      if (c != 0) p.terms_.push_back({a->monomial, c});
      ++a;
      ++b;
    }
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  return from_terms(std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff});
  // multiplication by a monomial can reorder canonical order, so resort
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  return p;
}

Polynomial Polynomial::reduced(const Field& field) const { return from_terms(terms_, field); }

namespace {

std::string render(const std::vector<const Polynomial::Term*>& terms, const VariableTable& table) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto* t : terms) {
    Scalar c = t->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (t->monomial.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << t->monomial.str(table);
    }
  }
  return os.str();
}

}  // namespace

std::string Polynomial::str(const VariableTable& table) const {
  std::vector<const Term*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  return render(ts, table);
}

std::string Polynomial::str(const VariableTable& table, const TermOrder& ord) const {
  std::vector<const Term*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) { return ord.greater(a->monomial, b->monomial); });
  return render(ts, table);
}

// ---------------------------------------------------------------- ideals

Ideal::Ideal(VariableTable table, std::vector<Polynomial> generators, Field field)
    : table_(std::move(table)), field_(field) {
  for (auto& g : generators) {
    Polynomial r = g.reduced(field_);
    if (r.is_zero()) throw std::invalid_argument("ideal generator is zero");
    for (const auto& t : r.terms())
      for (const auto& f : t.monomial.factors())
        if (f.var >= table_.size())
          throw std::out_of_range("generator uses unregistered variable #" + std::to_string(f.var));
    if (!r.is_homogeneous()) homogeneous_ = false;
    generators_.push_back(std::move(r));
  }
}

// ---------------------------------------------------------------- tables

VariableTable generic_matrix_table(int m, int n) {
  VariableTable t;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) t.add(var("x", {i, j}));
  return t;
}

VariableTable symmetric_matrix_table(int n) {
  VariableTable t;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) t.add(var("x", {i, j}));
  return t;
}

VariableTable skew_matrix_table(int n) {
  VariableTable t;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) t.add(var("x", {i, j}));
  return t;
}

// ---------------------------------------------------------------- determinants

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n > 20) throw std::invalid_argument("determinant: matrix too large");
  // Laplace expansion along rows, memoized on the set of used columns.
  // minor[S] = det of rows n-|S|..n-1 restricted to columns S.
  std::map<std::uint32_t, Polynomial> memo;
  memo[0] = Polynomial::constant(1);
  for (std::size_t size = 1; size <= n; ++size) {
    std::size_t row = n - size;
    std::map<std::uint32_t, Polynomial> next;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
      if (static_cast<std::size_t>(__builtin_popcount(S)) != size) continue;
      Polynomial acc;
      int sign_pos = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(S & (1u << c))) continue;
        std::uint32_t rest = S & ~(1u << c);
        auto it = memo.find(rest);
        if (it != memo.end() && !m[row][c].is_zero() && !it->second.is_zero()) {
          Polynomial term = m[row][c] * it->second;
          acc = (sign_pos % 2 == 0) ? acc + term : acc - term;
        }
        ++sign_pos;
      }
      next[S] = std::move(acc);
    }
    memo = std::move(next);
  }
  return memo[(1u << n) - 1];
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Minor> minors(const PolyMatrix& m, int t) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (t < 1 || t > std::min(rows, cols)) throw std::invalid_argument("minor size out of range");
  std::vector<Minor> out;
  for (const auto& R : subsets_of_size(rows, t))
    for (const auto& C : subsets_of_size(cols, t)) {
      PolyMatrix sub(t, std::vector<Polynomial>(t));
      for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b) sub[a][b] = m[R[a] - 1][C[b] - 1];
      out.push_back({R, C, determinant(sub)});
    }
  return out;
}

PolyMatrix variable_matrix(const VariableTable& table, int m, int n, bool symmetric) {
  PolyMatrix M(m, std::vector<Polynomial>(n));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      int a = i, b = j;
      if (symmetric && a > b) std::swap(a, b);
      M[i - 1][j - 1] = Polynomial::variable(table.id(var("x", {a, b})));
    }
  return M;
}

Ideal generic_minor_ideal(int t, int m, int n, bool symmetric) {
  if (symmetric && m != n) throw std::invalid_argument("symmetric minor ideal needs a square matrix");
  if (t < 2 || t > std::min(m, n)) throw std::invalid_argument("minor size t=" + std::to_string(t) + " out of range");
  VariableTable table = symmetric ? symmetric_matrix_table(n) : generic_matrix_table(m, n);
  PolyMatrix M = variable_matrix(table, m, n, symmetric);
  std::vector<Polynomial> gens;
  for (auto& mi : minors(M, t)) {
    if (mi.value.is_zero()) continue;
    bool dup = false;
    for (const auto& g : gens)
      if (g == mi.value || g == -mi.value) {
        dup = true;
        break;
      }
    if (!dup) gens.push_back(std::move(mi.value));
  }
  return Ideal(std::move(table), std::move(gens));
}

// ---------------------------------------------------------------- pfaffians

namespace {

void matchings(std::vector<int>& rest, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out) {
  if (rest.empty()) {
    out.push_back(cur);
    return;
  }
  int a = rest.front();
  for (std::size_t k = 1; k < rest.size(); ++k) {
    int b = rest[k];
    std::vector<int> next;
    for (std::size_t q = 1; q < rest.size(); ++q)
      if (q != k) next.push_back(rest[q]);
    cur.push_back({a, b});
    matchings(next, cur, out);
    cur.pop_back();
  }
}

bool chords_cross(std::pair<int, int> p, std::pair<int, int> q) {
  auto [a, b] = p;
  auto [c, d] = q;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

Polynomial pfaffian(std::span<const int> J, const VariableTable& skew_table) {
  if (J.size() % 2) throw std::invalid_argument("pfaffian of an odd index set");
  for (std::size_t k = 1; k < J.size(); ++k)
    if (J[k - 1] >= J[k]) throw std::invalid_argument("pfaffian index set must be strictly increasing");
  std::vector<int> rest(J.begin(), J.end());
  std::vector<std::pair<int, int>> cur;
  std::vector<std::vector<std::pair<int, int>>> all;
  matchings(rest, cur, all);
  std::vector<Polynomial::Term> terms;
  for (const auto& mt : all) {
    int crossings = 0;
    for (std::size_t x = 0; x < mt.size(); ++x)
      for (std::size_t y = x + 1; y < mt.size(); ++y)
        if (chords_cross(mt[x], mt[y])) ++crossings;
    std::vector<VarId> vs;
    for (auto [a, b] : mt) vs.push_back(skew_table.id(var("x", {a, b})));
    terms.push_back({Monomial::product_of(vs), Scalar(crossings % 2 ? -1 : 1)});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial pfaffian(std::span<const int> J, int n) {
  for (int j : J)
    if (j < 1 || j > n) throw std::invalid_argument("pfaffian index out of range");
  return pfaffian(J, skew_matrix_table(n));
}

Ideal pfaffian_ideal(int t, int n) {
  if (t % 2) throw std::invalid_argument("pfaffian order must be even");
  if (t < 4 || t > n) throw std::invalid_argument("pfaffian order out of range");
  VariableTable table = skew_matrix_table(n);
  std::vector<Polynomial> gens;
  for (const auto& J : subsets_of_size(n, t)) gens.push_back(pfaffian(J, table));
  return Ideal(std::move(table), std::move(gens));
}

int d_value(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("d_value needs 1 <= i < j <= n");
  return std::min(j - i, n + i - j);
}

}  // namespace gorlab
