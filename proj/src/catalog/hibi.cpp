#include "gorlab/catalog/hibi.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gorlab::catalog {

namespace {

constexpr std::size_t kMaxPoset = 64;

void close_transitively(std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (less[k][j]) less[i][j] = true;
}

}  // namespace

// ---------------------------------------------------------------- Poset

Poset Poset::from_relation(std::vector<std::string> elements, std::vector<std::vector<bool>> less) {
  const std::size_t n = elements.size();
  if (n > kMaxPoset) throw std::invalid_argument("posets are limited to 64 elements");
  if (less.size() != n) throw std::invalid_argument("relation size does not match the element list");
  for (auto& row : less)
    if (row.size() != n) throw std::invalid_argument("relation size does not match the element list");
  {
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate poset element name");
  }
  close_transitively(less);
  for (std::size_t i = 0; i < n; ++i)
    if (less[i][i]) throw std::invalid_argument("order relation has a cycle through " + elements[i]);
  Poset P;
  P.names_ = std::move(elements);
  P.less_ = std::move(less);
  return P;
}

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = elements.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[elements[i]] = i;
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : covers) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw std::invalid_argument("unknown poset element '" + a + "'");
    if (ib == idx.end()) throw std::invalid_argument("unknown poset element '" + b + "'");
    less[ia->second][ib->second] = true;
  }
  return from_relation(std::move(elements), std::move(less));
}

Poset Poset::chain(int k, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> less(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    names.push_back(prefix + std::to_string(i + 1));
    for (int j = i + 1; j < k; ++j) less[i][j] = true;
  }
  return from_relation(std::move(names), std::move(less));
}

Poset Poset::antichain(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(std::to_string(i + 1));
  return from_relation(std::move(names), std::vector<std::vector<bool>>(k, std::vector<bool>(k, false)));
}

Poset Poset::product(const Poset& a, const Poset& b) {
  std::vector<std::string> names;
  const std::size_t n = a.size() * b.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) names.push_back(a.name(i) + b.name(j));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t i = x / b.size(), j = x % b.size(), k = y / b.size(), l = y % b.size();
      less[x][y] = x != y && a.leq(i, k) && b.leq(j, l);
    }
  return from_relation(std::move(names), std::move(less));
}

std::size_t Poset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown poset element '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool Poset::covers(std::size_t a, std::size_t b) const {
  if (!less_[a][b]) return false;
  for (std::size_t c = 0; c < size(); ++c)
    if (less_[a][c] && less_[c][b]) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (covers(a, b)) out.push_back({a, b});
  return out;
}

std::vector<int> Poset::ranks() const {
  const std::size_t n = size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) below[i] += less_[j][i];
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<int> r(n, 1);
  for (std::size_t p : order)
    for (std::size_t q = 0; q < n; ++q)
      if (less_[q][p]) r[p] = std::max(r[p], r[q] + 1);
  return r;
}

int Poset::rank() const {
  auto r = ranks();
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

bool Poset::is_graded() const {
  const std::size_t n = size();
  if (n == 0) return true;
  // shortest and longest saturated chains from a minimal element up to each p
  auto longest = ranks();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return longest[a] < longest[b]; });
  std::vector<int> shortest(n, 1);
  for (std::size_t p : order) {
    int best = -1;
    for (std::size_t q = 0; q < n; ++q)
      if (covers(q, p) && (best < 0 || shortest[q] + 1 < best)) best = shortest[q] + 1;
    if (best > 0) shortest[p] = best;
  }
  int lo = -1, hi = -1;
  for (std::size_t p = 0; p < n; ++p) {
    bool maximal = true;
    for (std::size_t q = 0; q < n; ++q) maximal = maximal && !less_[p][q];
    if (!maximal) continue;
    lo = lo < 0 ? shortest[p] : std::min(lo, shortest[p]);
    hi = std::max(hi, longest[p]);
  }
  return lo == hi;
}

std::size_t Poset::width() const {
  const std::size_t n = size();
  std::size_t best = 0;
  // small posets only; brute force over subsets is fine up to ~20 elements
  if (n > 20) throw std::invalid_argument("width is computed by brute force; poset too large");
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    bool anti = true;
    for (std::size_t a = 0; a < n && anti; ++a)
      if (m >> a & 1)
        for (std::size_t b = 0; b < n; ++b)
          if ((m >> b & 1) && less_[a][b]) {
            anti = false;
            break;
          }
    if (anti) best = std::max<std::size_t>(best, __builtin_popcountll(m));
  }
  return best;
}

std::uint64_t Poset::down_set(std::size_t p) const {
  std::uint64_t m = std::uint64_t{1} << p;
  for (std::size_t q = 0; q < size(); ++q)
    if (less_[q][p]) m |= std::uint64_t{1} << q;
  return m;
}

bool Poset::is_order_ideal(std::uint64_t mask) const {
  for (std::size_t p = 0; p < size(); ++p)
    if ((mask >> p & 1) && (down_set(p) & ~mask)) return false;
  return true;
}

std::vector<std::uint64_t> Poset::order_ideals() const {
  const std::size_t n = size();
  auto r = ranks();
  std::vector<std::size_t> ext(n);  // linear extension
  std::iota(ext.begin(), ext.end(), 0);
  std::stable_sort(ext.begin(), ext.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });
  std::vector<std::uint64_t> downs(n);
  for (std::size_t p = 0; p < n; ++p) downs[p] = down_set(p) & ~(std::uint64_t{1} << p);
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t mask) {
    if (k == n) {
      out.push_back(mask);
      return;
    }
    std::size_t p = ext[k];
    rec(k + 1, mask);
    if ((downs[p] & ~mask) == 0) rec(k + 1, mask | std::uint64_t{1} << p);
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Poset::maximal_elements(std::uint64_t mask) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < size(); ++p) {
    if (!(mask >> p & 1)) continue;
    bool maximal = true;
    for (std::size_t q = 0; q < size(); ++q)
      if ((mask >> q & 1) && less_[p][q]) maximal = false;
    if (maximal) out.push_back(p);
  }
  return out;
}

bool is_graded(const Poset& P) { return P.is_graded(); }

bool isomorphic(const Poset& a, const Poset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  if (n > 10) throw std::invalid_argument("isomorphism test is brute force; poset too large");
  auto sig = [](const Poset& P, std::size_t p) {
    int up = 0, down = 0;
    for (std::size_t q = 0; q < P.size(); ++q) {
      up += P.less(p, q);
      down += P.less(q, p);
    }
    return std::pair{down, up};
  };
  std::vector<std::pair<int, int>> sa(n), sb(n);
  for (std::size_t p = 0; p < n; ++p) {
    sa[p] = sig(a, p);
    sb[p] = sig(b, p);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<std::size_t> img(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || sa[k] != sb[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = a.less(j, k) == b.less(img[j], c) && a.less(k, j) == b.less(c, img[j]);
      if (!ok) continue;
      used[c] = true;
      img[k] = c;
      if (rec(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return rec(0);
}

std::vector<Poset> posets_up_to_isomorphism(int n) {
  if (n < 0 || n > 6) throw std::invalid_argument("poset enumeration supports 0..6 elements");
  // Every poset has a natural labelling, so strict relations contained in i < j suffice.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<int> perm(n);
  std::map<std::uint64_t, bool> seen;
  std::vector<Poset> out;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (bits >> k & 1) less[pairs[k].first][pairs[k].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        if (less[i][j])
          for (int k = 0; k < n; ++k)
            if (less[j][k] && !less[i][k]) {
              transitive = false;
              break;
            }
    if (!transitive) continue;
    // canonical code: smallest adjacency bit string over all relabellings
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code = code << 1 | (less[perm[i]][perm[j]] ? 1 : 0);
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.emplace(best, true).second) out.push_back(Poset::from_relation(names, less));
  }
  return out;
}

// ---------------------------------------------------------------- lattices

DistributiveLattice::DistributiveLattice(std::vector<std::string> labels, std::vector<std::vector<int>> keys,
                                         std::vector<std::vector<bool>> leq, std::string symbol)
    : labels_(std::move(labels)), keys_(std::move(keys)), leq_(std::move(leq)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("a lattice needs at least one element");
  if (keys_.size() != n || leq_.size() != n) throw std::invalid_argument("lattice data sizes disagree");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw std::invalid_argument("lattice order must be reflexive");
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq_[a][b] && leq_[b][a]) throw std::invalid_argument("lattice order must be antisymmetric");
  }
  auto bound = [&](std::size_t a, std::size_t b, bool lower) {
    std::size_t best = n;
    for (std::size_t c = 0; c < n; ++c) {
      bool ok = lower ? (leq_[c][a] && leq_[c][b]) : (leq_[a][c] && leq_[b][c]);
      if (!ok) continue;
      if (best == n || (lower ? leq_[best][c] : leq_[c][best])) best = c;
    }
    for (std::size_t c = 0; c < n && best != n; ++c) {
      bool ok = lower ? (leq_[c][a] && leq_[c][b]) : (leq_[a][c] && leq_[b][c]);
      if (ok && !(lower ? leq_[c][best] : leq_[best][c]))
        throw std::invalid_argument("order is not a lattice: " + labels_[a] + " and " + labels_[b] +
                                    " have no " + (lower ? "meet" : "join"));
    }
    if (best == n)
      throw std::invalid_argument("order is not a lattice: " + labels_[a] + " and " + labels_[b] + " have no " +
                                  (lower ? "meet" : "join"));
    return best;
  };
  meet_.assign(n, std::vector<std::size_t>(n));
  join_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      meet_[a][b] = meet_[b][a] = bound(a, b, true);
      join_[a][b] = join_[b][a] = bound(a, b, false);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]])
          throw std::invalid_argument("lattice is not distributive");
  for (std::size_t a = 0; a < n; ++a) {
    if (meet_[bottom_][a] != bottom_) bottom_ = meet_[bottom_][a];
    if (join_[top_][a] != top_) top_ = join_[top_][a];
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (a == bottom_) continue;
    int lower_covers = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !leq_[b][a]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq_[b][c] && leq_[c][a]) cover = false;
      lower_covers += cover;
    }
    if (lower_covers == 1) ji_.push_back(a);
  }
  if (ji_.size() > 64) throw std::invalid_argument("lattices with more than 64 join-irreducibles are not supported");
  ideal_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < ji_.size(); ++k)
      if (leq_[ji_[k]][a]) ideal_[a] |= std::uint64_t{1} << k;
  for (std::size_t a = 0; a < n; ++a) table_.add(var(symbol, keys_[a]));
}

std::size_t DistributiveLattice::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown lattice element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

int DistributiveLattice::height(std::size_t a) const { return __builtin_popcountll(ideal_[a]); }

DistributiveLattice order_ideal_lattice(const Poset& P) {
  auto ideals = P.order_ideals();
  const std::size_t n = ideals.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> keys;
  for (std::size_t k = 0; k < n; ++k) {
    std::string s = "{";
    bool first = true;
    for (std::size_t p : P.maximal_elements(ideals[k])) {
      if (!first) s += ",";
      s += P.name(p);
      first = false;
    }
    labels.push_back(s + "}");
    keys.push_back({static_cast<int>(k) + 1});
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (ideals[a] & ~ideals[b]) == 0;
  return DistributiveLattice(std::move(labels), std::move(keys), std::move(leq));
}

Poset join_irreducibles(const DistributiveLattice& L) {
  const auto& ji = L.join_irreducible_elements();
  std::vector<std::string> names;
  std::vector<std::vector<bool>> less(ji.size(), std::vector<bool>(ji.size(), false));
  for (std::size_t a = 0; a < ji.size(); ++a) {
    names.push_back(L.label(ji[a]));
    for (std::size_t b = 0; b < ji.size(); ++b) less[a][b] = a != b && L.leq(ji[a], ji[b]);
  }
  return Poset::from_relation(std::move(names), std::move(less));
}

DistributiveLattice flag_minor_lattice(const std::vector<int>& M, int n) {
  if (M.empty()) throw std::invalid_argument("flag lattice needs a nonempty rank set");
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i] < 1 || M[i] >= n) throw std::invalid_argument("flag lattice needs 1 <= m < n");
    if (i > 0 && M[i] <= M[i - 1]) throw std::invalid_argument("flag lattice rank set must be increasing");
  }
  std::vector<std::vector<int>> elems;
  for (int p : M)
    for (auto& s : subsets_of_size(n, p)) elems.push_back(s);
  std::sort(elems.begin(), elems.end());
  const std::size_t N = elems.size();
  std::vector<std::string> labels;
  for (const auto& a : elems) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    labels.push_back(s + "]");
  }
  std::vector<std::vector<bool>> leq(N, std::vector<bool>(N, false));
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      const auto &a = elems[x], &b = elems[y];
      if (a.size() < b.size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < b.size() && ok; ++i) ok = a[i] <= b[i];
      leq[x][y] = ok;
    }
  return DistributiveLattice(std::move(labels), elems, std::move(leq));
}

Ideal hibi_ideal(const DistributiveLattice& L) {
  std::vector<Polynomial> gens;
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = a + 1; b < L.size(); ++b) {
      if (L.comparable(a, b)) continue;
      VarId xy[2] = {L.var_of(a), L.var_of(b)};
      VarId mj[2] = {L.var_of(L.meet(a, b)), L.var_of(L.join(a, b))};
      gens.push_back(Polynomial::from_terms(
          {{Monomial::product_of(xy), Scalar(1)}, {Monomial::product_of(mj), Scalar(-1)}}));
    }
  if (gens.empty()) throw std::invalid_argument("the lattice is a chain; its Hibi ideal is zero");
  return Ideal(L.variables(), std::move(gens));
}

MonomialIdeal incomparable_products(const DistributiveLattice& L) {
  std::vector<Monomial> gens;
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t b = a + 1; b < L.size(); ++b)
      if (!L.comparable(a, b)) {
        VarId xy[2] = {L.var_of(a), L.var_of(b)};
        gens.push_back(Monomial::product_of(xy));
      }
  return MonomialIdeal(std::move(gens));
}

std::vector<std::vector<int>> order_polytope_vertices(const Poset& P) {
  auto ideals = P.order_ideals();
  std::vector<std::vector<int>> out(P.size(), std::vector<int>(ideals.size(), 0));
  for (std::size_t p = 0; p < P.size(); ++p)
    for (std::size_t k = 0; k < ideals.size(); ++k) out[p][k] = (ideals[k] >> p) & 1;
  return out;
}

std::vector<std::vector<int>> order_polytope_vertices(const DistributiveLattice& L) {
  const auto& ji = L.join_irreducible_elements();
  std::vector<std::vector<int>> out(ji.size(), std::vector<int>(L.size(), 0));
  for (std::size_t k = 0; k < ji.size(); ++k)
    for (std::size_t a = 0; a < L.size(); ++a) out[k][a] = (L.ideal_of(a) >> k) & 1;
  return out;
}

namespace {

struct RankData {
  Poset P;
  std::vector<int> rank;
  int r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

RankData rank_data(const DistributiveLattice& L) {
  RankData d{join_irreducibles(L), {}, 0, {}};
  d.rank = d.P.ranks();
  d.r = d.P.rank();
  d.covers = d.P.cover_pairs();
  return d;
}

ChainClassification classify(const RankData& d, const DistributiveLattice& L, const std::vector<std::size_t>& chain) {
  const std::size_t n = d.P.size();
  std::vector<int> f(n, 0);
  for (std::size_t a : chain)
    for (std::size_t p = 0; p < n; ++p) f[p] += (L.ideal_of(a) >> p) & 1;
  ChainClassification c;
  c.rank_constant = true;
  for (std::size_t p = 0; p < n && c.rank_constant; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (d.rank[p] == d.rank[q] && f[p] != f[q]) {
        c.rank_constant = false;
        break;
      }
  c.equatorial = n > 0 && *std::min_element(f.begin(), f.end()) == 0;
  for (int j = 2; j <= d.r && c.equatorial; ++j) {
    bool found = false;
    for (auto [a, b] : d.covers)
      if (d.rank[a] == j - 1 && d.rank[b] == j && f[a] == f[b]) {
        found = true;
        break;
      }
    c.equatorial = found;
  }
  c.kind = c.equatorial ? ChainKind::Equatorial : c.rank_constant ? ChainKind::RankConstant : ChainKind::Neither;
  return c;
}

void check_chain(const DistributiveLattice& L, const std::vector<std::size_t>& chain) {
  for (std::size_t a : chain)
    if (a >= L.size()) throw std::invalid_argument("chain element out of range");
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!L.comparable(chain[i], chain[j]) || chain[i] == chain[j])
        throw std::invalid_argument("not a chain: " + L.label(chain[i]) + ", " + L.label(chain[j]));
}

TermOrder height_order(const DistributiveLattice& L, const std::vector<std::size_t>& lowest) {
  std::vector<bool> is_low(L.size(), false);
  for (std::size_t a : lowest) is_low[a] = true;
  std::vector<std::size_t> rest;
  for (std::size_t a = 0; a < L.size(); ++a)
    if (!is_low[a]) rest.push_back(a);
  auto by_height = [&](std::size_t a, std::size_t b) {
    return std::pair{L.height(a), a} < std::pair{L.height(b), b};
  };
  std::vector<std::size_t> low = lowest;
  std::sort(low.begin(), low.end(), by_height);
  std::sort(rest.begin(), rest.end(), by_height);
  low.insert(low.end(), rest.begin(), rest.end());  // ascending: first entry is the smallest variable
  std::vector<VarId> prio;
  for (auto it = low.rbegin(); it != low.rend(); ++it) prio.push_back(L.var_of(*it));
  return TermOrder::grevlex(std::move(prio));
}

}  // namespace

ChainClassification equatorial_classify(const DistributiveLattice& L, const std::vector<std::size_t>& chain) {
  check_chain(L, chain);
  return classify(rank_data(L), L, chain);
}

std::string to_string(ChainKind k) {
  switch (k) {
    case ChainKind::Equatorial: return "equatorial";
    case ChainKind::RankConstant: return "rank-constant";
    case ChainKind::Neither: return "neither";
  }
  return "?";
}

std::vector<std::size_t> rank_constant_elements(const DistributiveLattice& L) {
  RankData d = rank_data(L);
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < L.size(); ++a)
    if (classify(d, L, {a}).rank_constant) out.push_back(a);
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return L.height(a) < L.height(b); });
  return out;
}

TermOrder linear_extension_order(const DistributiveLattice& L) { return height_order(L, {}); }

TermOrder rank_height_order(const DistributiveLattice& L) { return height_order(L, rank_constant_elements(L)); }

TermOrder rw_term_order(const DistributiveLattice& L) {
  if (!join_irreducibles(L).is_graded())
    throw std::invalid_argument("rw_term_order needs a graded poset of join-irreducibles");
  return rank_height_order(L);
}

SimplicialComplex equatorial_complex(const DistributiveLattice& L) {
  if (L.size() > kMaxVertices) throw std::invalid_argument("equatorial complex is limited to 64 lattice elements");
  RankData d = rank_data(L);
  std::vector<std::size_t> order;
  for (std::size_t a = 0; a < L.size(); ++a)
    if (a != L.bottom() && a != L.top()) order.push_back(a);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair{L.height(a), a} < std::pair{L.height(b), b};
  });
  std::vector<Face> faces;
  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (classify(d, L, chain).equatorial) {
      Face f = 0;
      for (std::size_t a : chain) f |= Face{1} << a;
      faces.push_back(f);
    }
    for (std::size_t k = start; k < order.size(); ++k) {
      std::size_t a = order[k];
      if (!chain.empty() && !(L.leq(chain.back(), a) && chain.back() != a)) continue;
      chain.push_back(a);
      rec(k + 1);
      chain.pop_back();
    }
  };
  rec(0);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < L.size(); ++a) names.push_back(L.variables().name(L.var_of(a)));
  return SimplicialComplex::generated_by(std::move(names), std::move(faces));
}

}  // namespace gorlab::catalog
