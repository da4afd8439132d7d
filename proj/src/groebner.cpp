#include "gorlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace gorlab {

// ---------------------------------------------------------------- monomial ideals

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto& g : generators) {
    bool redundant = false;
    for (const auto& k : gens_)
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::map<std::uint32_t, std::size_t> MonomialIdeal::generator_degrees() const {
  std::map<std::uint32_t, std::size_t> out;
  for (const auto& g : gens_) ++out[g.degree()];
  return out;
}

std::string MonomialIdeal::str(const VariableTable& table) const {
  std::string s = "<";
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) s += ", ";
    s += gens_[k].str(table);
  }
  return s + ">";
}

// ---------------------------------------------------------------- ordered polynomials

namespace {

using Term = Polynomial::Term;

// Terms sorted strictly descending under the active order.
struct OPoly {
  std::vector<Term> terms;
  const Term& lead() const { return terms.front(); }
  bool zero() const { return terms.empty(); }
};

OPoly to_ordered(const Polynomial& p, const TermOrder& ord) {
  OPoly o{p.terms()};
  std::sort(o.terms.begin(), o.terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.monomial, b.monomial); });
  return o;
}

Polynomial to_poly(const OPoly& o) { return Polynomial::from_terms(o.terms); }

void normalize(Scalar& c, const Field& field) {
  if (!field.is_rational()) c = field.reduce(c);
}

// a[from..] - c * m * b, result descending.
std::vector<Term> sub_mul(const std::vector<Term>& a, std::size_t from, const Scalar& c, const Monomial& m,
                          const OPoly& b, const TermOrder& ord, const Field& field) {
  std::vector<Term> out;
  out.reserve(a.size() - from + b.terms.size());
  std::size_t i = from, j = 0;
  while (i < a.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b.terms[j].monomial * m;
    if (i == a.size()) {
      Scalar v = -c * b.terms[j].coeff;
      normalize(v, field);
      if (v != 0) out.push_back({std::move(bm), std::move(v)});
      ++j;
      continue;
    }
    auto cmp = ord.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Scalar v = -c * b.terms[j].coeff;
      normalize(v, field);
      if (v != 0) out.push_back({std::move(bm), std::move(v)});
      ++j;
    } else {
      Scalar v = a[i].coeff - c * b.terms[j].coeff;
      normalize(v, field);
      if (v != 0) out.push_back({std::move(bm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(OPoly& p, const Field& field) {
  if (p.zero()) return;
  Scalar inv = 1 / p.terms.front().coeff;
  for (auto& t : p.terms) {
    t.coeff *= inv;
    normalize(t.coeff, field);
  }
}

// Full reduction: repeatedly reduce the largest reducible term by the first divisor in list order.
OPoly reduce_full(OPoly h, const std::vector<const OPoly*>& G, const TermOrder& ord, const Field& field) {
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < h.terms.size()) {
    const Term& t = h.terms[pos];
    const OPoly* div = nullptr;
    for (const OPoly* g : G)
      if (g->lead().monomial.divides(t.monomial)) {
        div = g;
        break;
      }
    if (!div) {
      rem.push_back(t);
      ++pos;
      continue;
    }
    Scalar c = t.coeff / div->lead().coeff;
    normalize(c, field);
    Monomial m = t.monomial.quotient(div->lead().monomial);
    h.terms = sub_mul(h.terms, pos, c, m, *div, ord, field);
    pos = 0;
  }
  return OPoly{std::move(rem)};
}

OPoly s_polynomial(const OPoly& f, const OPoly& g, const TermOrder& ord, const Field& field) {
  Monomial l = f.lead().monomial.lcm(g.lead().monomial);
  Monomial mf = l.quotient(f.lead().monomial);
  Monomial mg = l.quotient(g.lead().monomial);
  // (1/lc f) mf f - (1/lc g) mg g
  OPoly a;
  Scalar cf = 1 / f.lead().coeff;
  normalize(cf, field);
  for (const auto& t : f.terms) {
    Scalar v = t.coeff * cf;
    normalize(v, field);
    a.terms.push_back({t.monomial * mf, v});
  }
  Scalar cg = 1 / g.lead().coeff;
  normalize(cg, field);
  a.terms = sub_mul(a.terms, 0, cg, mg, g, ord, field);
  return a;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& ord, const Field& field) {
  std::vector<OPoly> gs;
  gs.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
    gs.push_back(to_ordered(g.reduced(field), ord));
  }
  std::vector<const OPoly*> ptrs;
  for (const auto& g : gs) ptrs.push_back(&g);
  return to_poly(reduce_full(to_ordered(f.reduced(field), ord), ptrs, ord, field));
}

GroebnerBasis buchberger(const Ideal& I, const TermOrder& ord, const GroebnerOptions& opts) {
  if (I.generators().empty()) throw std::invalid_argument("buchberger: zero ideal");
  if (!I.is_homogeneous()) throw std::invalid_argument("buchberger: ideal is not homogeneous");
  if (ord.size() != I.table().size())
    throw std::invalid_argument("buchberger: term order does not cover the variable table");
  const Field& field = opts.field;

  std::vector<OPoly> G;
  auto add_element = [&](OPoly p) {
    make_monic(p, field);
    G.push_back(std::move(p));
  };
  for (const auto& g : I.generators()) {
    OPoly p = to_ordered(g.reduced(field), ord);
    if (!p.zero()) add_element(std::move(p));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::vector<std::vector<char>> pending;  // pending[j][i] for i < j

  auto add_pairs_for = [&](std::size_t j) {
    pending.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert(Pair{i, j, G[i].lead().monomial.lcm(G[j].lead().monomial)});
      pending[j][i] = 1;
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending[b][a] != 0;
  };

  GroebnerStats stats;
  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending[p.j][p.i] = 0;
    const Monomial& li = G[p.i].lead().monomial;
    const Monomial& lj = G[p.j].lead().monomial;
    if (li.coprime(lj)) {
      ++stats.product_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].lead().monomial.divides(p.lcm)) continue;
      if (!is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
    }
    if (chain) {
      ++stats.chain_skips;
      continue;
    }
    if (++stats.pairs_reduced > opts.pair_budget)
      throw BudgetExceeded("buchberger: budget of " + std::to_string(opts.pair_budget) +
                           " S-pair reductions exceeded");
    OPoly s = s_polynomial(G[p.i], G[p.j], ord, field);
    std::vector<const OPoly*> ptrs;
    ptrs.reserve(G.size());
    for (const auto& g : G) ptrs.push_back(&g);
    OPoly r = reduce_full(std::move(s), ptrs, ord, field);
    if (!r.zero()) {
      add_element(std::move(r));
      add_pairs_for(G.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < G.size() && !drop; ++b) {
      if (a == b) continue;
      const Monomial& la = G[a].lead().monomial;
      const Monomial& lb = G[b].lead().monomial;
      if (lb.divides(la) && (!(la == lb) || b < a)) drop = true;
    }
    if (!drop) keep.push_back(a);
  }
  std::vector<OPoly> minimal;
  for (auto a : keep) minimal.push_back(std::move(G[a]));

  // Interreduce tails.
  std::vector<OPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const OPoly*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    OPoly head{{minimal[a].lead()}};
    OPoly tail{std::vector<Term>(minimal[a].terms.begin() + 1, minimal[a].terms.end())};
    OPoly rt = reduce_full(std::move(tail), others, ord, field);
    head.terms.insert(head.terms.end(), rt.terms.begin(), rt.terms.end());
    make_monic(head, field);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OPoly& a, const OPoly& b) {
    const Monomial& la = a.lead().monomial;
    const Monomial& lb = b.lead().monomial;
    if (la.degree() != lb.degree()) return la.degree() < lb.degree();
    return ord.compare(la, lb) < 0;
  });

  GroebnerBasis out{{}, ord, true, stats};
  for (const auto& r : reduced) out.elements.push_back(to_poly(r));
  return out;
}

MonomialIdeal initial_ideal(std::span<const Polynomial> G, const TermOrder& ord) {
  std::vector<Monomial> lts;
  for (const auto& g : G) lts.push_back(g.leading_monomial(ord));
  return MonomialIdeal(std::move(lts));
}

MonomialIdeal initial_ideal(const GroebnerBasis& G) { return initial_ideal(G.elements, G.order); }

bool is_groebner_basis(std::span<const Polynomial> F, const TermOrder& ord, const Field& field) {
  std::vector<OPoly> gs;
  for (const auto& f : F) {
    if (f.is_zero()) throw std::invalid_argument("is_groebner_basis: zero polynomial");
    gs.push_back(to_ordered(f.reduced(field), ord));
  }
  std::vector<const OPoly*> ptrs;
  for (const auto& g : gs) ptrs.push_back(&g);
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i].lead().monomial.coprime(gs[j].lead().monomial)) continue;
      if (!reduce_full(s_polynomial(gs[i], gs[j], ord, field), ptrs, ord, field).zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------- graded pieces

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> cur;
  auto rec = [&](auto&& self, VarId start, std::uint32_t left) -> void {
    if (left == 0) {
      out.push_back(Monomial::from_factors(cur));
      return;
    }
    for (VarId v = start; v < nvars; ++v) {
      cur.push_back({v, 1});
      self(self, v, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

// Row-echelon accumulator keyed by leading monomial.
class Echelon {
 public:
  Echelon(const TermOrder& ord, const Field& field) : ord_(ord), field_(field) {}

  bool insert(OPoly row) {
    while (!row.zero()) {
      auto it = pivots_.find(row.lead().monomial);
      if (it == pivots_.end()) {
        make_monic(row, field_);
        Monomial key = row.lead().monomial;
        pivots_.emplace(std::move(key), std::move(row));
        return true;
      }
      Scalar c = row.lead().coeff;
      row.terms = sub_mul(row.terms, 0, c, Monomial(), it->second, ord_, field_);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  const TermOrder& ord_;
  const Field& field_;
  std::unordered_map<Monomial, OPoly, MonomialHash> pivots_;
};

}  // namespace

std::size_t graded_piece_dimension(std::span<const Polynomial> gens, std::size_t nvars, std::uint32_t d,
                                   const Field& field) {
  TermOrder ord = TermOrder::grevlex_natural(nvars);
  Echelon ech(ord, field);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int gd = g.degree();
    if (gd > static_cast<int>(d)) continue;
    OPoly base = to_ordered(g.reduced(field), ord);
    for (const auto& m : monomials_of_degree(nvars, d - gd)) {
      OPoly row;
      for (const auto& t : base.terms) row.terms.push_back({t.monomial * m, t.coeff});
      ech.insert(std::move(row));
    }
  }
  return ech.rank();
}

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t hilbert_function(const Ideal& I, std::uint32_t d) {
  if (!I.is_homogeneous()) throw std::invalid_argument("hilbert_function: ideal is not homogeneous");
  std::size_t n = I.table().size();
  return binom(n + d - 1, d) - graded_piece_dimension(I.generators(), n, d, I.field());
}

std::size_t hilbert_function(const MonomialIdeal& M, std::size_t nvars, std::uint32_t d) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(nvars, d))
    if (!M.contains(m)) ++count;
  return count;
}

std::map<std::uint32_t, std::size_t> minimal_generator_degrees(const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("minimal_generator_degrees: ideal is not homogeneous");
  std::size_t n = I.table().size();
  std::set<std::uint32_t> degrees;
  for (const auto& g : I.generators()) degrees.insert(static_cast<std::uint32_t>(g.degree()));
  std::map<std::uint32_t, std::size_t> out;
  for (auto d : degrees) {
    std::vector<Polynomial> lower, upto;
    for (const auto& g : I.generators()) {
      if (static_cast<std::uint32_t>(g.degree()) < d) lower.push_back(g);
      if (static_cast<std::uint32_t>(g.degree()) <= d) upto.push_back(g);
    }
    std::size_t a = graded_piece_dimension(upto, n, d, I.field());
    std::size_t b = lower.empty() ? 0 : graded_piece_dimension(lower, n, d, I.field());
    if (a > b) out[d] = a - b;
  }
  return out;
}

}  // namespace gorlab
