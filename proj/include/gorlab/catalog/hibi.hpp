#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/groebner.hpp"
#include "gorlab/simplicial.hpp"

namespace gorlab::catalog {

/// Finite poset stored as its full order relation. At most 64 elements.
class Poset {
 public:
  Poset() = default;
  /// `covers` are pairs (a, b) meaning a < b; the transitive closure is taken.
  static Poset from_covers(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);
  /// `less[i][j]` true iff element i < element j. Must be a strict partial order.
  static Poset from_relation(std::vector<std::string> elements, std::vector<std::vector<bool>> less);
  static Poset chain(int k, const std::string& prefix = "");
  static Poset antichain(int k);
  /// Cartesian product; element names are concatenated.
  static Poset product(const Poset& a, const Poset& b);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t index_of(const std::string& name) const;

  bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less_[a][b]; }
  bool covers(std::size_t a, std::size_t b) const;  // a is covered by b
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  /// rank(p) = number of elements in a longest chain ending at p.
  std::vector<int> ranks() const;
  int rank() const;
  bool is_graded() const;
  std::size_t width() const;

  std::uint64_t down_set(std::size_t p) const;
  bool is_order_ideal(std::uint64_t mask) const;
  /// All order ideals sorted by increasing bitmask (bit i = element i).
  std::vector<std::uint64_t> order_ideals() const;
  std::vector<std::size_t> maximal_elements(std::uint64_t mask) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> less_;
};

bool is_graded(const Poset& P);
bool isomorphic(const Poset& a, const Poset& b);
/// One representative per isomorphism class of posets with exactly n elements (n <= 6).
std::vector<Poset> posets_up_to_isomorphism(int n);

/// Finite distributive lattice with precomputed meet/join tables and its Birkhoff data.
class DistributiveLattice {
 public:
  /// `leq` must define a distributive lattice; `keys` become the variable indices t[key].
  DistributiveLattice(std::vector<std::string> labels, std::vector<std::vector<int>> keys,
                      std::vector<std::vector<bool>> leq, std::string symbol = "t");

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& key(std::size_t i) const { return keys_[i]; }
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool comparable(std::size_t a, std::size_t b) const { return leq_[a][b] || leq_[b][a]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  /// Join-irreducible elements, in lattice index order.
  const std::vector<std::size_t>& join_irreducible_elements() const { return ji_; }
  /// Set of join-irreducibles below `a`, as a bitmask over join_irreducible_elements().
  std::uint64_t ideal_of(std::size_t a) const { return ideal_[a]; }
  /// Number of join-irreducibles below `a`.
  int height(std::size_t a) const;

  const VariableTable& variables() const { return table_; }
  VarId var_of(std::size_t a) const { return static_cast<VarId>(a); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> keys_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
  std::vector<std::size_t> ji_;
  std::vector<std::uint64_t> ideal_;
  VariableTable table_;
};

/// J(P): order ideals sorted by bitmask; element k (0-based) is the variable t[k+1].
DistributiveLattice order_ideal_lattice(const Poset& P);
/// Join-irreducibles of L with the induced order, named by their lattice labels.
Poset join_irreducibles(const DistributiveLattice& L);
/// Minors [a1..ap], p in M, ordered by p >= q and a_i <= b_i. Variables are t[a1,...,ap].
DistributiveLattice flag_minor_lattice(const std::vector<int>& M, int n);

/// Binomials xy - (x meet y)(x join y) over incomparable pairs.
Ideal hibi_ideal(const DistributiveLattice& L);
/// <xy : x, y incomparable>.
MonomialIdeal incomparable_products(const DistributiveLattice& L);

/// Rows = elements of P (resp. join-irreducibles of L); columns = order ideals (resp. lattice elements).
std::vector<std::vector<int>> order_polytope_vertices(const Poset& P);
std::vector<std::vector<int>> order_polytope_vertices(const DistributiveLattice& L);

enum class ChainKind { Equatorial, RankConstant, Neither };

struct ChainClassification {
  bool equatorial = false;
  bool rank_constant = false;
  ChainKind kind = ChainKind::Neither;  // Equatorial wins when both hold
};

/// `chain` lists lattice elements; it must be totally ordered.
ChainClassification equatorial_classify(const DistributiveLattice& L, const std::vector<std::size_t>& chain);
std::string to_string(ChainKind k);

/// Rank-constant elements of L, increasing.
std::vector<std::size_t> rank_constant_elements(const DistributiveLattice& L);

/// Revlex order in which x < y in L implies t_x < t_y.
TermOrder linear_extension_order(const DistributiveLattice& L);
/// Revlex order with the rank-constant elements lowest, then the rest by increasing height.
/// Throws if the join-irreducible poset is not graded.
TermOrder rw_term_order(const DistributiveLattice& L);
/// Same construction with the longest-chain rank function, defined for every poset.
TermOrder rank_height_order(const DistributiveLattice& L);

/// Complex of equatorial chains of non-empty elements, labelled by variable names.
SimplicialComplex equatorial_complex(const DistributiveLattice& L);

}  // namespace gorlab::catalog
