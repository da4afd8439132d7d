#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gorlab/field.hpp"

namespace gorlab {

using VarId = std::uint32_t;

/// Structured variable identifier: a symbol plus an integer tuple, e.g. x[1,2].
struct VarLabel {
  std::string symbol;
  std::vector<int> index;

  auto operator<=>(const VarLabel&) const = default;
  std::string str() const;
};

VarLabel var(std::string symbol, std::vector<int> index);

class VariableTable {
 public:
  VarId add(VarLabel label);
  VarId id(const VarLabel& label) const;
  std::optional<VarId> find(const VarLabel& label) const;
  const VarLabel& label(VarId v) const;
  std::string name(VarId v) const { return label(v).str(); }
  std::size_t size() const { return labels_.size(); }
  const std::vector<VarLabel>& labels() const { return labels_; }

 private:
  std::vector<VarLabel> labels_;
  std::map<VarLabel, VarId> index_;
};

class Monomial {
 public:
  struct Factor {
    VarId var;
    std::uint32_t exp;
    bool operator==(const Factor&) const = default;
  };

  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t e = 1);
  static Monomial from_factors(std::vector<Factor> factors);
  static Monomial product_of(std::span<const VarId> vars);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  std::uint64_t support_mask() const { return mask_; }
  bool is_one() const { return factors_.empty(); }
  bool is_squarefree() const;
  std::vector<VarId> support() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Precondition: divisor divides *this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  std::string str(const VariableTable& table) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Canonical order, independent of any term order.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  void finish();

  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

enum class OrderKind { GradedRevLex, GradedLex };

/// Graded monomial order driven by a variable priority list (highest first).
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::vector<VarId> priority);
  static TermOrder grevlex(std::vector<VarId> priority) { return {OrderKind::GradedRevLex, std::move(priority)}; }
  static TermOrder glex(std::vector<VarId> priority) { return {OrderKind::GradedLex, std::move(priority)}; }
  /// Priority 0 > 1 > ... > n-1.
  static TermOrder grevlex_natural(std::size_t n);

  OrderKind kind() const { return kind_; }
  const std::vector<VarId>& priority() const { return priority_; }
  std::size_t size() const { return priority_.size(); }
  /// 0 is the highest-priority variable.
  std::uint32_t rank(VarId v) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string str(const VariableTable& table) const;

 private:
  OrderKind kind_;
  std::vector<VarId> priority_;
  std::vector<std::uint32_t> rank_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const TermOrder& ord);

class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Scalar coeff;
    bool operator==(const Term&) const = default;
  };

  Polynomial() = default;
  static Polynomial constant(const Scalar& c);
  static Polynomial from_monomial(const Monomial& m, const Scalar& c = 1);
  static Polynomial variable(VarId v);
  /// Combines like terms and drops zeros; coefficients are reduced into `field`.
  static Polynomial from_terms(std::vector<Term> terms, const Field& field = Field::rationals());

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int degree() const;
  bool is_homogeneous() const;

  const Term& leading_term(const TermOrder& ord) const;
  const Monomial& leading_monomial(const TermOrder& ord) const { return leading_term(ord).monomial; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times(const Monomial& m) const;
  Polynomial reduced(const Field& field) const;

  std::string str(const VariableTable& table) const;
  /// Terms listed from largest to smallest under `ord`.
  std::string str(const VariableTable& table, const TermOrder& ord) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;  // sorted by canonical monomial order
};

class Ideal {
 public:
  Ideal(VariableTable table, std::vector<Polynomial> generators, Field field = Field::rationals());

  const VariableTable& table() const { return table_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const Field& field() const { return field_; }
  bool is_homogeneous() const { return homogeneous_; }

 private:
  VariableTable table_;
  std::vector<Polynomial> generators_;
  Field field_;
  bool homogeneous_ = true;
};

// ---- tables and generator constructors ----

/// x[i,j], 1-based, row-major.
VariableTable generic_matrix_table(int m, int n);
/// x[i,j] with i <= j, row-major.
VariableTable symmetric_matrix_table(int n);
/// x[i,j] with i < j, row-major.
VariableTable skew_matrix_table(int n);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const PolyMatrix& m);

struct Minor {
  std::vector<int> rows;  // 1-based
  std::vector<int> cols;
  Polynomial value;
};

/// All t-minors of `m`, rows and columns in lexicographic order.
std::vector<Minor> minors(const PolyMatrix& m, int t);

/// Matrix whose (i,j) entry is the variable x[i,j] of `table` (symmetric tables use x[min,max]).
PolyMatrix variable_matrix(const VariableTable& table, int m, int n, bool symmetric);

Ideal generic_minor_ideal(int t, int m, int n, bool symmetric);

/// Crossing-parity signed matching expansion. Variables refer to skew_matrix_table(n).
Polynomial pfaffian(std::span<const int> J, int n);
Polynomial pfaffian(std::span<const int> J, const VariableTable& skew_table);
Ideal pfaffian_ideal(int t, int n);

int d_value(int i, int j, int n);

/// k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace gorlab
