#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorlab/algebra.hpp"

namespace gorlab {

/// Monomial ideal stored by its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> generators);

  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  /// degree -> number of minimal generators
  std::map<std::uint32_t, std::size_t> generator_degrees() const;
  std::string str(const VariableTable& table) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Monomial> gens_;  // sorted by (degree, canonical order)
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  std::size_t pair_budget = 200000;
  Field field = Field::rationals();
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t product_skips = 0;
  std::size_t chain_skips = 0;
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;
  TermOrder order;
  bool reduced = false;
  GroebnerStats stats;
};

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& ord,
                       const Field& field = Field::rationals());

GroebnerBasis buchberger(const Ideal& I, const TermOrder& ord, const GroebnerOptions& opts = {});

MonomialIdeal initial_ideal(const GroebnerBasis& G);
MonomialIdeal initial_ideal(std::span<const Polynomial> G, const TermOrder& ord);

bool is_groebner_basis(std::span<const Polynomial> F, const TermOrder& ord, const Field& field = Field::rationals());

/// All monomials of degree d in variables 0..nvars-1.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

/// dim_K of the degree-d piece of the ideal generated by `gens` (homogeneous).
std::size_t graded_piece_dimension(std::span<const Polynomial> gens, std::size_t nvars, std::uint32_t d,
                                   const Field& field = Field::rationals());
/// Hilbert function of R/I in degree d.
std::size_t hilbert_function(const Ideal& I, std::uint32_t d);
std::size_t hilbert_function(const MonomialIdeal& M, std::size_t nvars, std::uint32_t d);

/// Number of minimal generators of a homogeneous ideal, by degree (exact linear algebra).
std::map<std::uint32_t, std::size_t> minimal_generator_degrees(const Ideal& I);

}  // namespace gorlab
