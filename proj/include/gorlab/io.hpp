#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/catalog/hibi.hpp"
#include "gorlab/simplicial.hpp"

namespace gorlab::io {

/// Line-oriented ideal file:
///   # comment
///   vars: x[1,1] x[1,2] ...
///   order: grevlex x[1,2] x[2,1] ...     (optional; priority highest first)
///   field: q | gf2 | gf32003             (optional)
///   x[1,1]*x[2,2] - x[1,2]*x[2,1]        (one polynomial per line)
struct IdealFile {
  VariableTable table;
  std::vector<Polynomial> polynomials;
  std::optional<TermOrder> order;
  Field field = Field::rationals();

  Ideal ideal() const { return Ideal(table, polynomials, field); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Polynomial parse_polynomial(const std::string& text, const VariableTable& table, const Field& field = Field::rationals());
VarLabel parse_variable(const std::string& token);
IdealFile parse_ideal(const std::string& text);
std::string write_ideal(const VariableTable& table, const std::vector<Polynomial>& polys,
                        const std::optional<TermOrder>& order = {}, const Field& field = Field::rationals());
std::string write_monomial_ideal(const VariableTable& table, const MonomialIdeal& M);

/// Complex file: `vertices: a b c`, then one facet per line as space-separated labels; `{}` is the empty facet.
SimplicialComplex parse_complex(const std::string& text);
std::string write_complex(const SimplicialComplex& D);

/// Poset file: `elements: a b c`, then lines `covers: a<b b<c ...` (several per line allowed).
catalog::Poset parse_poset(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace gorlab::io
