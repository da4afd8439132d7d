#include "gorlab/catalog/polytope.hpp"

#include <stdexcept>

#include "gorlab/catalog/grid.hpp"

namespace gorlab::catalog {

SpecialSimplexResult special_simplex_check(const FacetIncidence& P, const std::set<std::string>& sigma) {
  if (P.facets.empty()) throw std::invalid_argument("special_simplex_check needs at least one facet");
  for (std::size_t k = 0; k < P.facets.size(); ++k) {
    std::size_t missing = 0;
    for (const auto& v : sigma) missing += !P.facets[k].count(v);
    if (missing != 1) {
      std::string name = k < P.facet_names.size() ? P.facet_names[k] : "facet " + std::to_string(k + 1);
      return {false, name, missing};
    }
  }
  return {true, "", 1};
}

FacetIncidence segre_polytope(int n) {
  if (n < 2) throw std::invalid_argument("segre_polytope needs n >= 2");
  FacetIncidence P;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) P.vertices.push_back(cell_label({a, b}));
  for (int i = 1; i <= n; ++i) {
    std::set<std::string> f;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (a != i) f.insert(cell_label({a, b}));
    P.facets.push_back(std::move(f));
    P.facet_names.push_back("u" + std::to_string(i));
  }
  for (int j = 1; j <= n; ++j) {
    std::set<std::string> f;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (b != j) f.insert(cell_label({a, b}));
    P.facets.push_back(std::move(f));
    P.facet_names.push_back("v" + std::to_string(j));
  }
  return P;
}

FacetIncidence veronese_polytope(int n) {
  if (n < 2) throw std::invalid_argument("veronese_polytope needs n >= 2");
  FacetIncidence P;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) P.vertices.push_back(cell_label({a, b}, true));
  for (int i = 1; i <= n; ++i) {
    std::set<std::string> f;
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        if (a != i && b != i) f.insert(cell_label({a, b}, true));
    P.facets.push_back(std::move(f));
    P.facet_names.push_back("y" + std::to_string(i));
  }
  return P;
}

std::set<std::string> segre_diagonal(int n) {
  std::set<std::string> s;
  for (int i = 1; i <= n; ++i) s.insert(cell_label({i, i}));
  return s;
}

std::set<std::string> veronese_antidiagonal(int n) {
  if (n < 2 || n % 2) throw std::invalid_argument("veronese_antidiagonal needs an even n >= 2");
  std::set<std::string> s;
  for (int i = 1; i <= n / 2; ++i) s.insert(cell_label({i, n + 1 - i}, true));
  return s;
}

}  // namespace gorlab::catalog
