#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gorlab/field.hpp"
#include "gorlab/groebner.hpp"

namespace gorlab {

/// A face is a bitmask over the vertex indices of its complex.
using Face = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

inline int face_size(Face f) { return __builtin_popcountll(f); }
inline bool is_subface(Face a, Face b) { return (a & ~b) == 0; }

class SimplicialComplex {
 public:
  /// The complex {∅}.
  SimplicialComplex();
  /// Facets must form an antichain and cover every vertex.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets);
  /// Keeps only the maximal sets among `faces`; vertices not covered are dropped.
  static SimplicialComplex generated_by(std::vector<std::string> vertices, std::vector<Face> faces);
  static SimplicialComplex from_label_sets(const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex simplex(std::vector<std::string> vertices);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<Face>& facets() const { return facets_; }
  Face vertex_set() const;
  std::optional<std::size_t> vertex_index(const std::string& label) const;
  Face face_of(const std::vector<std::string>& labels) const;

  int dimension() const;
  bool is_pure() const;
  bool contains(Face f) const;
  /// All faces including ∅, sorted by (size, mask).
  std::vector<Face> faces() const;
  /// Faces grouped by size: result[k] holds faces with k vertices.
  std::vector<std::vector<Face>> faces_by_size() const;

  SimplicialComplex restriction(Face W) const;
  SimplicialComplex link(Face F) const;

  std::vector<std::string> labels_of(Face f) const;
  std::string face_str(Face f) const;
  std::set<std::set<std::string>> facet_label_sets() const;
  bool same_as(const SimplicialComplex& other) const { return facet_label_sets() == other.facet_label_sets(); }

 private:
  std::vector<std::string> vertices_;
  std::vector<Face> facets_;  // sorted by (size, mask)
};

struct HVector {
  std::vector<long long> h;  // h_0..h_s with h_s != 0
  int d = 0;                 // dim + 1
  int a_invariant() const { return static_cast<int>(h.size()) - 1 - d; }
  bool symmetric() const;
};

class BettiDiagram {
 public:
  void add(int i, int j, std::size_t value);
  std::size_t at(int i, int j) const;
  const std::map<std::pair<int, int>, std::size_t>& values() const { return values_; }
  /// Macaulay-style rows r = j - i; row[r][i] = beta_{i, i + r}.
  std::map<int, std::vector<std::size_t>> rows() const;
  int max_homological_degree() const;
  std::string str() const;
  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  std::map<std::pair<int, int>, std::size_t> values_;  // nonzero entries only
};

struct ShellingCertificate {
  std::vector<Face> order;
  std::vector<Face> restrictions;  // restrictions[0] = ∅
  std::vector<long long> h_vector() const;
};

struct ShellingCheck {
  bool ok = false;
  ShellingCertificate certificate;
  std::size_t failed_at = 0;
  std::string reason;
};

struct GorensteinResult {
  bool gorenstein = false;
  std::size_t faces_checked = 0;
  std::optional<Face> failing_face;  // face of the core, in core vertex indices
  int failing_index = 0;             // homology index that broke the sphere pattern
  std::string witness;
};

struct SphereCertificate {
  bool shelling_found = false;
  bool pseudomanifold = false;
  bool homology_sphere = false;
  bool sphere = false;
  std::vector<Face> shelling;
};

struct ConeSplit {
  Face cone_points = 0;
  SimplicialComplex core;
};

SimplicialComplex complex_of(const MonomialIdeal& M, const VariableTable& table, std::size_t node_cap = 1000000);

Face cone_points(const SimplicialComplex& D);
SimplicialComplex core(const SimplicialComplex& D);
/// Facets of core * simplex(cone) as label sets.
SimplicialComplex join_with_simplex(const SimplicialComplex& base, const std::vector<std::string>& cone);

std::vector<std::size_t> f_vector(const SimplicialComplex& D);  // f_{-1}, f_0, ..., f_dim
HVector h_from_f(const std::vector<std::size_t>& f);
HVector h_vector(const SimplicialComplex& D);

/// Ranks of reduced homology H̃_{-1}, ..., H̃_{dim}.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& D, const Field& field = Field::prime(32003));

GorensteinResult is_gorenstein(const SimplicialComplex& D, const Field& field = Field::prime(32003));

ShellingCheck verify_shelling(const SimplicialComplex& D, const std::vector<Face>& order);
bool verify_two_way(const SimplicialComplex& D, const std::vector<Face>& order);
bool pseudomanifold_check(const SimplicialComplex& D);
std::optional<std::vector<Face>> find_shelling(const SimplicialComplex& D, std::size_t node_budget = 200000);
SphereCertificate sphere_certificate(const SimplicialComplex& D, const std::optional<std::vector<Face>>& order = {},
                                     const Field& field = Field::prime(32003));

BettiDiagram hochster_betti(const SimplicialComplex& D, const Field& field = Field::prime(32003),
                            std::size_t vertex_cap = 20);

SimplicialComplex cyclic_polytope_facets(int n, int d);

bool minimal_multiplicity_check(long long h, long long d, long long e);

long long binomial(long long n, long long k);

}  // namespace gorlab
