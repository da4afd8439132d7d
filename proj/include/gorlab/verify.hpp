#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorlab/algebra.hpp"
#include "gorlab/groebner.hpp"
#include "gorlab/simplicial.hpp"

namespace gorlab {

struct KntrickResult {
  bool ok = false;
  bool pure = false;
  int dimension = 0;        // Krull dimension of K[x]/J, i.e. facet size
  std::size_t facets = 0;   // multiplicity of K[x]/J
  int expected_dimension = 0;
  std::size_t expected_degree = 0;
};

/// Sufficient test for J = in(I) given J ⊆ in(I): the complex of J is pure with the
/// dimension and degree of I. Throws if J is not squarefree.
KntrickResult kntrick_check(const MonomialIdeal& J, const VariableTable& table, int dim_I, std::size_t deg_I);

struct LeadingTermWitness {
  bool ok = false;
  std::vector<std::size_t> witness;  // predicted generator k is the leading term of generators()[witness[k]]
  std::optional<Monomial> unmatched;
};

/// Finds, for every predicted generator, an ideal generator whose leading term it is.
LeadingTermWitness leading_term_witnesses(const Ideal& I, const TermOrder& ord, const MonomialIdeal& predicted);

struct BettiComparison {
  bool equal = true;
  int i = 0, j = 0;  // first difference, scanning i then j
  std::size_t left = 0, right = 0;
};

BettiComparison betti_compare(const BettiDiagram& a, const BettiDiagram& b);

/// Error raised by a report stage; the message starts with the stage label.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what, bool resource_cap = false);
  const std::string& stage() const { return stage_; }
  /// True when a pair budget or similar cap stopped the stage.
  bool resource_cap() const { return resource_cap_; }

 private:
  std::string stage_;
  bool resource_cap_ = false;
};

enum class Family { Segre, Veronese, Pfaffian, Minors, Hibi };

std::string to_string(Family f);
Family parse_family(const std::string& s);

struct FamilyParams {
  Family family = Family::Segre;
  int n = 3;
  int r = 2;                   // Pfaffian: ideal of 2r-Pfaffians
  int m = 2;                   // Hibi: Grassmannian rank
  std::vector<int> flag;       // Hibi: flag ranks, overrides m when nonempty
  std::string poset_file;      // Hibi: poset input, overrides m and flag
  std::string poset_text;      // Hibi: poset contents already loaded
  Field field = Field::prime(32003);
  std::size_t pair_budget = 200000;
  std::size_t vertex_cap = 20;
  bool timings = false;
};

/// Throws std::invalid_argument when the parameters are outside the supported range.
void check_family_params(const FamilyParams& p);

struct StageRecord {
  std::string name;
  bool ok = true;
  std::string detail;
  double seconds = 0;
};

struct FamilyReport {
  FamilyParams params;
  std::string label;           // e.g. "segre n=3"
  std::string route;           // "groebner" or "witness"
  std::size_t ideal_generators = 0;
  bool predicted_match = false;
  std::vector<std::string> initial_generators;
  int dim = 0;                 // Krull dimension of the initial complex's ring
  std::size_t degree = 0;
  bool pure = false;
  std::vector<std::string> cone_points;
  std::vector<std::vector<std::string>> core_facets;
  std::vector<long long> h;
  std::vector<long long> core_h;
  std::optional<std::vector<long long>> expected_h;
  int a_invariant = 0;
  bool two_way_shelling = false;
  std::string shelling_source;  // "catalog" or "search"
  bool gorenstein = false;
  std::string gorenstein_witness;
  bool sphere = false;
  std::optional<BettiDiagram> betti;
  std::string betti_note;
  bool beta0_match = false;
  std::vector<StageRecord> stages;

  bool all_ok() const;
};

/// Ideal, term order and predicted initial ideal of one family instance.
struct FamilyInstance {
  std::string label;
  Ideal ideal;
  TermOrder order;
  std::optional<MonomialIdeal> predicted;
  bool groebner_route = true;  // false: leading-term witnesses plus dimension/degree
  int dim = 0;
  std::size_t degree = 0;
};

FamilyInstance family_instance(const FamilyParams& params);
/// Initial ideal along the instance's route. Throws if the witness route cannot certify the prediction.
MonomialIdeal family_initial_ideal(const FamilyInstance& inst, std::size_t pair_budget = 200000);

/// Runs the full pipeline; a failing check marks its stage, an exception raises StageError.
FamilyReport family_report(const FamilyParams& params);

/// Reports are emitted with sorted keys and canonical facet order.
std::string report_json(const std::vector<FamilyReport>& reports, bool timings = false);
std::string report_text(const FamilyReport& r, bool timings = false);
std::string report_csv(const std::vector<FamilyReport>& reports);

}  // namespace gorlab
