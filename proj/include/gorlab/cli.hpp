#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gorlab/verify.hpp"

namespace gorlab::cli {

/// Everything one invocation needs. Filled from argv and GORLAB_* environment variables.
struct RunConfig {
  std::string command;            // segre, veronese, pfaffian, minors, hibi, groebner, complex, betti
  std::string action = "report";  // family commands: report, ideal, complex
  std::vector<int> n;             // several values give several reports
  std::vector<int> r;
  int m = 2;
  std::vector<int> flag;
  std::string poset;
  std::string field = "gf32003";
  std::size_t pair_budget = 200000;
  std::size_t vertex_cap = 20;
  std::string format = "text";
  std::string output;
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  bool timings = false;
  bool verify_all = false;
  std::string ideal;   // groebner, betti
  std::string facets;  // complex, betti
  std::string check = "all";
  std::size_t random_revlex = 0;

  /// Throws std::invalid_argument on a bad combination.
  void validate() const;
  /// One FamilyParams per requested (n, r) pair, in command-line order.
  std::vector<FamilyParams> family_params() const;
};

/// Exit codes: 0 every check passed, 1 some check failed, 2 usage or input error, 3 resource cap hit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gorlab::cli
