#include <iostream>

#include "gorlab/acceptance.hpp"

int main() {
  bool ok = true;
  gorlab::run_acceptance([&](const gorlab::CriterionResult& r) {
    std::cout << gorlab::format_result(r) << std::endl;
    ok = ok && r.pass;
  });
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << std::endl;
  return ok ? 0 : 1;
}
