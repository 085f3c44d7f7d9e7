#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "dnb/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = dnb::acceptance::kDefaultSeed;
  if (argc > 1) {
    seed = std::stoull(argv[1]);
  }
  const auto results = dnb::acceptance::run_all(std::cout, seed);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const dnb::acceptance::CriterionResult& r) { return r.passed; });
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
