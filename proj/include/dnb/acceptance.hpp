#pragma once

// Acceptance criteria, runnable from the CLI (`dnb selftest`) and from the
// acceptance test binary. Every criterion is exact and has a wall-clock
// budget.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace dnb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // first failure, or a summary of what was checked
  double seconds = 0;
  double budget_seconds = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

CriterionResult lemma31_oracle(std::uint64_t seed = kDefaultSeed);
CriterionResult boundary_constancy(std::uint64_t seed = kDefaultSeed);
CriterionResult twist_subgroup(std::uint64_t seed = kDefaultSeed);
CriterionResult factorization_round_trip(std::uint64_t seed = kDefaultSeed);
CriterionResult zieschang_condition(std::uint64_t seed = kDefaultSeed);
CriterionResult free_group_kernel(std::uint64_t seed = kDefaultSeed);
CriterionResult groupoid_axioms(std::uint64_t seed = kDefaultSeed);

std::vector<std::function<CriterionResult(std::uint64_t)>> all_criteria();

// Runs everything, printing one `PASS`/`FAIL` line per criterion.
std::vector<CriterionResult> run_all(std::ostream& out, std::uint64_t seed = kDefaultSeed);

std::string format(const CriterionResult& r);

}  // namespace dnb::acceptance
