#pragma once

// Named verification suites. Each suite is a list of independent checks;
// checks run on a worker pool and results come back in suite order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer/congruence.hpp"

namespace lehmer {

struct CheckOutcome {
  std::string name;
  CongruenceReport report;
  double seconds = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckOutcome> checks;

  bool passed() const;
};

// Unset bounds fall back to each suite's default, which is the bound the
// published results are checked at.
struct SuiteBounds {
  std::optional<unsigned> upto;   // index count N (checks cover n < N)
  std::optional<unsigned> k;      // restricts power-of-modulus suites to one k
  std::optional<unsigned> m;      // largest incomplete bound
  std::optional<unsigned> r;      // restricts the higher suite to one step
  std::optional<unsigned> alpha;  // largest higher order
};

// all, methods, mod9, mod27, mod81, cycles, conjecture, stern, incomplete,
// higher, cfn, thm5, thm6.
const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

// Throws InvalidInput for an unknown suite or out-of-range bounds. An
// exception escaping a check (e.g. ConsistencyError) is reported as a
// counterexample for that check.
SuiteResult run_suite(std::string_view name, const SuiteBounds& bounds, unsigned jobs);

}  // namespace lehmer
