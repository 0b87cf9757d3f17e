#pragma once

#include "mackey.hpp"
#include "scenario.hpp"

namespace cforge {

struct SuiteOptions {
  uint32_t max_order = 12;
  std::vector<uint32_t> primes = {3, 5, 7};
  uint64_t seed = 0;
  uint32_t jobs = 1;
  bool timing = false;
};

// Suites over the group catalog (mackey, clifford, correspondence, glue,
// factor, collapse, frobenius) honor max_order and primes; the fixed-family
// suites (radical, crossed, product, kernel) run their pinned instance lists
// regardless. "all" concatenates every suite in a fixed order.
const std::vector<std::string>& suite_names();

// deterministic for fixed options: same instances, same order, same verdicts
Report run_suite(const std::string& suite_id, const SuiteOptions& opt);

// "<name> <order>" per catalog group
std::string catalog_text(uint32_t max_order);

}  // namespace cforge
