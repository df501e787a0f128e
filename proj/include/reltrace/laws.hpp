#pragma once

// Randomized law suites over small bounded instances: the information algebra
// axioms with their ordered and adjoint variants, the tuple-system axioms, the
// sequential/concurrent Kleene laws, and the cover lattice laws.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace reltrace {

struct LawConfig {
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  /// Trace bound for generated relations and bounded universes.
  std::size_t bound = 3;
};

struct LawResult {
  std::string suite;
  std::string law;
  std::size_t cases = 0;
  bool holds = true;
  /// The failing case after greedy shrinking (traces removed one at a time
  /// while the law keeps failing).
  std::string counterexample;
};

/// The names accepted by `run_law_suite`: info, tuple, cka, lattice, all.
const std::vector<std::string>& law_suite_names();

/// Throws ValidationError on an unknown suite name.
std::vector<LawResult> run_law_suite(const std::string& suite, const LawConfig& config);

}  // namespace reltrace
