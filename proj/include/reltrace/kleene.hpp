#pragma once

// Sequential composition of relations at a fixed domain, and a checker for
// the concurrent Kleene algebra laws on a finite sample of relations.

#include <cstddef>
#include <string>
#include <vector>

#include "reltrace/frame.hpp"
#include "reltrace/relation.hpp"

namespace reltrace {

/// { f ⧺ g | f ∈ r, g ∈ s, f and g nonempty, final(f) = initial(g) }.
/// Throws DomainError unless both labels equal.
Relation seq_compose(const Relation& r, const Relation& s);

/// All single-column traces on `domain`.
Relation skip(const Frame& frame, OpenSet domain);

struct SeqAlgebraInstance {
  OpenSet domain;
  std::size_t bound = 1;
  /// Throws DomainError if bound is zero.
  SeqAlgebraInstance(OpenSet domain, std::size_t bound);
};

struct LawOutcome {
  std::string law;
  std::size_t cases = 0;
  bool holds = true;
  /// Human-readable counterexample for the first failing case.
  std::string counterexample;
};

/// Exhaustive over tuples drawn from `sample` (pairs and triples; quadruples
/// for the exchange laws, capped at `max_tuples` each). Throws DomainError if
/// a sample relation lives on another domain.
std::vector<LawOutcome> check_cka_laws(const Frame& frame, const SeqAlgebraInstance& instance,
                                       const std::vector<Relation>& sample, std::size_t max_tuples = 5000);

}  // namespace reltrace
