#pragma once

// Hand-rolled random instances for property tests.

#include <random>
#include <string>
#include <vector>

#include "reltrace/frame.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/topology.hpp"
#include "reltrace/trace.hpp"

namespace gen {

using reltrace::OpenSet;

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// `vars` variables named v0, v1, ... with two or three states; orders are
// total or the chain 0 <= 1 <= 2.
inline reltrace::Frame frame(Rng& rng, std::size_t vars, std::size_t max_states = 2) {
  reltrace::Frame f;
  for (std::size_t v = 0; v < vars; ++v) {
    const std::size_t k = 2 + below(rng, max_states - 1);
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < k; ++s) labels.push_back(std::to_string(s));
    if (coin(rng)) {
      f.add_variable("v" + std::to_string(v), reltrace::StateSpace::total(labels));
    } else {
      std::vector<std::pair<std::string, std::string>> order;
      for (std::size_t s = 0; s + 1 < k; ++s) order.emplace_back(labels[s], labels[s + 1]);
      f.add_variable("v" + std::to_string(v), reltrace::StateSpace::generated(labels, order));
    }
  }
  return f;
}

inline OpenSet subset(Rng& rng, OpenSet universe, bool nonempty = true) {
  const auto members = universe.members();
  for (;;) {
    std::vector<reltrace::VarId> pick;
    for (auto v : members)
      if (coin(rng)) pick.push_back(v);
    if (!pick.empty() || !nonempty || members.empty()) return OpenSet::from_ids(pick);
  }
}

inline std::vector<OpenSet> subbasis(Rng& rng, OpenSet universe, std::size_t max_sets) {
  std::vector<OpenSet> out;
  const std::size_t n = below(rng, max_sets + 1);
  for (std::size_t i = 0; i < n; ++i) out.push_back(subset(rng, universe));
  return out;
}

inline reltrace::FiniteTopology topology(Rng& rng, OpenSet universe, std::size_t max_sets = 3) {
  const auto sb = subbasis(rng, universe, max_sets);
  return reltrace::generate_topology(universe, sb);
}

// A random chain on `domain` with between 1 and max_columns columns.
inline reltrace::Trace trace(Rng& rng, const reltrace::Frame& f, OpenSet domain, std::size_t max_columns) {
  const auto states = f.product_states(domain);
  const std::size_t n = 1 + below(rng, max_columns);
  std::vector<reltrace::ProductState> cols{states[below(rng, states.size())]};
  for (std::size_t tries = 0; cols.size() < n && tries < 50; ++tries) {
    const auto& next = states[below(rng, states.size())];
    if (next != cols.back() && f.leq(domain, cols.back(), next)) cols.push_back(next);
  }
  return reltrace::Trace(domain, cols);
}

inline reltrace::Relation relation(Rng& rng, const reltrace::Frame& f, OpenSet domain, std::size_t max_traces,
                                   std::size_t max_columns) {
  std::vector<reltrace::Trace> ts;
  const std::size_t n = below(rng, max_traces + 1);
  for (std::size_t i = 0; i < n; ++i) ts.push_back(trace(rng, f, domain, max_columns));
  return reltrace::Relation(domain, std::move(ts));
}

}  // namespace gen
