#pragma once

// The dining philosophers: n philosophers p_i and n chopsticks c_i around a
// table. Philosopher i sees the block U_i = {c_i, p_i, c_{i+1}} (indices mod n).
//
// Variables are numbered c_0, p_0, c_1, p_1, ...; the states of c_i are
// "i-1", "*", "i" (held by the left philosopher, on the table, held by p_i),
// those of p_i are "t" and "e". All state orders are total.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "reltrace/consistency.hpp"
#include "reltrace/frame.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/specification.hpp"
#include "reltrace/topology.hpp"

namespace reltrace {

struct DiningModel {
  std::size_t n = 0;
  Frame frame;
  std::vector<VarId> chopsticks;    // c_i
  std::vector<VarId> philosophers;  // p_i
  FiniteTopology topology;
  std::vector<OpenSet> blocks;      // U_0 … U_{n-1} in philosopher order
  MaximalCover context;

  OpenSet block(std::size_t i) const { return blocks.at(i); }
  /// A product state on U_i from the values of (c_i, p_i, c_{i+1}).
  ProductState local_state(std::size_t i, StateId left, StateId phil, StateId right) const;
  /// (c_i, p_i, c_{i+1}) of a product state on U_i.
  std::array<StateId, 3> unpack(std::size_t i, std::span<const StateId> state) const;
};

// State ids shared by every variable of a kind.
inline constexpr StateId kHeldByLeft = 0;  // c_i held by p_{i-1}
inline constexpr StateId kOnTable = 1;     // c_i is "*"
inline constexpr StateId kHeldByOwner = 2; // c_i held by p_i
inline constexpr StateId kThinking = 0;
inline constexpr StateId kEating = 1;

/// Throws DomainError for n < 2.
DiningModel dining_model(std::size_t n);

/// Whether (s → s′) on U_i is one of rules 2–7 with both chopsticks obeying
/// * ↦ x, x ↦ *, x ↦ x.
bool legal_step(const DiningModel& m, std::size_t i, std::span<const StateId> s, std::span<const StateId> next);

/// Starts at (*, t, *) and takes only legal steps.
bool legal_trace(const DiningModel& m, std::size_t i, const Trace& t);

/// Every legal trace on U_i with at most `max_columns` columns. Throws
/// DomainError for max_columns = 0. Grows exponentially.
Relation legal_traces(const DiningModel& m, std::size_t i, std::size_t max_columns);

/// The three singleton valuations φ_0, φ_1, φ_2 of the causal-loop scenario.
/// Throws DomainError unless n = 3.
Knowledgebase dining_knowledgebase(const DiningModel& m);

/// Restriction closure of the knowledgebase over the context blocks; nothing
/// is placed on the whole space.
Subpresheaf knowledgebase_presheaf(const DiningModel& m, const Knowledgebase& k);

}  // namespace reltrace
