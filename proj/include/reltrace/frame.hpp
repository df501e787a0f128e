#pragma once

// Per-variable state prosets and the frame that assigns them to variables.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reltrace/topology.hpp"

namespace reltrace {

/// Index of a state label within its variable's state space.
using StateId = std::uint16_t;

/// One value per member of a domain, in increasing variable-id order.
using ProductState = std::vector<StateId>;

/// A nonempty preordered set of states for one variable. Labels are interned:
/// states compare by index, never by text.
class StateSpace {
 public:
  /// Every pair of states related (the default for revisitable states).
  static StateSpace total(std::vector<std::string> labels);

  /// Reflexive-transitive closure of the given (lower, upper) pairs.
  static StateSpace generated(std::vector<std::string> labels,
                              std::span<const std::pair<std::string, std::string>> pairs);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(StateId s) const { return labels_.at(s); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<StateId> find(std::string_view label) const;
  bool leq(StateId a, StateId b) const { return order_[a * labels_.size() + b]; }
  bool is_total() const noexcept;
  /// Pairs (a, b) with a <= b and a != b, in index order.
  std::vector<std::pair<StateId, StateId>> strict_pairs() const;

 private:
  StateSpace(std::vector<std::string> labels, std::vector<bool> order);
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<bool> order_;
};

/// The variable table plus a state space for every variable.
class Frame {
 public:
  VarId add_variable(std::string name, StateSpace space);

  const VariableTable& variables() const noexcept { return vars_; }
  const StateSpace& space(VarId v) const { return spaces_.at(v); }
  std::size_t size() const noexcept { return spaces_.size(); }
  OpenSet universe() const { return vars_.all(); }

  /// Componentwise order on product states over `domain`.
  bool leq(OpenSet domain, std::span<const StateId> a, std::span<const StateId> b) const;
  /// Number of product states over `domain`.
  std::size_t product_size(OpenSet domain) const;
  /// All product states over `domain` in lexicographic order.
  std::vector<ProductState> product_states(OpenSet domain) const;
  /// Checks that every value lies in its variable's state space.
  void check_state(OpenSet domain, std::span<const StateId> state) const;

  std::string format_state(OpenSet domain, std::span<const StateId> state) const;

 private:
  VariableTable vars_;
  std::vector<StateSpace> spaces_;
};

}  // namespace reltrace
