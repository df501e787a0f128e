#include "reltrace/frame.hpp"

#include <sstream>

#include "reltrace/errors.hpp"

namespace reltrace {

StateSpace::StateSpace(std::vector<std::string> labels, std::vector<bool> order)
    : labels_(std::move(labels)), order_(std::move(order)) {
  validate();
}

StateSpace StateSpace::total(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return StateSpace(std::move(labels), std::vector<bool>(n * n, true));
}

StateSpace StateSpace::generated(std::vector<std::string> labels,
                                 std::span<const std::pair<std::string, std::string>> pairs) {
  const std::size_t n = labels.size();
  std::vector<bool> order(n * n, false);
  for (std::size_t i = 0; i < n; ++i) order[i * n + i] = true;
  auto index = [&](const std::string& l) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (labels[i] == l) return i;
    throw DomainError("order mentions unknown state '" + l + "'");
  };
  for (const auto& [lo, hi] : pairs) order[index(lo) * n + index(hi)] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (order[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (order[k * n + j]) order[i * n + j] = true;
  return StateSpace(std::move(labels), std::move(order));
}

void StateSpace::validate() const {
  const std::size_t n = labels_.size();
  if (n == 0) throw DomainError("a state space must be nonempty");
  if (n > 0xFFFF) throw DomainError("too many states");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j]) throw DomainError("duplicate state label '" + labels_[i] + "'");
  for (std::size_t i = 0; i < n; ++i) {
    if (!order_[i * n + i]) throw DomainError("state order is not reflexive");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (order_[i * n + j] && order_[j * n + k] && !order_[i * n + k])
          throw DomainError("state order is not transitive");
  }
}

std::optional<StateId> StateSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<StateId>(i);
  return std::nullopt;
}

bool StateSpace::is_total() const noexcept {
  for (bool b : order_)
    if (!b) return false;
  return true;
}

std::vector<std::pair<StateId, StateId>> StateSpace::strict_pairs() const {
  std::vector<std::pair<StateId, StateId>> out;
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && order_[i * n + j]) out.emplace_back(static_cast<StateId>(i), static_cast<StateId>(j));
  return out;
}

VarId Frame::add_variable(std::string name, StateSpace space) {
  VarId id = vars_.add(std::move(name));
  spaces_.push_back(std::move(space));
  return id;
}

bool Frame::leq(OpenSet domain, std::span<const StateId> a, std::span<const StateId> b) const {
  std::size_t row = 0;
  for (VarId v : domain.members()) {
    if (!spaces_[v].leq(a[row], b[row])) return false;
    ++row;
  }
  return true;
}

std::size_t Frame::product_size(OpenSet domain) const {
  std::size_t n = 1;
  for (VarId v : domain.members()) n *= space(v).size();
  return n;
}

std::vector<ProductState> Frame::product_states(OpenSet domain) const {
  const std::vector<VarId> vars = domain.members();
  for (VarId v : vars)
    if (v >= spaces_.size()) throw DomainError("domain mentions an undeclared variable");
  std::vector<ProductState> out;
  ProductState cur(vars.size(), 0);
  while (true) {
    out.push_back(cur);
    // Odometer increment with the last row fastest.
    std::size_t r = vars.size();
    while (r > 0) {
      --r;
      if (++cur[r] < spaces_[vars[r]].size()) break;
      cur[r] = 0;
      if (r == 0) return out;
    }
    if (vars.empty()) return out;
  }
}

void Frame::check_state(OpenSet domain, std::span<const StateId> state) const {
  if (state.size() != domain.size()) throw DomainError("product state has the wrong number of components");
  std::size_t row = 0;
  for (VarId v : domain.members()) {
    if (v >= spaces_.size()) throw DomainError("domain mentions an undeclared variable");
    if (state[row] >= spaces_[v].size())
      throw DomainError("state index out of range for variable '" + vars_.name(v) + "'");
    ++row;
  }
}

std::string Frame::format_state(OpenSet domain, std::span<const StateId> state) const {
  std::ostringstream out;
  out << '(';
  std::size_t row = 0;
  for (VarId v : domain.members()) {
    if (row) out << ',';
    out << space(v).label(state[row]);
    ++row;
  }
  out << ')';
  return out.str();
}

}  // namespace reltrace
