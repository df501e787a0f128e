#include "reltrace/dining.hpp"

#include <algorithm>

#include "reltrace/errors.hpp"

namespace reltrace {

namespace {

std::size_t left_of(std::size_t i, std::size_t n) { return (i + n - 1) % n; }

bool discipline(StateId a, StateId b) { return a == kOnTable || b == kOnTable || a == b; }

}  // namespace

ProductState DiningModel::local_state(std::size_t i, StateId left, StateId phil, StateId right) const {
  const OpenSet u = block(i);
  ProductState s(3);
  s[u.position_of(chopsticks[i])] = left;
  s[u.position_of(philosophers[i])] = phil;
  s[u.position_of(chopsticks[(i + 1) % n])] = right;
  return s;
}

std::array<StateId, 3> DiningModel::unpack(std::size_t i, std::span<const StateId> state) const {
  const OpenSet u = block(i);
  return {state[u.position_of(chopsticks[i])], state[u.position_of(philosophers[i])],
          state[u.position_of(chopsticks[(i + 1) % n])]};
}

DiningModel dining_model(std::size_t n) {
  if (n < 2) throw DomainError("the dining philosophers need n >= 2");
  Frame frame;
  std::vector<VarId> chopsticks, philosophers;
  for (std::size_t i = 0; i < n; ++i) {
    chopsticks.push_back(frame.add_variable(
        "c" + std::to_string(i), StateSpace::total({std::to_string(left_of(i, n)), "*", std::to_string(i)})));
    philosophers.push_back(frame.add_variable("p" + std::to_string(i), StateSpace::total({"t", "e"})));
  }
  std::vector<OpenSet> blocks;
  for (std::size_t i = 0; i < n; ++i)
    blocks.push_back(OpenSet{chopsticks[i], philosophers[i], chopsticks[(i + 1) % n]});
  FiniteTopology topology = generate_topology(frame.universe(), blocks);
  MaximalCover context(topology, blocks);
  return DiningModel{n, std::move(frame), std::move(chopsticks), std::move(philosophers), std::move(topology),
                     std::move(blocks), std::move(context)};
}

bool legal_step(const DiningModel& m, std::size_t i, std::span<const StateId> s, std::span<const StateId> next) {
  const auto [l, x, r] = m.unpack(i, s);
  const auto [l2, x2, r2] = m.unpack(i, next);
  if (!discipline(l, l2) || !discipline(r, r2)) return false;
  // From the right chopstick's point of view p_i is its left holder.
  const bool holds_l = l == kHeldByOwner, holds_l2 = l2 == kHeldByOwner;
  const bool holds_r = r == kHeldByLeft, holds_r2 = r2 == kHeldByLeft;
  const bool free_hands = !holds_l && !holds_l2 && !holds_r && !holds_r2;
  if (free_hands && x == x2) return true;                                  // rule 2
  if (free_hands && x == kThinking && x2 == kEating) return true;          // rule 3
  if (x == kEating && x2 == kEating && !holds_l && !holds_l2) {
    if (r == kOnTable && holds_r2) return true;                            // rule 4
    if (holds_r && holds_r2) return true;                                  // rule 5
  }
  if (l == kOnTable && x == kEating && holds_r && holds_l2 && x2 == kEating && holds_r2) return true;  // rule 6
  if (holds_l && x == kEating && holds_r && l2 == kOnTable && x2 == kThinking && r2 == kOnTable)
    return true;  // rule 7
  return false;
}

bool legal_trace(const DiningModel& m, std::size_t i, const Trace& t) {
  if (t.domain() != m.block(i) || t.is_empty()) return false;
  const auto start = m.local_state(i, kOnTable, kThinking, kOnTable);
  auto first = t.initial();
  if (!std::equal(first.begin(), first.end(), start.begin(), start.end())) return false;
  for (std::size_t k = 1; k < t.column_count(); ++k)
    if (!legal_step(m, i, t.column(k - 1), t.column(k))) return false;
  return true;
}

Relation legal_traces(const DiningModel& m, std::size_t i, std::size_t max_columns) {
  if (max_columns == 0) throw DomainError("legal traces have at least one column");
  const OpenSet u = m.block(i);
  const std::vector<ProductState> states = m.frame.product_states(u);
  std::vector<Trace> out;
  std::vector<ProductState> prefix{m.local_state(i, kOnTable, kThinking, kOnTable)};
  auto extend = [&](auto&& self) -> void {
    out.emplace_back(u, prefix);
    if (prefix.size() == max_columns) return;
    for (const ProductState& s : states) {
      if (s == prefix.back() || !legal_step(m, i, prefix.back(), s)) continue;
      prefix.push_back(s);
      self(self);
      prefix.pop_back();
    }
  };
  extend(extend);
  return Relation(u, std::move(out));
}

Knowledgebase dining_knowledgebase(const DiningModel& m) {
  if (m.n != 3) throw DomainError("the causal-loop knowledgebase is defined for three philosophers");
  // Rows (c_i, p_i, c_{i+1}). On c_i, "i-1" is the left holder and "i" the
  // owner; on c_{i+1}, "i" is the left holder and "i+1" the owner.
  constexpr StateId S = kOnTable, L = kHeldByLeft, O = kHeldByOwner;
  constexpr StateId t = kThinking, e = kEating;
  const StateId left[9] = {S, S, S, L, S, O, S, S, S};
  const StateId phil[9] = {t, e, e, e, e, e, t, t, t};
  const StateId right[9] = {S, S, L, L, L, L, S, O, S};
  std::vector<Relation> valuations;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<ProductState> columns;
    for (std::size_t k = 0; k < 9; ++k) columns.push_back(m.local_state(i, left[k], phil[k], right[k]));
    valuations.emplace_back(m.block(i), std::vector<Trace>{Trace(m.block(i), columns)});
  }
  return Knowledgebase(std::move(valuations));
}

Subpresheaf knowledgebase_presheaf(const DiningModel& m, const Knowledgebase& k) {
  CarrierMap partial;
  for (const Relation& r : k.valuations()) {
    m.topology.require_open(r.label(), "valuation label");
    auto& slot = partial[r.label()];
    slot.insert(slot.end(), r.traces().begin(), r.traces().end());
  }
  return restriction_closure(m.topology, partial);
}

}  // namespace reltrace
