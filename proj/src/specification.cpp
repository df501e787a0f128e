#include "reltrace/specification.hpp"

#include <algorithm>
#include <set>

#include "reltrace/errors.hpp"

namespace reltrace {

namespace {

const std::vector<Trace> kNoTraces;

void require_same(const FiniteTopology& a, const FiniteTopology& b) {
  if (!(a == b)) throw DomainError("subpresheaves live on different topologies");
}

CarrierMap drop_empty(std::map<OpenSet, std::set<Trace>> sets) {
  CarrierMap out;
  for (auto& [u, ts] : sets)
    if (!ts.empty()) out.emplace(u, std::vector<Trace>(ts.begin(), ts.end()));
  return out;
}

void check_keys(const FiniteTopology& topology, const CarrierMap& carriers) {
  for (const auto& [u, ts] : carriers) {
    topology.require_open(u, "carrier key");
    for (const Trace& t : ts)
      if (t.domain() != u) throw DomainError("trace domain differs from its carrier open");
  }
}

}  // namespace

Subpresheaf::Subpresheaf(FiniteTopology topology) : topology_(std::move(topology)) {}

Subpresheaf::Subpresheaf(FiniteTopology topology, CarrierMap carriers)
    : topology_(std::move(topology)), carriers_(std::move(carriers)) {}

Subpresheaf Subpresheaf::checked(FiniteTopology topology, CarrierMap carriers) {
  check_keys(topology, carriers);
  std::map<OpenSet, std::set<Trace>> sets;
  for (auto& [u, ts] : carriers) sets[u].insert(ts.begin(), ts.end());
  CarrierMap canonical = drop_empty(std::move(sets));
  if (auto v = find_closure_violation(topology, canonical))
    throw PreconditionError("carriers are not closed under restriction: a trace over " +
                            std::to_string(v->source.size()) + " variables restricts outside the carrier of an open of " +
                            std::to_string(v->target.size()) + " variables");
  return Subpresheaf(std::move(topology), std::move(canonical));
}

const std::vector<Trace>& Subpresheaf::carrier(OpenSet u) const {
  topology_.require_open(u, "carrier");
  auto it = carriers_.find(u);
  return it == carriers_.end() ? kNoTraces : it->second;
}

bool Subpresheaf::contains(OpenSet u, const Trace& t) const {
  auto it = carriers_.find(u);
  return it != carriers_.end() && std::binary_search(it->second.begin(), it->second.end(), t);
}

std::size_t Subpresheaf::total_size() const noexcept {
  std::size_t n = 0;
  for (const auto& [u, ts] : carriers_) n += ts.size();
  return n;
}

Relation Subpresheaf::section_relation(OpenSet u) const { return Relation(u, carrier(u)); }

Subpresheaf Subpresheaf::without_section(OpenSet u, const Trace& t) const {
  CarrierMap out;
  for (const auto& [v, ts] : carriers_) {
    std::vector<Trace> kept;
    for (const Trace& x : ts)
      if (!u.subset_of(v) || restrict_trace(x, u) != t) kept.push_back(x);
    if (!kept.empty()) out.emplace(v, std::move(kept));
  }
  return Subpresheaf(topology_, std::move(out));
}

Subpresheaf restriction_closure(const FiniteTopology& topology, const CarrierMap& partial) {
  check_keys(topology, partial);
  std::map<OpenSet, std::set<Trace>> sets;
  for (const auto& [u, ts] : partial) {
    const std::vector<OpenSet> below = topology.opens_within(u);
    for (const Trace& t : ts)
      for (OpenSet w : below) sets[w].insert(restrict_trace(t, w));
  }
  return Subpresheaf(topology, drop_empty(std::move(sets)));
}

Subpresheaf bounded_chaos(const Frame& frame, const FiniteTopology& topology, std::size_t bound) {
  CarrierMap carriers;
  for (OpenSet u : topology.opens()) carriers.emplace(u, enumerate_traces(frame, u, bound));
  return Subpresheaf(topology, std::move(carriers));
}

std::optional<ClosureViolation> find_closure_violation(const FiniteTopology& topology, const CarrierMap& carriers) {
  for (const auto& [u, ts] : carriers) {
    for (OpenSet w : topology.opens_within(u)) {
      if (w == u) continue;
      auto it = carriers.find(w);
      for (const Trace& t : ts) {
        Trace r = restrict_trace(t, w);
        if (it == carriers.end() || !std::binary_search(it->second.begin(), it->second.end(), r))
          return ClosureViolation{u, w, t};
      }
    }
  }
  return std::nullopt;
}

bool presheaf_refines(const Subpresheaf& a, const Subpresheaf& b) {
  require_same(a.topology(), b.topology());
  for (const auto& [u, ts] : a.carriers()) {
    const auto& other = b.carrier(u);
    if (!std::includes(other.begin(), other.end(), ts.begin(), ts.end())) return false;
  }
  return true;
}

Subpresheaf presheaf_meet(const Subpresheaf& a, const Subpresheaf& b) {
  require_same(a.topology(), b.topology());
  CarrierMap out;
  for (const auto& [u, ts] : a.carriers()) {
    const auto& other = b.carrier(u);
    std::vector<Trace> both;
    std::set_intersection(ts.begin(), ts.end(), other.begin(), other.end(), std::back_inserter(both));
    if (!both.empty()) out.emplace(u, std::move(both));
  }
  return Subpresheaf(a.topology(), std::move(out));
}

Subpresheaf presheaf_join(const Subpresheaf& a, const Subpresheaf& b) {
  require_same(a.topology(), b.topology());
  CarrierMap out = a.carriers();
  for (const auto& [u, ts] : b.carriers()) {
    auto& mine = out[u];
    std::vector<Trace> either;
    std::set_union(mine.begin(), mine.end(), ts.begin(), ts.end(), std::back_inserter(either));
    mine = std::move(either);
  }
  return Subpresheaf(a.topology(), std::move(out));
}

Specification::Specification(Subpresheaf p, MaximalCover c) : presheaf(std::move(p)), context(std::move(c)) {
  if (context.universe() != presheaf.topology().universe())
    throw DomainError("context and presheaf have different universes");
  for (OpenSet b : context.blocks()) presheaf.topology().require_open(b, "context block");
}

Specification top_specification(const Frame& frame, const FiniteTopology& topology, std::size_t bound) {
  return Specification(bounded_chaos(frame, topology, bound), trivial_context(topology));
}

Specification bottom_specification(const FiniteTopology& topology) {
  return Specification(Subpresheaf(topology), finest_context(topology));
}

bool spec_refines(const Specification& a, const Specification& b) {
  return presheaf_refines(a.presheaf, b.presheaf) && refines(a.context, b.context);
}

Specification spec_meet(const Specification& a, const Specification& b) {
  return Specification(presheaf_meet(a.presheaf, b.presheaf),
                       cover_meet(a.presheaf.topology(), a.context, b.context));
}

Specification spec_join(const Specification& a, const Specification& b) {
  return Specification(presheaf_join(a.presheaf, b.presheaf), cover_join(a.context, b.context));
}

}  // namespace reltrace
