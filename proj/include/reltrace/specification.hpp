#pragma once

// Subpresheaves of chaos and the refinement lattice of specifications.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "reltrace/frame.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/topology.hpp"
#include "reltrace/trace.hpp"

namespace reltrace {

using CarrierMap = std::map<OpenSet, std::vector<Trace>>;

/// A family of trace sets indexed by the opens of a topology and closed under
/// restriction. Carriers are stored sparsely: an absent open carries nothing.
class Subpresheaf {
 public:
  /// The empty subpresheaf.
  explicit Subpresheaf(FiniteTopology topology);

  /// Validates an already closed family. Throws DomainError on a non-open key
  /// or a trace on the wrong domain, PreconditionError naming the first
  /// restriction that leaves the family.
  static Subpresheaf checked(FiniteTopology topology, CarrierMap carriers);

  const FiniteTopology& topology() const noexcept { return topology_; }
  /// Sorted traces over `u`; empty for an absent open. Throws DomainError if
  /// `u` is not open.
  const std::vector<Trace>& carrier(OpenSet u) const;
  /// Only the nonempty carriers, keyed in canonical order.
  const CarrierMap& carriers() const noexcept { return carriers_; }
  bool contains(OpenSet u, const Trace& t) const;
  std::size_t total_size() const noexcept;
  /// carrier(u) as a relation.
  Relation section_relation(OpenSet u) const;

  /// Removes `t` from carrier(u) together with every trace on a larger open
  /// restricting to it, which keeps the family closed.
  Subpresheaf without_section(OpenSet u, const Trace& t) const;

  friend bool operator==(const Subpresheaf&, const Subpresheaf&) = default;

 private:
  Subpresheaf(FiniteTopology topology, CarrierMap carriers);
  friend Subpresheaf restriction_closure(const FiniteTopology&, const CarrierMap&);
  friend Subpresheaf bounded_chaos(const Frame&, const FiniteTopology&, std::size_t);
  friend Subpresheaf presheaf_meet(const Subpresheaf&, const Subpresheaf&);
  friend Subpresheaf presheaf_join(const Subpresheaf&, const Subpresheaf&);

  FiniteTopology topology_;
  CarrierMap carriers_;
};

/// Smallest subpresheaf containing `partial`: every restriction of every given
/// trace to every smaller open. Throws DomainError on a non-open key or a trace
/// whose domain differs from its key.
Subpresheaf restriction_closure(const FiniteTopology& topology, const CarrierMap& partial);

/// Chaos truncated at `bound` columns on every open.
Subpresheaf bounded_chaos(const Frame& frame, const FiniteTopology& topology, std::size_t bound);

/// Pointwise inclusion. Throws DomainError on different topologies.
bool presheaf_refines(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf presheaf_meet(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf presheaf_join(const Subpresheaf& a, const Subpresheaf& b);

/// A restriction from carrier(source) to carrier(target) that leaves the
/// family, if any.
struct ClosureViolation {
  OpenSet source;
  OpenSet target;
  Trace trace;
};
std::optional<ClosureViolation> find_closure_violation(const FiniteTopology& topology, const CarrierMap& carriers);

struct Specification {
  Subpresheaf presheaf;
  MaximalCover context;

  /// Throws DomainError unless the context covers the presheaf's universe by
  /// opens of its topology.
  Specification(Subpresheaf presheaf, MaximalCover context);
  friend bool operator==(const Specification&, const Specification&) = default;
};

/// Bounded chaos with the trivial context.
Specification top_specification(const Frame& frame, const FiniteTopology& topology, std::size_t bound);
/// The empty presheaf with the finest context.
Specification bottom_specification(const FiniteTopology& topology);

/// Pointwise carrier inclusion and cover refinement. Throws DomainError on
/// different topologies.
bool spec_refines(const Specification& a, const Specification& b);
Specification spec_meet(const Specification& a, const Specification& b);
Specification spec_join(const Specification& a, const Specification& b);

}  // namespace reltrace
