#pragma once

// The information algebra of relations over the trace tuple system.
//
// A relation is a finite set of traces sharing one domain (its label).
// Combination is the natural join, computed by gluing overlap-compatible
// pairs of traces along synchronized shuffles; projection restricts every
// trace. Relations are ordered by inclusion, with the empty relation as the
// null element and a bounded universal relation standing in for the
// (infinite) neutral element.

#include <cstddef>
#include <optional>
#include <vector>

#include "reltrace/frame.hpp"
#include "reltrace/topology.hpp"
#include "reltrace/trace.hpp"

namespace reltrace {

class Relation {
 public:
  /// The empty relation on the empty domain.
  Relation() = default;
  /// Sorts and deduplicates; throws DomainError if a trace has another domain.
  Relation(OpenSet domain, std::vector<Trace> traces);

  OpenSet label() const noexcept { return domain_; }
  const std::vector<Trace>& traces() const noexcept { return traces_; }
  std::size_t size() const noexcept { return traces_.size(); }
  bool empty() const noexcept { return traces_.empty(); }
  bool contains(const Trace& t) const;
  /// Longest trace, in columns (0 for the empty relation).
  std::size_t max_columns() const noexcept;

  /// Set when the relation is the universal relation truncated at that many
  /// columns; such relations are fully materialized.
  std::optional<std::size_t> universal_bound() const noexcept { return universal_bound_; }

  /// Set equality of labels and traces; the universal tag is not compared.
  friend bool operator==(const Relation& a, const Relation& b) {
    return a.domain_ == b.domain_ && a.traces_ == b.traces_;
  }

 private:
  struct Sorted {};
  Relation(Sorted, OpenSet domain, std::vector<Trace> traces, std::optional<std::size_t> bound = std::nullopt)
      : domain_(domain), traces_(std::move(traces)), universal_bound_(bound) {}

  friend Relation neutral(const Frame&, OpenSet, std::size_t);
  friend Relation combine(const Relation&, const Relation&);
  friend Relation project(const Relation&, OpenSet);

  OpenSet domain_;
  std::vector<Trace> traces_;
  std::optional<std::size_t> universal_bound_;
};

OpenSet label(const Relation& r);

/// Elementwise restriction. Throws DomainError unless `sub` ⊆ label(r).
Relation project(const Relation& r, OpenSet sub);

/// Every nondegenerate trace z on dom(x) ∪ dom(y) with z↾dom(x) = x and
/// z↾dom(y) = y, in canonical order. Throws PreconditionError if x and y
/// disagree on the overlap of their domains.
std::vector<Trace> glue_pair(const Trace& x, const Trace& y);

/// Natural join. Two universal operands yield the universal relation on the
/// union, truncated at the smaller bound.
Relation combine(const Relation& r, const Relation& s);

/// All traces on `domain` with at most `bound` columns.
Relation neutral(const Frame& frame, OpenSet domain, std::size_t bound);

/// The empty relation on `domain`.
Relation null_relation(OpenSet domain);

/// Same label and r ⊆ s.
bool refines(const Relation& r, const Relation& s);

/// Intersection (the infimum) of two relations on the same label.
Relation intersect(const Relation& r, const Relation& s);
/// Union of two relations on the same label.
Relation unite(const Relation& r, const Relation& s);
/// Drops traces with more than `max_columns` columns.
Relation truncate(const Relation& r, std::size_t max_columns);

/// Join computed by filtering every trace on the union domain with at most
/// `bound` columns. Independent of `combine`; agrees with it whenever `bound`
/// is at least the largest column count any glued trace can reach.
Relation brute_force_combine(const Frame& frame, const Relation& r, const Relation& s, std::size_t bound);

}  // namespace reltrace
