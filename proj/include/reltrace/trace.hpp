#pragma once

// Relative traces: nondegenerate chains of product states over a domain.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "reltrace/frame.hpp"
#include "reltrace/topology.hpp"

namespace reltrace {

/// A relative trace on a domain, stored as a matrix with one row per domain
/// variable (increasing id) and one column per observed state. Adjacent
/// columns are always distinct.
///
/// Lengths: `column_count()` is the number of columns; `length()` follows the
/// simplicial convention and is one less, so the empty trace [] has length -1.
/// Reports always use column counts.
class Trace {
 public:
  /// The empty trace [] on the empty domain.
  Trace() = default;

  /// Throws DomainError if a column has the wrong width, DegenerateTrace if
  /// two adjacent columns are equal. The chain condition needs state orders
  /// and is checked by `check_chain`.
  Trace(OpenSet domain, std::span<const ProductState> columns);
  Trace(OpenSet domain, std::initializer_list<ProductState> columns)
      : Trace(domain, std::span<const ProductState>(columns.begin(), columns.size())) {}

  /// The empty trace [] on `domain`.
  static Trace empty(OpenSet domain);

  OpenSet domain() const noexcept { return domain_; }
  std::size_t column_count() const noexcept { return count_; }
  long length() const noexcept { return static_cast<long>(count_) - 1; }
  bool is_empty() const noexcept { return count_ == 0; }
  std::size_t width() const noexcept { return domain_.size(); }

  std::span<const StateId> column(std::size_t k) const {
    const std::size_t w = width();
    return {cells_.data() + k * w, w};
  }
  std::span<const StateId> initial() const { return column(0); }
  std::span<const StateId> terminal() const { return column(count_ - 1); }
  std::vector<ProductState> columns() const;
  /// The row of `v` across all columns. `v` must be in the domain.
  std::vector<StateId> row(VarId v) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Trace&, const Trace&) = default;
  /// Canonical order: domain, then column count, then columns lexicographically.
  friend std::strong_ordering operator<=>(const Trace& a, const Trace& b);

 private:
  struct Unchecked {};
  Trace(Unchecked, OpenSet domain, std::vector<StateId> cells, std::size_t count)
      : domain_(domain), count_(count), cells_(std::move(cells)) {}

  friend Trace destutter_cells(OpenSet domain, std::vector<StateId> cells, std::size_t count);

  OpenSet domain_;
  std::size_t count_ = 0;
  std::vector<StateId> cells_;
};

struct TraceHash {
  std::size_t operator()(const Trace& t) const noexcept { return t.hash(); }
};

/// Throws ChainViolation unless each adjacent pair of columns is componentwise
/// related by the state orders; DomainError if a state index is out of range.
void check_chain(const Frame& frame, const Trace& t);

/// Removes every column equal to its predecessor: the unique nondegenerate
/// trace generating a possibly stuttering chain. Throws DomainError on a
/// column of the wrong width or with an out-of-range state, ChainViolation if
/// the sequence is not a chain.
Trace destutter(const Frame& frame, OpenSet domain, std::span<const ProductState> raw);

/// Same, without state-order validation (for internally produced sequences).
Trace destutter_cells(OpenSet domain, std::vector<StateId> cells, std::size_t count);

/// Projects every column to `sub` and removes stutters. A nonempty trace
/// restricted to the empty domain is the single-column trace [()].
Trace restrict_trace(const Trace& t, OpenSet sub);

/// `f` without its final column followed by `g`. Defined when both are
/// nonempty on the same domain and f's final column equals g's initial one;
/// otherwise throws CompositionUndefined.
Trace concat_traces(const Trace& f, const Trace& g);

/// Every nondegenerate chain on `domain` with at most `max_columns` columns,
/// including [], in canonical order.
std::vector<Trace> enumerate_traces(const Frame& frame, OpenSet domain, std::size_t max_columns);

/// A trace on `wider` whose restriction to t's domain is `t`, obtained by
/// holding every variable outside the domain at its first state.
Trace extend_trace(const Frame& frame, const Trace& t, OpenSet wider);

/// Matrix rendering, one line per variable: "c0: * 0 * 1 *".
std::string format_trace(const Frame& frame, const Trace& t);
/// Single-line rendering: "[(a0,b0) (a1,b1)]".
std::string format_trace_inline(const Frame& frame, const Trace& t);

}  // namespace reltrace
