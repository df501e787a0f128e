#pragma once

// Monotone surjections between finite linear orders (degeneracy maps), in the
// count-tuple representation: (c_0, ..., c_n) sends the first c_0 source
// points to 0, the next c_1 to 1, and so on.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "reltrace/frame.hpp"
#include "reltrace/trace.hpp"

namespace reltrace {

class MonotoneSurjection {
 public:
  /// Throws DomainError if any count is zero.
  explicit MonotoneSurjection(std::vector<std::size_t> counts);
  MonotoneSurjection(std::initializer_list<std::size_t> counts)
      : MonotoneSurjection(std::vector<std::size_t>(counts)) {}

  /// The identity on a linear order with `points` elements.
  static MonotoneSurjection identity(std::size_t points);
  /// From the explicit map i -> image[i]; throws unless weakly monotone onto
  /// {0, ..., max} with no jumps.
  static MonotoneSurjection from_map(const std::vector<std::size_t>& image);

  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  std::size_t source_points() const noexcept;
  std::size_t target_points() const noexcept { return counts_.size(); }
  std::vector<std::size_t> as_map() const;

  friend bool operator==(const MonotoneSurjection&, const MonotoneSurjection&) = default;

 private:
  std::vector<std::size_t> counts_;
};

/// outer ∘ inner. inner's target must be outer's source.
MonotoneSurjection compose(const MonotoneSurjection& outer, const MonotoneSurjection& inner);

/// Componentwise maximum of the count tuples: the greatest surjection that
/// factors through both. Throws DomainError on different targets.
MonotoneSurjection surjection_meet(const MonotoneSurjection& f, const MonotoneSurjection& g);

/// A surjection k with `finer == coarse ∘ k`, built blockwise; requires
/// finer's counts to dominate coarse's componentwise (DomainError otherwise).
MonotoneSurjection factor_through(const MonotoneSurjection& finer, const MonotoneSurjection& coarse);

/// The degenerate chain t∘f: column i of `t` repeated counts[i] times.
/// Throws DomainError unless f targets exactly t's columns.
std::vector<ProductState> apply_surjection(const MonotoneSurjection& f, const Trace& t);

}  // namespace reltrace
