#pragma once

// Čech nerve of a context and the augmented Čech complex of a subpresheaf.
//
// Degree -1 is based on carrier(X) for X the union of the cover; degree p ≥ 0
// on the sections over the p-cells of the nerve. Bases are ordered by cell
// (index tuples lexicographically) and then by canonical trace order.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "reltrace/smith.hpp"
#include "reltrace/specification.hpp"
#include "reltrace/topology.hpp"

namespace reltrace {

struct NerveCell {
  std::vector<std::size_t> indices;  // increasing cover-block positions
  OpenSet open;                      // their (nonempty) intersection
  friend bool operator==(const NerveCell&, const NerveCell&) = default;
};

struct Nerve {
  std::vector<OpenSet> vertices;
  /// cells[p] lists the p-cells; cells[0] are the vertices themselves.
  std::vector<std::vector<NerveCell>> cells;
  /// Highest p with a p-cell.
  int dimension() const noexcept { return static_cast<int>(cells.size()) - 1; }
};

/// Throws DomainError on an empty cover.
Nerve build_nerve(const MaximalCover& cover);

struct Ring {
  enum class Kind { integers, rationals, prime_field };
  Kind kind = Kind::integers;
  std::uint64_t modulus = 0;  // prime_field only

  static Ring integers() { return {}; }
  static Ring rationals() { return {Kind::rationals, 0}; }
  /// Throws DomainError unless q is a prime below 2^31.
  static Ring prime_field(std::uint64_t q);
  /// "Z", "Q", "Z/7"
  std::string name() const;
  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Accepts "Z", "Q", "Zq" and "Z/q" for a prime q; throws ValidationError.
Ring parse_ring(const std::string& text);

struct BasisElement {
  std::size_t cell = 0;  // position within the degree (0 for degree -1)
  Trace section;
};

class ChainComplex {
 public:
  ChainComplex(Ring ring, OpenSet total, Nerve nerve, std::vector<std::vector<BasisElement>> bases,
               std::vector<IntMatrix> maps);

  const Ring& ring() const noexcept { return ring_; }
  OpenSet total() const noexcept { return total_; }
  const Nerve& nerve() const noexcept { return nerve_; }
  /// Highest degree with a (possibly empty) module.
  int top_degree() const noexcept { return nerve_.dimension(); }
  /// Empty for p outside [-1, top_degree()].
  const std::vector<BasisElement>& basis(int p) const;
  std::size_t dim(int p) const { return basis(p).size(); }
  /// d^p : C^p → C^{p+1} as a dim(p+1) × dim(p) matrix; zero maps outside the
  /// stored range.
  IntMatrix coboundary(int p) const;

 private:
  Ring ring_;
  OpenSet total_;
  Nerve nerve_;
  std::vector<std::vector<BasisElement>> bases_;  // index p + 1
  std::vector<IntMatrix> maps_;                   // index p + 1, p = -1 .. top-1
};

/// Builds the complex and checks d^{p+1}·d^p = 0 for every p (throws
/// PreconditionError if not, which would be a bug).
ChainComplex build_complex(const Subpresheaf& a, const MaximalCover& cover, Ring ring);

struct CohomologyResult {
  int degree = 0;
  Ring ring;
  /// Free rank over ℤ, dimension over a field.
  std::size_t rank = 0;
  /// Invariant factors above 1 of d^{p-1} (ℤ only).
  std::vector<mpz_class> torsion;
  /// Cocycles whose classes span the free part, as coordinate vectors in
  /// basis(p). Over ℤ these are computed over ℚ and scaled to integers.
  std::vector<std::vector<mpz_class>> representatives;
  bool vanishes() const noexcept { return rank == 0 && torsion.empty(); }
};

/// Throws DomainError for p < -1. Degrees above the top are zero.
CohomologyResult cohomology(const ChainComplex& c, int p);

struct ObstructionReport {
  ChainComplex complex;
  CohomologyResult h_minus1;  // global sections restricting to zero
  CohomologyResult h0;        // local families that do not lift
};

ObstructionReport obstruction_report(const Subpresheaf& a, const MaximalCover& cover, Ring ring);

/// "U0", "U0^U1", ... for a nerve cell.
std::string cell_name(const NerveCell& cell);

}  // namespace reltrace
