#pragma once

// Finite topological spaces of variables, their open sets, and the lattice of
// maximal covers (contexts).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reltrace {

using VarId = std::uint32_t;

/// Variables are indexed densely from zero; a set of them fits in one word.
inline constexpr std::size_t kMaxVariables = 64;

/// A set of variable ids. Used for open sets (domains) and for subbasis
/// elements; openness is checked against a FiniteTopology where it matters.
///
/// Iteration order is increasing id, which is the row order of every trace
/// matrix. The total order defined by `<=>` is the canonical order used to
/// sort families of sets: smaller sets first, then lexicographic on members.
class OpenSet {
 public:
  constexpr OpenSet() = default;
  OpenSet(std::initializer_list<VarId> ids);

  static OpenSet from_ids(std::span<const VarId> ids);
  static constexpr OpenSet from_mask(std::uint64_t mask) {
    OpenSet s;
    s.mask_ = mask;
    return s;
  }
  /// The set {0, ..., n-1}.
  static OpenSet first_n(std::size_t n);

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept;
  bool contains(VarId id) const noexcept {
    return id < kMaxVariables && ((mask_ >> id) & 1u) != 0;
  }
  bool subset_of(OpenSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  bool proper_subset_of(OpenSet other) const noexcept {
    return subset_of(other) && mask_ != other.mask_;
  }
  std::vector<VarId> members() const;
  /// Position of `id` among the members (its matrix row). `id` must be a member.
  std::size_t position_of(VarId id) const noexcept;

  OpenSet operator|(OpenSet o) const noexcept { return from_mask(mask_ | o.mask_); }
  OpenSet operator&(OpenSet o) const noexcept { return from_mask(mask_ & o.mask_); }
  OpenSet operator-(OpenSet o) const noexcept { return from_mask(mask_ & ~o.mask_); }

  friend bool operator==(OpenSet a, OpenSet b) noexcept { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(OpenSet a, OpenSet b) noexcept;

 private:
  std::uint64_t mask_ = 0;
};

struct OpenSetHash {
  std::size_t operator()(OpenSet s) const noexcept { return std::hash<std::uint64_t>{}(s.mask()); }
};

/// The global, linearly ordered variable table.
class VariableTable {
 public:
  /// Appends a variable; its id is the previous size. Names must be unique.
  VarId add(std::string name);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(VarId id) const { return names_.at(id); }
  std::optional<VarId> find(std::string_view name) const;
  /// Looks up every name; throws DomainError on an unknown one.
  OpenSet set_of(std::span<const std::string> names) const;
  OpenSet all() const { return OpenSet::first_n(size()); }

  /// "{a,b}" with members in id order.
  std::string format(OpenSet s) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

/// A finite topology: the universe and an explicit family of open sets.
class FiniteTopology {
 public:
  /// Validates that `opens` contains the empty set and the universe, is closed
  /// under pairwise union and intersection, and lies inside the universe.
  FiniteTopology(OpenSet universe, std::vector<OpenSet> opens);

  /// The topology in which every subset of `universe` is open.
  static FiniteTopology discrete(OpenSet universe);

  OpenSet universe() const noexcept { return universe_; }
  /// In canonical order.
  const std::vector<OpenSet>& opens() const noexcept { return opens_; }
  bool is_open(OpenSet s) const;
  /// Throws DomainError naming `what` when `s` is not open.
  void require_open(OpenSet s, std::string_view what) const;
  /// All opens contained in `bound`, in canonical order.
  std::vector<OpenSet> opens_within(OpenSet bound) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  OpenSet universe_;
  std::vector<OpenSet> opens_;
};

/// Smallest topology on `universe` containing `subbasis`: all unions of finite
/// intersections, with the empty set and the universe always present.
FiniteTopology generate_topology(OpenSet universe, std::span<const OpenSet> subbasis);

/// A cover of the universe by open sets forming an antichain.
class MaximalCover {
 public:
  /// Validates against `topology`: blocks open, union is the universe, no
  /// block contained in another. Blocks are stored in canonical order.
  MaximalCover(const FiniteTopology& topology, std::vector<OpenSet> blocks);

  OpenSet universe() const noexcept { return universe_; }
  const std::vector<OpenSet>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  friend bool operator==(const MaximalCover&, const MaximalCover&) = default;

 private:
  struct Unchecked {};
  MaximalCover(Unchecked, OpenSet universe, std::vector<OpenSet> blocks);
  friend MaximalCover cover_meet(const FiniteTopology&, const MaximalCover&, const MaximalCover&);
  friend MaximalCover cover_join(const MaximalCover&, const MaximalCover&);
  friend std::vector<MaximalCover> all_maximal_covers(const FiniteTopology&);

  OpenSet universe_;
  std::vector<OpenSet> blocks_;
};

/// True iff every block of `finer` lies in some block of `coarser`.
bool refines(const MaximalCover& finer, const MaximalCover& coarser);

/// All opens contained in some block of `cover`.
std::vector<OpenSet> lower_closure(const MaximalCover& cover, const FiniteTopology& topology);

/// Maximal elements of the intersection of the two lower closures.
MaximalCover cover_meet(const FiniteTopology& topology, const MaximalCover& u, const MaximalCover& w);

/// Maximal elements of the union of the two block families.
MaximalCover cover_join(const MaximalCover& u, const MaximalCover& w);

/// Every maximal cover of the space, by exhaustive antichain search. The
/// result is in a deterministic order. Exponential in the number of opens.
std::vector<MaximalCover> all_maximal_covers(const FiniteTopology& topology);

/// The meet of all maximal covers.
MaximalCover finest_context(const FiniteTopology& topology);

/// The cover {universe}.
MaximalCover trivial_context(const FiniteTopology& topology);

/// ⊆-maximal elements of `family`, deduplicated, in canonical order.
std::vector<OpenSet> maximal_elements(std::vector<OpenSet> family);

}  // namespace reltrace
