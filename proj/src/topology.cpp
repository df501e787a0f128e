#include "reltrace/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "reltrace/errors.hpp"

namespace reltrace {

OpenSet::OpenSet(std::initializer_list<VarId> ids) {
  for (VarId id : ids) {
    if (id >= kMaxVariables) throw DomainError("variable id " + std::to_string(id) + " exceeds the 64-variable limit");
    mask_ |= std::uint64_t{1} << id;
  }
}

OpenSet OpenSet::from_ids(std::span<const VarId> ids) {
  std::uint64_t mask = 0;
  for (VarId id : ids) {
    if (id >= kMaxVariables) throw DomainError("variable id " + std::to_string(id) + " exceeds the 64-variable limit");
    mask |= std::uint64_t{1} << id;
  }
  return from_mask(mask);
}

OpenSet OpenSet::first_n(std::size_t n) {
  if (n > kMaxVariables) throw DomainError("at most 64 variables are supported");
  return from_mask(n == kMaxVariables ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::size_t OpenSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<VarId> OpenSet::members() const {
  std::vector<VarId> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<VarId>(std::countr_zero(m)));
  return out;
}

std::size_t OpenSet::position_of(VarId id) const noexcept {
  const std::uint64_t below = id == 0 ? 0 : mask_ & ((std::uint64_t{1} << id) - 1);
  return static_cast<std::size_t>(std::popcount(below));
}

std::strong_ordering operator<=>(OpenSet a, OpenSet b) noexcept {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Same cardinality: compare member lists lexicographically. The first
  // differing member is the lowest bit of the symmetric difference.
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  const std::uint64_t low = diff & (~diff + 1);
  return (a.mask_ & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

VarId VariableTable::add(std::string name) {
  if (names_.size() >= kMaxVariables) throw DomainError("at most 64 variables are supported");
  if (index_.contains(name)) throw DomainError("duplicate variable name '" + name + "'");
  const auto id = static_cast<VarId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

std::optional<VarId> VariableTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

OpenSet VariableTable::set_of(std::span<const std::string> names) const {
  std::uint64_t mask = 0;
  for (const auto& n : names) {
    auto id = find(n);
    if (!id) throw DomainError("unknown variable '" + n + "'");
    mask |= std::uint64_t{1} << *id;
  }
  return OpenSet::from_mask(mask);
}

std::string VariableTable::format(OpenSet s) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (VarId id : s.members()) {
    if (!first) out << ',';
    first = false;
    out << (id < names_.size() ? names_[id] : "#" + std::to_string(id));
  }
  out << '}';
  return out.str();
}

FiniteTopology::FiniteTopology(OpenSet universe, std::vector<OpenSet> opens) : universe_(universe) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  opens_ = std::move(opens);
  for (OpenSet u : opens_) {
    if (!u.subset_of(universe_)) throw DomainError("open set lies outside the universe");
  }
  if (!is_open(OpenSet{})) throw DomainError("topology must contain the empty set");
  if (!is_open(universe_)) throw DomainError("topology must contain the universe");
  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      if (!is_open(opens_[i] | opens_[j])) throw DomainError("topology is not closed under union");
      if (!is_open(opens_[i] & opens_[j])) throw DomainError("topology is not closed under intersection");
    }
  }
}

FiniteTopology FiniteTopology::discrete(OpenSet universe) {
  if (universe.size() > 20) throw DomainError("discrete topology on more than 20 variables is too large");
  std::vector<OpenSet> opens;
  const std::uint64_t u = universe.mask();
  // Enumerate submasks of u.
  for (std::uint64_t m = u;; m = (m - 1) & u) {
    opens.push_back(OpenSet::from_mask(m));
    if (m == 0) break;
  }
  return FiniteTopology(universe, std::move(opens));
}

bool FiniteTopology::is_open(OpenSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

void FiniteTopology::require_open(OpenSet s, std::string_view what) const {
  if (!is_open(s)) throw DomainError(std::string(what) + " is not an open set of the topology");
}

std::vector<OpenSet> FiniteTopology::opens_within(OpenSet bound) const {
  std::vector<OpenSet> out;
  for (OpenSet u : opens_) {
    if (u.subset_of(bound)) out.push_back(u);
  }
  return out;
}

FiniteTopology generate_topology(OpenSet universe, std::span<const OpenSet> subbasis) {
  std::set<OpenSet> family;
  for (OpenSet s : subbasis) {
    if (!s.subset_of(universe)) throw DomainError("subbasis element lies outside the universe");
    family.insert(s);
  }
  family.insert(OpenSet{});
  family.insert(universe);
  // Close under pairwise intersection, then under pairwise union. Unions of
  // members of an intersection-closed family stay intersection-closed by
  // distributivity, so the two passes give the generated topology.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<OpenSet> cur(family.begin(), family.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) changed |= family.insert(cur[i] & cur[j]).second;
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<OpenSet> cur(family.begin(), family.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) changed |= family.insert(cur[i] | cur[j]).second;
  }
  return FiniteTopology(universe, std::vector<OpenSet>(family.begin(), family.end()));
}

std::vector<OpenSet> maximal_elements(std::vector<OpenSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<OpenSet> out;
  for (OpenSet u : family) {
    const bool dominated =
        std::any_of(family.begin(), family.end(), [u](OpenSet v) { return u.proper_subset_of(v); });
    if (!dominated) out.push_back(u);
  }
  return out;
}

MaximalCover::MaximalCover(Unchecked, OpenSet universe, std::vector<OpenSet> blocks)
    : universe_(universe), blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end());
}

MaximalCover::MaximalCover(const FiniteTopology& topology, std::vector<OpenSet> blocks)
    : universe_(topology.universe()) {
  if (blocks.empty()) throw DomainError("a cover needs at least one block");
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  OpenSet covered;
  for (OpenSet b : blocks) {
    topology.require_open(b, "cover block");
    covered = covered | b;
  }
  if (covered != universe_) throw DomainError("cover blocks do not cover the universe");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (i != j && blocks[i].subset_of(blocks[j])) throw DomainError("cover blocks do not form an antichain");
  blocks_ = std::move(blocks);
}

bool refines(const MaximalCover& finer, const MaximalCover& coarser) {
  if (finer.universe() != coarser.universe()) throw DomainError("covers are over different universes");
  return std::all_of(finer.blocks().begin(), finer.blocks().end(), [&](OpenSet u) {
    return std::any_of(coarser.blocks().begin(), coarser.blocks().end(), [u](OpenSet w) { return u.subset_of(w); });
  });
}

std::vector<OpenSet> lower_closure(const MaximalCover& cover, const FiniteTopology& topology) {
  if (cover.universe() != topology.universe()) throw DomainError("cover and topology have different universes");
  std::vector<OpenSet> out;
  for (OpenSet u : topology.opens()) {
    if (std::any_of(cover.blocks().begin(), cover.blocks().end(), [u](OpenSet b) { return u.subset_of(b); }))
      out.push_back(u);
  }
  return out;
}

MaximalCover cover_meet(const FiniteTopology& topology, const MaximalCover& u, const MaximalCover& w) {
  if (u.universe() != w.universe()) throw DomainError("covers are over different universes");
  std::vector<OpenSet> lu = lower_closure(u, topology);
  std::vector<OpenSet> lw = lower_closure(w, topology);
  std::vector<OpenSet> common;
  std::set_intersection(lu.begin(), lu.end(), lw.begin(), lw.end(), std::back_inserter(common));
  return MaximalCover(MaximalCover::Unchecked{}, u.universe(), maximal_elements(std::move(common)));
}

MaximalCover cover_join(const MaximalCover& u, const MaximalCover& w) {
  if (u.universe() != w.universe()) throw DomainError("covers are over different universes");
  std::vector<OpenSet> all = u.blocks();
  all.insert(all.end(), w.blocks().begin(), w.blocks().end());
  return MaximalCover(MaximalCover::Unchecked{}, u.universe(), maximal_elements(std::move(all)));
}

namespace {

void extend_antichains(const std::vector<OpenSet>& candidates, std::size_t next, OpenSet universe,
                       std::vector<OpenSet>& chosen, OpenSet covered, std::vector<MaximalCover>& out,
                       auto&& make) {
  if (covered == universe && !chosen.empty()) out.push_back(make(chosen));
  for (std::size_t i = next; i < candidates.size(); ++i) {
    OpenSet c = candidates[i];
    const bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                        [c](OpenSet b) { return b.subset_of(c) || c.subset_of(b); });
    if (comparable) continue;
    chosen.push_back(c);
    extend_antichains(candidates, i + 1, universe, chosen, covered | c, out, make);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<MaximalCover> all_maximal_covers(const FiniteTopology& topology) {
  const OpenSet universe = topology.universe();
  if (universe.empty()) return {MaximalCover(MaximalCover::Unchecked{}, universe, {OpenSet{}})};
  std::vector<OpenSet> candidates;
  for (OpenSet u : topology.opens())
    if (!u.empty()) candidates.push_back(u);
  std::vector<MaximalCover> out;
  std::vector<OpenSet> chosen;
  extend_antichains(candidates, 0, universe, chosen, OpenSet{}, out, [universe](const std::vector<OpenSet>& blocks) {
    return MaximalCover(MaximalCover::Unchecked{}, universe, blocks);
  });
  return out;
}

MaximalCover finest_context(const FiniteTopology& topology) {
  std::vector<MaximalCover> covers = all_maximal_covers(topology);
  MaximalCover acc = covers.front();
  for (std::size_t i = 1; i < covers.size(); ++i) acc = cover_meet(topology, acc, covers[i]);
  return acc;
}

MaximalCover trivial_context(const FiniteTopology& topology) {
  return MaximalCover(topology, {topology.universe()});
}

}  // namespace reltrace
