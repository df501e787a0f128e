#pragma once

// Local and global agreement of knowledgebases.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reltrace/relation.hpp"
#include "reltrace/specification.hpp"
#include "reltrace/topology.hpp"

namespace reltrace {

/// A nonempty, ordered list of valuations with display names.
class Knowledgebase {
 public:
  /// Names default to "phi0", "phi1", ... Throws DomainError when empty or
  /// when the name count does not match.
  explicit Knowledgebase(std::vector<Relation> valuations, std::vector<std::string> names = {});

  const std::vector<Relation>& valuations() const noexcept { return valuations_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return valuations_.size(); }
  const Relation& operator[](std::size_t i) const { return valuations_.at(i); }
  /// Union of all labels.
  OpenSet domain() const noexcept;

 private:
  std::vector<Relation> valuations_;
  std::vector<std::string> names_;
};

enum class GlobalMethod { direct, fast };
const char* method_name(GlobalMethod m);
/// "direct" or "fast"; throws ValidationError otherwise.
GlobalMethod parse_method(const std::string& text);

struct PairFailure {
  std::size_t i = 0;
  std::size_t j = 0;
  OpenSet overlap;
  Relation left;   // valuations[i] projected to the overlap
  Relation right;  // valuations[j] projected to the overlap
};

struct ValuationCheck {
  bool equal = false;
  std::size_t projected_size = 0;  // |γ↓dφ|
  std::size_t original_size = 0;   // |φ|
  friend bool operator==(const ValuationCheck&, const ValuationCheck&) = default;
};

struct ConsistencyReport {
  bool local = true;
  std::vector<PairFailure> failing_pairs;

  bool global = false;
  GlobalMethod method = GlobalMethod::direct;
  Relation gamma;
  std::vector<ValuationCheck> per_valuation;
  /// Sizes of every relation computed on the way, in order of computation.
  std::vector<std::size_t> intermediate_sizes;
  std::size_t largest_intermediate = 0;

  // Fast method only. After one pass of per-valuation filtering, whether every
  // valuation survived unchanged, and how many filtering passes ran until a
  // fixpoint. `reduced_sizes[j]` is |φⱼ| after the last pass.
  std::optional<bool> single_pass_agreement;
  std::size_t reduction_passes = 0;
  std::vector<std::size_t> reduced_sizes;
  /// False when a reduced valuation became empty, which settles γ = ∅
  /// without joining.
  bool joined_reduced = false;

  /// Set by `check_specification`: whether γ lies in the carrier of the
  /// presheaf at the union of the valuation labels.
  std::optional<bool> gamma_is_section;
};

/// φ↓(dφ∩dψ) = ψ↓(dφ∩dψ).
bool locally_agree(const Relation& phi, const Relation& psi);

/// Every unordered pair; only the local fields of the report are filled.
ConsistencyReport check_local(const Knowledgebase& k);

/// γ = ⊗φᵢ folded in list order, then γ↓dφᵢ = φᵢ for every i. Also fills the
/// local part.
ConsistencyReport check_global_direct(const Knowledgebase& k);

/// Replaces each φⱼ by φⱼ ⊗ φᵢ↓(dφᵢ∩dφⱼ) for all i ≠ j, folding in list order
/// (every step filters φⱼ, so nothing grows), and repeats until no valuation
/// changes. The join of the reduced valuations equals the join of the
/// originals; it is computed only when no reduced valuation is empty. Verdict,
/// γ and per-valuation comparisons therefore coincide with the direct method.
ConsistencyReport check_global_fast(const Knowledgebase& k);

ConsistencyReport check_global(const Knowledgebase& k, GlobalMethod method);

struct FlasqueWitness {
  OpenSet block;   // the cover block the pair lives under
  OpenSet larger;  // W′
  OpenSet smaller; // W ⊆ W′
  Trace missed;    // a trace of carrier(W) with no preimage in carrier(W′)
};

struct FlasqueReport {
  bool flasque = true;
  std::optional<FlasqueWitness> witness;
};

/// Whether every restriction carrier(W′) → carrier(W) with W ⊆ W′ ⊆ U for a
/// block U of `cover` is surjective.
FlasqueReport flasque_beneath(const Subpresheaf& a, const MaximalCover& cover);

/// {carrier(U)} for the blocks U of `cover`, named by block position.
Knowledgebase knowledgebase_of(const Subpresheaf& a, const MaximalCover& cover);

/// Global check of the context's knowledgebase, additionally testing that γ is
/// a section of the presheaf over the union of the labels.
ConsistencyReport check_specification(const Specification& spec, GlobalMethod method);

}  // namespace reltrace
