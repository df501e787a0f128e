#include "reltrace/consistency.hpp"

#include <algorithm>

#include "reltrace/errors.hpp"

namespace reltrace {

Knowledgebase::Knowledgebase(std::vector<Relation> valuations, std::vector<std::string> names)
    : valuations_(std::move(valuations)), names_(std::move(names)) {
  if (valuations_.empty()) throw DomainError("a knowledgebase needs at least one valuation");
  if (names_.empty()) {
    for (std::size_t i = 0; i < valuations_.size(); ++i) names_.push_back("phi" + std::to_string(i));
  } else if (names_.size() != valuations_.size()) {
    throw DomainError("knowledgebase has " + std::to_string(valuations_.size()) + " valuations but " +
                      std::to_string(names_.size()) + " names");
  }
}

OpenSet Knowledgebase::domain() const noexcept {
  OpenSet d;
  for (const Relation& r : valuations_) d = d | r.label();
  return d;
}

const char* method_name(GlobalMethod m) { return m == GlobalMethod::direct ? "direct" : "fast"; }

GlobalMethod parse_method(const std::string& text) {
  if (text == "direct") return GlobalMethod::direct;
  if (text == "fast") return GlobalMethod::fast;
  throw ValidationError("options.method", "unknown method '" + text + "' (expected direct or fast)");
}

bool locally_agree(const Relation& phi, const Relation& psi) {
  const OpenSet overlap = phi.label() & psi.label();
  return project(phi, overlap) == project(psi, overlap);
}

ConsistencyReport check_local(const Knowledgebase& k) {
  ConsistencyReport report;
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      const OpenSet overlap = k[i].label() & k[j].label();
      Relation left = project(k[i], overlap);
      Relation right = project(k[j], overlap);
      if (left != right) report.failing_pairs.push_back({i, j, overlap, std::move(left), std::move(right)});
    }
  }
  report.local = report.failing_pairs.empty();
  return report;
}

namespace {

void note(ConsistencyReport& report, const Relation& r) {
  report.intermediate_sizes.push_back(r.size());
  report.largest_intermediate = std::max(report.largest_intermediate, r.size());
}

void compare_projections(const Knowledgebase& k, ConsistencyReport& report) {
  report.per_valuation.clear();
  report.global = true;
  for (const Relation& phi : k.valuations()) {
    Relation down = project(report.gamma, phi.label());
    ValuationCheck c{down == phi, down.size(), phi.size()};
    report.global = report.global && c.equal;
    report.per_valuation.push_back(c);
  }
}

Relation join_all(const std::vector<Relation>& rs, ConsistencyReport& report) {
  Relation acc = rs.front();
  for (std::size_t i = 1; i < rs.size(); ++i) {
    acc = combine(acc, rs[i]);
    note(report, acc);
  }
  return acc;
}

}  // namespace

ConsistencyReport check_global_direct(const Knowledgebase& k) {
  ConsistencyReport report = check_local(k);
  report.method = GlobalMethod::direct;
  report.gamma = join_all(k.valuations(), report);
  compare_projections(k, report);
  return report;
}

ConsistencyReport check_global_fast(const Knowledgebase& k) {
  ConsistencyReport report = check_local(k);
  report.method = GlobalMethod::fast;
  std::vector<Relation> current = k.valuations();
  bool changed = true;
  bool any_empty = false;
  while (changed && !any_empty) {
    changed = false;
    std::vector<Relation> next;
    next.reserve(current.size());
    for (std::size_t j = 0; j < current.size(); ++j) {
      Relation acc = current[j];
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (i == j) continue;
        acc = combine(acc, project(current[i], current[i].label() & current[j].label()));
        note(report, acc);
      }
      if (acc != current[j]) changed = true;
      if (acc.empty()) any_empty = true;
      next.push_back(std::move(acc));
    }
    current = std::move(next);
    ++report.reduction_passes;
    if (report.reduction_passes == 1) report.single_pass_agreement = !changed;
  }
  for (const Relation& r : current) report.reduced_sizes.push_back(r.size());

  if (any_empty) {
    report.gamma = null_relation(k.domain());
  } else {
    report.joined_reduced = true;
    report.gamma = join_all(current, report);
  }
  compare_projections(k, report);
  return report;
}

ConsistencyReport check_global(const Knowledgebase& k, GlobalMethod method) {
  return method == GlobalMethod::direct ? check_global_direct(k) : check_global_fast(k);
}

FlasqueReport flasque_beneath(const Subpresheaf& a, const MaximalCover& cover) {
  const FiniteTopology& topology = a.topology();
  for (OpenSet block : cover.blocks()) {
    const std::vector<OpenSet> below = topology.opens_within(block);
    for (OpenSet larger : below) {
      const auto& upper = a.carrier(larger);
      for (OpenSet smaller : below) {
        if (!smaller.proper_subset_of(larger)) continue;
        std::vector<Trace> image;
        image.reserve(upper.size());
        for (const Trace& t : upper) image.push_back(restrict_trace(t, smaller));
        std::sort(image.begin(), image.end());
        for (const Trace& t : a.carrier(smaller)) {
          if (!std::binary_search(image.begin(), image.end(), t))
            return FlasqueReport{false, FlasqueWitness{block, larger, smaller, t}};
        }
      }
    }
  }
  return FlasqueReport{};
}

Knowledgebase knowledgebase_of(const Subpresheaf& a, const MaximalCover& cover) {
  std::vector<Relation> valuations;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    valuations.push_back(a.section_relation(cover.blocks()[i]));
    names.push_back("U" + std::to_string(i));
  }
  return Knowledgebase(std::move(valuations), std::move(names));
}

ConsistencyReport check_specification(const Specification& spec, GlobalMethod method) {
  Knowledgebase k = knowledgebase_of(spec.presheaf, spec.context);
  ConsistencyReport report = check_global(k, method);
  const auto& carrier = spec.presheaf.carrier(report.gamma.label());
  const bool section = std::includes(carrier.begin(), carrier.end(), report.gamma.traces().begin(),
                                     report.gamma.traces().end());
  report.gamma_is_section = section;
  report.global = report.global && section;
  return report;
}

}  // namespace reltrace
