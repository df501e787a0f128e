// reltrace: command-line front end. Exit status 0 when the property holds or
// the operation succeeds, 1 when the property fails, 2 on usage or
// validation errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "reltrace/cohomology.hpp"
#include "reltrace/consistency.hpp"
#include "reltrace/dining.hpp"
#include "reltrace/errors.hpp"
#include "reltrace/kleene.hpp"
#include "reltrace/laws.hpp"
#include "reltrace/report.hpp"
#include "reltrace/spec_file.hpp"

using namespace reltrace;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Common {
  std::string spec;
  std::string json_out;
  bool timings = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_spec = true) {
  if (needs_spec) cmd->add_option("spec,--spec", c.spec, "Spec file (JSON, schema version 1)")->required();
  cmd->add_option("--json-out", c.json_out, "Also write the machine-readable report here");
  cmd->add_flag("--timings", c.timings, "Include wall-clock timings in the JSON report");
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Common& c, json doc, const Stopwatch& clock) {
  if (c.json_out.empty()) return;
  if (c.timings) doc["timings"] = {{"total_ms", clock.ms()}};
  std::ofstream out(c.json_out);
  if (!out) throw ValidationError(c.json_out, "cannot write report");
  out << doc.dump(2) << '\n';
}

Knowledgebase knowledgebase_for(const SpecDocument& doc) {
  if (!doc.relations.empty()) return doc.knowledgebase();
  if (doc.specification) return knowledgebase_of(*doc.specification, doc.cover);
  throw ValidationError("/relations", "the document has neither relations nor a specification");
}

int check_local_cmd(const Common& c) {
  Stopwatch clock;
  const SpecDocument doc = load_spec(c.spec);
  const Knowledgebase k = knowledgebase_for(doc);
  const ConsistencyReport r = check_local(k);
  std::cout << consistency_text(doc.frame, k, r, false);
  emit(c, consistency_json(doc.frame, k, r, false), clock);
  return r.local ? kHolds : kFails;
}

int check_global_cmd(const Common& c, const std::optional<std::string>& method) {
  Stopwatch clock;
  const SpecDocument doc = load_spec(c.spec);
  const Knowledgebase k = knowledgebase_for(doc);
  const GlobalMethod m = method ? parse_method(*method) : doc.options.method;
  ConsistencyReport r = check_global(k, m);
  if (doc.specification && doc.topology.is_open(r.gamma.label())) {
    bool inside = true;
    for (const Trace& t : r.gamma.traces()) inside = inside && doc.specification->contains(r.gamma.label(), t);
    r.gamma_is_section = inside;
  }
  std::cout << consistency_text(doc.frame, k, r, true);
  emit(c, consistency_json(doc.frame, k, r, true), clock);
  return r.global ? kHolds : kFails;
}

int relation_result(const Common& c, const SpecDocument& doc, const std::string& name, const Relation& r,
                    const Stopwatch& clock) {
  std::cout << relation_text(doc.frame, name, r);
  emit(c, {{"verdict", "ok"}, {"result", relation_json(doc.frame, r)}}, clock);
  return kHolds;
}

int combine_cmd(const Common& c, const std::string& a, const std::string& b) {
  Stopwatch clock;
  const SpecDocument doc = load_spec(c.spec);
  return relation_result(c, doc, a + " (x) " + b, combine(doc.relation(a), doc.relation(b)), clock);
}

int project_cmd(const Common& c, const std::string& a, const std::string& open) {
  Stopwatch clock;
  const SpecDocument doc = load_spec(c.spec);
  const OpenSet u = parse_open(doc.frame.variables(), open);
  return relation_result(c, doc, a + "|" + doc.frame.variables().format(u), project(doc.relation(a), u), clock);
}

int seq_cmd(const Common& c, const std::string& a, const std::string& b) {
  Stopwatch clock;
  const SpecDocument doc = load_spec(c.spec);
  return relation_result(c, doc, a + " ; " + b, seq_compose(doc.relation(a), doc.relation(b)), clock);
}

int cohomology_cmd(const Common& c, const std::optional<std::string>& ring, bool matrices) {
  Stopwatch clock;
  const SpecDocument doc = load_spec(c.spec);
  const Ring rg = ring ? parse_ring(*ring) : doc.options.ring;
  const CohomologySummary s = summarize_cohomology(doc.presheaf(), doc.cover, rg);
  std::cout << cohomology_text(doc.frame, s, matrices);
  const bool obstructed = !s.degrees[0].vanishes() || (s.degrees.size() > 1 && !s.degrees[1].vanishes());
  std::cout << (obstructed ? "obstruction present\n" : "no obstruction\n");
  json out = cohomology_json(doc.frame, s, matrices);
  out["verdict"] = obstructed ? "obstruction present" : "no obstruction";
  emit(c, std::move(out), clock);
  return obstructed ? kFails : kHolds;
}

int lattice_cmd(const Common& c, bool meet, const std::string& a, const std::string& b) {
  Stopwatch clock;
  const SpecDocument doc = load_spec(c.spec);
  const VariableTable& vars = doc.frame.variables();
  const MaximalCover u(doc.topology, parse_blocks(vars, a));
  const MaximalCover w(doc.topology, parse_blocks(vars, b));
  const MaximalCover r = meet ? cover_meet(doc.topology, u, w) : cover_join(u, w);
  std::cout << (meet ? "meet: " : "join: ") << format_cover(vars, r) << '\n';
  emit(c, {{"verdict", "ok"}, {"operation", meet ? "meet" : "join"}, {"result", cover_json(vars, r)}}, clock);
  return kHolds;
}

int dining_cmd(const Common& c, std::size_t n, std::size_t bound, const std::string& export_path) {
  Stopwatch clock;
  const DiningModel m = dining_model(n);
  const SpecDocument doc = dining_document(m, bound);
  const VariableTable& vars = m.frame.variables();
  std::cout << n << " philosophers, " << vars.size() << " variables\n";
  for (VarId v = 0; v < m.frame.size(); ++v) {
    std::cout << "  " << vars.name(v) << ':';
    for (const std::string& label : m.frame.space(v).labels()) std::cout << ' ' << label;
    std::cout << '\n';
  }
  std::cout << "context: " << format_cover(vars, m.context) << '\n';
  const Knowledgebase k = doc.knowledgebase();
  for (std::size_t i = 0; i < k.size(); ++i) {
    std::cout << k.names()[i] << " on " << vars.format(k[i].label()) << ": " << k[i].size() << " trace(s)\n";
    if (k[i].size() <= 4)
      for (const Trace& t : k[i].traces()) {
        std::istringstream lines(format_trace(m.frame, t));
        for (std::string line; std::getline(lines, line);) std::cout << "    " << line << '\n';
      }
  }
  const ConsistencyReport r = check_global(k, doc.options.method);
  std::cout << local_verdict(k, r) << '\n' << global_verdict(r) << '\n';
  if (!export_path.empty()) {
    save_spec(doc, export_path);
    std::cout << "exported to " << export_path << '\n';
  }
  json out = consistency_json(m.frame, k, r, true);
  out["n"] = n;
  out["context"] = cover_json(vars, m.context);
  emit(c, std::move(out), clock);
  return kHolds;
}

int laws_cmd(const Common& c, const std::string& suite, const LawConfig& config) {
  Stopwatch clock;
  const auto results = run_law_suite(suite, config);
  std::cout << laws_text(results);
  emit(c, laws_json(results), clock);
  for (const LawResult& r : results)
    if (!r.holds) return kFails;
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consistency, combination and cohomology of relative-trace specifications"};
  app.require_subcommand(1);

  Common common;
  std::optional<std::string> method, ring;
  std::string name_a, name_b, open, export_path;
  std::string suite = "all";
  bool matrices = false;
  std::size_t n = 3, bound = 4;
  LawConfig laws;

  auto* local = app.add_subcommand("check-local", "Pairwise agreement on overlaps");
  add_common(local, common);
  auto* global = app.add_subcommand("check-global", "Existence of a truth valuation");
  add_common(global, common);
  global->add_option("--method", method, "direct or fast (default from the file)");
  auto* comb = app.add_subcommand("combine", "Combination of two named relations");
  add_common(comb, common);
  comb->add_option("r", name_a)->required();
  comb->add_option("s", name_b)->required();
  auto* proj = app.add_subcommand("project", "Projection of a named relation onto an open set");
  add_common(proj, common);
  proj->add_option("r", name_a)->required();
  proj->add_option("open", open, "Comma-separated variables")->required();
  auto* seq = app.add_subcommand("seq", "Sequential composition of two named relations");
  add_common(seq, common);
  seq->add_option("r", name_a)->required();
  seq->add_option("s", name_b)->required();
  auto* coh = app.add_subcommand("cohomology", "Augmented Cech cohomology of the specification over the cover");
  add_common(coh, common);
  coh->add_option("--ring", ring, "Z, Q or Zq for a prime q (default from the file)");
  coh->add_flag("--matrices", matrices, "Print the coboundary matrices");
  auto* meet = app.add_subcommand("lattice-meet", "Meet of two maximal covers");
  auto* join = app.add_subcommand("lattice-join", "Join of two maximal covers");
  for (auto* cmd : {meet, join}) {
    add_common(cmd, common);
    cmd->add_option("coverA", name_a, "Blocks as \"a,b;b,c\"")->required();
    cmd->add_option("coverB", name_b)->required();
  }
  auto* din = app.add_subcommand("dining", "The dining philosophers model");
  add_common(din, common, false);
  din->add_option("--n", n, "Number of philosophers")->check(CLI::Range(2, 16));
  din->add_option("--bound", bound, "Column bound for legal traces when n != 3")->check(CLI::Range(1, 8));
  din->add_option("--export", export_path, "Write the model as a spec file");
  auto* law = app.add_subcommand("laws", "Randomized algebraic law suites");
  add_common(law, common, false);
  law->add_option("--suite", suite)->check(CLI::IsMember(law_suite_names()));
  law->add_option("--cases", laws.cases, "Cases per law");
  law->add_option("--seed", laws.seed);
  law->add_option("--bound", laws.bound, "Trace bound")->check(CLI::Range(1, 5));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*local) return check_local_cmd(common);
    if (*global) return check_global_cmd(common, method);
    if (*comb) return combine_cmd(common, name_a, name_b);
    if (*proj) return project_cmd(common, name_a, open);
    if (*seq) return seq_cmd(common, name_a, name_b);
    if (*coh) return cohomology_cmd(common, ring, matrices);
    if (*meet) return lattice_cmd(common, true, name_a, name_b);
    if (*join) return lattice_cmd(common, false, name_a, name_b);
    if (*din) return dining_cmd(common, n, bound, export_path);
    if (*law) return laws_cmd(common, suite, laws);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
