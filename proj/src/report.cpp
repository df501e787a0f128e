#include "reltrace/report.hpp"

#include <sstream>

#include "reltrace/spec_file.hpp"

namespace reltrace {

using nlohmann::json;

namespace {

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string basis_cell(const ChainComplex& c, int p, const BasisElement& e) {
  if (p < 0) return "X";
  return cell_name(c.nerve().cells.at(static_cast<std::size_t>(p)).at(e.cell));
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string format_cover(const VariableTable& vars, const MaximalCover& cover) {
  std::string out;
  for (OpenSet b : cover.blocks()) {
    if (!out.empty()) out += ' ';
    out += vars.format(b);
  }
  return out;
}

json cover_json(const VariableTable& vars, const MaximalCover& cover) {
  json out = json::array();
  for (OpenSet b : cover.blocks()) out.push_back(encode_names(vars, b));
  return out;
}

std::string relation_text(const Frame& frame, const std::string& name, const Relation& r) {
  std::ostringstream out;
  out << name << " on " << frame.variables().format(r.label()) << ": " << plural(r.size(), "trace");
  if (r.universal_bound()) out << " (all traces up to " << *r.universal_bound() << " columns)";
  out << '\n';
  for (const Trace& t : r.traces()) out << "  " << format_trace_inline(frame, t) << '\n';
  return out.str();
}

json relation_json(const Frame& frame, const Relation& r) {
  json traces = json::array();
  for (const Trace& t : r.traces()) traces.push_back(encode_trace(frame, t));
  return {{"domain", encode_names(frame.variables(), r.label())}, {"size", r.size()}, {"traces", std::move(traces)}};
}

std::string local_verdict(const Knowledgebase& k, const ConsistencyReport& r) {
  if (r.local) return "locally consistent";
  const PairFailure& f = r.failing_pairs.front();
  return "locally inconsistent: " + k.names()[f.i] + " and " + k.names()[f.j] + " disagree on their overlap";
}

std::string global_verdict(const ConsistencyReport& r) {
  if (r.global) return "globally consistent";
  if (r.gamma.empty()) return "globally inconsistent, γ = ∅";
  return "globally inconsistent, |γ| = " + std::to_string(r.gamma.size());
}

std::string consistency_text(const Frame& frame, const Knowledgebase& k, const ConsistencyReport& r, bool global) {
  const VariableTable& vars = frame.variables();
  std::ostringstream out;
  for (std::size_t i = 0; i < k.size(); ++i)
    out << k.names()[i] << " on " << vars.format(k[i].label()) << ": " << plural(k[i].size(), "trace") << '\n';
  out << local_verdict(k, r) << '\n';
  for (const PairFailure& f : r.failing_pairs) {
    out << "  " << k.names()[f.i] << " vs " << k.names()[f.j] << " on " << vars.format(f.overlap) << '\n';
    out << "    " << relation_text(frame, k.names()[f.i] + "|overlap", f.left);
    out << "    " << relation_text(frame, k.names()[f.j] + "|overlap", f.right);
  }
  if (!global) return out.str();
  out << global_verdict(r) << '\n';
  out << "method: " << method_name(r.method) << ", largest intermediate: " << r.largest_intermediate
      << ", intermediate sizes:";
  for (std::size_t s : r.intermediate_sizes) out << ' ' << s;
  out << '\n';
  if (r.single_pass_agreement)
    out << "single pass agreement: " << (*r.single_pass_agreement ? "yes" : "no")
        << ", reduction passes: " << r.reduction_passes << '\n';
  for (std::size_t i = 0; i < r.per_valuation.size(); ++i) {
    const ValuationCheck& v = r.per_valuation[i];
    out << "  γ|" << k.names()[i] << (v.equal ? " = " : " ≠ ") << k.names()[i] << " (" << v.projected_size << " of "
        << v.original_size << ")\n";
  }
  if (r.gamma_is_section) out << "γ is a section of the specification: " << (*r.gamma_is_section ? "yes" : "no") << '\n';
  if (!r.gamma.empty()) out << relation_text(frame, "γ", r.gamma);
  return out.str();
}

json consistency_json(const Frame& frame, const Knowledgebase& k, const ConsistencyReport& r, bool global) {
  const VariableTable& vars = frame.variables();
  json pairs = json::array();
  for (const PairFailure& f : r.failing_pairs)
    pairs.push_back({{"left", k.names()[f.i]},
                     {"right", k.names()[f.j]},
                     {"overlap", encode_names(vars, f.overlap)},
                     {"left_projection", relation_json(frame, f.left)},
                     {"right_projection", relation_json(frame, f.right)}});
  json out = {{"local", r.local}, {"failing_pairs", std::move(pairs)}};
  if (!global) {
    out["verdict"] = r.local ? "locally consistent" : "locally inconsistent";
    return out;
  }
  out["verdict"] = r.global ? "globally consistent" : "globally inconsistent";
  out["global"] = r.global;
  out["method"] = method_name(r.method);
  out["gamma_size"] = r.gamma.size();
  out["gamma"] = relation_json(frame, r.gamma);
  json per = json::array();
  for (std::size_t i = 0; i < r.per_valuation.size(); ++i)
    per.push_back({{"name", k.names()[i]},
                   {"equal", r.per_valuation[i].equal},
                   {"projected_size", r.per_valuation[i].projected_size},
                   {"original_size", r.per_valuation[i].original_size}});
  out["per_valuation"] = std::move(per);
  out["intermediate_sizes"] = r.intermediate_sizes;
  out["largest_intermediate"] = r.largest_intermediate;
  if (r.single_pass_agreement) {
    out["single_pass_agreement"] = *r.single_pass_agreement;
    out["reduction_passes"] = r.reduction_passes;
    out["reduced_sizes"] = r.reduced_sizes;
    out["joined_reduced"] = r.joined_reduced;
  }
  if (r.gamma_is_section) out["gamma_is_section"] = *r.gamma_is_section;
  return out;
}

CohomologySummary summarize_cohomology(const Subpresheaf& a, const MaximalCover& cover, Ring ring) {
  CohomologySummary s{build_complex(a, cover, ring), {}};
  for (int p = -1; p <= s.complex.top_degree(); ++p) s.degrees.push_back(cohomology(s.complex, p));
  return s;
}

std::string cohomology_text(const Frame& frame, const CohomologySummary& s, bool matrices) {
  const ChainComplex& c = s.complex;
  std::ostringstream out;
  out << "nerve: " << c.nerve().vertices.size() << " vertices";
  for (std::size_t p = 1; p < c.nerve().cells.size(); ++p) out << ", " << c.nerve().cells[p].size() << " " << p << "-cells";
  out << '\n';
  for (int p = -1; p <= c.top_degree(); ++p) out << "C^" << p << ": dimension " << c.dim(p) << '\n';
  for (const CohomologyResult& h : s.degrees) {
    out << "H^" << h.degree << " over " << h.ring.name() << ": rank " << h.rank;
    for (const mpz_class& t : h.torsion) out << " (+ " << h.ring.name() << "/" << t.get_str() << ")";
    out << (h.vanishes() ? ", vanishes" : ", nonzero") << '\n';
    for (std::size_t k = 0; k < h.representatives.size(); ++k) {
      out << "  class " << k << ':';
      const auto& basis = c.basis(h.degree);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const mpz_class& coef = h.representatives[k][b];
        if (coef == 0) continue;
        out << ' ' << (coef > 0 ? "+" : "") << coef.get_str() << "*" << basis_cell(c, h.degree, basis[b]) << ":"
            << format_trace_inline(frame, basis[b].section);
      }
      out << '\n';
    }
  }
  if (matrices)
    for (int p = -1; p < c.top_degree(); ++p) {
      const IntMatrix m = c.coboundary(p);
      out << "d^" << p << "  " << m.rows() << " x " << m.cols() << '\n';
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t col = 0; col < m.cols(); ++col) out << (col ? " " : "") << m.at(r, col).get_str();
        out << '\n';
      }
    }
  return out.str();
}

json cohomology_json(const Frame& frame, const CohomologySummary& s, bool matrices) {
  const ChainComplex& c = s.complex;
  json cells = json::array();
  for (const auto& level : c.nerve().cells) {
    json names = json::array();
    for (const NerveCell& cell : level) names.push_back(cell_name(cell));
    cells.push_back(std::move(names));
  }
  json degrees = json::array();
  for (const CohomologyResult& h : s.degrees) {
    json torsion = json::array();
    for (const mpz_class& t : h.torsion) torsion.push_back(t.get_str());
    json reps = json::array();
    const auto& basis = c.basis(h.degree);
    for (const auto& rep : h.representatives) {
      json terms = json::array();
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (rep[b] != 0)
          terms.push_back({{"coefficient", rep[b].get_str()},
                           {"cell", basis_cell(c, h.degree, basis[b])},
                           {"section", encode_trace(frame, basis[b].section)}});
      reps.push_back(std::move(terms));
    }
    degrees.push_back({{"degree", h.degree},
                       {"dimension", c.dim(h.degree)},
                       {"rank", h.rank},
                       {"torsion", std::move(torsion)},
                       {"vanishes", h.vanishes()},
                       {"representatives", std::move(reps)}});
  }
  json out = {{"ring", c.ring().name()}, {"nerve", std::move(cells)}, {"cohomology", std::move(degrees)}};
  if (matrices) {
    json ms = json::array();
    for (int p = -1; p < c.top_degree(); ++p) {
      const IntMatrix m = c.coboundary(p);
      ms.push_back({{"degree", p}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_json(m)}});
    }
    out["coboundaries"] = std::move(ms);
  }
  return out;
}

std::string laws_text(const std::vector<LawResult>& results) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const LawResult& r : results) {
    out << (r.holds ? "ok    " : "FAIL  ") << r.suite << ": " << r.law << " (" << plural(r.cases, "case") << ")\n";
    if (!r.holds) {
      ++failed;
      out << "      counterexample: " << r.counterexample << '\n';
    }
  }
  out << results.size() - failed << " of " << plural(results.size(), "law") << " hold\n";
  return out.str();
}

json laws_json(const std::vector<LawResult>& results) {
  json laws = json::array();
  bool all = true;
  for (const LawResult& r : results) {
    all = all && r.holds;
    json entry = {{"suite", r.suite}, {"law", r.law}, {"cases", r.cases}, {"holds", r.holds}};
    if (!r.holds) entry["counterexample"] = r.counterexample;
    laws.push_back(std::move(entry));
  }
  return {{"verdict", all ? "all laws hold" : "some laws fail"}, {"laws", std::move(laws)}};
}

}  // namespace reltrace
