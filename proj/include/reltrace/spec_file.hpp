#pragma once

// The JSON spec file (schema version "1"):
//
//   {
//     "version": "1",
//     "space": {
//       "variables": [{"name": "a", "states": ["0", "1"], "order": [["0", "1"]]}, ...],
//       "subbasis": [["a"], ["a", "b"], ...]
//     },
//     "cover": [["a"], ["b"]],
//     "relations": [{"name": "r", "domain": ["a"], "traces": [[{"a": "0"}, {"a": "1"}], ...]}],
//     "specification": {"carriers": [{"open": ["a"], "traces": [...]}]},
//     "options": {"bound": 4, "ring": "Q", "method": "direct"}
//   }
//
// Variable ids follow the order of "variables". "order" lists (lower, upper)
// pairs whose reflexive-transitive closure is the state order; without it the
// order is total. The topology is generated by "subbasis". "cover" defaults to
// the trivial context, "relations" to none, "options" to the values shown.
// A trace is a list of columns, each mapping every domain variable to a state.
// Specification carriers are closed under restriction on load.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reltrace/cohomology.hpp"
#include "reltrace/consistency.hpp"
#include "reltrace/dining.hpp"
#include "reltrace/frame.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/specification.hpp"
#include "reltrace/topology.hpp"

namespace reltrace {

struct NamedRelation {
  std::string name;
  Relation relation;
};

struct SpecOptions {
  std::size_t bound = 4;
  Ring ring = Ring::rationals();
  GlobalMethod method = GlobalMethod::direct;
};

struct SpecDocument {
  Frame frame;
  std::vector<OpenSet> subbasis;
  FiniteTopology topology;
  MaximalCover cover;
  std::vector<NamedRelation> relations;
  std::optional<Subpresheaf> specification;
  SpecOptions options;

  /// Throws ValidationError naming the relation when absent.
  const Relation& relation(const std::string& name) const;
  /// Every relation, in file order. Throws ValidationError when there are none.
  Knowledgebase knowledgebase() const;
  /// The specification section if present, else the restriction closure of
  /// the relations.
  Subpresheaf presheaf() const;
};

/// Throws ValidationError with a JSON-pointer location on any violation.
SpecDocument parse_spec(const std::string& text);
/// As parse_spec; the location is prefixed with the path. Unreadable files
/// raise ValidationError too.
SpecDocument load_spec(const std::string& path);

/// Canonical JSON text: fixed key order, relations in document order, traces
/// and carriers in canonical order.
std::string dump_spec(const SpecDocument& doc);
void save_spec(const SpecDocument& doc, const std::string& path);

/// The model as a spec file. For n = 3 the relations are φ0, φ1, φ2 and the
/// specification is their restriction closure; otherwise the relations are
/// the legal traces of each block with at most `bound` columns.
SpecDocument dining_document(const DiningModel& m, std::size_t bound = 4);

/// The interchange encoding of a trace: a list of columns, each an object
/// mapping every domain variable to its state label.
nlohmann::json encode_trace(const Frame& frame, const Trace& t);
nlohmann::json encode_names(const VariableTable& vars, OpenSet s);

/// Parses "a,b;b,c" into covers blocks. Throws ValidationError on unknown
/// variables.
std::vector<OpenSet> parse_blocks(const VariableTable& vars, const std::string& text);
/// Parses "a,b" (or "" for the empty set).
OpenSet parse_open(const VariableTable& vars, const std::string& text);

}  // namespace reltrace
