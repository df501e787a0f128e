#include "reltrace/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "reltrace/errors.hpp"

namespace reltrace {

using nlohmann::json;

namespace {

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string at(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const json& expect(const json& j, json::value_t type, const std::string& ptr, const char* what) {
  if (j.type() != type) throw ValidationError(ptr.empty() ? "/" : ptr, std::string("expected ") + what);
  return j;
}
const json& expect_array(const json& j, const std::string& ptr) { return expect(j, json::value_t::array, ptr, "an array"); }
const json& expect_object(const json& j, const std::string& ptr) {
  return expect(j, json::value_t::object, ptr, "an object");
}
const std::string& expect_string(const json& j, const std::string& ptr) {
  return expect(j, json::value_t::string, ptr, "a string").get_ref<const std::string&>();
}

const json& required(const json& obj, const char* key, const std::string& ptr) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(ptr.empty() ? "/" : ptr, std::string("missing field \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& ptr) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known = known || it.key() == k;
    if (!known) throw ValidationError(at(ptr, it.key()), "unknown field \"" + it.key() + "\"");
  }
}

OpenSet parse_names(const VariableTable& vars, const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  std::vector<VarId> ids;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string& name = expect_string(j[i], at(ptr, i));
    auto id = vars.find(name);
    if (!id) throw ValidationError(at(ptr, i), "unknown variable \"" + name + "\"");
    if (std::find(ids.begin(), ids.end(), *id) != ids.end())
      throw ValidationError(at(ptr, i), "variable \"" + name + "\" listed twice");
    ids.push_back(*id);
  }
  return OpenSet::from_ids(ids);
}

Trace parse_trace(const Frame& frame, OpenSet domain, const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  const auto& vars = frame.variables();
  const std::vector<VarId> members = domain.members();
  std::vector<ProductState> columns;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string cptr = at(ptr, k);
    const json& col = expect_object(j[k], cptr);
    for (auto it = col.begin(); it != col.end(); ++it) {
      auto id = vars.find(it.key());
      if (!id) throw ValidationError(at(cptr, it.key()), "unknown variable \"" + it.key() + "\"");
      if (!domain.contains(*id))
        throw ValidationError(at(cptr, it.key()), "variable \"" + it.key() + "\" is outside the domain " + vars.format(domain));
    }
    ProductState state;
    for (VarId v : members) {
      auto it = col.find(vars.name(v));
      if (it == col.end()) throw ValidationError(cptr, "column " + std::to_string(k) + " lacks variable \"" + vars.name(v) + "\"");
      const std::string& label = expect_string(*it, at(cptr, vars.name(v)));
      auto s = frame.space(v).find(label);
      if (!s) throw ValidationError(at(cptr, vars.name(v)), "\"" + label + "\" is not a state of " + vars.name(v));
      state.push_back(*s);
    }
    columns.push_back(std::move(state));
  }
  try {
    Trace t(domain, columns);
    check_chain(frame, t);
    return t;
  } catch (const std::invalid_argument& e) {
    throw ValidationError(ptr, e.what());
  }
}

std::vector<Trace> parse_traces(const Frame& frame, OpenSet domain, const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  std::vector<Trace> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_trace(frame, domain, j[i], at(ptr, i)));
  return out;
}

json traces_json(const Frame& frame, const std::vector<Trace>& ts) {
  json out = json::array();
  for (const Trace& t : ts) out.push_back(encode_trace(frame, t));
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

json encode_names(const VariableTable& vars, OpenSet s) {
  json out = json::array();
  for (VarId v : s.members()) out.push_back(vars.name(v));
  return out;
}

json encode_trace(const Frame& frame, const Trace& t) {
  json out = json::array();
  const std::vector<VarId> members = t.domain().members();
  for (std::size_t k = 0; k < t.column_count(); ++k) {
    json col = json::object();
    auto c = t.column(k);
    for (std::size_t r = 0; r < members.size(); ++r)
      col[frame.variables().name(members[r])] = frame.space(members[r]).label(c[r]);
    out.push_back(std::move(col));
  }
  return out;
}

const Relation& SpecDocument::relation(const std::string& name) const {
  for (const auto& r : relations)
    if (r.name == name) return r.relation;
  throw ValidationError("/relations", "no relation named \"" + name + "\"");
}

Knowledgebase SpecDocument::knowledgebase() const {
  if (relations.empty()) throw ValidationError("/relations", "the document has no relations to check");
  std::vector<Relation> rs;
  std::vector<std::string> names;
  for (const auto& r : relations) {
    rs.push_back(r.relation);
    names.push_back(r.name);
  }
  return Knowledgebase(std::move(rs), std::move(names));
}

Subpresheaf SpecDocument::presheaf() const {
  if (specification) return *specification;
  CarrierMap partial;
  for (const auto& r : relations) {
    auto& slot = partial[r.relation.label()];
    slot.insert(slot.end(), r.relation.traces().begin(), r.relation.traces().end());
  }
  return restriction_closure(topology, partial);
}

SpecDocument parse_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  expect_object(root, "");
  reject_unknown_keys(root, {"version", "space", "cover", "relations", "specification", "options"}, "");
  const std::string& version = expect_string(required(root, "version", ""), "/version");
  if (version != "1") throw ValidationError("/version", "unsupported schema version \"" + version + "\"");

  const json& space = expect_object(required(root, "space", ""), "/space");
  reject_unknown_keys(space, {"variables", "subbasis"}, "/space");
  const json& variables = expect_array(required(space, "variables", "/space"), "/space/variables");
  Frame frame;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    const std::string ptr = at("/space/variables", i);
    const json& v = expect_object(variables[i], ptr);
    reject_unknown_keys(v, {"name", "states", "order"}, ptr);
    const std::string& name = expect_string(required(v, "name", ptr), at(ptr, "name"));
    const json& states = expect_array(required(v, "states", ptr), at(ptr, "states"));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < states.size(); ++k) labels.push_back(expect_string(states[k], at(at(ptr, "states"), k)));
    try {
      if (v.contains("order")) {
        const json& order = expect_array(v["order"], at(ptr, "order"));
        std::vector<std::pair<std::string, std::string>> pairs;
        for (std::size_t k = 0; k < order.size(); ++k) {
          const std::string pptr = at(at(ptr, "order"), k);
          const json& p = expect_array(order[k], pptr);
          if (p.size() != 2) throw ValidationError(pptr, "an order pair has two states");
          pairs.emplace_back(expect_string(p[0], at(pptr, 0)), expect_string(p[1], at(pptr, 1)));
        }
        frame.add_variable(name, StateSpace::generated(std::move(labels), pairs));
      } else {
        frame.add_variable(name, StateSpace::total(std::move(labels)));
      }
    } catch (const std::logic_error& e) {
      throw ValidationError(ptr, e.what());
    }
  }
  if (frame.size() > kMaxVariables)
    throw ValidationError("/space/variables", "at most " + std::to_string(kMaxVariables) + " variables are supported");

  const VariableTable& vars = frame.variables();
  const json& sub = expect_array(required(space, "subbasis", "/space"), "/space/subbasis");
  std::vector<OpenSet> subbasis;
  for (std::size_t i = 0; i < sub.size(); ++i) subbasis.push_back(parse_names(vars, sub[i], at("/space/subbasis", i)));
  FiniteTopology topology = generate_topology(frame.universe(), subbasis);

  std::optional<MaximalCover> cover;
  if (root.contains("cover")) {
    const json& c = expect_array(root["cover"], "/cover");
    std::vector<OpenSet> blocks;
    for (std::size_t i = 0; i < c.size(); ++i) {
      blocks.push_back(parse_names(vars, c[i], at("/cover", i)));
      if (!topology.is_open(blocks.back()))
        throw ValidationError(at("/cover", i), "block " + vars.format(blocks.back()) + " is not open");
    }
    try {
      cover.emplace(topology, std::move(blocks));
    } catch (const DomainError& e) {
      throw ValidationError("/cover", e.what());
    }
  }

  std::vector<NamedRelation> relations;
  if (root.contains("relations")) {
    const json& rs = expect_array(root["relations"], "/relations");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string ptr = at("/relations", i);
      const json& r = expect_object(rs[i], ptr);
      reject_unknown_keys(r, {"name", "domain", "traces"}, ptr);
      const std::string& name = expect_string(required(r, "name", ptr), at(ptr, "name"));
      if (!seen.insert(name).second) throw ValidationError(at(ptr, "name"), "duplicate relation name \"" + name + "\"");
      const OpenSet domain = parse_names(vars, required(r, "domain", ptr), at(ptr, "domain"));
      if (!topology.is_open(domain))
        throw ValidationError(at(ptr, "domain"), "domain " + vars.format(domain) + " is not open");
      std::vector<Trace> traces = parse_traces(frame, domain, required(r, "traces", ptr), at(ptr, "traces"));
      relations.push_back({name, Relation(domain, std::move(traces))});
    }
  }

  std::optional<Subpresheaf> specification;
  if (root.contains("specification")) {
    const json& s = expect_object(root["specification"], "/specification");
    reject_unknown_keys(s, {"carriers"}, "/specification");
    const json& carriers = expect_array(required(s, "carriers", "/specification"), "/specification/carriers");
    CarrierMap partial;
    for (std::size_t i = 0; i < carriers.size(); ++i) {
      const std::string ptr = at("/specification/carriers", i);
      const json& c = expect_object(carriers[i], ptr);
      reject_unknown_keys(c, {"open", "traces"}, ptr);
      const OpenSet open = parse_names(vars, required(c, "open", ptr), at(ptr, "open"));
      if (!topology.is_open(open)) throw ValidationError(at(ptr, "open"), vars.format(open) + " is not open");
      auto traces = parse_traces(frame, open, required(c, "traces", ptr), at(ptr, "traces"));
      auto& slot = partial[open];
      slot.insert(slot.end(), traces.begin(), traces.end());
    }
    specification = restriction_closure(topology, partial);
  }

  SpecOptions options;
  if (root.contains("options")) {
    const json& o = expect_object(root["options"], "/options");
    reject_unknown_keys(o, {"bound", "ring", "method"}, "/options");
    if (o.contains("bound")) {
      if (!o["bound"].is_number_unsigned()) throw ValidationError("/options/bound", "expected a non-negative integer");
      options.bound = o["bound"].get<std::size_t>();
    }
    try {
      if (o.contains("ring")) options.ring = parse_ring(expect_string(o["ring"], "/options/ring"));
      if (o.contains("method")) options.method = parse_method(expect_string(o["method"], "/options/method"));
    } catch (const ValidationError& e) {
      throw ValidationError(e.location() == "options.ring" ? "/options/ring" : "/options/method", e.detail());
    }
  }

  MaximalCover context = cover ? *cover : trivial_context(topology);
  return SpecDocument{std::move(frame),     std::move(subbasis),      std::move(topology), std::move(context),
                      std::move(relations), std::move(specification), options};
}

SpecDocument load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path, "cannot read file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_spec(text.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ":" + e.location(), e.detail());
  }
}

std::string dump_spec(const SpecDocument& doc) {
  const VariableTable& vars = doc.frame.variables();
  json root = json::object();
  root["version"] = "1";
  json variables = json::array();
  for (VarId v = 0; v < doc.frame.size(); ++v) {
    const StateSpace& space = doc.frame.space(v);
    json var = {{"name", vars.name(v)}, {"states", space.labels()}};
    if (!space.is_total()) {
      json order = json::array();
      for (auto [a, b] : space.strict_pairs()) order.push_back({space.label(a), space.label(b)});
      var["order"] = std::move(order);
    }
    variables.push_back(std::move(var));
  }
  json subbasis = json::array();
  for (OpenSet s : doc.subbasis) subbasis.push_back(encode_names(vars, s));
  root["space"] = {{"variables", std::move(variables)}, {"subbasis", std::move(subbasis)}};

  json cover = json::array();
  for (OpenSet b : doc.cover.blocks()) cover.push_back(encode_names(vars, b));
  root["cover"] = std::move(cover);

  json relations = json::array();
  for (const auto& r : doc.relations)
    relations.push_back({{"name", r.name},
                         {"domain", encode_names(vars, r.relation.label())},
                         {"traces", traces_json(doc.frame, r.relation.traces())}});
  root["relations"] = std::move(relations);

  if (doc.specification) {
    json carriers = json::array();
    for (const auto& [open, ts] : doc.specification->carriers())
      carriers.push_back({{"open", encode_names(vars, open)}, {"traces", traces_json(doc.frame, ts)}});
    root["specification"] = {{"carriers", std::move(carriers)}};
  }
  root["options"] = {{"bound", doc.options.bound},
                     {"ring", doc.options.ring.name()},
                     {"method", method_name(doc.options.method)}};
  return root.dump(2) + "\n";
}

void save_spec(const SpecDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path, "cannot write file");
  out << dump_spec(doc);
  if (!out) throw ValidationError(path, "write failed");
}

SpecDocument dining_document(const DiningModel& m, std::size_t bound) {
  std::vector<NamedRelation> relations;
  std::optional<Subpresheaf> specification;
  if (m.n == 3) {
    const Knowledgebase k = dining_knowledgebase(m);
    for (std::size_t i = 0; i < k.size(); ++i) relations.push_back({k.names()[i], k[i]});
    specification = knowledgebase_presheaf(m, k);
  } else {
    for (std::size_t i = 0; i < m.n; ++i) relations.push_back({"A" + std::to_string(i), legal_traces(m, i, bound)});
  }
  SpecOptions options;
  options.bound = bound;
  return SpecDocument{m.frame, m.blocks, m.topology, m.context, std::move(relations), std::move(specification), options};
}

std::vector<OpenSet> parse_blocks(const VariableTable& vars, const std::string& text) {
  std::vector<OpenSet> out;
  for (const std::string& block : split(text, ';')) out.push_back(parse_open(vars, block));
  return out;
}

OpenSet parse_open(const VariableTable& vars, const std::string& text) {
  std::vector<VarId> ids;
  if (trim(text).empty()) return OpenSet();
  for (const std::string& name : split(text, ',')) {
    auto id = vars.find(name);
    if (!id) throw ValidationError(text, "unknown variable \"" + name + "\"");
    ids.push_back(*id);
  }
  return OpenSet::from_ids(ids);
}

}  // namespace reltrace
