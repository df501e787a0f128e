#include "reltrace/relation.hpp"

#include <algorithm>
#include <unordered_map>

#include "reltrace/errors.hpp"

namespace reltrace {

namespace {

void canonicalize(std::vector<Trace>& traces) {
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
}

}  // namespace

Relation::Relation(OpenSet domain, std::vector<Trace> traces) : domain_(domain), traces_(std::move(traces)) {
  for (const Trace& t : traces_)
    if (t.domain() != domain_) throw DomainError("trace domain differs from the relation label");
  canonicalize(traces_);
}

bool Relation::contains(const Trace& t) const { return std::binary_search(traces_.begin(), traces_.end(), t); }

std::size_t Relation::max_columns() const noexcept {
  std::size_t m = 0;
  for (const Trace& t : traces_) m = std::max(m, t.column_count());
  return m;
}

OpenSet label(const Relation& r) { return r.label(); }

Relation project(const Relation& r, OpenSet sub) {
  if (!sub.subset_of(r.label())) throw DomainError("projection target is not a subset of the relation label");
  if (sub == r.label()) return r;
  std::vector<Trace> out;
  out.reserve(r.size());
  for (const Trace& t : r.traces()) out.push_back(restrict_trace(t, sub));
  canonicalize(out);
  // Every trace on `sub` within the bound extends to the larger domain, so
  // the projection of a bounded universal relation is again universal.
  return Relation(Relation::Sorted{}, sub, std::move(out), r.universal_bound());
}

std::vector<Trace> glue_pair(const Trace& x, const Trace& y) {
  const OpenSet u = x.domain();
  const OpenSet w = y.domain();
  const OpenSet overlap = u & w;
  const OpenSet joint = u | w;
  if (restrict_trace(x, overlap) != restrict_trace(y, overlap))
    throw PreconditionError("traces disagree on the overlap of their domains");
  if (x.is_empty()) return {Trace::empty(joint)};  // then y is empty as well

  const std::size_t a = x.column_count();
  const std::size_t b = y.column_count();

  std::vector<std::size_t> x_overlap_rows, y_overlap_rows;
  for (VarId v : overlap.members()) {
    x_overlap_rows.push_back(u.position_of(v));
    y_overlap_rows.push_back(w.position_of(v));
  }
  // agree[i*b+j]: column i of x and column j of y match on the overlap.
  std::vector<char> agree(a * b, 0);
  for (std::size_t i = 0; i < a; ++i) {
    auto xc = x.column(i);
    for (std::size_t j = 0; j < b; ++j) {
      auto yc = y.column(j);
      bool ok = true;
      for (std::size_t r = 0; r < x_overlap_rows.size() && ok; ++r) ok = xc[x_overlap_rows[r]] == yc[y_overlap_rows[r]];
      agree[i * b + j] = ok;
    }
  }
  // live[i*b+j]: (a-1, b-1) is reachable from (i, j) through agreeing points.
  std::vector<char> live(a * b, 0);
  for (std::size_t i = a; i-- > 0;) {
    for (std::size_t j = b; j-- > 0;) {
      if (!agree[i * b + j]) continue;
      if (i == a - 1 && j == b - 1) {
        live[i * b + j] = 1;
        continue;
      }
      const bool right = i + 1 < a && live[(i + 1) * b + j];
      const bool down = j + 1 < b && live[i * b + j + 1];
      const bool diag = i + 1 < a && j + 1 < b && live[(i + 1) * b + j + 1];
      live[i * b + j] = right || down || diag;
    }
  }
  if (!live[0]) return {};

  // Column k of z merges x_i and y_j: rows from u take x's value.
  const std::vector<VarId> joint_vars = joint.members();
  std::vector<std::pair<bool, std::size_t>> source;  // (from x?, row)
  for (VarId v : joint_vars) {
    if (u.contains(v))
      source.emplace_back(true, u.position_of(v));
    else
      source.emplace_back(false, w.position_of(v));
  }
  auto emit_column = [&](std::vector<StateId>& cells, std::size_t i, std::size_t j) {
    auto xc = x.column(i);
    auto yc = y.column(j);
    for (auto [from_x, row] : source) cells.push_back(from_x ? xc[row] : yc[row]);
  };

  std::vector<Trace> out;
  std::vector<std::pair<std::size_t, std::size_t>> path{{0, 0}};
  // Depth-first walk over monotone lattice paths with unit and diagonal steps.
  auto walk = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == a - 1 && j == b - 1) {
      std::vector<StateId> cells;
      cells.reserve(path.size() * joint_vars.size());
      for (auto [pi, pj] : path) emit_column(cells, pi, pj);
      out.push_back(destutter_cells(joint, std::move(cells), path.size()));
      return;
    }
    const std::pair<std::size_t, std::size_t> steps[] = {{i + 1, j}, {i, j + 1}, {i + 1, j + 1}};
    for (auto [ni, nj] : steps) {
      if (ni >= a || nj >= b || !live[ni * b + nj]) continue;
      path.emplace_back(ni, nj);
      self(self, ni, nj);
      path.pop_back();
    }
  };
  walk(walk, 0, 0);
  canonicalize(out);
  return out;
}

Relation combine(const Relation& r, const Relation& s) {
  const OpenSet overlap = r.label() & s.label();
  const OpenSet joint = r.label() | s.label();
  std::unordered_map<Trace, std::vector<const Trace*>, TraceHash> by_overlap;
  for (const Trace& y : s.traces()) by_overlap[restrict_trace(y, overlap)].push_back(&y);

  std::vector<Trace> out;
  for (const Trace& x : r.traces()) {
    auto it = by_overlap.find(restrict_trace(x, overlap));
    if (it == by_overlap.end()) continue;
    for (const Trace* y : it->second) {
      std::vector<Trace> glued = glue_pair(x, *y);
      out.insert(out.end(), std::make_move_iterator(glued.begin()), std::make_move_iterator(glued.end()));
    }
  }
  canonicalize(out);
  Relation result(Relation::Sorted{}, joint, std::move(out));
  if (r.universal_bound() && s.universal_bound()) {
    const std::size_t bound = std::min(*r.universal_bound(), *s.universal_bound());
    result = truncate(result, bound);
    result.universal_bound_ = bound;
  }
  return result;
}

Relation neutral(const Frame& frame, OpenSet domain, std::size_t bound) {
  return Relation(Relation::Sorted{}, domain, enumerate_traces(frame, domain, bound), bound);
}

Relation null_relation(OpenSet domain) { return Relation(domain, {}); }

bool refines(const Relation& r, const Relation& s) {
  if (r.label() != s.label()) return false;
  return std::includes(s.traces().begin(), s.traces().end(), r.traces().begin(), r.traces().end());
}

Relation intersect(const Relation& r, const Relation& s) {
  if (r.label() != s.label()) throw DomainError("intersection of relations with different labels");
  std::vector<Trace> out;
  std::set_intersection(r.traces().begin(), r.traces().end(), s.traces().begin(), s.traces().end(),
                        std::back_inserter(out));
  return Relation(r.label(), std::move(out));
}

Relation unite(const Relation& r, const Relation& s) {
  if (r.label() != s.label()) throw DomainError("union of relations with different labels");
  std::vector<Trace> out;
  std::set_union(r.traces().begin(), r.traces().end(), s.traces().begin(), s.traces().end(),
                 std::back_inserter(out));
  return Relation(r.label(), std::move(out));
}

Relation truncate(const Relation& r, std::size_t max_columns) {
  std::vector<Trace> out;
  for (const Trace& t : r.traces())
    if (t.column_count() <= max_columns) out.push_back(t);
  return Relation(r.label(), std::move(out));
}

Relation brute_force_combine(const Frame& frame, const Relation& r, const Relation& s, std::size_t bound) {
  const OpenSet joint = r.label() | s.label();
  std::vector<Trace> out;
  for (Trace& z : enumerate_traces(frame, joint, bound)) {
    if (r.contains(restrict_trace(z, r.label())) && s.contains(restrict_trace(z, s.label())))
      out.push_back(std::move(z));
  }
  return Relation(joint, std::move(out));
}

}  // namespace reltrace
