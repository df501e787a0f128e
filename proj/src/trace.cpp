#include "reltrace/trace.hpp"

#include <algorithm>
#include <sstream>

#include "reltrace/errors.hpp"

namespace reltrace {

namespace {

bool same_column(const std::vector<StateId>& cells, std::size_t w, std::size_t a, std::size_t b) {
  return std::equal(cells.begin() + a * w, cells.begin() + (a + 1) * w, cells.begin() + b * w);
}

}  // namespace

Trace::Trace(OpenSet domain, std::span<const ProductState> columns) : domain_(domain), count_(columns.size()) {
  const std::size_t w = domain.size();
  cells_.reserve(w * columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k].size() != w)
      throw DomainError("column " + std::to_string(k) + " has " + std::to_string(columns[k].size()) +
                        " entries, domain has " + std::to_string(w) + " variables");
    cells_.insert(cells_.end(), columns[k].begin(), columns[k].end());
    if (k > 0 && same_column(cells_, w, k - 1, k))
      throw DegenerateTrace("column " + std::to_string(k) + " repeats column " + std::to_string(k - 1));
  }
}

Trace Trace::empty(OpenSet domain) { return Trace(Unchecked{}, domain, {}, 0); }

std::vector<ProductState> Trace::columns() const {
  std::vector<ProductState> out;
  out.reserve(count_);
  for (std::size_t k = 0; k < count_; ++k) {
    auto c = column(k);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

std::vector<StateId> Trace::row(VarId v) const {
  const std::size_t r = domain_.position_of(v);
  const std::size_t w = width();
  std::vector<StateId> out;
  out.reserve(count_);
  for (std::size_t k = 0; k < count_; ++k) out.push_back(cells_[k * w + r]);
  return out;
}

std::size_t Trace::hash() const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(domain_.mask()) ^ (count_ * 0x9e3779b97f4a7c15ULL);
  for (StateId s : cells_) h = h * 1000003u ^ s;
  return h;
}

std::strong_ordering operator<=>(const Trace& a, const Trace& b) {
  if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
  if (auto c = a.count_ <=> b.count_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                                                b.cells_.end());
}

void check_chain(const Frame& frame, const Trace& t) {
  for (std::size_t k = 0; k < t.column_count(); ++k) {
    frame.check_state(t.domain(), t.column(k));
    if (k > 0 && !frame.leq(t.domain(), t.column(k - 1), t.column(k)))
      throw ChainViolation("columns " + std::to_string(k - 1) + " and " + std::to_string(k) +
                           " are not related by the state order");
  }
}

Trace destutter_cells(OpenSet domain, std::vector<StateId> cells, std::size_t count) {
  const std::size_t w = domain.size();
  if (count == 0) return Trace::empty(domain);
  if (w == 0) return Trace(Trace::Unchecked{}, domain, {}, 1);
  std::size_t kept = 1;
  for (std::size_t k = 1; k < count; ++k) {
    if (same_column(cells, w, kept - 1, k)) continue;
    if (kept != k) std::copy(cells.begin() + k * w, cells.begin() + (k + 1) * w, cells.begin() + kept * w);
    ++kept;
  }
  cells.resize(kept * w);
  return Trace(Trace::Unchecked{}, domain, std::move(cells), kept);
}

Trace destutter(const Frame& frame, OpenSet domain, std::span<const ProductState> raw) {
  const std::size_t w = domain.size();
  std::vector<StateId> cells;
  cells.reserve(raw.size() * w);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].size() != w)
      throw DomainError("column " + std::to_string(k) + " is not a product state on the common domain");
    frame.check_state(domain, raw[k]);
    if (k > 0 && !frame.leq(domain, raw[k - 1], raw[k]))
      throw ChainViolation("columns " + std::to_string(k - 1) + " and " + std::to_string(k) +
                           " are not related by the state order");
    cells.insert(cells.end(), raw[k].begin(), raw[k].end());
  }
  return destutter_cells(domain, std::move(cells), raw.size());
}

Trace restrict_trace(const Trace& t, OpenSet sub) {
  if (!sub.subset_of(t.domain())) throw DomainError("restriction target is not a subset of the trace domain");
  if (sub == t.domain()) return t;
  std::vector<std::size_t> rows;
  for (VarId v : sub.members()) rows.push_back(t.domain().position_of(v));
  std::vector<StateId> cells;
  cells.reserve(rows.size() * t.column_count());
  for (std::size_t k = 0; k < t.column_count(); ++k) {
    auto col = t.column(k);
    for (std::size_t r : rows) cells.push_back(col[r]);
  }
  return destutter_cells(sub, std::move(cells), t.column_count());
}

Trace concat_traces(const Trace& f, const Trace& g) {
  if (f.domain() != g.domain()) throw CompositionUndefined("concatenated traces have different domains");
  if (f.is_empty() || g.is_empty()) throw CompositionUndefined("concatenation of an empty trace");
  auto last = f.terminal();
  auto first = g.initial();
  if (!std::equal(last.begin(), last.end(), first.begin(), first.end()))
    throw CompositionUndefined("final state of the left trace differs from the initial state of the right trace");
  std::vector<ProductState> cols = f.columns();
  cols.pop_back();
  for (std::size_t k = 0; k < g.column_count(); ++k) {
    auto c = g.column(k);
    cols.emplace_back(c.begin(), c.end());
  }
  return Trace(f.domain(), cols);
}

namespace {

void extend_chains(const Frame& frame, OpenSet domain, const std::vector<ProductState>& states,
                   std::size_t max_columns, std::vector<ProductState>& prefix, std::vector<Trace>& out) {
  out.emplace_back(domain, prefix);
  if (prefix.size() == max_columns) return;
  for (const ProductState& s : states) {
    if (!prefix.empty()) {
      if (prefix.back() == s || !frame.leq(domain, prefix.back(), s)) continue;
    }
    prefix.push_back(s);
    extend_chains(frame, domain, states, max_columns, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Trace> enumerate_traces(const Frame& frame, OpenSet domain, std::size_t max_columns) {
  const std::vector<ProductState> states = frame.product_states(domain);
  std::vector<Trace> out;
  std::vector<ProductState> prefix;
  extend_chains(frame, domain, states, max_columns, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Trace extend_trace(const Frame& frame, const Trace& t, OpenSet wider) {
  if (!t.domain().subset_of(wider)) throw DomainError("extension target does not contain the trace domain");
  const std::vector<VarId> vars = wider.members();
  std::vector<ProductState> cols;
  for (std::size_t k = 0; k < t.column_count(); ++k) {
    auto src = t.column(k);
    ProductState c;
    for (VarId v : vars) {
      c.push_back(t.domain().contains(v) ? src[t.domain().position_of(v)] : StateId{0});
    }
    cols.push_back(std::move(c));
  }
  Trace out(wider, cols);
  check_chain(frame, out);
  return out;
}

std::string format_trace(const Frame& frame, const Trace& t) {
  std::ostringstream out;
  const auto& vars = frame.variables();
  if (t.domain().empty()) return t.is_empty() ? "[]" : "[()]";
  for (VarId v : t.domain().members()) {
    out << vars.name(v) << ':';
    for (StateId s : t.row(v)) out << ' ' << frame.space(v).label(s);
    if (t.is_empty()) out << " (empty)";
    out << '\n';
  }
  return out.str();
}

std::string format_trace_inline(const Frame& frame, const Trace& t) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < t.column_count(); ++k) {
    if (k) out << ' ';
    out << frame.format_state(t.domain(), t.column(k));
  }
  out << ']';
  return out.str();
}

}  // namespace reltrace
