#include "reltrace/kleene.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "reltrace/errors.hpp"

namespace reltrace {

Relation seq_compose(const Relation& r, const Relation& s) {
  if (r.label() != s.label()) throw DomainError("sequential composition of relations with different labels");
  // Index the right operand by initial column.
  std::map<std::vector<StateId>, std::vector<const Trace*>> by_start;
  for (const Trace& g : s.traces()) {
    if (g.is_empty()) continue;
    auto c = g.initial();
    by_start[std::vector<StateId>(c.begin(), c.end())].push_back(&g);
  }
  std::vector<Trace> out;
  for (const Trace& f : r.traces()) {
    if (f.is_empty()) continue;
    auto c = f.terminal();
    auto it = by_start.find(std::vector<StateId>(c.begin(), c.end()));
    if (it == by_start.end()) continue;
    for (const Trace* g : it->second) out.push_back(concat_traces(f, *g));
  }
  return Relation(r.label(), std::move(out));
}

Relation skip(const Frame& frame, OpenSet domain) {
  std::vector<Trace> out;
  for (const ProductState& s : frame.product_states(domain)) out.push_back(Trace(domain, {s}));
  return Relation(domain, std::move(out));
}

SeqAlgebraInstance::SeqAlgebraInstance(OpenSet d, std::size_t b) : domain(d), bound(b) {
  if (bound == 0) throw DomainError("the universe bound must be at least one column");
}

namespace {

std::string show(const Frame& frame, const Relation& r) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out << ", ";
    out << format_trace_inline(frame, r.traces()[i]);
  }
  out << '}';
  return out.str();
}

bool subset(const Relation& a, const Relation& b) { return refines(a, b); }

Relation without_empty(const Relation& r) {
  std::vector<Trace> out;
  for (const Trace& t : r.traces())
    if (!t.is_empty()) out.push_back(t);
  return Relation(r.label(), std::move(out));
}

// Calls `body` on index tuples of the given arity in lexicographic order,
// stopping after `cap` tuples or when `body` returns false. Returns the count.
std::size_t for_tuples(std::size_t n, std::size_t arity, std::size_t cap,
                       const std::function<bool(const std::vector<std::size_t>&)>& body) {
  if (n == 0) return 0;
  std::vector<std::size_t> idx(arity, 0);
  std::size_t count = 0;
  while (count < cap) {
    ++count;
    if (!body(idx)) break;
    std::size_t k = arity;
    while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
    if (k == 0) break;
  }
  return count;
}

}  // namespace

std::vector<LawOutcome> check_cka_laws(const Frame& frame, const SeqAlgebraInstance& instance,
                                       const std::vector<Relation>& sample, std::size_t max_tuples) {
  for (const Relation& r : sample)
    if (r.label() != instance.domain) throw DomainError("sample relation is not on the instance domain");
  const Relation unit = skip(frame, instance.domain);
  const Relation zero = null_relation(instance.domain);
  const Relation top = neutral(frame, instance.domain, instance.bound);
  const std::size_t n = sample.size();
  std::vector<LawOutcome> out;

  auto law = [&](std::string name, std::size_t arity,
                 const std::function<std::string(const std::vector<const Relation*>&)>& check) {
    LawOutcome o;
    o.law = std::move(name);
    o.cases = for_tuples(n, arity, max_tuples, [&](const std::vector<std::size_t>& idx) {
      std::vector<const Relation*> args;
      for (std::size_t i : idx) args.push_back(&sample[i]);
      std::string failure = check(args);
      if (failure.empty()) return true;
      o.holds = false;
      o.counterexample = std::move(failure);
      return false;
    });
    out.push_back(std::move(o));
  };
  auto fail1 = [&](const Relation& a) { return "a = " + show(frame, a); };
  auto fail_n = [&](const std::vector<const Relation*>& args) {
    std::string s;
    const char* names = "abcd";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ", ";
      s += std::string(1, names[i]) + " = " + show(frame, *args[i]);
    }
    return s;
  };

  law("intersection idempotent", 1, [&](const auto& a) {
    return intersect(*a[0], *a[0]) == *a[0] ? std::string() : fail1(*a[0]);
  });
  law("intersection commutative", 2, [&](const auto& a) {
    return intersect(*a[0], *a[1]) == intersect(*a[1], *a[0]) ? std::string() : fail_n(a);
  });
  law("intersection associative", 3, [&](const auto& a) {
    return intersect(intersect(*a[0], *a[1]), *a[2]) == intersect(*a[0], intersect(*a[1], *a[2])) ? std::string()
                                                                                                  : fail_n(a);
  });
  law("intersection unit (bounded universe)", 1, [&](const auto& a) {
    const Relation r = truncate(*a[0], instance.bound);
    return intersect(r, top) == r ? std::string() : fail1(r);
  });
  law("intersection distributes over union", 3, [&](const auto& a) {
    return intersect(*a[0], unite(*a[1], *a[2])) == unite(intersect(*a[0], *a[1]), intersect(*a[0], *a[2]))
               ? std::string()
               : fail_n(a);
  });
  law("sequential associative", 3, [&](const auto& a) {
    return seq_compose(seq_compose(*a[0], *a[1]), *a[2]) == seq_compose(*a[0], seq_compose(*a[1], *a[2]))
               ? std::string()
               : fail_n(a);
  });
  law("skip unit", 1, [&](const auto& a) {
    const Relation expected = without_empty(*a[0]);
    return seq_compose(unit, *a[0]) == expected && seq_compose(*a[0], unit) == expected ? std::string()
                                                                                         : fail1(*a[0]);
  });
  law("null annihilates", 1, [&](const auto& a) {
    return seq_compose(*a[0], zero) == zero && seq_compose(zero, *a[0]) == zero ? std::string() : fail1(*a[0]);
  });
  law("left distributivity over union", 3, [&](const auto& a) {
    return seq_compose(*a[0], unite(*a[1], *a[2])) == unite(seq_compose(*a[0], *a[1]), seq_compose(*a[0], *a[2]))
               ? std::string()
               : fail_n(a);
  });
  law("right distributivity over union", 3, [&](const auto& a) {
    return seq_compose(unite(*a[0], *a[1]), *a[2]) == unite(seq_compose(*a[0], *a[2]), seq_compose(*a[1], *a[2]))
               ? std::string()
               : fail_n(a);
  });
  law("exchange (a;c)&(b;d)", 4, [&](const auto& a) {
    return subset(seq_compose(intersect(*a[0], *a[1]), intersect(*a[2], *a[3])),
                  intersect(seq_compose(*a[0], *a[2]), seq_compose(*a[1], *a[3])))
               ? std::string()
               : fail_n(a);
  });
  law("exchange (b;c)&(a;d)", 4, [&](const auto& a) {
    return subset(seq_compose(intersect(*a[0], *a[1]), intersect(*a[2], *a[3])),
                  intersect(seq_compose(*a[1], *a[2]), seq_compose(*a[0], *a[3])))
               ? std::string()
               : fail_n(a);
  });
  return out;
}

}  // namespace reltrace
