#include "reltrace/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "reltrace/errors.hpp"
#include "reltrace/frame.hpp"
#include "reltrace/kleene.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/topology.hpp"
#include "reltrace/trace.hpp"

namespace reltrace {

namespace {

struct Case {
  const Frame* frame = nullptr;
  std::vector<Relation> rels;
  std::vector<OpenSet> sets;
  std::vector<Trace> traces;
  std::shared_ptr<const FiniteTopology> topology;
  std::vector<MaximalCover> covers;
};

using Check = std::function<bool(const Case&)>;

struct Law {
  std::string name;
  std::function<Case()> make;
  Check check;
};

// Frames with one to three two-state variables, totally or linearly ordered,
// plus memoized trace enumerations.
class Generator {
 public:
  Generator(std::uint64_t seed, std::size_t bound) : rng_(seed), bound_(bound) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (bool total : {true, false}) {
        auto f = std::make_unique<Frame>();
        for (std::size_t v = 0; v < n; ++v) {
          const std::string name(1, static_cast<char>('a' + v));
          const std::pair<std::string, std::string> up{"0", "1"};
          f->add_variable(name, total ? StateSpace::total({"0", "1"})
                                      : StateSpace::generated({"0", "1"}, std::span(&up, 1)));
        }
        frames_.push_back(std::move(f));
      }
    }
  }

  std::size_t bound() const { return bound_; }
  std::mt19937_64& rng() { return rng_; }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 0; }

  const Frame* frame(std::size_t min_vars = 1) {
    std::vector<const Frame*> eligible;
    for (const auto& f : frames_)
      if (f->size() >= min_vars) eligible.push_back(f.get());
    return eligible[below(eligible.size())];
  }
  const Frame* total_frame(std::size_t vars) { return frames_[2 * (vars - 1)].get(); }

  OpenSet subset(OpenSet of) {
    std::vector<VarId> keep;
    for (VarId v : of.members())
      if (coin()) keep.push_back(v);
    return OpenSet::from_ids(keep);
  }
  OpenSet superset_within(OpenSet base, OpenSet bound) { return base | subset(bound - base); }

  const std::vector<Trace>& traces(const Frame* f, OpenSet u, std::size_t bound) {
    auto key = std::make_tuple(f, u.mask(), bound);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, enumerate_traces(*f, u, bound)).first;
    return it->second;
  }

  Trace trace(const Frame* f, OpenSet u) {
    const auto& all = traces(f, u, bound_);
    return all[below(all.size())];
  }

  Relation relation(const Frame* f, OpenSet u, std::size_t max_size = 4) {
    const auto& all = traces(f, u, bound_);
    const std::size_t k = below(std::min(max_size, all.size()) + 1);
    std::vector<Trace> picked;
    for (std::size_t i = 0; i < k; ++i) picked.push_back(all[below(all.size())]);
    return Relation(u, std::move(picked));
  }

  Relation nonempty_traces(const Frame* f, OpenSet u, std::size_t max_size = 4) {
    std::vector<Trace> picked;
    for (const Trace& t : relation(f, u, max_size).traces())
      if (!t.is_empty()) picked.push_back(t);
    return Relation(u, std::move(picked));
  }

  Relation sub_relation(const Relation& r) {
    std::vector<Trace> keep;
    for (const Trace& t : r.traces())
      if (coin()) keep.push_back(t);
    return Relation(r.label(), std::move(keep));
  }

 private:
  std::mt19937_64 rng_;
  std::size_t bound_;
  std::vector<std::unique_ptr<Frame>> frames_;
  std::map<std::tuple<const Frame*, std::uint64_t, std::size_t>, std::vector<Trace>> cache_;
};

std::string show_set(const Frame& f, OpenSet s) { return f.variables().format(s); }

std::string show_relation(const Frame& f, const Relation& r) {
  std::ostringstream out;
  out << show_set(f, r.label()) << " {";
  for (std::size_t i = 0; i < r.size(); ++i) out << (i ? ", " : "") << format_trace_inline(f, r.traces()[i]);
  out << '}';
  return out.str();
}

std::string show_cover(const MaximalCover& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.blocks().size(); ++i) {
    if (i) s += ' ';
    s += '{';
    for (VarId v : c.blocks()[i].members()) s += static_cast<char>('a' + v);
    s += '}';
  }
  return s + '}';
}

std::string describe(const Case& c) {
  std::ostringstream out;
  if (c.frame) {
    out << "variables";
    for (VarId v = 0; v < c.frame->size(); ++v)
      out << ' ' << c.frame->variables().name(v) << (c.frame->space(v).is_total() ? "" : "(0<=1)");
    out << ';';
  }
  for (std::size_t i = 0; i < c.rels.size(); ++i) out << " r" << i << " = " << show_relation(*c.frame, c.rels[i]) << ';';
  for (std::size_t i = 0; i < c.sets.size(); ++i) out << " S" << i << " = " << show_set(*c.frame, c.sets[i]) << ';';
  for (std::size_t i = 0; i < c.traces.size(); ++i)
    out << " x" << i << " = " << show_set(*c.frame, c.traces[i].domain()) << ' '
        << format_trace_inline(*c.frame, c.traces[i]) << ';';
  if (c.topology) {
    out << " opens " << c.topology->opens().size() << ';';
    for (std::size_t i = 0; i < c.covers.size(); ++i) out << " C" << i << " = " << show_cover(c.covers[i]) << ';';
  }
  return out.str();
}

bool passes(const Check& check, const Case& c) {
  try {
    return check(c);
  } catch (const std::exception&) {
    return false;
  }
}

Case shrink(const Check& check, Case c) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < c.rels.size() && !progress; ++r) {
      for (std::size_t k = 0; k < c.rels[r].size() && !progress; ++k) {
        Case smaller = c;
        std::vector<Trace> ts = c.rels[r].traces();
        ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(k));
        smaller.rels[r] = Relation(c.rels[r].label(), std::move(ts));
        if (!passes(check, smaller)) {
          c = std::move(smaller);
          progress = true;
        }
      }
    }
  }
  return c;
}

LawResult run(const std::string& suite, const Law& law, std::size_t cases) {
  LawResult result{suite, law.name, 0, true, {}};
  for (std::size_t i = 0; i < cases; ++i) {
    Case c = law.make();
    ++result.cases;
    if (!passes(law.check, c)) {
      result.holds = false;
      result.counterexample = describe(shrink(law.check, std::move(c)));
      break;
    }
  }
  return result;
}

bool subset_of(const Relation& a, const Relation& b) { return refines(a, b); }

std::vector<Law> info_laws(Generator& g) {
  const std::size_t b = g.bound();
  auto two = [&g] {
    Case c;
    c.frame = g.frame();
    const OpenSet all = c.frame->universe();
    c.rels = {g.relation(c.frame, g.subset(all)), g.relation(c.frame, g.subset(all))};
    return c;
  };
  auto three = [&g] {
    Case c;
    c.frame = g.frame();
    const OpenSet all = c.frame->universe();
    for (int i = 0; i < 3; ++i) c.rels.push_back(g.relation(c.frame, g.subset(all), 3));
    return c;
  };
  auto one_with_chain = [&g] {  // φ with W ⊆ U ⊆ dφ
    Case c;
    c.frame = g.frame();
    const OpenSet d = g.subset(c.frame->universe());
    const OpenSet u = g.subset(d);
    c.rels = {g.relation(c.frame, d)};
    c.sets = {u, g.subset(u)};
    return c;
  };
  auto ordered_pair = [&g] {  // r1 ⊆ r0 on one label, s1 ⊆ s0 on another
    Case c;
    c.frame = g.frame();
    const OpenSet all = c.frame->universe();
    Relation r = g.relation(c.frame, g.subset(all));
    Relation s = g.relation(c.frame, g.subset(all));
    c.rels = {r, g.sub_relation(r), s, g.sub_relation(s)};
    c.sets = {g.subset(r.label())};
    return c;
  };

  std::vector<Law> laws;
  laws.push_back({"I1 commutativity", two, [](const Case& c) {
                    return combine(c.rels[0], c.rels[1]) == combine(c.rels[1], c.rels[0]);
                  }});
  laws.push_back({"I1 associativity", three, [](const Case& c) {
                    return combine(combine(c.rels[0], c.rels[1]), c.rels[2]) ==
                           combine(c.rels[0], combine(c.rels[1], c.rels[2]));
                  }});
  laws.push_back({"I2 projection label", one_with_chain,
                  [](const Case& c) { return project(c.rels[0], c.sets[0]).label() == c.sets[0]; }});
  laws.push_back({"I3 transitivity", one_with_chain, [](const Case& c) {
                    return project(project(c.rels[0], c.sets[0]), c.sets[1]) == project(c.rels[0], c.sets[1]);
                  }});
  laws.push_back({"I4 domain", one_with_chain,
                  [](const Case& c) { return project(c.rels[0], c.rels[0].label()) == c.rels[0]; }});
  laws.push_back({"I5 labelling", two, [](const Case& c) {
                    return combine(c.rels[0], c.rels[1]).label() == (c.rels[0].label() | c.rels[1].label());
                  }});
  laws.push_back({"I6 combination",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    const OpenSet all = c.frame->universe();
                    c.rels = {g.relation(c.frame, g.subset(all)), g.relation(c.frame, g.subset(all))};
                    c.sets = {g.superset_within(c.rels[0].label(), c.rels[0].label() | c.rels[1].label())};
                    return c;
                  },
                  [](const Case& c) {
                    const OpenSet q = c.sets[0];
                    return project(combine(c.rels[0], c.rels[1]), q) ==
                           combine(c.rels[0], project(c.rels[1], q & c.rels[1].label()));
                  }});
  laws.push_back({"I7 neutrality",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    c.rels = {g.relation(c.frame, g.subset(c.frame->universe()))};
                    return c;
                  },
                  [b](const Case& c) {
                    const Relation one = neutral(*c.frame, c.rels[0].label(), b);
                    return combine(c.rels[0], one) == c.rels[0] && combine(one, c.rels[0]) == c.rels[0];
                  }});
  laws.push_back({"I7 neutral product",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    c.sets = {g.subset(c.frame->universe()), g.subset(c.frame->universe())};
                    return c;
                  },
                  [b](const Case& c) {
                    const Relation joined =
                        combine(neutral(*c.frame, c.sets[0], b), neutral(*c.frame, c.sets[1], b));
                    return joined == neutral(*c.frame, c.sets[0] | c.sets[1], b) && joined.universal_bound() == b;
                  }});
  laws.push_back({"I8 nullity",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    c.rels = {g.relation(c.frame, g.subset(c.frame->universe()))};
                    c.sets = {g.subset(c.frame->universe())};
                    return c;
                  },
                  [](const Case& c) {
                    const Relation zero = null_relation(c.sets[0]);
                    const Relation expected = null_relation(c.rels[0].label() | c.sets[0]);
                    return combine(c.rels[0], zero) == expected && combine(zero, c.rels[0]) == expected;
                  }});
  laws.push_back({"I8 null projection", one_with_chain, [](const Case& c) {
                    return project(c.rels[0], c.sets[0]).empty() == c.rels[0].empty();
                  }});
  laws.push_back({"I9 idempotence", one_with_chain, [](const Case& c) {
                    return combine(c.rels[0], project(c.rels[0], c.sets[0])) == c.rels[0];
                  }});
  laws.push_back({"O1 order within one label", ordered_pair, [](const Case& c) {
                    return refines(c.rels[1], c.rels[0]) && c.rels[1].label() == c.rels[0].label() &&
                           (c.rels[0].label() == c.rels[2].label() || !refines(c.rels[0], c.rels[2]));
                  }});
  laws.push_back({"O2 null bottom and infima",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    const OpenSet u = g.subset(c.frame->universe());
                    Relation r = g.relation(c.frame, u), s = g.relation(c.frame, u);
                    c.rels = {r, s, g.sub_relation(unite(r, s))};
                    return c;
                  },
                  [](const Case& c) {
                    const Relation& r = c.rels[0];
                    const Relation& s = c.rels[1];
                    const Relation& t = c.rels[2];
                    const Relation inf = intersect(r, s);
                    return subset_of(null_relation(r.label()), r) && subset_of(inf, r) && subset_of(inf, s) &&
                           ((subset_of(t, r) && subset_of(t, s)) == subset_of(t, inf));
                  }});
  laws.push_back({"O3 combination monotone", ordered_pair, [](const Case& c) {
                    return subset_of(combine(c.rels[1], c.rels[3]), combine(c.rels[0], c.rels[2]));
                  }});
  laws.push_back({"O4 projection monotone", ordered_pair, [](const Case& c) {
                    return subset_of(project(c.rels[1], c.sets[0]), project(c.rels[0], c.sets[0]));
                  }});
  laws.push_back({"adjoint: phi <= phi|U (x) phi|W",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    const OpenSet all = c.frame->universe();
                    const OpenSet u = g.subset(all), w = g.subset(all);
                    c.rels = {g.relation(c.frame, u | w, 3)};
                    c.sets = {u, w};
                    return c;
                  },
                  [](const Case& c) {
                    return subset_of(c.rels[0], combine(project(c.rels[0], c.sets[0]), project(c.rels[0], c.sets[1])));
                  }});
  laws.push_back({"adjoint: (phi (x) psi)|dphi <= phi", two, [](const Case& c) {
                    const Relation j = combine(c.rels[0], c.rels[1]);
                    return subset_of(project(j, c.rels[0].label()), c.rels[0]) &&
                           subset_of(project(j, c.rels[1].label()), c.rels[1]);
                  }});
  return laws;
}

std::vector<Law> tuple_laws(Generator& g) {
  auto chain = [&g] {  // x on D with W ⊆ U ⊆ D
    Case c;
    c.frame = g.frame();
    const OpenSet d = g.subset(c.frame->universe());
    const OpenSet u = g.subset(d);
    c.traces = {g.trace(c.frame, d)};
    c.sets = {u, g.subset(u)};
    return c;
  };
  std::vector<Law> laws;
  laws.push_back({"T1 restriction label", chain,
                  [](const Case& c) { return restrict_trace(c.traces[0], c.sets[0]).domain() == c.sets[0]; }});
  laws.push_back({"T2 functoriality", chain, [](const Case& c) {
                    return restrict_trace(restrict_trace(c.traces[0], c.sets[0]), c.sets[1]) ==
                           restrict_trace(c.traces[0], c.sets[1]);
                  }});
  laws.push_back({"T3 identity", chain,
                  [](const Case& c) { return restrict_trace(c.traces[0], c.traces[0].domain()) == c.traces[0]; }});
  laws.push_back({"T4 gluing",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    const OpenSet all = c.frame->universe();
                    const OpenSet u = g.subset(all), w = g.subset(all);
                    const Trace z = g.trace(c.frame, u | w);
                    c.traces = {restrict_trace(z, u), restrict_trace(z, w), z};
                    return c;
                  },
                  [](const Case& c) {
                    const auto glued = glue_pair(c.traces[0], c.traces[1]);
                    if (!std::binary_search(glued.begin(), glued.end(), c.traces[2])) return false;
                    return std::all_of(glued.begin(), glued.end(), [&](const Trace& z) {
                      return restrict_trace(z, c.traces[0].domain()) == c.traces[0] &&
                             restrict_trace(z, c.traces[1].domain()) == c.traces[1];
                    });
                  }});
  laws.push_back({"T5 extension",
                  [&g] {
                    Case c;
                    c.frame = g.frame();
                    const OpenSet w = g.subset(c.frame->universe());
                    c.traces = {g.trace(c.frame, g.subset(w))};
                    c.sets = {w};
                    return c;
                  },
                  [](const Case& c) {
                    const Trace y = extend_trace(*c.frame, c.traces[0], c.sets[0]);
                    return y.domain() == c.sets[0] && restrict_trace(y, c.traces[0].domain()) == c.traces[0];
                  }});
  return laws;
}

std::vector<Law> cka_laws(Generator& g, std::size_t bound) {
  auto tuple = [&g](std::size_t k) {
    return [&g, k] {
      Case c;
      c.frame = g.total_frame(1 + g.below(2));
      const OpenSet d = c.frame->universe();
      for (std::size_t i = 0; i < k; ++i) c.rels.push_back(g.relation(c.frame, d, 4));
      return c;
    };
  };
  const auto& R = [](const Case& c, std::size_t i) -> const Relation& { return c.rels[i]; };
  std::vector<Law> laws;
  laws.push_back({"intersection idempotent", tuple(1),
                  [R](const Case& c) { return intersect(R(c, 0), R(c, 0)) == R(c, 0); }});
  laws.push_back({"intersection commutative", tuple(2),
                  [R](const Case& c) { return intersect(R(c, 0), R(c, 1)) == intersect(R(c, 1), R(c, 0)); }});
  laws.push_back({"intersection associative", tuple(3), [R](const Case& c) {
                    return intersect(intersect(R(c, 0), R(c, 1)), R(c, 2)) ==
                           intersect(R(c, 0), intersect(R(c, 1), R(c, 2)));
                  }});
  laws.push_back({"intersection unit (bounded universe)", tuple(1), [R, bound](const Case& c) {
                    const Relation r = truncate(R(c, 0), bound);
                    return intersect(r, neutral(*c.frame, r.label(), bound)) == r;
                  }});
  laws.push_back({"intersection distributes over union", tuple(3), [R](const Case& c) {
                    return intersect(R(c, 0), unite(R(c, 1), R(c, 2))) ==
                           unite(intersect(R(c, 0), R(c, 1)), intersect(R(c, 0), R(c, 2)));
                  }});
  laws.push_back({"sequential associative", tuple(3), [R](const Case& c) {
                    return seq_compose(seq_compose(R(c, 0), R(c, 1)), R(c, 2)) ==
                           seq_compose(R(c, 0), seq_compose(R(c, 1), R(c, 2)));
                  }});
  laws.push_back({"skip unit", tuple(1), [R](const Case& c) {
                    std::vector<Trace> nonempty;
                    for (const Trace& t : R(c, 0).traces())
                      if (!t.is_empty()) nonempty.push_back(t);
                    const Relation expected(R(c, 0).label(), nonempty);
                    const Relation unit = skip(*c.frame, R(c, 0).label());
                    return seq_compose(unit, R(c, 0)) == expected && seq_compose(R(c, 0), unit) == expected;
                  }});
  laws.push_back({"null annihilates", tuple(1), [R](const Case& c) {
                    const Relation zero = null_relation(R(c, 0).label());
                    return seq_compose(R(c, 0), zero) == zero && seq_compose(zero, R(c, 0)) == zero;
                  }});
  laws.push_back({"left distributivity over union", tuple(3), [R](const Case& c) {
                    return seq_compose(R(c, 0), unite(R(c, 1), R(c, 2))) ==
                           unite(seq_compose(R(c, 0), R(c, 1)), seq_compose(R(c, 0), R(c, 2)));
                  }});
  laws.push_back({"right distributivity over union", tuple(3), [R](const Case& c) {
                    return seq_compose(unite(R(c, 0), R(c, 1)), R(c, 2)) ==
                           unite(seq_compose(R(c, 0), R(c, 2)), seq_compose(R(c, 1), R(c, 2)));
                  }});
  laws.push_back({"exchange (a;c)&(b;d)", tuple(4), [R](const Case& c) {
                    return subset_of(seq_compose(intersect(R(c, 0), R(c, 1)), intersect(R(c, 2), R(c, 3))),
                                     intersect(seq_compose(R(c, 0), R(c, 2)), seq_compose(R(c, 1), R(c, 3))));
                  }});
  laws.push_back({"exchange (b;c)&(a;d)", tuple(4), [R](const Case& c) {
                    return subset_of(seq_compose(intersect(R(c, 0), R(c, 1)), intersect(R(c, 2), R(c, 3))),
                                     intersect(seq_compose(R(c, 1), R(c, 2)), seq_compose(R(c, 0), R(c, 3))));
                  }});
  return laws;
}

LawResult exchange_witness(const Frame& one_var) {
  const OpenSet d = one_var.universe();
  const Relation a(d, {Trace(d, {{0}})});
  const Relation b(d, {Trace(d, {{0}, {1}, {0}})});
  const Relation lhs = seq_compose(intersect(a, b), intersect(b, a));
  const Relation rhs = intersect(seq_compose(a, b), seq_compose(b, a));
  LawResult r{"cka", "exchange strict on A=D={[0]}, B=C={[0,1,0]}", 1, lhs.empty() && !rhs.empty(), {}};
  if (!r.holds) r.counterexample = "lhs has " + std::to_string(lhs.size()) + " traces, rhs " + std::to_string(rhs.size());
  return r;
}

std::vector<Law> lattice_laws(Generator& g) {
  auto space = [&g](std::size_t picks) {
    return [&g, picks] {
      Case c;
      const std::size_t n = 1 + g.below(6);
      const OpenSet universe = OpenSet::first_n(n);
      std::vector<OpenSet> subbasis;
      const std::size_t k = g.below(4);
      for (std::size_t i = 0; i < k; ++i) subbasis.push_back(g.subset(universe));
      c.topology = std::make_shared<FiniteTopology>(generate_topology(universe, subbasis));
      const auto all = all_maximal_covers(*c.topology);
      for (std::size_t i = 0; i < picks; ++i) c.covers.push_back(all[g.below(all.size())]);
      return c;
    };
  };
  const auto& T = [](const Case& c) -> const FiniteTopology& { return *c.topology; };
  std::vector<Law> laws;
  laws.push_back({"meet and join commutative", space(2), [T](const Case& c) {
                    const auto& u = c.covers[0];
                    const auto& v = c.covers[1];
                    return cover_meet(T(c), u, v) == cover_meet(T(c), v, u) && cover_join(u, v) == cover_join(v, u);
                  }});
  laws.push_back({"meet and join associative", space(3), [T](const Case& c) {
                    const auto& [u, v, w] = std::tie(c.covers[0], c.covers[1], c.covers[2]);
                    return cover_meet(T(c), cover_meet(T(c), u, v), w) == cover_meet(T(c), u, cover_meet(T(c), v, w)) &&
                           cover_join(cover_join(u, v), w) == cover_join(u, cover_join(v, w));
                  }});
  laws.push_back({"meet and join idempotent", space(1), [T](const Case& c) {
                    return cover_meet(T(c), c.covers[0], c.covers[0]) == c.covers[0] &&
                           cover_join(c.covers[0], c.covers[0]) == c.covers[0];
                  }});
  laws.push_back({"absorption", space(2), [T](const Case& c) {
                    const auto& u = c.covers[0];
                    const auto& v = c.covers[1];
                    return cover_meet(T(c), u, cover_join(u, v)) == u && cover_join(u, cover_meet(T(c), u, v)) == u;
                  }});
  laws.push_back({"distributivity", space(3), [T](const Case& c) {
                    const auto& [u, v, w] = std::tie(c.covers[0], c.covers[1], c.covers[2]);
                    return cover_meet(T(c), u, cover_join(v, w)) ==
                               cover_join(cover_meet(T(c), u, v), cover_meet(T(c), u, w)) &&
                           cover_join(u, cover_meet(T(c), v, w)) ==
                               cover_meet(T(c), cover_join(u, v), cover_join(u, w));
                  }});
  laws.push_back({"meet is the greatest lower bound", space(2), [T](const Case& c) {
                    const auto& u = c.covers[0];
                    const auto& v = c.covers[1];
                    const MaximalCover m = cover_meet(T(c), u, v);
                    if (!refines(m, u) || !refines(m, v)) return false;
                    for (const auto& x : all_maximal_covers(T(c)))
                      if (refines(x, u) && refines(x, v) && !refines(x, m)) return false;
                    return true;
                  }});
  laws.push_back({"join is the least upper bound", space(2), [](const Case& c) {
                    const auto& u = c.covers[0];
                    const auto& v = c.covers[1];
                    const MaximalCover j = cover_join(u, v);
                    if (!refines(u, j) || !refines(v, j)) return false;
                    for (const auto& x : all_maximal_covers(*c.topology))
                      if (refines(u, x) && refines(v, x) && !refines(j, x)) return false;
                    return true;
                  }});
  laws.push_back({"finest context refines every context", space(1), [T](const Case& c) {
                    const MaximalCover f = finest_context(T(c));
                    for (const auto& x : all_maximal_covers(T(c)))
                      if (!refines(f, x)) return false;
                    return true;
                  }});
  return laws;
}

}  // namespace

const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names{"info", "tuple", "cka", "lattice", "all"};
  return names;
}

std::vector<LawResult> run_law_suite(const std::string& suite, const LawConfig& config) {
  const auto& names = law_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ValidationError("--suite", "unknown law suite '" + suite + "' (expected info, tuple, cka, lattice or all)");
  Generator g(config.seed, config.bound);
  std::vector<LawResult> out;
  auto run_all = [&](const std::string& name, const std::vector<Law>& laws) {
    for (const Law& law : laws) out.push_back(run(name, law, config.cases));
  };
  if (suite == "info" || suite == "all") run_all("info", info_laws(g));
  if (suite == "tuple" || suite == "all") run_all("tuple", tuple_laws(g));
  if (suite == "cka" || suite == "all") {
    run_all("cka", cka_laws(g, config.bound));
    out.push_back(exchange_witness(*g.total_frame(1)));
  }
  if (suite == "lattice" || suite == "all") run_all("lattice", lattice_laws(g));
  return out;
}

}  // namespace reltrace
