// One PASS/FAIL line per acceptance criterion. All criteria are exact; the
// time limits are the only tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "reltrace/cohomology.hpp"
#include "reltrace/consistency.hpp"
#include "reltrace/dining.hpp"
#include "reltrace/kleene.hpp"
#include "reltrace/laws.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/smith.hpp"

using namespace reltrace;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      failure_ = what;
    }
  }
  Outcome done(const std::string& summary) const { return {pass_, pass_ ? summary : failure_}; }

 private:
  bool pass_ = true;
  std::string failure_;
};

Outcome dining() {
  Check c;
  const DiningModel m = dining_model(3);
  const Knowledgebase k = dining_knowledgebase(m);
  for (std::size_t i = 0; i < 3; ++i) {
    c.require(k[i].size() == 1 && legal_trace(m, i, k[i].traces()[0]), "phi" + std::to_string(i) + " is not legal");
    const OpenSet ci{m.chopsticks[i]};
    const Relation mine = project(k[i], ci), left = project(k[(i + 2) % 3], ci);
    const std::string expected =
        "[(*) (" + std::to_string((i + 2) % 3) + ") (*) (" + std::to_string(i) + ") (*)]";
    c.require(mine.size() == 1 && format_trace_inline(m.frame, mine.traces()[0]) == expected,
              "projection of phi" + std::to_string(i) + " onto c" + std::to_string(i) + " differs from " + expected);
    c.require(mine.traces() == left.traces(), "phi" + std::to_string(i) + " and its left neighbour disagree");
  }
  const ConsistencyReport r = check_global_direct(k);
  c.require(r.local, "not locally consistent");
  c.require(!r.global && r.gamma.empty(), "gamma is not empty");
  for (const ValuationCheck& v : r.per_valuation) c.require(!v.equal, "a projection check succeeded");
  std::vector<oracle::Columns> parts;
  std::vector<OpenSet> doms;
  for (std::size_t i = 0; i < 3; ++i) {
    parts.push_back(k[i].traces()[0].columns());
    doms.push_back(k[i].label());
  }
  c.require(oracle::multiway_glue_count(doms, parts) == 0, "the synchronized-shuffle oracle finds a gluing");
  return c.done("phi0..phi2 legal, locally consistent, gamma = {} (oracle agrees), 3 of 3 projection checks fail");
}

Outcome relative_traces() {
  Check c;
  Frame f;
  f.add_variable("a", StateSpace::total({"a0", "a1"}));
  f.add_variable("b", StateSpace::total({"b0", "b1"}));
  const OpenSet v{0, 1};
  const Trace t(v, {{0, 0}, {0, 1}, {1, 1}}), t2(v, {{0, 0}, {1, 1}});
  const Trace a(OpenSet{0}, {{0}, {1}});
  c.require(restrict_trace(t, OpenSet{0}) == a && restrict_trace(t2, OpenSet{0}) == a, "t|a or t'|a is not [a0 a1]");
  gen::Rng rng(2);
  for (int round = 0; round < 1000; ++round) {
    std::vector<ProductState> raw;
    const std::size_t n = gen::below(rng, 10);
    for (std::size_t k = 0; k < n; ++k)
      raw.push_back({static_cast<StateId>(gen::below(rng, 2)), static_cast<StateId>(gen::below(rng, 2))});
    const Trace once = destutter(f, v, raw);
    c.require(destutter(f, v, once.columns()) == once, "destutter is not idempotent");
    c.require(once.columns() == oracle::destutter(raw), "destutter differs from the oracle");
  }
  return c.done("t|{a} = t'|{a} = [a0 a1]; destutter idempotent on 1000 raw sequences");
}

Outcome combination() {
  Check c;
  gen::Rng rng(3);
  std::size_t pairs = 0, traces = 0;
  for (; pairs < 120; ++pairs) {
    const std::size_t vars = 1 + gen::below(rng, 3);
    const Frame f = gen::frame(rng, vars, 2);
    const OpenSet x = f.universe();
    const OpenSet u = gen::subset(rng, x), w = gen::subset(rng, x);
    const Relation r = gen::relation(rng, f, u, 3, 4), s = gen::relation(rng, f, w, 3, 4);
    const Relation comb = combine(r, s);
    traces += comb.size();
    c.require(truncate(comb, 4).traces() == brute_force_combine(f, r, s, 4).traces(),
              "combine differs from brute_force_combine at bound 4");
    c.require(oracle::set_of(comb) == oracle::combine(f, r, s), "combine differs from the unbounded search oracle");
  }
  return c.done(std::to_string(pairs) + " pairs, " + std::to_string(traces) + " combined traces, set-equal");
}

Outcome axioms() {
  Check c;
  LawConfig config;
  config.cases = 200;
  std::set<std::string> seen;
  std::size_t laws = 0;
  for (const char* suite : {"info", "tuple"})
    for (const LawResult& r : run_law_suite(suite, config)) {
      ++laws;
      seen.insert(r.law.substr(0, r.law.find(' ')));
      c.require(r.cases >= 200, r.law + " ran fewer than 200 cases");
      c.require(r.holds, r.law + " fails; minimal counterexample: " + r.counterexample);
    }
  for (const char* tag : {"I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "O1", "O2", "O3", "O4", "T1", "T2",
                          "T3", "T4", "T5", "adjoint:"})
    c.require(seen.count(tag) == 1, std::string("no law tagged ") + tag);
  return c.done(std::to_string(laws) + " laws x 200 cases (I1-I9, O1-O4, T1-T5, both adjoint inclusions)");
}

Outcome local_computation() {
  Check c;
  const DiningModel m = dining_model(3);
  const Knowledgebase k = dining_knowledgebase(m);
  const ConsistencyReport d = check_global_direct(k), f = check_global_fast(k);
  c.require(d.global == f.global && d.per_valuation == f.per_valuation, "methods disagree on the dining instance");
  c.require(f.largest_intermediate <= d.largest_intermediate, "fast method builds a larger intermediate");
  gen::Rng rng(5);
  std::size_t agreeing = 0;
  for (int round = 0; round < 120; ++round) {
    const Frame fr = gen::frame(rng, 2 + gen::below(rng, 2), 2);
    const OpenSet x = fr.universe();
    std::vector<Relation> vals;
    const Relation global = gen::relation(rng, fr, x, 3, 3);
    const bool projected = gen::coin(rng);
    for (std::size_t i = 0, n = 2 + gen::below(rng, 2); i < n; ++i) {
      const OpenSet b = gen::subset(rng, x);
      vals.push_back(projected ? project(global, b) : gen::relation(rng, fr, b, 2, 3));
    }
    const Knowledgebase kb(vals);
    const ConsistencyReport a = check_global_direct(kb), b = check_global_fast(kb);
    const bool same = a.global == b.global && a.per_valuation == b.per_valuation;
    c.require(same, "methods disagree on a random knowledgebase");
    agreeing += same;
  }
  std::ostringstream out;
  out << "dining + " << agreeing << " random knowledgebases agree; largest intermediate fast "
      << f.largest_intermediate << " <= direct " << d.largest_intermediate;
  return c.done(out.str());
}

bool is_maximal_cover(const FiniteTopology& t, const std::vector<OpenSet>& blocks) {
  OpenSet covered;
  for (OpenSet b : blocks) {
    if (!t.is_open(b)) return false;
    covered = covered | b;
    for (OpenSet o : blocks)
      if (o != b && b.subset_of(o)) return false;
  }
  return covered == t.universe();
}

Outcome cover_lattice() {
  Check c;
  gen::Rng rng(6);
  std::size_t spaces = 0, pairs = 0;
  for (; spaces < 60; ++spaces) {
    const OpenSet x = OpenSet::first_n(1 + gen::below(rng, 6));
    const FiniteTopology t = gen::topology(rng, x, 3);
    const auto brute = oracle::maximal_covers(t);
    std::vector<MaximalCover> covers;
    for (const auto& b : brute) covers.emplace_back(t, b);
    for (const auto& u : covers)
      for (const auto& w : covers) {
        ++pairs;
        const auto m = cover_meet(t, u, w).blocks(), j = cover_join(u, w).blocks();
        c.require(is_maximal_cover(t, m) && is_maximal_cover(t, j), "meet or join is not a maximal cover");
        c.require(oracle::refines(m, u.blocks()) && oracle::refines(m, w.blocks()), "meet is not a lower bound");
        c.require(oracle::refines(u.blocks(), j) && oracle::refines(w.blocks(), j), "join is not an upper bound");
        for (const auto& b : brute) {
          if (oracle::refines(b, u.blocks()) && oracle::refines(b, w.blocks()))
            c.require(oracle::refines(b, m), "meet is not the greatest lower bound");
          if (oracle::refines(u.blocks(), b) && oracle::refines(w.blocks(), b))
            c.require(oracle::refines(j, b), "join is not the least upper bound");
        }
      }
  }
  return c.done(std::to_string(spaces) + " spaces, " + std::to_string(pairs) + " cover pairs, glb/lub exact");
}

Outcome cohomology_criterion() {
  Check c;
  const DiningModel m = dining_model(3);
  const Nerve n = build_nerve(m.context);
  c.require(n.cells.size() == 2 && n.cells[0].size() == 3 && n.cells[1].size() == 3,
            "the dining nerve is not 3 vertices, 3 edges, no 2-cells");
  const Subpresheaf a = knowledgebase_presheaf(m, dining_knowledgebase(m));
  c.require(a.carrier(m.frame.universe()).empty(), "the global carrier is not empty");
  std::size_t complexes = 0;
  auto squares_to_zero = [&](const ChainComplex& cx) {
    ++complexes;
    for (int p = -1; p < cx.top_degree(); ++p)
      c.require((cx.coboundary(p + 1) * cx.coboundary(p)).is_zero(), "d^{p+1} d^p != 0");
  };
  const ChainComplex q = build_complex(a, m.context, Ring::rationals());
  squares_to_zero(q);
  const std::size_t snf_rank = q.dim(0) - smith_normal_form(q.coboundary(0)).rank() -
                               smith_normal_form(q.coboundary(-1)).rank();
  const std::size_t oracle_rank = q.dim(0) - oracle::rational_rank(q.coboundary(0)) -
                                  oracle::rational_rank(q.coboundary(-1));
  const std::size_t h0 = cohomology(q, 0).rank;
  c.require(h0 > 0, "H^0 vanishes over Q");
  c.require(h0 == snf_rank && snf_rank == oracle_rank, "Smith-form and row-reduction ranks of H^0 differ");
  for (Ring ring : {Ring::integers(), Ring::prime_field(2)}) squares_to_zero(build_complex(a, m.context, ring));
  gen::Rng rng(7);
  for (int round = 0; round < 40; ++round) {
    const Frame f = gen::frame(rng, 2 + gen::below(rng, 2), 2);
    const FiniteTopology t = gen::topology(rng, f.universe(), 3);
    CarrierMap partial;
    for (OpenSet u : t.opens())
      if (gen::coin(rng, 0.4)) partial[u] = gen::relation(rng, f, u, 2, 3).traces();
    const auto covers = all_maximal_covers(t);
    squares_to_zero(build_complex(restriction_closure(t, partial), covers[gen::below(rng, covers.size())],
                                  Ring::integers()));
  }
  return c.done("nerve 3/3/0; H^0 rank " + std::to_string(h0) + " over Q (SNF = row reduction = " +
                std::to_string(oracle_rank) + "); d^2 = 0 on " + std::to_string(complexes) + " complexes");
}

Outcome cka() {
  Check c;
  Frame f;
  f.add_variable("x", StateSpace::total({"0", "1"}));
  const OpenSet d{0};
  gen::Rng rng(8);
  std::vector<Relation> sample;
  for (int i = 0; i < 15; ++i) sample.push_back(gen::relation(rng, f, d, 3, 4));
  sample.push_back(null_relation(d));
  std::size_t min_cases = SIZE_MAX;
  for (const LawOutcome& o : check_cka_laws(f, SeqAlgebraInstance(d, 5), sample, 5000)) {
    c.require(o.holds, o.law + " fails: " + o.counterexample);
    if (o.law.find("intersection unit") == std::string::npos && o.law.find("idempotent") == std::string::npos &&
        o.law.find("skip") == std::string::npos && o.law.find("null") == std::string::npos)
      c.require(o.cases >= 200, o.law + " ran fewer than 200 tuples");
    min_cases = std::min(min_cases, o.cases);
  }
  const Relation A(d, {Trace(d, {{0}})}), B(d, {Trace(d, {{0}, {1}, {0}})});
  const Relation C = B, D = A;
  const Relation lhs = seq_compose(intersect(A, B), intersect(C, D));
  const Relation rhs = intersect(seq_compose(A, C), seq_compose(B, D));
  c.require(lhs.empty() && !rhs.empty(), "the strictness witness does not separate the exchange inclusion");
  return c.done("sequential, unit, null, distributivity and exchange laws hold on a 16-relation sample; witness "
                "LHS = {}, RHS = " + std::to_string(rhs.size()) + " trace");
}

Outcome flasqueness() {
  Check c;
  gen::Rng rng(9);
  std::size_t covers_checked = 0, flasque = 0;
  for (int round = 0; round < 15; ++round) {
    const Frame f = gen::frame(rng, 1 + gen::below(rng, 3), 2);
    const FiniteTopology t = gen::topology(rng, f.universe(), 3);
    const Subpresheaf chaos = bounded_chaos(f, t, 3);
    for (const MaximalCover& cover : all_maximal_covers(t)) {
      ++covers_checked;
      c.require(flasque_beneath(chaos, cover).flasque, "bounded chaos is not flasque beneath a cover");
    }
  }
  for (int round = 0; round < 200; ++round) {
    const Frame f = gen::frame(rng, 2 + gen::below(rng, 2), 2);
    const FiniteTopology t = gen::topology(rng, f.universe(), 3);
    CarrierMap partial;
    if (gen::coin(rng))
      partial[f.universe()] = gen::relation(rng, f, f.universe(), 3, 3).traces();
    else
      for (OpenSet u : t.opens())
        if (gen::coin(rng, 0.4)) partial[u] = gen::relation(rng, f, u, 2, 3).traces();
    const Subpresheaf a = restriction_closure(t, partial);
    const auto covers = all_maximal_covers(t);
    const MaximalCover& cover = covers[gen::below(rng, covers.size())];
    if (!flasque_beneath(a, cover).flasque) continue;
    ++flasque;
    c.require(check_local(knowledgebase_of(a, cover)).local, "flasque beneath the cover but locally inconsistent");
  }
  c.require(flasque >= 50, "fewer than 50 flasque presheaves generated");
  return c.done("bounded chaos flasque under " + std::to_string(covers_checked) + " covers; " +
                std::to_string(flasque) + " flasque presheaves all locally consistent");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"dining philosophers reproduction", 10, dining},
      {"relative-trace example and destutter", 0, relative_traces},
      {"combination oracle equivalence", 60, combination},
      {"information algebra, order, tuple and adjoint axioms", 0, axioms},
      {"local computation equivalence", 0, local_computation},
      {"cover lattice", 0, cover_lattice},
      {"cohomology", 30, cohomology_criterion},
      {"concurrent Kleene laws", 0, cka},
      {"flasqueness", 0, flasqueness},
  };
  int failed = 0, index = 0;
  for (const Criterion& cr : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_s > 0 && secs > cr.limit_s) {
      o.pass = false;
      o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_s) + " s";
    }
    failed += !o.pass;
    std::printf("%s  %d  %s (exact%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", index, cr.name,
                cr.limit_s > 0 ? (", < " + std::to_string(static_cast<int>(cr.limit_s)) + " s").c_str() : "",
                o.detail.c_str(), secs);
  }
  std::printf("%d of 9 criteria pass\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
