#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "reltrace/errors.hpp"
#include "reltrace/specification.hpp"

using namespace reltrace;

namespace {

Frame ab_frame() {
  Frame f;
  f.add_variable("a", StateSpace::total({"a0", "a1"}));
  f.add_variable("b", StateSpace::total({"b0", "b1"}));
  return f;
}

Subpresheaf random_presheaf(gen::Rng& rng, const Frame& f, const FiniteTopology& t) {
  CarrierMap partial;
  for (OpenSet u : t.opens())
    if (gen::coin(rng, 0.4)) {
      const Relation r = gen::relation(rng, f, u, 2, 3);
      partial[u] = r.traces();
    }
  return restriction_closure(t, partial);
}

}  // namespace

TEST_CASE("a single observation on a refines chaos with the trivial context") {
  const Frame f = ab_frame();
  const FiniteTopology t = FiniteTopology::discrete(f.universe());
  CarrierMap c;
  c[OpenSet{}] = {Trace::empty(OpenSet{})};
  c[OpenSet{0}] = {Trace(OpenSet{0}, {{0}, {1}})};
  // Not closed: [a0 a1] restricts to [()] on the empty set.
  CHECK_THROWS_AS(Subpresheaf::checked(t, c), PreconditionError);
  c[OpenSet{}].push_back(Trace(OpenSet{}, {ProductState{}}));
  const Subpresheaf a = Subpresheaf::checked(t, c);
  const Specification spec(a, MaximalCover(t, {OpenSet{0}, OpenSet{1}}));
  const Specification top = top_specification(f, t, 3);
  CHECK(spec_refines(spec, top));
  CHECK_FALSE(spec_refines(top, spec));
  CHECK(spec_refines(bottom_specification(t), spec));
}

TEST_CASE("restriction closure is closed and least") {
  gen::Rng rng(29);
  for (int round = 0; round < 100; ++round) {
    const Frame f = gen::frame(rng, 3, 2);
    const FiniteTopology t = gen::topology(rng, f.universe(), 3);
    CarrierMap partial;
    for (OpenSet u : t.opens())
      if (gen::coin(rng, 0.3)) partial[u] = gen::relation(rng, f, u, 2, 3).traces();
    const Subpresheaf a = restriction_closure(t, partial);
    CHECK_FALSE(find_closure_violation(t, a.carriers()));
    for (const auto& [u, ts] : partial)
      for (const Trace& x : ts) {
        CHECK(a.contains(u, x));
        for (OpenSet v : t.opens_within(u)) CHECK(a.contains(v, restrict_trace(x, v)));
      }
    CHECK(Subpresheaf::checked(t, a.carriers()) == a);
  }
}

TEST_CASE("closure rejects traces on the wrong open") {
  const Frame f = ab_frame();
  const FiniteTopology t = FiniteTopology::discrete(f.universe());
  CarrierMap c;
  c[OpenSet{0}] = {Trace(OpenSet{1}, {{0}})};
  CHECK_THROWS_AS(restriction_closure(t, c), DomainError);
  const FiniteTopology coarse = generate_topology(f.universe(), std::vector<OpenSet>{});
  CarrierMap d;
  d[OpenSet{0}] = {Trace(OpenSet{0}, {{0}})};
  CHECK_THROWS_AS(restriction_closure(coarse, d), DomainError);
}

TEST_CASE("removing a section removes everything above it") {
  const Frame f = ab_frame();
  const FiniteTopology t = FiniteTopology::discrete(f.universe());
  const Subpresheaf chaos = bounded_chaos(f, t, 2);
  const Trace x(OpenSet{0}, {{0}, {1}});
  const Subpresheaf less = chaos.without_section(OpenSet{0}, x);
  CHECK_FALSE(less.contains(OpenSet{0}, x));
  CHECK_FALSE(find_closure_violation(t, less.carriers()));
  for (const Trace& z : less.carrier(f.universe())) CHECK(restrict_trace(z, OpenSet{0}) != x);
  CHECK(presheaf_refines(less, chaos));
}

TEST_CASE("the presheaf lattice") {
  gen::Rng rng(31);
  for (int round = 0; round < 60; ++round) {
    const Frame f = gen::frame(rng, 2, 2);
    const FiniteTopology t = FiniteTopology::discrete(f.universe());
    const Subpresheaf a = random_presheaf(rng, f, t), b = random_presheaf(rng, f, t);
    const Subpresheaf m = presheaf_meet(a, b), j = presheaf_join(a, b);
    CHECK(presheaf_refines(m, a));
    CHECK(presheaf_refines(m, b));
    CHECK(presheaf_refines(a, j));
    CHECK(presheaf_refines(b, j));
    CHECK_FALSE(find_closure_violation(t, m.carriers()));
    CHECK_FALSE(find_closure_violation(t, j.carriers()));
    CHECK(presheaf_meet(a, presheaf_join(a, b)) == a);
  }
}

TEST_CASE("specification order combines trace inclusion and cover refinement") {
  const Frame f = ab_frame();
  const FiniteTopology t = FiniteTopology::discrete(f.universe());
  const Specification top = top_specification(f, t, 2);
  const Specification fine(top.presheaf, MaximalCover(t, {OpenSet{0}, OpenSet{1}}));
  CHECK(spec_refines(fine, top));
  CHECK_FALSE(spec_refines(top, fine));
  CHECK(spec_meet(top, fine) == fine);
  CHECK(spec_join(top, fine) == top);
  const FiniteTopology other = generate_topology(f.universe(), std::vector<OpenSet>{OpenSet{0}});
  CHECK_THROWS_AS(Specification(Subpresheaf(other), MaximalCover(t, {OpenSet{0}, OpenSet{1}})), DomainError);
}
