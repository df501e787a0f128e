#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "reltrace/errors.hpp"
#include "reltrace/kleene.hpp"

using namespace reltrace;

namespace {

Frame bit_frame() {
  Frame f;
  f.add_variable("x", StateSpace::total({"0", "1"}));
  return f;
}

}  // namespace

TEST_CASE("sequential composition glues at a shared state") {
  const OpenSet d{0};
  const Relation r(d, {Trace(d, {{0}, {1}}), Trace::empty(d)});
  const Relation s(d, {Trace(d, {{1}, {0}}), Trace(d, {{0}, {1}})});
  const Relation rs = seq_compose(r, s);
  REQUIRE(rs.size() == 1);
  CHECK(rs.traces()[0] == Trace(d, {{0}, {1}, {0}}));
  CHECK_THROWS_AS(seq_compose(r, Relation(OpenSet{1}, {})), DomainError);
}

TEST_CASE("skip is a two-sided unit away from []") {
  const Frame f = bit_frame();
  const OpenSet d{0};
  const Relation sk = skip(f, d);
  CHECK(sk.size() == 2);
  gen::Rng rng(53);
  for (int round = 0; round < 100; ++round) {
    const Relation r = gen::relation(rng, f, d, 4, 4);
    CHECK(seq_compose(sk, r).traces() == seq_compose(r, sk).traces());
    CHECK(seq_compose(sk, r).size() == r.size() - (r.contains(Trace::empty(d)) ? 1 : 0));
  }
}

TEST_CASE("the exchange inclusion is strict") {
  const OpenSet d{0};
  const Relation a(d, {Trace(d, {{0}})});
  const Relation b(d, {Trace(d, {{0}, {1}, {0}})});
  const Relation lhs = seq_compose(intersect(a, b), intersect(b, a));
  const Relation rhs = intersect(seq_compose(a, b), seq_compose(b, a));
  CHECK(lhs.empty());
  CHECK_FALSE(rhs.empty());
}

TEST_CASE("concurrent Kleene laws on random samples") {
  gen::Rng rng(59);
  Frame f;
  f.add_variable("x", StateSpace::total({"0", "1"}));
  f.add_variable("y", StateSpace::total({"0", "1"}));
  for (OpenSet d : {OpenSet{0}, OpenSet{0, 1}}) {
    std::vector<Relation> sample;
    for (int i = 0; i < 7; ++i) sample.push_back(gen::relation(rng, f, d, 3, 3));
    sample.push_back(null_relation(d));
    const auto outcomes = check_cka_laws(f, SeqAlgebraInstance(d, 4), sample, 3000);
    CHECK(outcomes.size() >= 12);
    for (const auto& o : outcomes) {
      INFO(o.law << ": " << o.counterexample);
      CHECK(o.holds);
      CHECK(o.cases > 0);
    }
  }
  CHECK_THROWS_AS(SeqAlgebraInstance(OpenSet{0}, 0), DomainError);
}
