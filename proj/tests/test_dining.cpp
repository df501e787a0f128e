#include <catch_amalgamated.hpp>

#include "reltrace/consistency.hpp"
#include "reltrace/dining.hpp"
#include "reltrace/errors.hpp"

using namespace reltrace;

namespace {

constexpr StateId S = kOnTable, L = kHeldByLeft, O = kHeldByOwner, t = kThinking, e = kEating;

bool step(const DiningModel& m, std::array<StateId, 3> a, std::array<StateId, 3> b) {
  return legal_step(m, 1, m.local_state(1, a[0], a[1], a[2]), m.local_state(1, b[0], b[1], b[2]));
}

}  // namespace

TEST_CASE("model layout") {
  const DiningModel m = dining_model(3);
  CHECK(m.frame.size() == 6);
  CHECK(m.frame.variables().name(m.chopsticks[0]) == "c0");
  CHECK(m.frame.space(m.chopsticks[0]).labels() == std::vector<std::string>{"2", "*", "0"});
  CHECK(m.frame.space(m.chopsticks[1]).labels() == std::vector<std::string>{"0", "*", "1"});
  CHECK(m.block(1) == OpenSet({m.chopsticks[1], m.philosophers[1], m.chopsticks[2]}));
  CHECK(m.context.size() == 3);
  const auto s = m.local_state(2, L, e, O);
  CHECK(m.unpack(2, s) == std::array<StateId, 3>{L, e, O});
  CHECK_THROWS_AS(dining_model(1), DomainError);
  CHECK(dining_model(5).context.size() == 5);
}

TEST_CASE("transition rules") {
  const DiningModel m = dining_model(3);
  CHECK(step(m, {S, t, S}, {S, e, S}));   // hungry
  CHECK(step(m, {S, e, S}, {S, e, L}));   // right chopstick
  CHECK(step(m, {S, e, L}, {L, e, L}));   // neighbour takes the left one
  CHECK(step(m, {S, e, L}, {O, e, L}));   // left chopstick
  CHECK(step(m, {O, e, L}, {S, t, S}));   // eat, put both down
  CHECK(step(m, {S, t, S}, {L, t, O}));   // neighbours act
  CHECK_FALSE(step(m, {S, t, S}, {O, t, S}));  // grabbing while thinking
  CHECK_FALSE(step(m, {S, e, S}, {O, e, S}));  // left before right
  CHECK_FALSE(step(m, {L, t, S}, {O, t, S}));  // chopstick teleports
  CHECK_FALSE(step(m, {O, e, L}, {S, e, S}));  // put down without thinking
  CHECK_FALSE(step(m, {S, e, S}, {S, t, S}));  // stop being hungry
}

TEST_CASE("the knowledgebase traces are legal and match the narrative") {
  const DiningModel m = dining_model(3);
  const Knowledgebase k = dining_knowledgebase(m);
  REQUIRE(k.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(k[i].size() == 1);
    const Trace& x = k[i].traces()[0];
    CHECK(x.column_count() == 9);
    CHECK(legal_trace(m, i, x));
    CHECK_NOTHROW(check_chain(m.frame, x));
  }
  const Trace& phi1 = k[1].traces()[0];
  CHECK(m.unpack(1, phi1.column(1)) == std::array<StateId, 3>{S, e, S});
  CHECK(m.unpack(1, phi1.column(2)) == std::array<StateId, 3>{S, e, L});
  CHECK(m.unpack(1, phi1.column(3)) == std::array<StateId, 3>{L, e, L});
  CHECK(m.unpack(1, phi1.column(5)) == std::array<StateId, 3>{O, e, L});
  CHECK(m.unpack(1, phi1.column(7)) == std::array<StateId, 3>{S, t, O});
  CHECK_THROWS_AS(dining_knowledgebase(dining_model(4)), DomainError);
}

TEST_CASE("neighbours agree on each shared chopstick") {
  const DiningModel m = dining_model(3);
  const Knowledgebase k = dining_knowledgebase(m);
  for (std::size_t i = 0; i < 3; ++i) {
    const OpenSet ci{m.chopsticks[i]};
    const Relation mine = project(k[i], ci);
    const Relation left = project(k[(i + 2) % 3], ci);
    CHECK(mine.traces() == left.traces());
    REQUIRE(mine.size() == 1);
    const std::string prev = std::to_string((i + 2) % 3), own = std::to_string(i);
    CHECK(format_trace_inline(m.frame, mine.traces()[0]) == "[(*) (" + prev + ") (*) (" + own + ") (*)]");
  }
  CHECK(check_local(k).local);
}

TEST_CASE("legal traces") {
  const DiningModel m = dining_model(3);
  for (std::size_t i = 0; i < 3; ++i) {
    const Relation r = legal_traces(m, i, 5);
    CHECK(r.label() == m.block(i));
    for (const Trace& x : r.traces()) {
      CHECK(legal_trace(m, i, x));
      if (x.column_count() > 1) {
        auto cols = x.columns();
        cols.pop_back();
        CHECK(r.contains(Trace(x.domain(), cols)));
      }
    }
  }
  CHECK(legal_traces(m, 0, 1).size() == 1);
  CHECK_THROWS_AS(legal_traces(m, 0, 0), DomainError);
  const Knowledgebase k = dining_knowledgebase(m);
  CHECK_FALSE(legal_trace(m, 1, k[0].traces()[0]));
}

TEST_CASE("the three-philosopher knowledgebase is globally inconsistent") {
  const DiningModel m = dining_model(3);
  const Knowledgebase k = dining_knowledgebase(m);
  for (GlobalMethod method : {GlobalMethod::direct, GlobalMethod::fast}) {
    const ConsistencyReport r = check_global(k, method);
    CHECK(r.local);
    CHECK_FALSE(r.global);
    CHECK(r.gamma.empty());
  }
  // Any two of the three glue.
  CHECK_FALSE(combine(k[0], k[1]).empty());
  CHECK_FALSE(combine(k[1], k[2]).empty());
  CHECK_FALSE(combine(k[0], k[2]).empty());
}
