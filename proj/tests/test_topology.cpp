#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "oracles.hpp"
#include "reltrace/errors.hpp"
#include "reltrace/topology.hpp"

using namespace reltrace;

TEST_CASE("open sets") {
  const OpenSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.members() == std::vector<VarId>{0, 2, 5});
  CHECK(s.position_of(5) == 2);
  CHECK(OpenSet{0, 2}.subset_of(s));
  CHECK_FALSE(OpenSet{1}.subset_of(s));
  CHECK(OpenSet::first_n(3) == OpenSet({0, 1, 2}));
  CHECK(OpenSet{} < OpenSet{3});
  CHECK(OpenSet{3} < OpenSet{0, 1});
  CHECK_THROWS_AS(OpenSet{64}, DomainError);
}

TEST_CASE("variable table") {
  VariableTable vars;
  vars.add("a");
  vars.add("b");
  CHECK(vars.find("b") == VarId{1});
  CHECK_FALSE(vars.find("c"));
  CHECK(vars.format(OpenSet{0, 1}) == "{a,b}");
  CHECK_THROWS_AS(vars.add("a"), DomainError);
}

TEST_CASE("topology validation") {
  const OpenSet x = OpenSet::first_n(2);
  CHECK_NOTHROW(FiniteTopology(x, {OpenSet{}, OpenSet{0}, x}));
  CHECK_THROWS_AS(FiniteTopology(x, {OpenSet{0}, x}), DomainError);
  CHECK_THROWS_AS(FiniteTopology(x, {OpenSet{}, OpenSet{0}}), DomainError);
  CHECK_THROWS_AS(FiniteTopology(x, {OpenSet{}, OpenSet{0}, OpenSet{1}, x}).require_open(OpenSet{2}, "s"),
                  DomainError);
  const FiniteTopology t = FiniteTopology::discrete(x);
  CHECK(t.opens().size() == 4);
  CHECK(t.opens_within(OpenSet{0}) == std::vector<OpenSet>{OpenSet{}, OpenSet{0}});
}

TEST_CASE("generated topologies are closed under union and intersection") {
  gen::Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const OpenSet x = OpenSet::first_n(1 + gen::below(rng, 6));
    const auto sb = gen::subbasis(rng, x, 4);
    const FiniteTopology t = generate_topology(x, sb);
    for (OpenSet s : sb) CHECK(t.is_open(s));
    CHECK(t.is_open(OpenSet{}));
    CHECK(t.is_open(x));
    if (t.opens().size() > 12) continue;
    for (OpenSet a : t.opens())
      for (OpenSet b : t.opens()) {
        CHECK(t.is_open(a | b));
        CHECK(t.is_open(a & b));
      }
  }
}

TEST_CASE("maximal cover validation") {
  const OpenSet x = OpenSet::first_n(3);
  const FiniteTopology t = FiniteTopology::discrete(x);
  CHECK_NOTHROW(MaximalCover(t, {OpenSet{0, 1}, OpenSet{1, 2}}));
  CHECK_THROWS_AS(MaximalCover(t, {OpenSet{0, 1}, OpenSet{0}, OpenSet{2}}), DomainError);
  CHECK_THROWS_AS(MaximalCover(t, {OpenSet{0, 1}}), DomainError);
  const FiniteTopology coarse = generate_topology(x, std::vector<OpenSet>{OpenSet{0, 1}});
  CHECK_THROWS_AS(MaximalCover(coarse, {OpenSet{0, 1}, OpenSet{2}}), DomainError);
}

TEST_CASE("meet and join agree with brute force over all maximal covers") {
  gen::Rng rng(11);
  std::size_t spaces = 0;
  for (int round = 0; round < 80; ++round) {
    const OpenSet x = OpenSet::first_n(1 + gen::below(rng, 6));
    const FiniteTopology t = gen::topology(rng, x, 3);
    const auto brute = oracle::maximal_covers(t);
    const auto covers = all_maximal_covers(t);
    REQUIRE(covers.size() == brute.size());
    ++spaces;
    for (std::size_t i = 0; i < covers.size(); ++i)
      for (std::size_t j = 0; j < covers.size(); ++j) {
        const auto& u = covers[i].blocks();
        const auto& w = covers[j].blocks();
        const auto m = cover_meet(t, covers[i], covers[j]).blocks();
        const auto jn = cover_join(covers[i], covers[j]).blocks();
        CHECK(oracle::refines(m, u));
        CHECK(oracle::refines(m, w));
        CHECK(oracle::refines(u, jn));
        CHECK(oracle::refines(w, jn));
        for (const auto& c : brute) {
          if (oracle::refines(c, u) && oracle::refines(c, w)) CHECK(oracle::refines(c, m));
          if (oracle::refines(u, c) && oracle::refines(w, c)) CHECK(oracle::refines(jn, c));
        }
      }
    const auto finest = finest_context(t).blocks();
    for (const auto& c : brute) CHECK(oracle::refines(finest, c));
    CHECK(oracle::refines(trivial_context(t).blocks(), {x}));
  }
  CHECK(spaces >= 50);
}

TEST_CASE("meet of two covers on a small space") {
  const OpenSet x = OpenSet::first_n(3);
  const FiniteTopology t = FiniteTopology::discrete(x);
  const MaximalCover u(t, {OpenSet{0, 1}, OpenSet{2}});
  const MaximalCover w(t, {OpenSet{0}, OpenSet{1, 2}});
  CHECK(oracle::sorted(cover_meet(t, u, w).blocks()) == std::vector<OpenSet>{OpenSet{0}, OpenSet{1}, OpenSet{2}});
  CHECK(oracle::sorted(cover_join(u, w).blocks()) == std::vector<OpenSet>{OpenSet{0, 1}, OpenSet{1, 2}});
  CHECK(refines(u, trivial_context(t)));
  CHECK_FALSE(refines(trivial_context(t), u));
}
