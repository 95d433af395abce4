#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "modalwb/error.hpp"
#include "modalwb/frame.hpp"
#include "modalwb/frame_io.hpp"
#include "modalwb/partitions.hpp"
#include "modalwb/schema.hpp"

using namespace modalwb;
using testutil::chain3;

namespace {

Frame two_cycle() { return Frame(Alphabet::numbered(1), {Relation::from_pairs(2, {{0, 1}, {1, 0}})}); }

}  // namespace

TEST_CASE("point sets and relations") {
  PointSet s(70, {0, 64, 69});
  CHECK(s.count() == 3);
  CHECK(s.to_string() == "{0,64,69}");
  CHECK(s.complement().count() == 67);
  CHECK_THROWS_AS(s.insert(70), InvalidInput);
  CHECK_THROWS_AS(s |= PointSet(3), InvalidInput);
  const Relation r = Relation::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(r.then(r).pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});
  CHECK(r.preimage(PointSet(3, {2})) == PointSet(3, {1}));
  CHECK(power(r, 0) == Relation::identity(3));
  CHECK(power_upto(r, 1) == (r | Relation::identity(3)));
}

TEST_CASE("union relation") {
  const Frame f(Alphabet::numbered(2), {Relation::from_pairs(3, {{0, 1}}), Relation::from_pairs(3, {{1, 2}})});
  CHECK(union_relation(f) == Relation::from_pairs(3, {{0, 1}, {1, 2}}));
  CHECK(union_relation(f, {1}) == Relation::from_pairs(3, {{1, 2}}));
  const Frame none(Alphabet::none(), 3);
  CHECK(union_relation(none).empty());
  const Frame singles(Alphabet::numbered(2), {Relation::from_pairs(2, {{0, 0}}), Relation::from_pairs(2, {{1, 1}})});
  CHECK(union_relation(singles) == Relation::identity(2));
}

TEST_CASE("reflexive transitive closure") {
  CHECK(rt_closure(Relation::from_pairs(3, {{0, 1}, {1, 2}})) ==
        Relation::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}));
  CHECK(rt_closure(Relation(2)) == Relation::identity(2));
  CHECK(rt_closure(Relation::from_pairs(2, {{0, 1}, {1, 0}})) == Relation::full(2));
}

TEST_CASE("transitivity index") {
  CHECK(transitivity_index(testutil::universal(2)) == 1);
  CHECK(transitivity_index(chain3()) == 2);
  CHECK(transitivity_index(Frame(Alphabet::numbered(1), 3)) == 0);
  CHECK(transitivity_index(Frame(Alphabet::numbered(1), 0)) == 0);
}

TEST_CASE("skeleton and height") {
  const SkeletonPoset s2 = skeleton(two_cycle());
  CHECK(s2.clusters.block_count() == 1);
  const SkeletonPoset s1 = skeleton(Frame(Alphabet::numbered(1), 1));
  CHECK(s1.clusters.block_count() == 1);
  CHECK(s1.below[0].empty());
  const SkeletonPoset s3 = skeleton(chain3());
  REQUIRE(s3.clusters.block_count() == 3);
  CHECK(s3.below[0] == PointSet(3, {1, 2}));
  CHECK(s3.below[1] == PointSet(3, {2}));
  CHECK(height(Frame(Alphabet::numbered(1), 0)) == 0);
  CHECK(height(two_cycle()) == 1);
  CHECK(height(testutil::universal(4)) == 1);
  CHECK(height(chain3()) == 3);
}

TEST_CASE("path reducibility") {
  CHECK(is_path_reducible(testutil::universal(3), 1));
  CHECK_FALSE(is_path_reducible(chain3(), 1));
  CHECK(is_path_reducible(chain3(), 2));
  CHECK_THROWS_AS(is_path_reducible(testutil::universal(8), 6, 100), BudgetExceeded);
}

TEST_CASE("restrictions, upsets and clusters") {
  const Restriction r = restriction(chain3(), PointSet(3, {1, 2}));
  CHECK(r.points == std::vector<std::size_t>{1, 2});
  CHECK(r.frame.relation(0) == Relation::from_pairs(2, {{0, 1}}));
  CHECK(is_upset(chain3(), PointSet(3, {2})));
  CHECK_FALSE(is_upset(chain3(), PointSet(3, {0})));
  CHECK(generated_upset(chain3(), PointSet(3, {1})) == PointSet(3, {1, 2}));
  CHECK(min_part(chain3()) == PointSet(3, {0}));
  CHECK_THROWS_AS(restriction(chain3(), PointSet(4)), InvalidInput);

  const Frame f = disjoint_sum({two_cycle(), Frame(Alphabet::numbered(1), 1)});
  const auto cs = cluster_frames(f);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0] == two_cycle());
  CHECK(cs[1] == Frame(Alphabet::numbered(1), 1));
}

TEST_CASE("cluster frames agree with the SCC oracle") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_adj(rng, 6, 2, 0.2);
    const Frame f = oracle::to_frame(g);
    const auto labels = oracle::clusters(g);
    CHECK(oracle::same_partition(labels, skeleton(f).clusters));
    std::size_t total = 0;
    for (const auto& c : cluster_frames(f)) total += c.size();
    CHECK(total == f.size());
  }
}

TEST_CASE("disjoint sums") {
  const Frame one(Alphabet::numbered(1), 1);
  const Frame s = disjoint_sum({one, one});
  CHECK(s.size() == 2);
  CHECK(s.relation(0).empty());
  CHECK(disjoint_sum({}).size() == 0);
  CHECK(disjoint_sum({chain3(), two_cycle(), one}).size() == 6);
  CHECK_THROWS_AS(disjoint_sum({one, Frame(Alphabet::numbered(2), 1)}), InvalidInput);
}

TEST_CASE("lexicographic sums") {
  const Frame loop(Alphabet{"v"}, {Relation::identity(1)});
  const Frame g(Alphabet{"h"}, {Relation::from_pairs(2, {{0, 1}})});
  const Frame s = lex_sum(loop, {g});
  CHECK(s.alphabet() == Alphabet({"v", "h"}));
  CHECK(s.relation(0) == Relation::full(2));
  CHECK(s.relation(1) == g.relation(0));

  const Frame two(Alphabet{"v"}, 2);
  const Frame s2 = lex_sum(two, {g, g});
  CHECK(s2.relation(0).empty());
  CHECK(s2.relation(1) == Relation::from_pairs(4, {{0, 1}, {2, 3}}));

  CHECK_THROWS_AS(lex_sum(loop, {Frame(Alphabet{"v"}, 1)}), InvalidInput);
  CHECK_THROWS_AS(lex_sum(two, {g}), InvalidInput);
}

TEST_CASE("lexicographic sums validate the interaction axioms") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t ni = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const Frame index = Frame(Alphabet{"v"}, testutil::random_frame(rng, ni, 1, 0.5).relations());
    std::vector<Frame> fibers;
    std::size_t budget = 6 - ni;
    for (std::size_t i = 0; i < ni; ++i) {
      const std::size_t k = 1 + std::uniform_int_distribution<std::size_t>(0, budget)(rng);
      budget -= k - 1;
      fibers.push_back(Frame(Alphabet{"h"}, testutil::random_frame(rng, k, 1, 0.5).relations()));
    }
    const Frame s = lex_sum(index, fibers);
    CHECK(s.size() <= 6);
    for (const auto& ax : lex_axioms({0}, {1})) CHECK(oracle::valid(oracle::from_frame(s), ax));
  }
}

TEST_CASE("expansions") {
  const Frame d = expand(Frame(Alphabet::numbered(1), 3), Expansion::difference, "ne");
  CHECK(d.relation(1).edge_count() == 6);
  const Frame u = expand(Frame(Alphabet::numbered(1), 0), Expansion::universal, "u");
  CHECK(u.size() == 0);
  CHECK(u.modality_count() == 2);
  CHECK_THROWS_AS(expand(chain3(), Expansion::universal, "d0"), InvalidInput);

  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const Frame base = testutil::random_frame(rng, 1 + i % 4, 1, 0.4);
    const Frame e = expand(base, Expansion::difference, "ne");
    for (const auto& ax : difference_axioms({0}, 1)) CHECK(oracle::valid(oracle::from_frame(e), ax));
  }
}

TEST_CASE("filtrations and p-morphisms") {
  const Quotient q = quotient_filtration(two_cycle(), Partition::trivial(2));
  CHECK(q.frame.size() == 1);
  CHECK(q.frame.relation(0).contains(0, 0));
  const Quotient same = quotient_filtration(chain3(), Partition::discrete(3));
  CHECK(same.frame == chain3());

  CHECK(is_pmorphism(chain3(), chain3(), {0, 1, 2}));
  const Frame loop(Alphabet::numbered(1), {Relation::identity(1)});
  CHECK(is_pmorphism(two_cycle(), loop, {0, 0}));
  const Frame chain2(Alphabet::numbered(1), {Relation::from_pairs(2, {{0, 1}})});
  CHECK_FALSE(is_pmorphism(chain2, loop, {0, 0}));
  CHECK_THROWS_AS(is_pmorphism(chain2, loop, {0}), InvalidInput);
}

TEST_CASE("frame invariants on random frames") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    const auto g = oracle::random_adj(rng, n, 2, 0.25);
    const Frame f = oracle::to_frame(g);
    CHECK(transitivity_index(f) <= n);
    CHECK(transitivity_index(f) == oracle::transitivity_index(g));
    CHECK(height(f) == oracle::height(g));

    const SkeletonPoset sk = skeleton(f);
    for (std::size_t c = 0; c < sk.below.size(); ++c) {
      CHECK_FALSE(sk.below[c].contains(c));
      sk.below[c].for_each([&](std::size_t d) { CHECK(sk.below[d].is_subset_of(sk.below[c])); });
    }
    if (n > 0) {
      PointSet seed(n);
      seed.insert(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
      const PointSet up = generated_upset(f, seed);
      CHECK(is_upset(f, up));
      CHECK(height(restriction(f, up).frame) <= height(f));
    }
    const Frame other = testutil::random_frame(rng, 3, 2, 0.3);
    CHECK(height(disjoint_sum({f, other})) == std::max(height(f), height(other)));
  }
}

TEST_CASE("path reducibility agrees with enumeration and implies m-transitivity") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    const auto g = oracle::random_adj(rng, n, 2, 0.3);
    const Frame f = oracle::to_frame(g);
    const bool rpp = is_path_reducible(f, m);
    CHECK(rpp == oracle::path_reducible(g, m));
    if (rpp) CHECK(is_m_transitive(f, m));
  }
}

TEST_CASE("frame JSON round trip and DOT") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Frame f = testutil::random_frame(rng, i % 6, 2, 0.3);
    CHECK(frame_from_json(nlohmann::json::parse(frame_to_json(f).dump())) == f);
  }
  CHECK_THROWS_AS(frame_from_json(nlohmann::json::parse(R"({"alphabet":["d0"],"points":2,"rel":{"d0":[[0,2]]}})")),
                  InvalidInput);
  CHECK_THROWS_AS(frame_from_json(nlohmann::json::parse(R"({"alphabet":["d0"],"points":2,"rel":{"x":[]}})")),
                  InvalidInput);
  CHECK_THROWS_AS(frame_from_json(nlohmann::json::parse(R"({"points":2})")), InvalidInput);
  const Frame empty_alpha = frame_from_json(nlohmann::json::parse(R"({"alphabet":[],"points":2,"rel":{}})"));
  CHECK(empty_alpha.modality_count() == 0);
  const std::string dot = to_dot(disjoint_sum({two_cycle(), Frame(Alphabet::numbered(1), 1)}));
  CHECK(dot.find("subgraph cluster_0") != std::string::npos);
  CHECK(dot.find("0 -> 1 [label=\"d0\"") != std::string::npos);
}
