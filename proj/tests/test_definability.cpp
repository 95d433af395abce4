#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "modalwb/audit.hpp"
#include "modalwb/definability.hpp"
#include "modalwb/error.hpp"
#include "modalwb/partitions.hpp"

using namespace modalwb;
using testutil::chain3;

namespace {

Model random_model(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  return Model(testutil::random_frame(rng, n, 2, 0.3), testutil::random_valuation(rng, n, k));
}

PointSet random_upset(std::mt19937_64& rng, const Frame& f) {
  PointSet seed(f.size());
  seed.insert(std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng));
  return generated_upset(f, seed);
}

}  // namespace

TEST_CASE("distinguishing formulas: examples") {
  const DistinguishingFormulas d = distinguishing_formulas(Model(chain3(), {}));
  REQUIRE(d.blocks == Partition::discrete(3));
  const Formula top_point = d.formulas[d.blocks.block_of(2)];
  CHECK(depth(top_point) == 1);
  CHECK(extent(Model(chain3(), {}), top_point) == extent(Model(chain3(), {}), Formula::box(0, Formula::falsum())));

  const DistinguishingFormulas one = distinguishing_formulas(Model(testutil::universal(3), {}));
  REQUIRE(one.formulas.size() == 1);
  CHECK(depth(one.formulas[0]) == 0);
  CHECK(extent(Model(testutil::universal(3), {}), one.formulas[0]).count() == 3);
}

TEST_CASE("distinguishing formulas define their blocks within their birth stage") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const Model m = random_model(rng, n, k);
    const DistinguishingFormulas d = distinguishing_formulas(m);
    for (std::size_t b = 0; b < d.blocks.block_count(); ++b) {
      CHECK(extent(m, d.formulas[b]) == d.blocks.block(b));
      CHECK(depth(d.formulas[b]) <= d.blocks.birth_stage(b));
      CHECK(depth(d.formulas[b]) <= d.stabilization);
      CHECK(variable_bound(d.formulas[b]) <= k);
    }
  }
}

TEST_CASE("alpha formulas carry the full literal profile") {
  const Model m(chain3(), {PointSet(3, {0, 2}), PointSet(3, {1})});
  const Jankov j = build_jankov(m, PointSet::full(3));
  for (const auto& a : j.family.alpha) {
    const auto vs = variables(a);
    CHECK(vs == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("build_jankov preconditions") {
  const Model m(chain3(), {});
  CHECK_THROWS_AS(build_jankov(m, PointSet(3)), InvalidInput);
  CHECK_THROWS_AS(build_jankov(m, PointSet(3, {0})), InvalidInput);
  CHECK_NOTHROW(build_jankov(m, PointSet(3, {1, 2})));
}

TEST_CASE("jankov on a cluster model") {
  const Model m(testutil::universal(3), {PointSet(3, {0})});
  const Jankov j = build_jankov(m, PointSet::full(3));
  CHECK(j.family.classes.size() == 2);
  CHECK(j.family.m == 1);
  for (std::size_t i = 0; i < j.points.size(); ++i) {
    const PointSet ext = extent(m, j.beta[i]);
    CHECK(ext == j.family.classes[j.class_of[i]]);
  }
}

TEST_CASE("jankov depth bounds") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Model m = random_model(rng, n, i % 3);
    const PointSet y = random_upset(rng, m.frame);
    const Jankov j = build_jankov(m, y);
    const std::size_t d = model_depth(restrict_model(m, y.to_vector())).depth;
    CHECK(j.family.depth_bound == d);
    CHECK(depth(j.gamma) <= j.family.m + d + 1);
    for (const auto& a : j.family.alpha) CHECK(depth(a) <= d);
    for (const auto& b : j.beta) CHECK(depth(b) <= j.family.m + d + 1);
  }
}

TEST_CASE("top cluster of a two-level preorder") {
  // Cluster {0,1} below cluster {2,3}.
  Relation r = Relation::from_pairs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  r |= Relation::identity(4);
  const Frame f(Alphabet::numbered(1), {r});
  const Model m(f, {PointSet(4, {2, 3})});
  const PointSet y(4, {2, 3});
  const Jankov j = build_jankov(m, y);
  const std::size_t d = model_depth(restrict_model(m, y.to_vector())).depth;
  for (const auto& b : j.beta) CHECK(depth(b) <= 1 + d + 1);
  CHECK(verify_definability(m, y).ok());
  const StableTop top = stable_top(m, y);
  CHECK(top.z == y);
  CHECK(top.ok());
}

TEST_CASE("definability lemma on random models") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Model m = random_model(rng, n, i % 3);
    const PointSet y = random_upset(rng, m.frame);
    const DefinabilityReport rep = verify_definability(m, y);
    CHECK(rep.violations.empty());
    CHECK(rep.depth_ok());
    // Larger m than needed is still sound.
    JankovOptions big;
    big.m = transitivity_index(m.frame) + 2;
    CHECK(verify_definability(m, y, big).ok());
  }
}

TEST_CASE("beta for a single top class singles out its equivalence class") {
  const Frame f(Alphabet::numbered(1), {Relation::from_pairs(3, {{0, 2}, {1, 2}})});
  const Model m(f, {});
  // 0 and 1 are equivalent, 2 is the top.
  const Jankov j = build_jankov(m, PointSet(3, {2}));
  REQUIRE(j.beta.size() == 1);
  CHECK(extent(m, j.beta[0]) == PointSet(3, {2}));
}

TEST_CASE("stable top") {
  std::mt19937_64 rng(4);
  const Model whole = random_model(rng, 5, 1);
  const StableTop all = stable_top(whole, PointSet::full(5));
  CHECK(all.z == PointSet::full(5));
  CHECK(all.ok());

  // Two clusters in a chain, valuation separating them: Z = Y.
  Relation r = Relation::from_pairs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
  r |= Relation::identity(4);
  const Model two(Frame(Alphabet::numbered(1), {r}), {PointSet(4, {0, 1})});
  const StableTop top = stable_top(two, PointSet(4, {2, 3}));
  CHECK(top.z == PointSet(4, {2, 3}));
  CHECK(top.ok());

  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Model m = random_model(rng, n, i % 3);
    const PointSet y = random_upset(rng, m.frame);
    const StableTop st = stable_top(m, y);
    for (const auto& c : st.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.passed);
    }
    CHECK(y.is_subset_of(st.z));
  }
}

TEST_CASE("k = 0 models stay exact") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Model m = random_model(rng, n, 0);
    CHECK(verify_definability(m, random_upset(rng, m.frame)).ok());
  }
}

TEST_CASE("dropping the negative family breaks the lemma somewhere") {
  std::mt19937_64 rng(6);
  JankovOptions mutant;
  mutant.include_back = false;
  int broken = 0;
  for (int i = 0; i < 200 && broken == 0; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const Model m = random_model(rng, n, i % 3);
    if (!verify_definability(m, random_upset(rng, m.frame), mutant).violations.empty()) ++broken;
  }
  CHECK(broken > 0);
}

TEST_CASE("top-down lemma on random frames") {
  AuditConfig cfg;
  cfg.trials = 60;
  cfg.seed = 5;
  const AuditReport r = run_suite("top-down", cfg);
  CHECK(r.passes == r.trials);
}
