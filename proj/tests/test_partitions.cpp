#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "modalwb/error.hpp"
#include "modalwb/partitions.hpp"

using namespace modalwb;
using testutil::chain3;

namespace {

Frame difference_frame(std::size_t n) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) r.add(a, b);
  return Frame(Alphabet::numbered(1), n, {r});
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition p = Partition::from_blocks(3, {PointSet(3, {2}), PointSet(3, {0, 1})});
  CHECK(p.block(0) == PointSet(3, {0, 1}));
  CHECK(p.to_string() == "{{0,1},{2}}");
  CHECK(Partition::discrete(3).refines(p));
  CHECK_FALSE(p.refines(Partition::discrete(3)));
  CHECK_THROWS_AS(Partition::from_blocks(3, {PointSet(3, {0, 1})}), InvalidInput);
  CHECK_THROWS_AS(Partition::from_blocks(3, {PointSet(3, {0, 1}), PointSet(3, {1, 2})}), InvalidInput);
  CHECK(Partition::from_labels({5, 5, 1}) == p);
  CHECK(p.restrict_to({1, 2}) == Partition::discrete(2));
}

TEST_CASE("induced partitions") {
  CHECK(induced_partition(3, {}) == Partition::trivial(3));
  CHECK(induced_partition(3, {PointSet(3, {0})}) == Partition::from_labels({0, 1, 1}));
  CHECK(induced_partition(3, {PointSet(3, {0, 1}), PointSet(3, {1, 2})}) == Partition::discrete(3));
  CHECK(induced_partition(0, {}).block_count() == 0);
}

TEST_CASE("tuned examples") {
  std::mt19937_64 rng(1);
  const Frame f = testutil::random_frame(rng, 5, 2, 0.4);
  CHECK(is_tuned(f, Partition::discrete(5)));
  CHECK(is_tuned(testutil::universal(4), Partition::trivial(4)));
  CHECK_FALSE(is_tuned(chain3(), Partition::from_labels({0, 1, 1})));
  CHECK_THROWS_AS(is_tuned(chain3(), Partition::trivial(2)), InvalidInput);
}

TEST_CASE("tuned characterizations agree with each other and the definition") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto g = oracle::random_adj(rng, n, 2, 0.35);
    const Frame f = oracle::to_frame(g);
    const Partition p = testutil::random_partition(rng, n);
    const bool a = is_tuned(f, p);
    CHECK(a == oracle::tuned(g, testutil::labels_of(p)));
    CHECK(a == is_tuned_by_projection(f, p));
    CHECK(a == is_tuned_by_preimages(f, p));
    CHECK(a == is_tuned_by_composition(f, p));
  }
}

TEST_CASE("refinement examples") {
  const Refinement r = refine_sequence(chain3(), {});
  CHECK(r.stabilization == 2);
  CHECK(r.final() == Partition::discrete(3));
  CHECK(r.final().birth_stage(2) == 1);
  CHECK(r.final().birth_stage(0) == 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    CHECK(refine_sequence(difference_frame(4), testutil::random_valuation(rng, 4, 2)).stabilization == 0);
  }
  std::vector<PointSet> singletons;
  for (std::size_t a = 0; a < 3; ++a) singletons.push_back(PointSet(3, {a}));
  CHECK(refine_sequence(chain3(), singletons).stabilization == 0);
}

TEST_CASE("refinement matches signature refinement, birth stages are monotone") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const auto g = oracle::random_adj(rng, n, 2, 0.25);
    const Frame f = oracle::to_frame(g);
    const auto init = testutil::random_valuation(rng, n, 2);
    const Refinement r = refine_sequence(f, init);
    const auto stages = oracle::refine(g, oracle::labels_from_family(n, testutil::masks(init)));
    REQUIRE(r.stages.size() == stages.size());
    for (std::size_t d = 0; d < stages.size(); ++d) CHECK(oracle::same_partition(stages[d], r.stages[d]));
    for (std::size_t d = 1; d < r.stages.size(); ++d) {
      for (std::size_t b = 0; b < r.stages[d].block_count(); ++b) {
        const std::size_t parent = r.parents[d][b];
        CHECK(r.stages[d].block(b).is_subset_of(r.stages[d - 1].block(parent)));
        CHECK(r.stages[d].birth_stage(b) >= r.stages[d - 1].birth_stage(parent));
        CHECK(r.stages[d].birth_stage(b) <= d);
      }
    }
  }
}

TEST_CASE("blocks born later are tuned against blocks born earlier") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Frame f = testutil::random_frame(rng, n, 2, 0.25);
    const Refinement r = refine_sequence(f, testutil::random_valuation(rng, n, 1));
    for (std::size_t d = 0; d < r.stages.size(); ++d) {
      const Partition& p = r.stages[d];
      for (std::size_t v = 0; v < p.block_count(); ++v) {
        for (std::size_t u = 0; u < p.block_count(); ++u) {
          if (p.birth_stage(u) >= p.birth_stage(v)) continue;
          for (const auto& rel : f.relations()) {
            const PointSet pre = rel.preimage(p.block(u));
            CHECK((p.block(v).is_subset_of(pre) || !p.block(v).intersects(pre)));
          }
        }
      }
    }
  }
}

TEST_CASE("fixpoint does not depend on the order of the seeding family") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Frame f = testutil::random_frame(rng, n, 2, 0.3);
    auto fam = testutil::random_valuation(rng, n, 3);
    const Partition a = refine_sequence(f, fam).final();
    std::shuffle(fam.begin(), fam.end(), rng);
    CHECK(refine_sequence(f, fam).final() == a);
  }
}

TEST_CASE("coarsest tuned refinement") {
  CHECK(coarsest_tuned_refinement(chain3(), Partition::trivial(3)) == Partition::discrete(3));
  CHECK(coarsest_tuned_refinement(testutil::universal(4), Partition::trivial(4)) == Partition::trivial(4));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Frame f = testutil::random_frame(rng, n, 2, 0.3);
    const Partition p = testutil::random_partition(rng, n);
    const Partition c = coarsest_tuned_refinement(f, p);
    CHECK(is_tuned(f, c));
    CHECK(c.refines(p));
    CHECK(coarsest_tuned_refinement(f, c) == c);
    if (is_tuned(f, p)) CHECK(c == p);
  }
}

TEST_CASE("coarsest tuned refinement is coarsest: exhaustive over all partitions, n <= 5") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const auto g = oracle::random_adj(rng, n, 2, 0.3);
    const Frame f = oracle::to_frame(g);
    const Partition p = testutil::random_partition(rng, n);
    const Partition c = coarsest_tuned_refinement(f, p);
    for (const auto& labels : oracle::all_partitions(n)) {
      const Partition q = Partition::from_labels(labels);
      if (q.refines(p) && oracle::tuned(g, labels)) CHECK(q.refines(c));
    }
  }
}

TEST_CASE("frame modal depth") {
  CHECK(frame_modal_depth(chain3()).value == 2);
  CHECK(frame_modal_depth(chain3()).witness == Partition::trivial(3));
  for (std::size_t n = 2; n <= 6; ++n) CHECK(frame_modal_depth(difference_frame(n)).value == 0);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(frame_modal_depth(testutil::universal(n)).value == 0);
  CHECK_THROWS_AS(frame_modal_depth(testutil::universal(9)), InvalidInput);
  const FrameDepth s = frame_modal_depth(testutil::universal(12), SampledDepth{20, 3});
  CHECK_FALSE(s.exact);
  CHECK(s.value == 0);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const auto g = oracle::random_adj(rng, n, 1, 0.3);
    const Frame f = oracle::to_frame(g);
    const std::size_t exact = frame_modal_depth(f).value;
    CHECK(exact == oracle::frame_md(g));
    CHECK(frame_modal_depth(f, SampledDepth{30, static_cast<std::uint64_t>(i)}).value <= exact);
  }
}

TEST_CASE("frame modal depth: generated subframes and disjoint sums") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Frame f = testutil::random_frame(rng, n, 2, 0.25);
    PointSet seed(n);
    seed.insert(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    const Frame g = restriction(f, generated_upset(f, seed)).frame;
    CHECK(frame_modal_depth(g).value <= frame_modal_depth(f).value);

    const Frame a = testutil::random_frame(rng, 1 + i % 4, 2, 0.3);
    const Frame b = testutil::random_frame(rng, 1 + (i / 4) % 4, 2, 0.3);
    const Frame s = disjoint_sum({a, b});
    CHECK(frame_modal_depth(s).value <=
          std::max(frame_modal_depth(a).value, frame_modal_depth(b).value) + transitivity_index(s) + 1);
  }
}

TEST_CASE("subalgebra sizes") {
  const Frame cyc(Alphabet::numbered(1), {Relation::from_pairs(2, {{0, 1}, {1, 0}})});
  CHECK(subalgebra_size(cyc, {PointSet(2, {0})}).value() == 4);
  CHECK(subalgebra_size(testutil::universal(3), {}).value() == 2);
  CHECK(subalgebra_size(chain3(), {}).value() == 8);
  CHECK(AlgebraSize{70}.to_string() == "1180591620717411303424");
  CHECK_FALSE(AlgebraSize{64}.value().has_value());

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const auto g = oracle::random_adj(rng, n, 1 + i % 2, 0.35);
    const auto gens = testutil::random_valuation(rng, n, i % 3);
    CHECK(subalgebra_size(oracle::to_frame(g), gens).value() == oracle::closure_size(g, testutil::masks(gens)));
  }
}

TEST_CASE("k-formula counts") {
  const Frame point(Alphabet::numbered(1), {Relation::identity(1)});
  CHECK(count_k_formulas(point, 1).value() == 4);
  CHECK(count_k_formulas(testutil::universal(2), 1).value() == 16);
  CHECK(count_k_formulas(chain3(), 0) == subalgebra_size(chain3(), {}));
  CHECK_THROWS_AS(count_k_formulas(testutil::universal(4), 4), CapExceeded);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    const auto g = oracle::random_adj(rng, n, 1, 0.5);
    const std::size_t k = n == 1 ? 2 : 1;
    CHECK(count_k_formulas(oracle::to_frame(g), k).value() == oracle::count_k_formulas(g, k));
  }
}
