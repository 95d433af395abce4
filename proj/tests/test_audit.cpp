#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "modalwb/audit.hpp"
#include "modalwb/error.hpp"
#include "modalwb/frame_io.hpp"

using namespace modalwb;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("generator honours its class") {
  std::mt19937_64 rng(1);
  for (auto cls : {FrameClass::any, FrameClass::preorder, FrameClass::transitive, FrameClass::wk4,
                   FrameClass::pretransitive}) {
    for (std::optional<std::size_t> h : {std::optional<std::size_t>{}, std::optional<std::size_t>{2}}) {
      GenSpec spec;
      spec.min_points = 1;
      spec.max_points = 8;
      spec.modalities = 2;
      spec.frame_class = cls;
      spec.m = 2;
      spec.max_height = h;
      for (int i = 0; i < 50; ++i) {
        const Frame f = random_frame(spec, rng);
        CHECK(satisfies_spec(f, spec));
        if (h) CHECK(height(f) <= *h);
        if (cls == FrameClass::preorder) {
          CHECK(Relation::identity(f.size()).is_subset_of(union_relation(f)));
          CHECK(transitivity_index(f) <= 1);
        }
        if (cls == FrameClass::pretransitive) CHECK(transitivity_index(f) <= 2);
      }
    }
  }
}

TEST_CASE("generator is deterministic") {
  GenSpec spec;
  spec.seed = 42;
  spec.max_points = 6;
  CHECK(random_frame(spec) == random_frame(spec));
  auto a = trial_rng(3, 9);
  auto b = trial_rng(3, 9);
  CHECK(a() == b());
  CHECK(trial_rng(3, 9)() != trial_rng(3, 10)());
}

TEST_CASE("generator rejects invalid specs") {
  GenSpec spec;
  spec.min_points = 5;
  spec.max_points = 2;
  CHECK_THROWS_AS(random_frame(spec), InvalidInput);
  spec.min_points = 1;
  spec.max_points = 3;
  spec.max_height = 0;
  CHECK_THROWS_AS(random_frame(spec), InvalidInput);
}

TEST_CASE("every suite passes a short run") {
  for (const auto& id : suite_ids()) {
    if (id == "byrd-frame") continue;
    AuditConfig cfg;
    cfg.trials = 25;
    cfg.seed = 3;
    const AuditReport r = run_suite(id, cfg);
    INFO(id << ": " << r.to_json().dump());
    CHECK(r.ok());
    CHECK(r.passes + r.failures.size() == r.trials);
  }
}

TEST_CASE("suite errors") {
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), InvalidInput);
  AuditConfig cfg;
  GenSpec big = default_spec("top-down");
  big.max_points = 9;
  cfg.spec = big;
  CHECK_THROWS_AS(run_suite("top-down", cfg), InvalidInput);
}

TEST_CASE("reports are reproducible and independent of thread count") {
  const auto dir = std::filesystem::temp_directory_path();
  AuditConfig cfg;
  cfg.trials = 40;
  cfg.seed = 11;
  cfg.mutation = Mutation::drop_jank2;
  cfg.threads = 1;
  emit_report(run_suite("definability", cfg), dir / "modalwb_r1.json");
  cfg.threads = 3;
  emit_report(run_suite("definability", cfg), dir / "modalwb_r2.json");
  const std::string a = slurp(dir / "modalwb_r1.json");
  CHECK(a == slurp(dir / "modalwb_r2.json"));
  const auto j = nlohmann::json::parse(a);
  CHECK(j["suite"] == "definability");
  CHECK(j["passes"].get<std::size_t>() + j["failures"].size() == 40);
}

TEST_CASE("failures embed a loadable counterexample") {
  AuditConfig cfg;
  cfg.trials = 100;
  cfg.mutation = Mutation::tuned_ignore_modality;
  const AuditReport r = run_suite("tuned-equivalences", cfg);
  REQUIRE_FALSE(r.failures.empty());
  for (const auto& f : r.failures) {
    const Frame fr = frame_from_json(nlohmann::json::parse(f.frame.dump()));
    std::size_t covered = 0;
    for (const auto& block : f.frame["partition"]) covered += block.size();
    CHECK(covered == fr.size());
    CHECK(fr.size() <= 3);  // minimized
  }
}

TEST_CASE("empty run") {
  AuditConfig cfg;
  cfg.trials = 0;
  const AuditReport r = run_suite("atr-correspondence", cfg);
  const auto j = r.to_json();
  CHECK(j["trials"] == 0);
  CHECK(j["passes"] == 0);
  CHECK(j["failures"].empty());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "seed", "trials", "passes", "failures", "config"});
}

TEST_CASE("mutations are caught") {
  AuditConfig cfg;
  cfg.trials = 100;
  cfg.mutation = Mutation::drop_jank2;
  CHECK_FALSE(run_suite("definability", cfg).ok());
  cfg.mutation = Mutation::tuned_ignore_modality;
  CHECK_FALSE(run_suite("tuned-equivalences", cfg).ok());
}

TEST_CASE("byrd family") {
  const AuditReport r = run_suite("byrd-frame", {});
  CHECK(r.trials == 5);
  // n = 4 has transitivity index 3; the other truncations match.
  CHECK(r.passes == 4);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].detail.find("n=4 transitivity_index=3") != std::string::npos);
}
