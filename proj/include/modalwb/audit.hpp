#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "modalwb/frame.hpp"

namespace modalwb {

/// Structural class of the union relation R_F of a generated frame.
enum class FrameClass {
  any,
  preorder,       ///< reflexive and transitive
  transitive,
  wk4,            ///< R u Id transitive
  pretransitive,  ///< m-transitive for GenSpec::m
};

struct GenSpec {
  std::size_t min_points = 1;
  std::size_t max_points = 4;
  std::size_t modalities = 1;
  /// Probability of each candidate edge.
  double density = 0.35;
  FrameClass frame_class = FrameClass::any;
  /// Used by FrameClass::pretransitive.
  std::size_t m = 1;
  /// Bounded height: every generated frame has height <= max_height.
  std::optional<std::size_t> max_height;
  std::uint64_t seed = 1;
};

const char* to_string(FrameClass c);
std::optional<FrameClass> frame_class_from_string(const std::string& name);
nlohmann::ordered_json spec_to_json(const GenSpec& spec);

/// Independent stream for one trial of a run: parallel and serial runs draw identical values.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);
/// Uniform integer in [lo, hi].
std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi);
bool coin(std::mt19937_64& rng, double p);

/// A frame in the declared class. Throws InvalidInput for an invalid spec.
Frame random_frame(const GenSpec& spec, std::mt19937_64& rng);
/// Same, seeded from spec.seed.
Frame random_frame(const GenSpec& spec);
/// Whether the frame satisfies the class and height bound of the spec.
bool satisfies_spec(const Frame& frame, const GenSpec& spec);

enum class Mutation {
  none,
  drop_jank2,             ///< definability: build gamma without the negative family
  tuned_ignore_modality,  ///< tuned-equivalences: condition (a) skips modality 0
};

const char* to_string(Mutation m);
std::optional<Mutation> mutation_from_string(const std::string& name);

struct AuditConfig {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Mutation mutation = Mutation::none;
  /// Replaces the suite's default generator settings (seed is taken from `seed` above).
  std::optional<GenSpec> spec;
  /// cluster-bound: instantiate the bound with these constants instead of the derived ones.
  std::optional<std::size_t> fixed_d;
  std::optional<std::size_t> fixed_m;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
  /// Shrink counterexamples by greedy point deletion.
  bool minimize = true;
};

struct AuditFailure {
  std::size_t trial = 0;
  /// Counterexample in the frame format, possibly with extra keys (valuation, partition, ...).
  nlohmann::ordered_json frame;
  std::string detail;
};

struct AuditReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::vector<AuditFailure> failures;
  nlohmann::ordered_json config;

  bool ok() const noexcept { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
};

std::vector<std::string> suite_ids();
/// Generator defaults of a suite. Throws InvalidInput for unknown ids.
GenSpec default_spec(const std::string& suite);
/// Throws InvalidInput for unknown suites or incompatible specs.
AuditReport run_suite(const std::string& suite, const AuditConfig& config);
/// Writes `report.to_json()` with two-space indentation and a trailing newline.
void emit_report(const AuditReport& report, const std::filesystem::path& path);

}  // namespace modalwb
