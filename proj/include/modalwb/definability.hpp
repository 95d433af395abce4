#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modalwb/formula.hpp"
#include "modalwb/partition.hpp"
#include "modalwb/point_set.hpp"
#include "modalwb/semantics.hpp"

namespace modalwb {

/// One formula per block of the stabilized partition of a model, each true exactly on its block.
struct DistinguishingFormulas {
  Partition blocks;
  std::vector<Formula> formulas;
  /// Stabilization index of the model's induced sequence.
  std::size_t stabilization = 0;
};

/// alpha(block) is the full literal profile of the block conjoined with one splitter
/// <R>alpha(B) or its negation for every sibling the block was separated from during
/// refinement. depth(alpha(block)) <= birth stage of the block.
DistinguishingFormulas distinguishing_formulas(const Model& model);

/// The alpha formulas for the classes of an upset Y, computed in M restricted to Y.
struct DefinableFamily {
  PointSet target;
  /// Classes in original point indices, ordered by least point.
  std::vector<PointSet> classes;
  std::vector<Formula> alpha;
  /// Parameter of the bounded box in gamma.
  std::size_t m = 0;
  /// Stabilization index of M restricted to Y; bounds depth(alpha).
  std::size_t depth_bound = 0;
};

struct JankovOptions {
  bool include_forth = true;  ///< alpha(t1) -> <R>alpha(t2) for related classes
  bool include_back = true;   ///< alpha(t1) -> ~<R>alpha(t2) for unrelated classes
  bool include_cover = true;  ///< the disjunction of all alpha
  /// Box parameter; defaults to the transitivity index of the frame. Any larger value is sound.
  std::optional<std::size_t> m;
};

struct Jankov {
  DefinableFamily family;
  Formula gamma;
  /// Points of Y in ascending order, with beta(a) = alpha(a) & gamma for each.
  std::vector<std::size_t> points;
  std::vector<Formula> beta;
  /// class_of[i] indexes family.classes for points[i].
  std::vector<std::size_t> class_of;
};

/// Throws InvalidInput if Y is empty or not an upset.
Jankov build_jankov(const Model& model, const PointSet& upset, const JankovOptions& options = {});

struct DefinabilityViolation {
  std::size_t a = 0;
  std::size_t b = 0;
  bool beta_holds = false;
  bool equivalent = false;
};

struct DefinabilityReport {
  /// Pairs (a in Y, b anywhere) where "M,b |= beta(a)" and "a ~ b" disagree, ordered by (a, b).
  std::vector<DefinabilityViolation> violations;
  std::size_t max_beta_depth = 0;
  /// m + d + 1
  std::size_t depth_bound = 0;

  bool depth_ok() const noexcept { return max_beta_depth <= depth_bound; }
  bool ok() const noexcept { return violations.empty() && depth_ok(); }
};

DefinabilityReport verify_definability(const Model& model, const PointSet& upset, const JankovOptions& options = {});

struct StableTopCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StableTop {
  /// Union of the classes of ~ that meet Y.
  PointSet z;
  /// m + d + 1
  std::size_t bound = 0;
  /// Disjunction of beta over the least point of each class of Y.
  Formula definer;
  /// upset, definable, depth, stable
  std::vector<StableTopCheck> checks;

  bool ok() const noexcept;
};

StableTop stable_top(const Model& model, const PointSet& upset, const JankovOptions& options = {});

}  // namespace modalwb
