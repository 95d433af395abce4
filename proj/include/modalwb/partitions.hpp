#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modalwb/frame.hpp"
#include "modalwb/partition.hpp"
#include "modalwb/point_set.hpp"

namespace modalwb {

/// Classes of equal membership profiles with respect to `family`.
Partition induced_partition(std::size_t n, const std::vector<PointSet>& family);

struct TunedOptions {
  /// Skip this modality when checking (used only to build deliberately wrong checkers).
  std::optional<ModalityId> ignore_modality;
};

/// Every modality, every pair of blocks U, V: if some point of U sees V then every point of U does.
bool is_tuned(const Frame& frame, const Partition& partition, const TunedOptions& options = {});
/// Same property, via the canonical projection onto the minimal filtration being a p-morphism.
bool is_tuned_by_projection(const Frame& frame, const Partition& partition);
/// Same property, via U within R^{-1}[V] or disjoint from it.
bool is_tuned_by_preimages(const Frame& frame, const Partition& partition);
/// Same property, via the relational inclusion (~ ; R) within (R ; ~).
bool is_tuned_by_composition(const Frame& frame, const Partition& partition);

/// The induced sequence V_0, V_1, ... up to stabilization.
struct Refinement {
  /// stages[d] is V_d, with birth stages per block; stages.back() is V_stabilization.
  std::vector<Partition> stages;
  /// parents[d][i] is the block of V_{d-1} containing block i of V_d (empty for d = 0).
  std::vector<std::vector<std::size_t>> parents;
  /// Least d with V_d = V_{d+1}.
  std::size_t stabilization = 0;

  const Partition& final() const { return stages.back(); }
  /// V_d, clamped to the stabilized partition for d beyond stabilization.
  const Partition& stage(std::size_t d) const { return stages[d < stages.size() ? d : stages.size() - 1]; }
};

/// V_0 is induced by `initial`; V_d is induced by the blocks of V_{d-1} together with every
/// modal preimage of those blocks.
Refinement refine_sequence(const Frame& frame, const std::vector<PointSet>& initial);

/// The stabilized partition of the sequence seeded with the blocks of `partition`.
Partition coarsest_tuned_refinement(const Frame& frame, const Partition& partition);

struct ExactDepth {};
struct SampledDepth {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

struct FrameDepth {
  std::size_t value = 0;
  /// False for sampled results, which are only lower bounds.
  bool exact = true;
  /// An initial partition reaching `value`.
  Partition witness;
};

inline constexpr std::size_t kExactDepthMaxPoints = 8;

/// Maximum stabilization index over every set partition of the points (n <= 8).
FrameDepth frame_modal_depth(const Frame& frame, ExactDepth = {});
/// Maximum over random initial partitions: a lower bound.
FrameDepth frame_modal_depth(const Frame& frame, const SampledDepth& sampled);

/// Cardinality of a finite Boolean algebra, stored as its number of atoms.
struct AlgebraSize {
  std::size_t atoms = 0;

  /// 2^atoms when it fits in 64 bits.
  std::optional<std::uint64_t> value() const;
  /// Decimal expansion of 2^atoms.
  std::string to_string() const;
  bool operator==(const AlgebraSize& other) const = default;
};

/// Size of the subalgebra of the frame's powerset modal algebra generated by `generators`.
AlgebraSize subalgebra_size(const Frame& frame, const std::vector<PointSet>& generators);

/// Number of pairwise non-equivalent k-formulas in the logic of the frame.
/// Throws CapExceeded when 2^(n*k) > cap.
AlgebraSize count_k_formulas(const Frame& frame, std::size_t k, std::uint64_t cap = std::uint64_t{1} << 12);

}  // namespace modalwb
