#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modalwb/formula.hpp"
#include "modalwb/frame.hpp"
#include "modalwb/partition.hpp"
#include "modalwb/point_set.hpp"

namespace modalwb {

/// A k-model: a frame together with the extent of each of the variables p0..p{k-1}.
struct Model {
  Frame frame;
  std::vector<PointSet> valuation;

  Model() = default;
  /// Throws InvalidInput if an extent is over a different universe.
  Model(Frame frame, std::vector<PointSet> valuation);

  std::size_t variable_count() const noexcept { return valuation.size(); }
};

/// The model restricted to a set of points (frame and valuation), renumbered ascending.
Model restrict_model(const Model& model, const std::vector<std::size_t>& points);

/// Points of the model where `f` holds. Throws InvalidInput when `f` mentions a variable
/// beyond the valuation or a modality beyond the alphabet.
PointSet extent(const Model& model, const Formula& f);

inline constexpr std::uint64_t kDefaultValidityCap = std::uint64_t{1} << 24;

/// Evaluation strategy for brute-force validity.
enum class ValidityKernel {
  automatic,  ///< widest kernel the CPU supports
  reference,  ///< one valuation at a time through `extent`
  portable,   ///< 64 valuations per machine word
  avx2,       ///< 256 valuations per AVX2 register
};

struct ValidityOptions {
  std::uint64_t cap = kDefaultValidityCap;
  ValidityKernel kernel = ValidityKernel::automatic;
};

bool avx2_available() noexcept;

/// Enumerates every valuation of the variables occurring in `f` (2^(vars * n) of them) and
/// returns the first one, in enumeration order, that falsifies `f` somewhere. The result is
/// indexed by variable index; variables not occurring in `f` get empty extents.
/// Throws CapExceeded when the enumeration is larger than `options.cap`.
std::optional<std::vector<PointSet>> find_countervaluation(const Frame& frame, const Formula& f,
                                                           const ValidityOptions& options = {});

bool validity_bruteforce(const Frame& frame, const Formula& f, const ValidityOptions& options = {});
inline bool validity_bruteforce(const Frame& frame, const Formula& f, std::uint64_t cap) {
  return validity_bruteforce(frame, f, ValidityOptions{cap, ValidityKernel::automatic});
}

struct ModelDepth {
  /// Least d whose d-equivalence equals the (d+1)-equivalence.
  std::size_t depth = 0;
  /// The d-equivalences for d = 0..depth.
  std::vector<Partition> trace;
};

ModelDepth model_depth(const Model& model);

}  // namespace modalwb
