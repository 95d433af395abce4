#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modalwb/point_set.hpp"

namespace modalwb {

/// A partition of {0, ..., n-1}. Blocks are kept in ascending order of their least point.
/// Partitions produced by refinement also carry the stage at which each block first appeared.
class Partition {
 public:
  Partition() = default;

  /// Validates disjointness and coverage; empty blocks are rejected.
  static Partition from_blocks(std::size_t n, std::vector<PointSet> blocks);
  /// Points with equal labels share a block.
  static Partition from_labels(const std::vector<std::size_t>& labels);
  /// One block holding every point (no blocks when n = 0).
  static Partition trivial(std::size_t n);
  /// Every point in its own block.
  static Partition discrete(std::size_t n);

  std::size_t universe() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<PointSet>& blocks() const noexcept { return blocks_; }
  const PointSet& block(std::size_t index) const { return blocks_.at(index); }
  std::size_t block_of(std::size_t point) const { return block_index_.at(point); }
  bool same_block(std::size_t a, std::size_t b) const { return block_of(a) == block_of(b); }

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  bool has_birth_stages() const noexcept { return !births_.empty(); }
  std::size_t birth_stage(std::size_t block) const { return births_.at(block); }
  void set_birth_stages(std::vector<std::size_t> births);

  /// Restriction to a subset, renumbered in ascending point order.
  Partition restrict_to(const std::vector<std::size_t>& keep) const;

  /// "{{0,1},{2}}"
  std::string to_string() const;

  /// Equality compares blocks only.
  bool operator==(const Partition& other) const { return n_ == other.n_ && blocks_ == other.blocks_; }

 private:
  std::size_t n_ = 0;
  std::vector<PointSet> blocks_;
  std::vector<std::size_t> block_index_;
  std::vector<std::size_t> births_;
};

}  // namespace modalwb
