#include "modalwb/partition.hpp"

#include <algorithm>
#include <map>

#include "modalwb/error.hpp"

namespace modalwb {

Partition Partition::from_blocks(std::size_t n, std::vector<PointSet> blocks) {
  Partition p;
  p.n_ = n;
  p.block_index_.assign(n, n);
  PointSet seen(n);
  for (const auto& b : blocks) {
    if (b.universe() != n) throw InvalidInput("partition block over a different universe");
    if (b.empty()) throw InvalidInput("partition has an empty block");
    if (b.intersects(seen)) throw InvalidInput("partition blocks overlap");
    seen |= b;
  }
  if (seen.count() != n) throw InvalidInput("partition blocks do not cover all points");
  std::sort(blocks.begin(), blocks.end(),
            [](const PointSet& x, const PointSet& y) { return *x.first() < *y.first(); });
  p.blocks_ = std::move(blocks);
  for (std::size_t i = 0; i < p.blocks_.size(); ++i) {
    p.blocks_[i].for_each([&](std::size_t a) { p.block_index_[a] = i; });
  }
  return p;
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  const std::size_t n = labels.size();
  std::map<std::size_t, PointSet> groups;
  for (std::size_t a = 0; a < n; ++a) {
    auto [it, inserted] = groups.try_emplace(labels[a], n);
    it->second.insert(a);
  }
  std::vector<PointSet> blocks;
  blocks.reserve(groups.size());
  for (auto& [label, block] : groups) blocks.push_back(std::move(block));
  return from_blocks(n, std::move(blocks));
}

Partition Partition::trivial(std::size_t n) {
  if (n == 0) return from_blocks(0, {});
  return from_blocks(n, {PointSet::full(n)});
}

Partition Partition::discrete(std::size_t n) {
  std::vector<PointSet> blocks;
  for (std::size_t a = 0; a < n; ++a) blocks.push_back(PointSet(n, {a}));
  return from_blocks(n, std::move(blocks));
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.n_ != n_) return false;
  for (const auto& b : blocks_) {
    if (!b.is_subset_of(coarser.block(coarser.block_of(*b.first())))) return false;
  }
  return true;
}

void Partition::set_birth_stages(std::vector<std::size_t> births) {
  if (births.size() != blocks_.size()) throw InvalidInput("birth stage count differs from block count");
  births_ = std::move(births);
}

Partition Partition::restrict_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> labels;
  labels.reserve(keep.size());
  for (std::size_t a : keep) labels.push_back(block_of(a));
  return from_labels(labels);
}

std::string Partition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i != 0) out += ',';
    out += blocks_[i].to_string();
  }
  return out + "}";
}

}  // namespace modalwb
