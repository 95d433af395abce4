#include <algorithm>
#include <random>
#include <string>

#include "modalwb/error.hpp"
#include "modalwb/partitions.hpp"

namespace modalwb {

namespace {

void split_by(std::vector<PointSet>& blocks, const PointSet& splitter) {
  std::vector<PointSet> out;
  out.reserve(blocks.size() * 2);
  for (const auto& b : blocks) {
    PointSet inside = b & splitter;
    PointSet outside = b - splitter;
    if (!inside.empty()) out.push_back(std::move(inside));
    if (!outside.empty()) out.push_back(std::move(outside));
  }
  blocks = std::move(out);
}

}  // namespace

Partition induced_partition(std::size_t n, const std::vector<PointSet>& family) {
  std::vector<PointSet> blocks;
  if (n > 0) blocks.push_back(PointSet::full(n));
  for (const auto& s : family) {
    if (s.universe() != n) throw InvalidInput("family member over a different universe");
    split_by(blocks, s);
  }
  return Partition::from_blocks(n, std::move(blocks));
}

bool is_tuned(const Frame& frame, const Partition& partition, const TunedOptions& options) {
  if (partition.universe() != frame.size()) throw InvalidInput("partition over a different universe");
  for (std::size_t d = 0; d < frame.modality_count(); ++d) {
    if (options.ignore_modality && *options.ignore_modality == d) continue;
    const Relation& r = frame.relation(d);
    for (const auto& u : partition.blocks()) {
      for (const auto& v : partition.blocks()) {
        bool some = false;
        bool all = true;
        u.for_each([&](std::size_t a) {
          if (r.successors(a).intersects(v)) {
            some = true;
          } else {
            all = false;
          }
        });
        if (some && !all) return false;
      }
    }
  }
  return true;
}

bool is_tuned_by_projection(const Frame& frame, const Partition& partition) {
  const Quotient q = quotient_filtration(frame, partition);
  return is_pmorphism(frame, q.frame, q.projection);
}

bool is_tuned_by_preimages(const Frame& frame, const Partition& partition) {
  if (partition.universe() != frame.size()) throw InvalidInput("partition over a different universe");
  for (const auto& r : frame.relations()) {
    for (const auto& v : partition.blocks()) {
      const PointSet pre = r.preimage(v);
      for (const auto& u : partition.blocks()) {
        if (!u.is_subset_of(pre) && u.intersects(pre)) return false;
      }
    }
  }
  return true;
}

bool is_tuned_by_composition(const Frame& frame, const Partition& partition) {
  if (partition.universe() != frame.size()) throw InvalidInput("partition over a different universe");
  Relation equivalence(frame.size());
  for (const auto& b : partition.blocks()) {
    b.for_each([&](std::size_t a) { b.for_each([&](std::size_t c) { equivalence.add(a, c); }); });
  }
  for (const auto& r : frame.relations()) {
    if (!equivalence.then(r).is_subset_of(r.then(equivalence))) return false;
  }
  return true;
}

Refinement refine_sequence(const Frame& frame, const std::vector<PointSet>& initial) {
  const std::size_t n = frame.size();
  Refinement out;
  Partition first = induced_partition(n, initial);
  first.set_birth_stages(std::vector<std::size_t>(first.block_count(), 0));
  out.stages.push_back(std::move(first));
  out.parents.emplace_back();

  for (std::size_t d = 1;; ++d) {
    const Partition& prev = out.stages.back();
    std::vector<PointSet> blocks = prev.blocks();
    // Blocks in ascending least-point order, preimages in alphabet order.
    for (const auto& r : frame.relations()) {
      for (const auto& u : prev.blocks()) split_by(blocks, r.preimage(u));
    }
    Partition next = Partition::from_blocks(n, std::move(blocks));
    if (next == prev) break;
    std::vector<std::size_t> births(next.block_count());
    std::vector<std::size_t> parents(next.block_count());
    for (std::size_t i = 0; i < next.block_count(); ++i) {
      const std::size_t parent = prev.block_of(*next.block(i).first());
      parents[i] = parent;
      births[i] = next.block(i) == prev.block(parent) ? prev.birth_stage(parent) : d;
    }
    next.set_birth_stages(std::move(births));
    out.stages.push_back(std::move(next));
    out.parents.push_back(std::move(parents));
  }
  out.stabilization = out.stages.size() - 1;
  return out;
}

Partition coarsest_tuned_refinement(const Frame& frame, const Partition& partition) {
  if (partition.universe() != frame.size()) throw InvalidInput("partition over a different universe");
  return refine_sequence(frame, partition.blocks()).final();
}

namespace {

template <class Fn>
void for_each_set_partition(std::size_t n, Fn&& fn) {
  std::vector<std::size_t> labels(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  for (;;) {
    fn(labels);
    // Advance the restricted growth string; stop after the last one.
    bool advanced = false;
    for (std::size_t i = n; i > 1 && !advanced;) {
      --i;
      if (labels[i] <= prefix_max[i - 1]) {
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          labels[j] = 0;
          prefix_max[j] = prefix_max[i];
        }
        advanced = true;
      }
    }
    if (!advanced) return;
  }
}

}  // namespace

FrameDepth frame_modal_depth(const Frame& frame, ExactDepth) {
  const std::size_t n = frame.size();
  if (n > kExactDepthMaxPoints) {
    throw InvalidInput("exact modal depth needs at most " + std::to_string(kExactDepthMaxPoints) +
                       " points, frame has " + std::to_string(n));
  }
  FrameDepth best{0, true, Partition::trivial(n)};
  bool first = true;
  for_each_set_partition(n, [&](const std::vector<std::size_t>& labels) {
    const Partition p = Partition::from_labels(labels);
    const std::size_t s = refine_sequence(frame, p.blocks()).stabilization;
    if (first || s > best.value) {
      best.value = s;
      best.witness = p;
      first = false;
    }
  });
  return best;
}

FrameDepth frame_modal_depth(const Frame& frame, const SampledDepth& sampled) {
  const std::size_t n = frame.size();
  std::mt19937_64 rng(sampled.seed);
  FrameDepth best{0, false, Partition::trivial(n)};
  for (std::size_t t = 0; t < sampled.trials && n > 0; ++t) {
    const std::size_t classes = 1 + rng() % n;
    std::vector<std::size_t> labels(n);
    for (auto& l : labels) l = rng() % classes;
    const Partition p = Partition::from_labels(labels);
    const std::size_t s = refine_sequence(frame, p.blocks()).stabilization;
    if (s > best.value) {
      best.value = s;
      best.witness = p;
    }
  }
  return best;
}

}  // namespace modalwb
