#include "modalwb/frame.hpp"

#include <algorithm>
#include <string>

#include "modalwb/error.hpp"

namespace modalwb {

Frame::Frame(Alphabet alphabet, std::size_t points)
    : alphabet_(std::move(alphabet)), points_(points), relations_(alphabet_.size(), Relation(points)) {}

namespace {
std::size_t first_size(const std::vector<Relation>& relations) {
  return relations.empty() ? 0 : relations.front().size();
}
}  // namespace

Frame::Frame(Alphabet alphabet, std::vector<Relation> relations) {
  const std::size_t n = first_size(relations);
  *this = Frame(std::move(alphabet), n, std::move(relations));
}

Frame::Frame(Alphabet alphabet, std::size_t points, std::vector<Relation> relations)
    : alphabet_(std::move(alphabet)), points_(points), relations_(std::move(relations)) {
  if (relations_.size() != alphabet_.size()) {
    throw InvalidInput("frame has " + std::to_string(relations_.size()) + " relations for an alphabet of " +
                       std::to_string(alphabet_.size()));
  }
  for (const auto& r : relations_) {
    if (r.size() != points_) throw InvalidInput("relation point count differs from frame size");
  }
}

Relation union_relation(const Frame& frame) { return union_relation(frame, frame.alphabet().all()); }

Relation union_relation(const Frame& frame, const ModalitySet& subset) {
  Relation out(frame.size());
  for (ModalityId id : normalize_modalities(subset, frame.modality_count())) out |= frame.relation(id);
  return out;
}

bool is_m_transitive(const Frame& frame, std::size_t m) {
  const Relation r = union_relation(frame);
  const Relation upto = power_upto(r, m);
  return power(r, m + 1).is_subset_of(upto);
}

std::size_t transitivity_index(const Frame& frame) {
  const Relation r = union_relation(frame);
  Relation step = Relation::identity(frame.size());
  Relation upto = step;
  for (std::size_t m = 0;; ++m) {
    step = step.then(r);
    if (step.is_subset_of(upto)) return m;
    upto |= step;
  }
}

SkeletonPoset skeleton(const Frame& frame) {
  const std::size_t n = frame.size();
  const Relation reach = rt_closure(union_relation(frame));
  std::vector<std::size_t> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    // Label a cluster by its least member.
    labels[a] = *(reach.successors(a) & reach.predecessors(a)).first();
  }
  SkeletonPoset out{Partition::from_labels(labels), {}};
  const std::size_t c = out.clusters.block_count();
  out.below.assign(c, PointSet(c));
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t rep = *out.clusters.block(i).first();
    reach.successors(rep).for_each([&](std::size_t b) {
      const std::size_t j = out.clusters.block_of(b);
      if (j != i) out.below[i].insert(j);
    });
  }
  return out;
}

std::size_t height(const Frame& frame) {
  const SkeletonPoset sk = skeleton(frame);
  const std::size_t c = sk.clusters.block_count();
  // Longest chain by memoized depth-first search over the (acyclic) cluster order.
  std::vector<std::size_t> longest(c, 0);
  std::vector<std::size_t> order(c);
  for (std::size_t i = 0; i < c; ++i) order[i] = i;
  // A cluster's successors are exactly the clusters it strictly precedes, so sort by successor count.
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return sk.below[x].count() < sk.below[y].count(); });
  std::size_t best = 0;
  for (std::size_t i : order) {
    std::size_t len = 1;
    sk.below[i].for_each([&](std::size_t j) { len = std::max(len, longest[j] + 1); });
    longest[i] = len;
    best = std::max(best, len);
  }
  return best;
}

namespace {

struct PathSearch {
  const Relation& r;
  std::size_t last_index;  // m + 1
  std::uint64_t budget;
  std::uint64_t visited = 0;
  std::vector<std::size_t> path;

  // True iff every extension of the current prefix to full length is reducible.
  bool extend() {
    if (++visited > budget) {
      throw BudgetExceeded("path enumeration exceeded budget of " + std::to_string(budget) + " prefixes");
    }
    const std::size_t t = path.size() - 1;
    const std::size_t x = path.back();
    for (std::size_t i = 0; i < t; ++i) {
      if (path[i] == x) return true;
      if (i + 1 < t && r.contains(path[i], x)) return true;
    }
    if (t == last_index) return false;
    bool ok = true;
    r.successors(x).for_each([&](std::size_t y) {
      if (!ok) return;
      path.push_back(y);
      ok = extend();
      path.pop_back();
    });
    return ok;
  }
};

}  // namespace

bool is_path_reducible(const Frame& frame, std::size_t m, std::uint64_t budget) {
  const Relation r = union_relation(frame);
  PathSearch search{r, m + 1, budget, 0, {}};
  for (std::size_t a = 0; a < frame.size(); ++a) {
    search.path = {a};
    if (!search.extend()) return false;
  }
  return true;
}

Restriction restriction(const Frame& frame, const PointSet& points) {
  if (points.universe() != frame.size()) throw InvalidInput("restriction set over a different universe");
  Restriction out;
  out.points = points.to_vector();
  std::vector<Relation> rels;
  rels.reserve(frame.modality_count());
  for (const auto& r : frame.relations()) rels.push_back(r.restrict_to(out.points));
  out.frame = Frame(frame.alphabet(), out.points.size(), std::move(rels));
  return out;
}

bool is_upset(const Frame& frame, const PointSet& points) {
  if (points.universe() != frame.size()) throw InvalidInput("point set over a different universe");
  for (const auto& r : frame.relations()) {
    if (!r.image(points).is_subset_of(points)) return false;
  }
  return true;
}

PointSet generated_upset(const Frame& frame, const PointSet& points) {
  if (points.universe() != frame.size()) throw InvalidInput("point set over a different universe");
  const Relation r = union_relation(frame);
  PointSet closed = points;
  for (;;) {
    PointSet next = closed | r.image(closed);
    if (next == closed) return closed;
    closed = std::move(next);
  }
}

PointSet min_part(const Frame& frame) {
  const SkeletonPoset sk = skeleton(frame);
  const std::size_t c = sk.clusters.block_count();
  PointSet has_predecessor(c);
  for (std::size_t i = 0; i < c; ++i) has_predecessor |= sk.below[i];
  PointSet out(frame.size());
  for (std::size_t i = 0; i < c; ++i) {
    if (!has_predecessor.contains(i)) out |= sk.clusters.block(i);
  }
  return out;
}

std::vector<Frame> cluster_frames(const Frame& frame) {
  std::vector<Frame> out;
  const SkeletonPoset sk = skeleton(frame);
  for (const auto& block : sk.clusters.blocks()) out.push_back(restriction(frame, block).frame);
  return out;
}

Frame disjoint_sum(const std::vector<Frame>& frames) {
  if (frames.empty()) return Frame(Alphabet::none(), 0);
  const Alphabet& alphabet = frames.front().alphabet();
  std::size_t total = 0;
  for (const auto& f : frames) {
    if (f.alphabet() != alphabet) throw InvalidInput("disjoint sum of frames over different alphabets");
    total += f.size();
  }
  std::vector<Relation> rels(alphabet.size(), Relation(total));
  std::size_t offset = 0;
  for (const auto& f : frames) {
    for (std::size_t d = 0; d < alphabet.size(); ++d) {
      for (auto [a, b] : f.relation(d).pairs()) rels[d].add(offset + a, offset + b);
    }
    offset += f.size();
  }
  return Frame(alphabet, total, std::move(rels));
}

Frame lex_sum(const Frame& index, const std::vector<Frame>& fibers) {
  if (fibers.size() != index.size()) {
    throw InvalidInput("lexicographic sum needs one fiber per index point (" + std::to_string(index.size()) +
                       "), got " + std::to_string(fibers.size()));
  }
  const Alphabet& vertical = index.alphabet();
  Alphabet horizontal = fibers.empty() ? Alphabet::none() : fibers.front().alphabet();
  for (const auto& f : fibers) {
    if (f.alphabet() != horizontal) throw InvalidInput("lexicographic sum fibers over different alphabets");
  }
  std::vector<std::string> names = vertical.names();
  for (const auto& name : horizontal.names()) {
    if (vertical.find(name)) throw InvalidInput("vertical and horizontal alphabets overlap at '" + name + "'");
    names.push_back(name);
  }
  Alphabet combined = names.empty() ? Alphabet::none() : Alphabet(names);

  std::vector<std::size_t> offset(fibers.size() + 1, 0);
  for (std::size_t i = 0; i < fibers.size(); ++i) offset[i + 1] = offset[i] + fibers[i].size();
  const std::size_t total = offset.back();

  std::vector<Relation> rels(combined.size(), Relation(total));
  for (std::size_t v = 0; v < vertical.size(); ++v) {
    for (auto [i, j] : index.relation(v).pairs()) {
      for (std::size_t a = offset[i]; a < offset[i + 1]; ++a) {
        for (std::size_t b = offset[j]; b < offset[j + 1]; ++b) rels[v].add(a, b);
      }
    }
  }
  for (std::size_t h = 0; h < horizontal.size(); ++h) {
    for (std::size_t i = 0; i < fibers.size(); ++i) {
      for (auto [a, b] : fibers[i].relation(h).pairs()) rels[vertical.size() + h].add(offset[i] + a, offset[i] + b);
    }
  }
  return Frame(std::move(combined), total, std::move(rels));
}

Frame expand(const Frame& frame, Expansion kind, const std::string& name) {
  Alphabet alphabet = frame.alphabet().with(name);
  std::vector<Relation> rels = frame.relations();
  const std::size_t n = frame.size();
  Relation extra = Relation::full(n);
  if (kind == Expansion::difference) {
    extra = Relation(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) extra.add(a, b);
      }
    }
  }
  rels.push_back(std::move(extra));
  return Frame(std::move(alphabet), n, std::move(rels));
}

Quotient quotient_filtration(const Frame& frame, const Partition& partition) {
  if (partition.universe() != frame.size()) throw InvalidInput("partition over a different universe");
  const std::size_t blocks = partition.block_count();
  std::vector<Relation> rels(frame.modality_count(), Relation(blocks));
  for (std::size_t d = 0; d < frame.modality_count(); ++d) {
    for (auto [a, b] : frame.relation(d).pairs()) rels[d].add(partition.block_of(a), partition.block_of(b));
  }
  Quotient q{Frame(frame.alphabet(), blocks, std::move(rels)), std::vector<std::size_t>(frame.size())};
  for (std::size_t a = 0; a < frame.size(); ++a) q.projection[a] = partition.block_of(a);
  return q;
}

bool is_pmorphism(const Frame& from, const Frame& to, const std::vector<std::size_t>& map) {
  if (from.alphabet() != to.alphabet()) throw InvalidInput("p-morphism between frames over different alphabets");
  if (map.size() != from.size()) throw InvalidInput("p-morphism map is not total on the source frame");
  for (std::size_t image : map) {
    if (image >= to.size()) throw InvalidInput("p-morphism map leaves the target frame");
  }
  for (std::size_t d = 0; d < from.modality_count(); ++d) {
    const Relation& r = from.relation(d);
    const Relation& s = to.relation(d);
    for (std::size_t a = 0; a < from.size(); ++a) {
      PointSet reached(to.size());
      bool forth = true;
      r.successors(a).for_each([&](std::size_t b) {
        reached.insert(map[b]);
        if (!s.contains(map[a], map[b])) forth = false;
      });
      if (!forth) return false;
      // Back: every successor of the image is the image of a successor.
      if (!s.successors(map[a]).is_subset_of(reached)) return false;
    }
  }
  return true;
}

}  // namespace modalwb
