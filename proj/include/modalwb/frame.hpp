#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "modalwb/alphabet.hpp"
#include "modalwb/partition.hpp"
#include "modalwb/point_set.hpp"
#include "modalwb/relation.hpp"

namespace modalwb {

/// A finite Kripke frame: n points and one relation per modality of the alphabet.
/// The empty frame (n = 0) is legal.
class Frame {
 public:
  Frame() = default;
  /// A frame with empty relations.
  Frame(Alphabet alphabet, std::size_t points);
  Frame(Alphabet alphabet, std::vector<Relation> relations);
  /// n points; relations must all be over n points (needed when the alphabet is empty).
  Frame(Alphabet alphabet, std::size_t points, std::vector<Relation> relations);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return points_; }
  std::size_t modality_count() const noexcept { return relations_.size(); }
  const Relation& relation(ModalityId id) const { return relations_.at(id); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  bool operator==(const Frame& other) const = default;

 private:
  Alphabet alphabet_;
  std::size_t points_ = 0;
  std::vector<Relation> relations_;
};

/// The condensation of a frame: clusters and the strict order between them.
struct SkeletonPoset {
  /// Clusters in ascending order of their least point.
  Partition clusters;
  /// below[i] holds j iff cluster i strictly precedes cluster j.
  std::vector<PointSet> below;
};

/// A frame restricted to a subset of points, with the original index of every new point.
struct Restriction {
  Frame frame;
  std::vector<std::size_t> points;
};

struct Quotient {
  Frame frame;
  /// Canonical projection: point -> block index.
  std::vector<std::size_t> projection;
};

enum class Expansion { universal, difference };

/// R_F, the union of all relations.
Relation union_relation(const Frame& frame);
/// Union of the relations named by `subset`.
Relation union_relation(const Frame& frame, const ModalitySet& subset);

/// Least m with R_F^{m+1} contained in R_F^{<=m}.
std::size_t transitivity_index(const Frame& frame);
bool is_m_transitive(const Frame& frame, std::size_t m);

SkeletonPoset skeleton(const Frame& frame);
/// Number of clusters in the longest chain of the skeleton; 0 for the empty frame.
std::size_t height(const Frame& frame);

inline constexpr std::uint64_t kDefaultPathBudget = 1'000'000;

/// Every R_F path x_0 ... x_{m+1} repeats a point or has a shortcut x_i R x_{j+1} (i < j).
/// Throws BudgetExceeded when more than `budget` path prefixes are visited.
bool is_path_reducible(const Frame& frame, std::size_t m, std::uint64_t budget = kDefaultPathBudget);

Restriction restriction(const Frame& frame, const PointSet& points);
/// R[Y] is contained in Y for every relation.
bool is_upset(const Frame& frame, const PointSet& points);
/// Closure of Y under R_F*.
PointSet generated_upset(const Frame& frame, const PointSet& points);
/// Union of the clusters that no other cluster precedes.
PointSet min_part(const Frame& frame);
/// The restriction to each cluster, in cluster order.
std::vector<Frame> cluster_frames(const Frame& frame);

Frame disjoint_sum(const std::vector<Frame>& frames);
/// `index` ranges over the vertical alphabet, every fiber over the (disjoint) horizontal alphabet.
/// The result's alphabet is vertical followed by horizontal names; points are ordered by fiber.
Frame lex_sum(const Frame& index, const std::vector<Frame>& fibers);
/// Adds a modality interpreted as the universal relation or as inequality.
Frame expand(const Frame& frame, Expansion kind, const std::string& name);

/// Minimal filtration through a partition, with the canonical projection.
Quotient quotient_filtration(const Frame& frame, const Partition& partition);
/// Forth and back conditions for every modality (surjectivity is not required).
bool is_pmorphism(const Frame& from, const Frame& to, const std::vector<std::size_t>& map);

}  // namespace modalwb
