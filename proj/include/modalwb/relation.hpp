#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "modalwb/point_set.hpp"

namespace modalwb {

/// A binary relation on {0, ..., n-1}, stored as successor and predecessor rows.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);
  static Relation from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const noexcept { return n_; }

  void add(std::size_t from, std::size_t to);
  bool contains(std::size_t from, std::size_t to) const noexcept {
    return from < n_ && successors_[from].contains(to);
  }

  const PointSet& successors(std::size_t point) const { return successors_.at(point); }
  const PointSet& predecessors(std::size_t point) const { return predecessors_.at(point); }

  /// R[V]
  PointSet image(const PointSet& points) const;
  /// R^{-1}[V] = { a : a R b for some b in V }
  PointSet preimage(const PointSet& points) const;

  /// Relational composition in diagrammatic order: a (this ; next) c iff a this b next c.
  Relation then(const Relation& next) const;

  Relation& operator|=(const Relation& other);
  friend Relation operator|(Relation lhs, const Relation& rhs) { return lhs |= rhs; }
  Relation intersect(const Relation& other) const;
  bool is_subset_of(const Relation& other) const;

  std::size_t edge_count() const noexcept;
  bool empty() const noexcept { return edge_count() == 0; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// Restriction to the points of `keep`, renumbered in ascending order.
  Relation restrict_to(const std::vector<std::size_t>& keep) const;

  bool operator==(const Relation& other) const { return n_ == other.n_ && successors_ == other.successors_; }

 private:
  std::size_t n_ = 0;
  std::vector<PointSet> successors_;
  std::vector<PointSet> predecessors_;
};

/// Smallest reflexive transitive relation containing `r`.
Relation rt_closure(const Relation& r);
/// Smallest transitive relation containing `r`.
Relation transitive_closure(const Relation& r);
/// R^{<=m}: identity plus every power up to m.
Relation power_upto(const Relation& r, std::size_t m);
/// R^k (R^0 is the identity).
Relation power(const Relation& r, std::size_t k);

}  // namespace modalwb
