#include "modalwb/relation.hpp"

#include <string>

#include "modalwb/error.hpp"

namespace modalwb {

Relation::Relation(std::size_t n)
    : n_(n), successors_(n, PointSet(n)), predecessors_(n, PointSet(n)) {}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a) r.add(a, a);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a) {
    r.successors_[a] = PointSet::full(n);
    r.predecessors_[a] = PointSet::full(n);
  }
  return r;
}

Relation Relation::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r(n);
  for (auto [a, b] : pairs) r.add(a, b);
  return r;
}

void Relation::add(std::size_t from, std::size_t to) {
  if (from >= n_ || to >= n_) {
    throw InvalidInput("edge (" + std::to_string(from) + "," + std::to_string(to) +
                       ") out of range for " + std::to_string(n_) + " points");
  }
  successors_[from].insert(to);
  predecessors_[to].insert(from);
}

PointSet Relation::image(const PointSet& points) const {
  PointSet out(n_);
  points.for_each([&](std::size_t a) { out |= successors_[a]; });
  return out;
}

PointSet Relation::preimage(const PointSet& points) const {
  PointSet out(n_);
  points.for_each([&](std::size_t b) { out |= predecessors_[b]; });
  return out;
}

Relation Relation::then(const Relation& next) const {
  if (n_ != next.n_) throw InvalidInput("composing relations over different point counts");
  Relation out(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    next.image(successors_[a]).for_each([&](std::size_t c) { out.add(a, c); });
  }
  return out;
}

Relation& Relation::operator|=(const Relation& other) {
  if (n_ != other.n_) throw InvalidInput("union of relations over different point counts");
  for (std::size_t a = 0; a < n_; ++a) {
    successors_[a] |= other.successors_[a];
    predecessors_[a] |= other.predecessors_[a];
  }
  return *this;
}

Relation Relation::intersect(const Relation& other) const {
  if (n_ != other.n_) throw InvalidInput("intersection of relations over different point counts");
  Relation out(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    (successors_[a] & other.successors_[a]).for_each([&](std::size_t b) { out.add(a, b); });
  }
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t a = 0; a < n_; ++a) {
    if (!successors_[a].is_subset_of(other.successors_[a])) return false;
  }
  return true;
}

std::size_t Relation::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& row : successors_) total += row.count();
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a) {
    successors_[a].for_each([&](std::size_t b) { out.emplace_back(a, b); });
  }
  return out;
}

Relation Relation::restrict_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> index(n_, n_);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n_) throw InvalidInput("restriction point out of range");
    index[keep[i]] = i;
  }
  Relation out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    successors_[keep[i]].for_each([&](std::size_t b) {
      if (index[b] != n_) out.add(i, index[b]);
    });
  }
  return out;
}

Relation transitive_closure(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<PointSet> rows(n);
  for (std::size_t a = 0; a < n; ++a) rows[a] = r.successors(a);
  // Warshall over bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].contains(k)) rows[a] |= rows[k];
    }
  }
  Relation out(n);
  for (std::size_t a = 0; a < n; ++a) rows[a].for_each([&](std::size_t b) { out.add(a, b); });
  return out;
}

Relation rt_closure(const Relation& r) { return transitive_closure(r) | Relation::identity(r.size()); }

Relation power(const Relation& r, std::size_t k) {
  Relation out = Relation::identity(r.size());
  for (std::size_t i = 0; i < k; ++i) out = out.then(r);
  return out;
}

Relation power_upto(const Relation& r, std::size_t m) {
  Relation step = Relation::identity(r.size());
  Relation out = step;
  for (std::size_t i = 0; i < m; ++i) {
    step = step.then(r);
    out |= step;
  }
  return out;
}

}  // namespace modalwb
