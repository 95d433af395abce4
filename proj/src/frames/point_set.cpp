#include "modalwb/point_set.hpp"

#include "modalwb/error.hpp"

namespace modalwb {

PointSet::PointSet(std::size_t universe, std::initializer_list<std::size_t> points)
    : PointSet(universe) {
  for (std::size_t p : points) insert(p);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

PointSet PointSet::from_vector(std::size_t universe, std::span<const std::size_t> points) {
  PointSet s(universe);
  for (std::size_t p : points) s.insert(p);
  return s;
}

void PointSet::insert(std::size_t point) {
  if (point >= universe_) {
    throw InvalidInput("point " + std::to_string(point) + " out of range for " +
                       std::to_string(universe_) + " points");
  }
  words_[point >> 6] |= std::uint64_t{1} << (point & 63);
}

void PointSet::erase(std::size_t point) {
  if (point < universe_) words_[point >> 6] &= ~(std::uint64_t{1} << (point & 63));
}

std::size_t PointSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool PointSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void PointSet::check_universe(const PointSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidInput("point sets over different universes (" + std::to_string(universe_) +
                       " vs " + std::to_string(other.universe_) + ")");
  }
}

bool PointSet::intersects(const PointSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool PointSet::is_subset_of(const PointSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

PointSet PointSet::complement() const { return full(universe_) - *this; }

PointSet& PointSet::operator|=(const PointSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet& PointSet::operator-=(const PointSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::optional<std::size_t> PointSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> PointSet::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t p) { out.push_back(p); });
  return out;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for_each([&](std::size_t p) {
    if (!first_item) out += ',';
    out += std::to_string(p);
    first_item = false;
  });
  return out + "}";
}

std::strong_ordering PointSet::operator<=>(const PointSet& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  // Order by members ascending: the set whose smallest differing point is a member sorts first.
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      return (words_[i] & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace modalwb
