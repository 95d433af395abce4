#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modalwb {

/// A subset of the points {0, ..., universe-1} of a finite frame.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  PointSet(std::size_t universe, std::initializer_list<std::size_t> points);

  static PointSet full(std::size_t universe);
  static PointSet from_vector(std::size_t universe, std::span<const std::size_t> points);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t point) const noexcept {
    return point < universe_ && ((words_[point >> 6] >> (point & 63)) & 1U) != 0;
  }
  void insert(std::size_t point);
  void erase(std::size_t point);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool intersects(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;

  PointSet complement() const;
  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);
  friend PointSet operator|(PointSet lhs, const PointSet& rhs) { return lhs |= rhs; }
  friend PointSet operator&(PointSet lhs, const PointSet& rhs) { return lhs &= rhs; }
  friend PointSet operator-(PointSet lhs, const PointSet& rhs) { return lhs -= rhs; }

  /// Smallest member, if any.
  std::optional<std::size_t> first() const noexcept;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// "{0,2,5}"
  std::string to_string() const;

  bool operator==(const PointSet& other) const = default;
  std::strong_ordering operator<=>(const PointSet& other) const;

 private:
  void check_universe(const PointSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace modalwb
