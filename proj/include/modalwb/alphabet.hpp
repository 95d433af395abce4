#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace modalwb {

/// Index of a modality within an alphabet.
using ModalityId = std::size_t;
/// A subset of an alphabet, as sorted distinct modality ids.
using ModalitySet = std::vector<ModalityId>;

/// Ordered, duplicate-free list of diamond names; the position of a name is its modality id.
class Alphabet {
 public:
  Alphabet() = default;
  /// Names must be nonempty identifiers ([A-Za-z0-9_]+) and pairwise distinct.
  /// An empty list is accepted only through `Alphabet::none()`.
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names) : Alphabet(std::vector<std::string>(names)) {}

  /// The zero-modality alphabet (classical propositional logic).
  static Alphabet none();
  /// d0, d1, ..., d{count-1}
  static Alphabet numbered(std::size_t count, const std::string& prefix = "d");

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(ModalityId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ModalityId> find(const std::string& name) const;

  /// Every modality id, in order.
  ModalitySet all() const;
  /// A copy with `name` appended; throws on a clash.
  Alphabet with(const std::string& name) const;

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> names_;
};

/// Sorts, deduplicates and range-checks a modality subset.
ModalitySet normalize_modalities(ModalitySet subset, std::size_t alphabet_size);

}  // namespace modalwb
