#include "modalwb/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "modalwb/error.hpp"

namespace modalwb {

namespace {

void check_name(const std::string& name) {
  if (name.empty()) throw InvalidInput("empty modality name");
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') {
      throw InvalidInput("modality name '" + name + "' contains '" + std::string(1, c) + "'");
    }
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidInput("alphabet must be nonempty (use Alphabet::none())");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    check_name(names_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidInput("duplicate modality name '" + names_[i] + "'");
    }
  }
}

Alphabet Alphabet::none() { return Alphabet(); }

Alphabet Alphabet::numbered(std::size_t count, const std::string& prefix) {
  if (count == 0) return none();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<ModalityId> Alphabet::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ModalityId>(it - names_.begin());
}

ModalitySet Alphabet::all() const {
  ModalitySet out(names_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

Alphabet Alphabet::with(const std::string& name) const {
  check_name(name);
  if (find(name)) throw InvalidInput("modality name '" + name + "' already in alphabet");
  auto names = names_;
  names.push_back(name);
  return Alphabet(std::move(names));
}

ModalitySet normalize_modalities(ModalitySet subset, std::size_t alphabet_size) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (!subset.empty() && subset.back() >= alphabet_size) {
    throw InvalidInput("modality id " + std::to_string(subset.back()) + " out of range for alphabet of size " +
                       std::to_string(alphabet_size));
  }
  return subset;
}

}  // namespace modalwb
