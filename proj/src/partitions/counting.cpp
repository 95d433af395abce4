#include <string>

#include "modalwb/error.hpp"
#include "modalwb/partitions.hpp"

namespace modalwb {

std::optional<std::uint64_t> AlgebraSize::value() const {
  if (atoms >= 64) return std::nullopt;
  return std::uint64_t{1} << atoms;
}

std::string AlgebraSize::to_string() const {
  // Little-endian decimal digits, doubled `atoms` times.
  std::vector<int> digits{1};
  for (std::size_t i = 0; i < atoms; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      const int v = d * 2 + carry;
      d = v % 10;
      carry = v / 10;
    }
    if (carry != 0) digits.push_back(carry);
  }
  std::string out;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out += static_cast<char>('0' + *it);
  return out;
}

AlgebraSize subalgebra_size(const Frame& frame, const std::vector<PointSet>& generators) {
  const Partition seed = induced_partition(frame.size(), generators);
  return AlgebraSize{coarsest_tuned_refinement(frame, seed).block_count()};
}

AlgebraSize count_k_formulas(const Frame& frame, std::size_t k, std::uint64_t cap) {
  const std::size_t n = frame.size();
  const std::size_t bits = n * k;
  if (bits >= 63 || (std::uint64_t{1} << bits) > cap) {
    throw CapExceeded("counting " + std::to_string(k) + "-formulas needs 2^" + std::to_string(bits) +
                      " valuation copies, cap is " + std::to_string(cap));
  }
  const std::uint64_t copies = std::uint64_t{1} << bits;
  // One copy of the frame per k-valuation; copy c puts variable l at point a iff bit l*n+a of c.
  const Frame sum = disjoint_sum(std::vector<Frame>(copies, frame));
  std::vector<PointSet> generators(k, PointSet(sum.size()));
  for (std::uint64_t c = 0; c < copies; ++c) {
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t a = 0; a < n; ++a) {
        if (((c >> (l * n + a)) & 1U) != 0) generators[l].insert(c * n + a);
      }
    }
  }
  return subalgebra_size(sum, generators);
}

}  // namespace modalwb
