#include "kernel.hpp"

namespace modalwb::detail {

namespace {

struct Word {
  using type = std::uint64_t;
  static constexpr std::size_t log2_width = 6;
  static constexpr std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
  };
  static type zero() { return 0; }
  static type ones() { return ~std::uint64_t{0}; }
  static type prefix(std::uint64_t lanes) { return (std::uint64_t{1} << lanes) - 1; }
  static type pattern(std::size_t bit) { return kPatterns[bit]; }
  static type bnot(type x) { return ~x; }
  static type band(type x, type y) { return x & y; }
  static type bor(type x, type y) { return x | y; }
  static bool first_set(type x, std::uint64_t* lane) {
    if (x == 0) return false;
    *lane = static_cast<std::uint64_t>(__builtin_ctzll(x));
    return true;
  }
};

}  // namespace

bool first_falsifying_portable(const KernelProgram& program, std::uint64_t* scratch, std::uint64_t* index) {
  return run_batches<Word>(program, scratch, index);
}

}  // namespace modalwb::detail
