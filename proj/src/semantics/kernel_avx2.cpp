// Compiled with -mavx2. Only intrinsics and builtins are used here so that no inline
// library function gets an AVX2 body that the linker could pick for other translation units.

#include "kernel.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace modalwb::detail {

namespace {

struct Ymm {
  using type = __m256i;
  static constexpr std::size_t log2_width = 8;

  static type zero() { return _mm256_setzero_si256(); }
  static type ones() { return _mm256_set1_epi64x(-1); }
  static type prefix(std::uint64_t lanes) {
    long long w[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t lo = static_cast<std::uint64_t>(i) * 64;
      if (lanes >= lo + 64) {
        w[i] = -1;
      } else if (lanes > lo) {
        w[i] = static_cast<long long>((std::uint64_t{1} << (lanes - lo)) - 1);
      }
    }
    return _mm256_set_epi64x(w[3], w[2], w[1], w[0]);
  }
  static type pattern(std::size_t bit) {
    static const long long kLow[6] = {
        static_cast<long long>(0xAAAAAAAAAAAAAAAAULL), static_cast<long long>(0xCCCCCCCCCCCCCCCCULL),
        static_cast<long long>(0xF0F0F0F0F0F0F0F0ULL), static_cast<long long>(0xFF00FF00FF00FF00ULL),
        static_cast<long long>(0xFFFF0000FFFF0000ULL), static_cast<long long>(0xFFFFFFFF00000000ULL),
    };
    if (bit < 6) return _mm256_set1_epi64x(kLow[bit]);
    if (bit == 6) return _mm256_set_epi64x(-1, 0, -1, 0);
    return _mm256_set_epi64x(-1, -1, 0, 0);
  }
  static type bnot(type x) { return _mm256_xor_si256(x, ones()); }
  static type band(type x, type y) { return _mm256_and_si256(x, y); }
  static type bor(type x, type y) { return _mm256_or_si256(x, y); }
  static bool first_set(type x, std::uint64_t* lane) {
    if (_mm256_testz_si256(x, x) != 0) return false;
    alignas(32) unsigned long long w[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(w), x);
    for (int i = 0; i < 4; ++i) {
      if (w[i] != 0) {
        *lane = static_cast<std::uint64_t>(i) * 64 + static_cast<std::uint64_t>(__builtin_ctzll(w[i]));
        return true;
      }
    }
    return false;
  }
};

}  // namespace

bool first_falsifying_avx2(const KernelProgram& program, std::uint64_t* scratch, std::uint64_t* index) {
  // scratch is 32-byte aligned by the caller.
  return run_batches<Ymm>(program, reinterpret_cast<__m256i*>(scratch), index);
}

bool cpu_has_avx2() noexcept { return __builtin_cpu_supports("avx2") != 0; }

}  // namespace modalwb::detail

#else

namespace modalwb::detail {

bool first_falsifying_avx2(const KernelProgram& program, std::uint64_t* scratch, std::uint64_t* index) {
  return first_falsifying_portable(program, scratch, index);
}

bool cpu_has_avx2() noexcept { return false; }

}  // namespace modalwb::detail

#endif
