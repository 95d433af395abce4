#pragma once

// Bit-sliced validity evaluation. A batch evaluates a compiled formula under W consecutive
// valuations at once: each register holds, per point, one bit per valuation in the batch.
//
// Valuation number v assigns variable slot s at point a the bit (s * n + a) of v. Inside a
// batch of width W = 2^w starting at a multiple of W, bits below w follow a fixed lane
// pattern and bits from w upwards are constant.

#include <cstddef>
#include <cstdint>

namespace modalwb::detail {

enum class OpCode : std::uint8_t { zero, one, var, neg, conj, disj, impl, dia };

struct Op {
  OpCode code;
  std::uint32_t a;  // operand register, or the first valuation bit of a variable slot
  std::uint32_t b;  // second operand register, or the modality of a diamond
};

struct KernelProgram {
  std::size_t points = 0;
  std::size_t total_bits = 0;  // slots * points, below 64
  const Op* ops = nullptr;     // operands precede their users; the last op is the root
  std::size_t op_count = 0;
  const std::uint32_t* succ_offsets = nullptr;  // (modality * points + point) -> range start
  const std::uint32_t* succ = nullptr;
};

/// Registers needed: op_count * points lanes of 64 bits.
bool first_falsifying_portable(const KernelProgram& program, std::uint64_t* scratch, std::uint64_t* index);
/// Registers needed: op_count * points lanes of 256 bits (4 words each).
bool first_falsifying_avx2(const KernelProgram& program, std::uint64_t* scratch, std::uint64_t* index);
bool cpu_has_avx2() noexcept;

/// Shared batch loop. `Lane` supplies the register type and its Boolean operations.
template <class Lane>
bool run_batches(const KernelProgram& prog, typename Lane::type* regs, std::uint64_t* index) {
  using T = typename Lane::type;
  const std::size_t n = prog.points;
  const std::uint64_t total = std::uint64_t{1} << prog.total_bits;
  const std::uint64_t width = std::uint64_t{1} << Lane::log2_width;
  const std::uint64_t batches = (total + width - 1) / width;
  const T active = total >= width ? Lane::ones() : Lane::prefix(total);
  const T* root = regs + (prog.op_count - 1) * n;

  for (std::uint64_t batch = 0; batch < batches; ++batch) {
    const std::uint64_t base = batch * width;
    for (std::size_t i = 0; i < prog.op_count; ++i) {
      const Op& op = prog.ops[i];
      T* out = regs + i * n;
      const T* x = regs + static_cast<std::size_t>(op.a) * n;
      const T* y = regs + static_cast<std::size_t>(op.b) * n;
      switch (op.code) {
        case OpCode::zero:
          for (std::size_t p = 0; p < n; ++p) out[p] = Lane::zero();
          break;
        case OpCode::one:
          for (std::size_t p = 0; p < n; ++p) out[p] = Lane::ones();
          break;
        case OpCode::var:
          for (std::size_t p = 0; p < n; ++p) {
            const std::size_t bit = op.a + p;
            if (bit < Lane::log2_width) {
              out[p] = Lane::pattern(bit);
            } else {
              out[p] = ((base >> bit) & 1U) != 0 ? Lane::ones() : Lane::zero();
            }
          }
          break;
        case OpCode::neg:
          for (std::size_t p = 0; p < n; ++p) out[p] = Lane::bnot(x[p]);
          break;
        case OpCode::conj:
          for (std::size_t p = 0; p < n; ++p) out[p] = Lane::band(x[p], y[p]);
          break;
        case OpCode::disj:
          for (std::size_t p = 0; p < n; ++p) out[p] = Lane::bor(x[p], y[p]);
          break;
        case OpCode::impl:
          for (std::size_t p = 0; p < n; ++p) out[p] = Lane::bor(Lane::bnot(x[p]), y[p]);
          break;
        case OpCode::dia: {
          const std::uint32_t* offsets = prog.succ_offsets + static_cast<std::size_t>(op.b) * n;
          for (std::size_t p = 0; p < n; ++p) {
            T acc = Lane::zero();
            for (std::uint32_t k = offsets[p]; k < offsets[p + 1]; ++k) acc = Lane::bor(acc, x[prog.succ[k]]);
            out[p] = acc;
          }
          break;
        }
      }
    }
    T all = Lane::ones();
    for (std::size_t p = 0; p < n; ++p) all = Lane::band(all, root[p]);
    const T failing = Lane::band(active, Lane::bnot(all));
    std::uint64_t lane = 0;
    if (Lane::first_set(failing, &lane)) {
      *index = base + lane;
      return true;
    }
  }
  return false;
}

}  // namespace modalwb::detail
