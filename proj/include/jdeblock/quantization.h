#ifndef JDEBLOCK_QUANTIZATION_H_
#define JDEBLOCK_QUANTIZATION_H_

#include <array>
#include <cstdint>

#include "jdeblock/block_transform.h"

namespace jdeblock {

// Compression quality in [1, 100]; lower is coarser.
class QualityFactor {
 public:
  // Throws DomainError outside [1, 100].
  explicit QualityFactor(int q);
  int value() const { return q_; }

  friend auto operator<=>(const QualityFactor&, const QualityFactor&) = default;

 private:
  int q_;
};

// Annex K luminance table, row-major (row = vertical frequency).
inline constexpr std::array<int, kBlockArea> kBaseLuminanceTable = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

// Step sizes in [1, 255], indexed like CoeffBlock.
struct QuantMatrix {
  std::array<int, kBlockArea> steps{};

  int at(int u, int v) const { return steps[v * kBlockSize + u]; }

  friend bool operator==(const QuantMatrix&, const QuantMatrix&) = default;
};

// Quantization indices, indexed like CoeffBlock.
struct QuantizedBlock {
  std::array<int, kBlockArea> levels{};

  int at(int u, int v) const { return levels[v * kBlockSize + u]; }
  int& at(int u, int v) { return levels[v * kBlockSize + u]; }

  friend bool operator==(const QuantizedBlock&, const QuantizedBlock&) = default;
};

// Quality scaling: scale = q < 50 ? 5000 / q : 200 - 2q (integer division),
// step = clamp((base * scale + 50) / 100, 1, 255).
QuantMatrix build_quant_matrix(QualityFactor quality);

// level = round_half_away_from_zero(C / step).
QuantizedBlock quantize_block(const CoeffBlock& coeffs, const QuantMatrix& qm);

// C' = level * step.
CoeffBlock dequantize_block(const QuantizedBlock& levels, const QuantMatrix& qm);

// Zig-zag position -> row-major index. Position 1 is row 0, column 1.
inline constexpr std::array<int, kBlockArea> kZigzagOrder = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63,
};

std::array<int, kBlockArea> zigzag_scan(const QuantizedBlock& block);
QuantizedBlock inverse_zigzag(const std::array<int, kBlockArea>& sequence);

}  // namespace jdeblock

#endif  // JDEBLOCK_QUANTIZATION_H_
