#ifndef JDEBLOCK_BLOCK_TRANSFORM_H_
#define JDEBLOCK_BLOCK_TRANSFORM_H_

#include <array>
#include <cstdint>
#include <vector>

#include "jdeblock/image_io.h"

namespace jdeblock {

inline constexpr int kBlockSize = 8;
inline constexpr int kBlockArea = kBlockSize * kBlockSize;

// Level-shifted samples of one 8x8 tile, row-major: samples[y * 8 + x],
// each in [-128, 127].
struct PixelBlock {
  std::array<int16_t, kBlockArea> samples{};

  int16_t at(int x, int y) const { return samples[y * kBlockSize + x]; }
  int16_t& at(int x, int y) { return samples[y * kBlockSize + x]; }

  friend bool operator==(const PixelBlock&, const PixelBlock&) = default;
};

// 2-D DCT coefficients of one tile. coeffs[v * 8 + u] holds C(u, v), where u
// is the horizontal frequency and v the vertical one; index 0 is DC.
struct CoeffBlock {
  std::array<double, kBlockArea> coeffs{};

  double at(int u, int v) const { return coeffs[v * kBlockSize + u]; }
  double& at(int u, int v) { return coeffs[v * kBlockSize + u]; }
};

// Row-major grid of tiles covering an image, padded up to whole blocks.
template <typename Block>
struct BlockGrid {
  int blocks_w = 0;
  int blocks_h = 0;
  int orig_w = 0;
  int orig_h = 0;
  std::vector<Block> blocks;

  BlockGrid() = default;
  BlockGrid(int width, int height)
      : blocks_w((width + kBlockSize - 1) / kBlockSize),
        blocks_h((height + kBlockSize - 1) / kBlockSize),
        orig_w(width),
        orig_h(height),
        blocks(static_cast<std::size_t>(blocks_w) * blocks_h) {}

  const Block& at(int bx, int by) const { return blocks[by * blocks_w + bx]; }
  Block& at(int bx, int by) { return blocks[by * blocks_w + bx]; }
};

// Splits an image into level-shifted tiles. Partial tiles on the right and
// bottom are filled by replicating the last column and row.
BlockGrid<PixelBlock> tile_blocks(const GrayImage& image);

// Inverse of tile_blocks: +128, clamp to [0, 255], crop the padding.
GrayImage assemble_blocks(const BlockGrid<PixelBlock>& grid);

// Orthonormal 2-D DCT-II.
CoeffBlock dct2d(const PixelBlock& block);

// Orthonormal 2-D DCT-III without rounding. Result is row-major like
// PixelBlock.
std::array<double, kBlockArea> idct2d_real(const CoeffBlock& coeffs);

// idct2d_real rounded half away from zero and clamped to [-128, 127].
PixelBlock idct2d(const CoeffBlock& coeffs);

}  // namespace jdeblock

#endif  // JDEBLOCK_BLOCK_TRANSFORM_H_
