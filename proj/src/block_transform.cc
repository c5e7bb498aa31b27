#include "jdeblock/block_transform.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jdeblock {
namespace {

// basis[k][n] = alpha(k) * cos((2n + 1) k pi / 16). Rows are orthonormal.
struct DctBasis {
  double m[kBlockSize][kBlockSize];

  DctBasis() {
    for (int k = 0; k < kBlockSize; ++k) {
      const double alpha = k == 0 ? std::sqrt(1.0 / kBlockSize)
                                  : std::sqrt(2.0 / kBlockSize);
      for (int n = 0; n < kBlockSize; ++n) {
        m[k][n] = alpha * std::cos((2 * n + 1) * k * std::numbers::pi /
                                   (2.0 * kBlockSize));
      }
    }
  }
};

const DctBasis& Basis() {
  static const DctBasis basis;
  return basis;
}

}  // namespace

BlockGrid<PixelBlock> tile_blocks(const GrayImage& image) {
  BlockGrid<PixelBlock> grid(image.width(), image.height());
  const int last_x = image.width() - 1;
  const int last_y = image.height() - 1;
  for (int by = 0; by < grid.blocks_h; ++by) {
    for (int bx = 0; bx < grid.blocks_w; ++bx) {
      PixelBlock& block = grid.at(bx, by);
      for (int y = 0; y < kBlockSize; ++y) {
        const int sy = std::min(by * kBlockSize + y, last_y);
        for (int x = 0; x < kBlockSize; ++x) {
          const int sx = std::min(bx * kBlockSize + x, last_x);
          block.at(x, y) = static_cast<int16_t>(image.at(sx, sy) - 128);
        }
      }
    }
  }
  return grid;
}

GrayImage assemble_blocks(const BlockGrid<PixelBlock>& grid) {
  GrayImage image(grid.orig_w, grid.orig_h);
  for (int y = 0; y < grid.orig_h; ++y) {
    for (int x = 0; x < grid.orig_w; ++x) {
      const int s = grid.at(x / kBlockSize, y / kBlockSize)
                        .at(x % kBlockSize, y % kBlockSize);
      image.at(x, y) = static_cast<uint8_t>(std::clamp(s + 128, 0, 255));
    }
  }
  return image;
}

CoeffBlock dct2d(const PixelBlock& block) {
  const auto& b = Basis().m;
  // Rows first: tmp[y][u] = sum_x s(x, y) basis[u][x].
  double tmp[kBlockSize][kBlockSize];
  for (int y = 0; y < kBlockSize; ++y) {
    for (int u = 0; u < kBlockSize; ++u) {
      double acc = 0.0;
      for (int x = 0; x < kBlockSize; ++x) acc += block.at(x, y) * b[u][x];
      tmp[y][u] = acc;
    }
  }
  CoeffBlock out;
  for (int v = 0; v < kBlockSize; ++v) {
    for (int u = 0; u < kBlockSize; ++u) {
      double acc = 0.0;
      for (int y = 0; y < kBlockSize; ++y) acc += tmp[y][u] * b[v][y];
      out.at(u, v) = acc;
    }
  }
  return out;
}

std::array<double, kBlockArea> idct2d_real(const CoeffBlock& coeffs) {
  const auto& b = Basis().m;
  // tmp[y][u] = sum_v C(u, v) basis[v][y].
  double tmp[kBlockSize][kBlockSize];
  for (int y = 0; y < kBlockSize; ++y) {
    for (int u = 0; u < kBlockSize; ++u) {
      double acc = 0.0;
      for (int v = 0; v < kBlockSize; ++v) acc += coeffs.at(u, v) * b[v][y];
      tmp[y][u] = acc;
    }
  }
  std::array<double, kBlockArea> out{};
  for (int y = 0; y < kBlockSize; ++y) {
    for (int x = 0; x < kBlockSize; ++x) {
      double acc = 0.0;
      for (int u = 0; u < kBlockSize; ++u) acc += tmp[y][u] * b[u][x];
      out[y * kBlockSize + x] = acc;
    }
  }
  return out;
}

PixelBlock idct2d(const CoeffBlock& coeffs) {
  const auto real = idct2d_real(coeffs);
  PixelBlock out;
  for (int i = 0; i < kBlockArea; ++i) {
    // std::round ties away from zero.
    out.samples[i] = static_cast<int16_t>(
        std::clamp(std::round(real[i]), -128.0, 127.0));
  }
  return out;
}

}  // namespace jdeblock
