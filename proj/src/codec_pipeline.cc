#include "jdeblock/codec_pipeline.h"

#include <cstddef>

#include "jdeblock/block_transform.h"

namespace jdeblock {

BlockGrid<QuantizedBlock> quantize_image(const GrayImage& image,
                                         const QuantMatrix& qm) {
  const BlockGrid<PixelBlock> tiles = tile_blocks(image);
  BlockGrid<QuantizedBlock> levels(tiles.orig_w, tiles.orig_h);
  for (std::size_t i = 0; i < tiles.blocks.size(); ++i) {
    levels.blocks[i] = quantize_block(dct2d(tiles.blocks[i]), qm);
  }
  return levels;
}

DegradeResult degrade(const GrayImage& image, QualityFactor quality) {
  const QuantMatrix qm = build_quant_matrix(quality);
  const BlockGrid<QuantizedBlock> levels = quantize_image(image, qm);

  BlockGrid<PixelBlock> recon(levels.orig_w, levels.orig_h);
  for (std::size_t i = 0; i < levels.blocks.size(); ++i) {
    recon.blocks[i] = idct2d(dequantize_block(levels.blocks[i], qm));
  }

  const RateReport rate =
      estimate_bits(symbolize(levels), image.width(), image.height());
  return DegradeResult{assemble_blocks(recon), rate, quality};
}

}  // namespace jdeblock
