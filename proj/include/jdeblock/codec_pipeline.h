#ifndef JDEBLOCK_CODEC_PIPELINE_H_
#define JDEBLOCK_CODEC_PIPELINE_H_

#include "jdeblock/image_io.h"
#include "jdeblock/quantization.h"
#include "jdeblock/rate_model.h"

namespace jdeblock {

struct DegradeResult {
  GrayImage image;  // reconstruction, same dimensions as the input
  RateReport rate;
  QualityFactor quality;
};

// Runs the lossy block-DCT round trip
//   tile -> DCT -> quantize -> dequantize -> IDCT -> assemble
// and estimates the coded size from the quantized levels. Every block is
// processed independently of its neighbours.
DegradeResult degrade(const GrayImage& image, QualityFactor quality);

// Forward half only: the quantized levels the size estimate is built from.
BlockGrid<QuantizedBlock> quantize_image(const GrayImage& image,
                                         const QuantMatrix& qm);

}  // namespace jdeblock

#endif  // JDEBLOCK_CODEC_PIPELINE_H_
