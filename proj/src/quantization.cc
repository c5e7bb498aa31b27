#include "jdeblock/quantization.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "jdeblock/errors.h"

namespace jdeblock {

QualityFactor::QualityFactor(int q) : q_(q) {
  if (q < 1 || q > 100) {
    throw DomainError("quality must be in [1, 100], got " + std::to_string(q));
  }
}

QuantMatrix build_quant_matrix(QualityFactor quality) {
  const int q = quality.value();
  const long scale = q < 50 ? 5000 / q : 200 - 2 * q;
  QuantMatrix qm;
  for (int i = 0; i < kBlockArea; ++i) {
    const long step = (kBaseLuminanceTable[i] * scale + 50) / 100;
    qm.steps[i] = static_cast<int>(std::clamp(step, 1L, 255L));
  }
  return qm;
}

QuantizedBlock quantize_block(const CoeffBlock& coeffs, const QuantMatrix& qm) {
  QuantizedBlock out;
  for (int i = 0; i < kBlockArea; ++i) {
    out.levels[i] = static_cast<int>(std::round(coeffs.coeffs[i] / qm.steps[i]));
  }
  return out;
}

CoeffBlock dequantize_block(const QuantizedBlock& levels, const QuantMatrix& qm) {
  CoeffBlock out;
  for (int i = 0; i < kBlockArea; ++i) {
    out.coeffs[i] = static_cast<double>(levels.levels[i]) * qm.steps[i];
  }
  return out;
}

std::array<int, kBlockArea> zigzag_scan(const QuantizedBlock& block) {
  std::array<int, kBlockArea> seq{};
  for (int k = 0; k < kBlockArea; ++k) seq[k] = block.levels[kZigzagOrder[k]];
  return seq;
}

QuantizedBlock inverse_zigzag(const std::array<int, kBlockArea>& sequence) {
  QuantizedBlock block;
  for (int k = 0; k < kBlockArea; ++k) block.levels[kZigzagOrder[k]] = sequence[k];
  return block;
}

}  // namespace jdeblock
