#ifndef JDEBLOCK_RATE_MODEL_H_
#define JDEBLOCK_RATE_MODEL_H_

#include <cstdint>
#include <vector>

#include "jdeblock/block_transform.h"
#include "jdeblock/quantization.h"

namespace jdeblock {

// One baseline AC symbol: a zero run followed by the size category of the
// next non-zero level. EOB and ZRL use the baseline encodings (0,0), (15,0).
struct AcSymbol {
  uint8_t run = 0;
  uint8_t size = 0;

  static constexpr AcSymbol Eob() { return {0, 0}; }
  static constexpr AcSymbol Zrl() { return {15, 0}; }

  bool is_eob() const { return run == 0 && size == 0; }
  bool is_zrl() const { return run == 15 && size == 0; }

  friend bool operator==(const AcSymbol&, const AcSymbol&) = default;
};

struct SymbolStream {
  std::vector<int> dc_symbols;
  std::vector<AcSymbol> ac_symbols;
  std::int64_t amplitude_bits = 0;
};

struct RateReport {
  double estimated_bits = 0.0;
  double raw_bits = 0.0;
  double compression_ratio = 0.0;
};

// Bits needed for the magnitude of `value`: 0 for 0, else floor(log2|v|) + 1.
int size_category(int value);

// Baseline symbol formation: DC differences in raster block order (the first
// block predicts from 0), AC run/size pairs in zig-zag order with ZRL and EOB.
SymbolStream symbolize(const BlockGrid<QuantizedBlock>& grid);

// Ideal code lengths from the empirical symbol distribution of each class
// (DC and AC separately), at least 1 bit per emitted symbol, plus the raw
// amplitude bits. Throws DomainError on an empty stream or bad dimensions.
RateReport estimate_bits(const SymbolStream& stream, int width, int height);

}  // namespace jdeblock

#endif  // JDEBLOCK_RATE_MODEL_H_
