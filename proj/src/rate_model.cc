#include "jdeblock/rate_model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>

#include "jdeblock/errors.h"

namespace jdeblock {

int size_category(int value) {
  const unsigned magnitude = static_cast<unsigned>(std::abs(value));
  return static_cast<int>(std::bit_width(magnitude));
}

SymbolStream symbolize(const BlockGrid<QuantizedBlock>& grid) {
  SymbolStream stream;
  stream.dc_symbols.reserve(grid.blocks.size());
  int prev_dc = 0;
  for (const QuantizedBlock& block : grid.blocks) {
    const auto seq = zigzag_scan(block);

    const int diff = seq[0] - prev_dc;
    prev_dc = seq[0];
    const int dc_size = size_category(diff);
    stream.dc_symbols.push_back(dc_size);
    stream.amplitude_bits += dc_size;

    int run = 0;
    for (int k = 1; k < kBlockArea; ++k) {
      if (seq[k] == 0) {
        ++run;
        continue;
      }
      while (run > 15) {
        stream.ac_symbols.push_back(AcSymbol::Zrl());
        run -= 16;
      }
      const int size = size_category(seq[k]);
      stream.ac_symbols.push_back(
          {static_cast<uint8_t>(run), static_cast<uint8_t>(size)});
      stream.amplitude_bits += size;
      run = 0;
    }
    if (run > 0) stream.ac_symbols.push_back(AcSymbol::Eob());
  }
  return stream;
}

namespace {

template <typename Symbol, typename Key>
double ClassBits(const std::vector<Symbol>& symbols, Key key) {
  std::map<int, std::int64_t> counts;
  for (const Symbol& s : symbols) ++counts[key(s)];
  const double total = static_cast<double>(symbols.size());
  double bits = 0.0;
  for (const auto& [symbol, count] : counts) {
    const double length = -std::log2(static_cast<double>(count) / total);
    bits += static_cast<double>(count) * std::max(length, 1.0);
  }
  return bits;
}

}  // namespace

RateReport estimate_bits(const SymbolStream& stream, int width, int height) {
  if (stream.dc_symbols.empty() && stream.ac_symbols.empty()) {
    throw DomainError("cannot estimate the size of an empty symbol stream");
  }
  if (width <= 0 || height <= 0) {
    throw DomainError("image dimensions must be positive");
  }
  const double dc_bits = ClassBits(stream.dc_symbols, [](int s) { return s; });
  const double ac_bits = ClassBits(
      stream.ac_symbols, [](AcSymbol s) { return s.run * 16 + s.size; });

  RateReport report;
  report.estimated_bits =
      dc_bits + ac_bits + static_cast<double>(stream.amplitude_bits);
  report.raw_bits = 8.0 * width * height;
  report.compression_ratio = report.raw_bits / report.estimated_bits;
  return report;
}

}  // namespace jdeblock
