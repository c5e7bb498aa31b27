#ifndef JDEBLOCK_METRICS_H_
#define JDEBLOCK_METRICS_H_

#include <optional>

#include "jdeblock/image_io.h"

namespace jdeblock {

// Full-reference measures. Both throw DomainError on a size mismatch.
double mse(const GrayImage& ref, const GrayImage& dist);
double psnr(const GrayImage& ref, const GrayImage& dist);

// 10 log10(255^2 / mse), +infinity for mse == 0.
double psnr_from_mse(double mse);

// Mean absolute step across the 8x8 grid relative to the mean step
// elsewhere:
//
//   score = (D_b + 1) / (D_i + 1)
//
// where D_b sums, over the two directions, the mean |difference| of
// neighbouring pixels that sit on opposite sides of a block boundary
// (columns or rows 7|8, 15|16, ...), and D_i does the same for all other
// neighbouring pairs. 1.0 means no excess discontinuity at the grid.
// Requires at least 9x9 pixels; throws DomainError otherwise.
double blockiness_score(const GrayImage& image);

// Full-reference fields are present only when a reference was supplied.
// psnr_db is +infinity when mse is 0.
struct QualityReport {
  std::optional<double> mse;
  std::optional<double> psnr_db;
  double blockiness = 1.0;
};

// `ref` may be null for a no-reference measurement.
QualityReport measure(const GrayImage* ref, const GrayImage& dist);

}  // namespace jdeblock

#endif  // JDEBLOCK_METRICS_H_
