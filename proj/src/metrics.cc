#include "jdeblock/metrics.h"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "jdeblock/block_transform.h"
#include "jdeblock/errors.h"

namespace jdeblock {

double mse(const GrayImage& ref, const GrayImage& dist) {
  if (ref.width() != dist.width() || ref.height() != dist.height()) {
    throw DomainError("image dimensions differ");
  }
  auto a = ref.pixels();
  auto b = dist.pixels();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = a[i] - b[i];
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(a.size());
}

double psnr_from_mse(double mse) {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double psnr(const GrayImage& ref, const GrayImage& dist) {
  return psnr_from_mse(mse(ref, dist));
}

namespace {

struct PairSums {
  std::uint64_t boundary_sum = 0;
  std::uint64_t boundary_count = 0;
  std::uint64_t interior_sum = 0;
  std::uint64_t interior_count = 0;

  void Add(bool on_boundary, int diff) {
    if (on_boundary) {
      boundary_sum += std::abs(diff);
      ++boundary_count;
    } else {
      interior_sum += std::abs(diff);
      ++interior_count;
    }
  }
  double BoundaryMean() const {
    return static_cast<double>(boundary_sum) / static_cast<double>(boundary_count);
  }
  double InteriorMean() const {
    return static_cast<double>(interior_sum) / static_cast<double>(interior_count);
  }
};

}  // namespace

double blockiness_score(const GrayImage& image) {
  const int w = image.width();
  const int h = image.height();
  if (w <= kBlockSize || h <= kBlockSize) {
    throw DomainError("blockiness needs at least 9x9 pixels");
  }
  PairSums across_columns;
  PairSums across_rows;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x + 1 < w; ++x) {
      across_columns.Add((x + 1) % kBlockSize == 0,
                         image.at(x + 1, y) - image.at(x, y));
    }
  }
  for (int y = 0; y + 1 < h; ++y) {
    const bool on_boundary = (y + 1) % kBlockSize == 0;
    for (int x = 0; x < w; ++x) {
      across_rows.Add(on_boundary, image.at(x, y + 1) - image.at(x, y));
    }
  }
  const double d_b = across_columns.BoundaryMean() + across_rows.BoundaryMean();
  const double d_i = across_columns.InteriorMean() + across_rows.InteriorMean();
  return (d_b + 1.0) / (d_i + 1.0);
}

QualityReport measure(const GrayImage* ref, const GrayImage& dist) {
  QualityReport m;
  if (ref != nullptr) {
    m.mse = mse(*ref, dist);
    m.psnr_db = psnr_from_mse(*m.mse);
  }
  m.blockiness = blockiness_score(dist);
  return m;
}

}  // namespace jdeblock
