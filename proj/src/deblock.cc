#include "jdeblock/deblock.h"

#include <algorithm>
#include <cstdlib>

#include "jdeblock/block_transform.h"
#include "jdeblock/errors.h"

namespace jdeblock {

void DeblockParams::Validate() const {
  if (t_flat < 1) throw DomainError("t_flat must be at least 1");
  if (t_edge <= t_flat) throw DomainError("t_edge must exceed t_flat");
  if (clip_c < 1) throw DomainError("clip must be at least 1");
}

const char* ToString(BoundaryMode mode) {
  switch (mode) {
    case BoundaryMode::kSmooth:
      return "smooth";
    case BoundaryMode::kMild:
      return "mild";
    case BoundaryMode::kEdge:
      return "edge";
  }
  return "?";
}

BoundaryMode classify_boundary(const Segment& s, const DeblockParams& params) {
  const int step = std::abs(s.p0() - s.q0());
  if (step >= params.t_edge) return BoundaryMode::kEdge;
  const int left = std::max(std::abs(s.p2() - s.p1()), std::abs(s.p1() - s.p0()));
  const int right = std::max(std::abs(s.q1() - s.q0()), std::abs(s.q2() - s.q1()));
  if (left < params.t_flat && right < params.t_flat) return BoundaryMode::kSmooth;
  return BoundaryMode::kMild;
}

namespace {

int Clip255(int v) { return std::clamp(v, 0, 255); }

// n / 4 rounded half away from zero.
int RoundQuarter(int n) { return n >= 0 ? (n + 2) / 4 : -((-n + 2) / 4); }

}  // namespace

Segment filter_segment(const Segment& s, BoundaryMode mode,
                       const DeblockParams& params) {
  Segment out = s;
  switch (mode) {
    case BoundaryMode::kEdge:
      break;
    case BoundaryMode::kSmooth: {
      const int p2 = s.p2(), p1 = s.p1(), p0 = s.p0();
      const int q0 = s.q0(), q1 = s.q1(), q2 = s.q2();
      // 8-weight taps, all operands non-negative so '/' floors.
      out.p[3] = Clip255((p2 + 2 * p1 + 2 * p0 + 2 * q0 + q1 + 4) / 8);
      out.q[0] = Clip255((q2 + 2 * q1 + 2 * q0 + 2 * p0 + p1 + 4) / 8);
      out.p[2] = Clip255((2 * p2 + 3 * p1 + 2 * p0 + q0 + 4) / 8);
      out.q[1] = Clip255((2 * q2 + 3 * q1 + 2 * q0 + p0 + 4) / 8);
      break;
    }
    case BoundaryMode::kMild: {
      const int delta =
          std::clamp(RoundQuarter(s.q0() - s.p0()), -params.clip_c, params.clip_c);
      out.p[3] = Clip255(s.p0() + delta);
      out.q[0] = Clip255(s.q0() - delta);
      break;
    }
  }
  return out;
}

namespace {

// Filters every segment across boundaries of one orientation. `along` is the
// extent parallel to the boundary, `across` the extent perpendicular to it.
template <typename Pixel>
void FilterBoundaries(int along, int across, Pixel pixel,
                      const DeblockParams& params) {
  for (int b = kBlockSize; b + 3 < across; b += kBlockSize) {
    for (int t = 0; t < along; ++t) {
      Segment s;
      for (int k = 0; k < 4; ++k) {
        s.p[k] = pixel(t, b - 4 + k);
        s.q[k] = pixel(t, b + k);
      }
      const BoundaryMode mode = classify_boundary(s, params);
      if (mode == BoundaryMode::kEdge) continue;
      const Segment f = filter_segment(s, mode, params);
      pixel(t, b - 2) = static_cast<uint8_t>(f.p[2]);
      pixel(t, b - 1) = static_cast<uint8_t>(f.p[3]);
      pixel(t, b) = static_cast<uint8_t>(f.q[0]);
      pixel(t, b + 1) = static_cast<uint8_t>(f.q[1]);
    }
  }
}

}  // namespace

void filter_vertical_boundaries(GrayImage& image, const DeblockParams& params) {
  FilterBoundaries(
      image.height(), image.width(),
      [&image](int row, int col) -> uint8_t& { return image.at(col, row); },
      params);
}

void filter_horizontal_boundaries(GrayImage& image, const DeblockParams& params) {
  FilterBoundaries(
      image.width(), image.height(),
      [&image](int col, int row) -> uint8_t& { return image.at(col, row); },
      params);
}

GrayImage deblock_image(const GrayImage& image, const DeblockParams& params) {
  params.Validate();
  if (image.width() < 2 * kBlockSize || image.height() < 2 * kBlockSize) {
    throw DomainError("deblocking needs at least 16x16 pixels");
  }
  GrayImage out = image;
  filter_vertical_boundaries(out, params);
  filter_horizontal_boundaries(out, params);
  return out;
}

}  // namespace jdeblock
