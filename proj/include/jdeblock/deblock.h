#ifndef JDEBLOCK_DEBLOCK_H_
#define JDEBLOCK_DEBLOCK_H_

#include <array>

#include "jdeblock/image_io.h"

namespace jdeblock {

// Thresholds steering the boundary classification.
struct DeblockParams {
  int t_edge = 20;  // |p0 - q0| at or above this is a real edge
  int t_flat = 8;   // per-side activity below this counts as flat
  int clip_c = 4;   // largest correction applied in Mild mode

  // Throws DomainError unless t_edge > t_flat >= 1 and clip_c >= 1.
  void Validate() const;
};

enum class BoundaryMode { kSmooth, kMild, kEdge };

const char* ToString(BoundaryMode mode);

// Four pixels on each side of a block boundary, ordered along the filtering
// direction: p = {p3, p2, p1, p0}, q = {q0, q1, q2, q3}. p0 and q0 touch the
// boundary.
struct Segment {
  std::array<int, 4> p{};
  std::array<int, 4> q{};

  int p0() const { return p[3]; }
  int p1() const { return p[2]; }
  int p2() const { return p[1]; }
  int q0() const { return q[0]; }
  int q1() const { return q[1]; }
  int q2() const { return q[2]; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Edge when |p0 - q0| >= t_edge; otherwise Smooth when both sides are flat
// (max inner step < t_flat), else Mild.
BoundaryMode classify_boundary(const Segment& segment, const DeblockParams& params);

// Applies the filter for `mode`. Only p1, p0, q0, q1 may change.
Segment filter_segment(const Segment& segment, BoundaryMode mode,
                       const DeblockParams& params);

// Single passes, in place. The vertical pass visits every boundary between
// columns 8k-1 and 8k row by row; the horizontal pass does the same for rows,
// column by column. Segments without 4 pixels of support on both sides are
// left alone.
void filter_vertical_boundaries(GrayImage& image, const DeblockParams& params);
void filter_horizontal_boundaries(GrayImage& image, const DeblockParams& params);

// Vertical pass, then horizontal pass on its output. Requires at least 16x16
// pixels and valid params; throws DomainError otherwise.
GrayImage deblock_image(const GrayImage& image, const DeblockParams& params = {});

}  // namespace jdeblock

#endif  // JDEBLOCK_DEBLOCK_H_
