#pragma once

#include <vector>

namespace bandwidth {

// Block of positions {lo*(b+1)+1, ..., hi*(b+1)} clipped to 1..n. Base segment t is (t, t+1).
// Indices are 0-based throughout; lo may be negative.
struct Segment {
  int lo = 0;
  int hi = 1;

  int width() const noexcept { return hi - lo; }
  bool contains_base(int t) const noexcept { return lo <= t && t < hi; }
  static Segment base(int t) noexcept { return {t, t + 1}; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// 0-based index of the base segment holding position p (1-based), i.e. floor((p-1)/(b+1)).
constexpr int segment_of(int position, int b) noexcept { return (position - 1) / (b + 1); }

// Offset of position p inside its base segment, in 1..b+1.
constexpr int color_of(int position, int b) noexcept { return (position - 1) % (b + 1) + 1; }

// Number of base segments covering 1..n.
constexpr int base_segment_count(int n, int b) noexcept { return (n + b) / (b + 1); }

// First and last position of s inside 1..n; empty when first > last.
struct PositionRange {
  int first = 1;
  int last = 0;

  bool empty() const noexcept { return first > last; }
  bool contains(int p) const noexcept { return first <= p && p <= last; }
  int size() const noexcept { return empty() ? 0 : last - first + 1; }
};

PositionRange segment_range(const Segment& s, int b, int n) noexcept;
bool segment_nonempty(const Segment& s, int b, int n) noexcept;
std::vector<int> segment_positions(const Segment& s, int b, int n);

// Positions sorted by (color, base segment). Entry k of step_base_segment is the base
// segment of sequence[k]; index_of[p-1] is the index of position p in sequence.
struct ColorOrder {
  int n = 0;
  int b = 1;
  std::vector<int> sequence;
  std::vector<int> step_base_segment;
  std::vector<int> index_of;
};

ColorOrder color_order(int n, int b);

}  // namespace bandwidth
