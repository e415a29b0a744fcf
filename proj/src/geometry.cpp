#include "bandwidth/geometry.hpp"

#include <algorithm>

#include "bandwidth/graph.hpp"

namespace bandwidth {

PositionRange segment_range(const Segment& s, int b, int n) noexcept {
  const long long width = b + 1;
  const long long first = std::max<long long>(1, s.lo * width + 1);
  const long long last = std::min<long long>(n, s.hi * width);
  if (first > last) return {};
  return {static_cast<int>(first), static_cast<int>(last)};
}

bool segment_nonempty(const Segment& s, int b, int n) noexcept {
  return !segment_range(s, b, n).empty();
}

std::vector<int> segment_positions(const Segment& s, int b, int n) {
  auto range = segment_range(s, b, n);
  std::vector<int> out;
  for (int p = range.first; p <= range.last; ++p) out.push_back(p);
  return out;
}

ColorOrder color_order(int n, int b) {
  if (n < 1 || b < 1) throw Error("color order needs n >= 1 and b >= 1");
  ColorOrder order;
  order.n = n;
  order.b = b;
  order.sequence.reserve(n);
  // Walking color-major over base segments yields the sorted order directly.
  for (int color = 1; color <= b + 1; ++color) {
    for (int p = color; p <= n; p += b + 1) order.sequence.push_back(p);
  }
  order.step_base_segment.resize(n);
  order.index_of.resize(n);
  for (int k = 0; k < n; ++k) {
    order.step_base_segment[k] = segment_of(order.sequence[k], b);
    order.index_of[order.sequence[k] - 1] = k;
  }
  return order;
}

}  // namespace bandwidth
