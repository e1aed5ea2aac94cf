#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace monocurve {

struct Interval {
  std::int64_t first = 0;
  std::int64_t last = 0;  // inclusive
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite set of integers stored as sorted, pairwise separated closed
/// intervals. An h-fold sumset of {0, a_1, ..., d} has few runs once h is
/// large (a low part, one long interval, a high part), so sums stay cheap.
class IntervalSet {
 public:
  IntervalSet() = default;
  static IntervalSet from_points(std::span<const std::int64_t> points);
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  /// {x + s : x in *this, s in shifts}.
  IntervalSet sum_with(std::span<const std::int64_t> shifts) const;
  IntervalSet shifted(std::int64_t by) const;
  IntervalSet reflected(std::int64_t about) const;  // {about - x}
  IntervalSet united(const IntervalSet& other) const;
  bool intersects(const IntervalSet& other) const;

  bool contains(std::int64_t x) const;
  bool empty() const { return runs_.empty(); }
  std::int64_t cardinality() const;
  std::span<const Interval> runs() const { return runs_; }
  std::vector<std::int64_t> to_vector() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> runs_;
};

}  // namespace monocurve
