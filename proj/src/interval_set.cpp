#include "monocurve/interval_set.hpp"

#include <algorithm>

namespace monocurve {

namespace {

std::vector<Interval> normalize(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.first < b.first; });
  std::vector<Interval> out;
  out.reserve(v.size());
  for (const auto& iv : v) {
    if (iv.last < iv.first) continue;
    if (!out.empty() && iv.first <= out.back().last + 1)
      out.back().last = std::max(out.back().last, iv.last);
    else
      out.push_back(iv);
  }
  return out;
}

}  // namespace

IntervalSet IntervalSet::from_points(std::span<const std::int64_t> points) {
  std::vector<Interval> v;
  v.reserve(points.size());
  for (auto p : points) v.push_back({p, p});
  IntervalSet s;
  s.runs_ = normalize(std::move(v));
  return s;
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  IntervalSet s;
  s.runs_ = normalize(std::move(intervals));
  return s;
}

IntervalSet IntervalSet::sum_with(std::span<const std::int64_t> shifts) const {
  std::vector<Interval> v;
  v.reserve(runs_.size() * shifts.size());
  for (auto s : shifts)
    for (const auto& iv : runs_) v.push_back({iv.first + s, iv.last + s});
  IntervalSet out;
  out.runs_ = normalize(std::move(v));
  return out;
}

IntervalSet IntervalSet::shifted(std::int64_t by) const {
  IntervalSet out = *this;
  for (auto& iv : out.runs_) {
    iv.first += by;
    iv.last += by;
  }
  return out;
}

IntervalSet IntervalSet::reflected(std::int64_t about) const {
  IntervalSet out;
  out.runs_.reserve(runs_.size());
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) out.runs_.push_back({about - it->last, about - it->first});
  return out;
}

IntervalSet IntervalSet::united(const IntervalSet& other) const {
  std::vector<Interval> v = runs_;
  v.insert(v.end(), other.runs_.begin(), other.runs_.end());
  IntervalSet out;
  out.runs_ = normalize(std::move(v));
  return out;
}

bool IntervalSet::intersects(const IntervalSet& other) const {
  std::size_t i = 0, j = 0;
  while (i < runs_.size() && j < other.runs_.size()) {
    const auto& a = runs_[i];
    const auto& b = other.runs_[j];
    if (a.last < b.first)
      ++i;
    else if (b.last < a.first)
      ++j;
    else
      return true;
  }
  return false;
}

bool IntervalSet::contains(std::int64_t x) const {
  auto it = std::upper_bound(runs_.begin(), runs_.end(), x,
                             [](std::int64_t v, const Interval& iv) { return v < iv.first; });
  if (it == runs_.begin()) return false;
  --it;
  return x <= it->last;
}

std::int64_t IntervalSet::cardinality() const {
  std::int64_t n = 0;
  for (const auto& iv : runs_) n += iv.last - iv.first + 1;
  return n;
}

std::vector<std::int64_t> IntervalSet::to_vector() const {
  std::vector<std::int64_t> out;
  for (const auto& iv : runs_)
    for (auto x = iv.first; x <= iv.last; ++x) out.push_back(x);
  return out;
}

}  // namespace monocurve
