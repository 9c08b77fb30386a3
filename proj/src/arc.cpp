#include "arcs/arc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace arcs {

Arc::Arc(const Plane& plane)
    : plane_(&plane), member_(plane.size(), 0), coverage_(plane.size(), 0), candidate_count_(plane.size()) {}

Arc Arc::from_points(const Plane& plane, std::span<const PointIndex> points) {
  Arc arc(plane);
  for (PointIndex p : points) arc.add_point(p);
  return arc;
}

std::vector<PointIndex> Arc::sorted_members() const {
  std::vector<PointIndex> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointIndex> Arc::candidates() const {
  std::vector<PointIndex> out;
  out.reserve(candidate_count_);
  for (std::size_t p = 0; p < plane_->size(); ++p)
    if (is_candidate(PointIndex(p))) out.push_back(PointIndex(p));
  return out;
}

void Arc::add_point(PointIndex p) {
  if (p >= plane_->size()) throw Error(ErrorKind::NotACandidate, "point index out of range");
  if (member_[p]) throw Error(ErrorKind::NotACandidate, "point " + std::to_string(p) + " is already a member");
  if (coverage_[p] != 0)
    throw Error(ErrorKind::NotACandidate, "point " + std::to_string(p) + " lies on a secant of the arc");
  member_[p] = 1;
  --candidate_count_;
  for (PointIndex m : members_) {
    for (PointIndex x : plane_->points_on(plane_->line_through_unchecked(m, p)))
      if (coverage_[x]++ == 0 && !member_[x]) --candidate_count_;
  }
  members_.push_back(p);
}

Arc Arc::with_point(PointIndex p) const {
  Arc out = *this;
  out.add_point(p);
  return out;
}

void Arc::remove_last() {
  if (members_.empty()) return;
  PointIndex p = members_.back();
  members_.pop_back();
  for (PointIndex m : members_) {
    for (PointIndex x : plane_->points_on(plane_->line_through_unchecked(m, p)))
      if (--coverage_[x] == 0 && !member_[x]) ++candidate_count_;
  }
  member_[p] = 0;
  ++candidate_count_;
}

int lower_bound(int q) {
  int p = 2;
  while (q % p != 0) ++p;
  int h = 0;
  for (int x = q; x > 1; x /= p) ++h;
  auto isqrt = [](long long x) {
    long long r = static_cast<long long>(std::sqrt(double(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
  };
  // t > v forces t >= floor(v) + 1, exact integers included.
  int bound = int(isqrt(2LL * q) + 1) + 1;
  if (h <= 3) {
    // floor(sqrt(3q) + 1/2) is the largest k with (2k - 1)^2 <= 12q.
    long long k = isqrt(3LL * q);
    if ((2 * k + 1) * (2 * k + 1) <= 12LL * q) ++k;
    bound = std::max(bound, int(k) + 1);
  }
  return bound;
}

}  // namespace arcs
