#pragma once

#include <span>
#include <vector>

#include "arcs/plane.hpp"

namespace arcs {

/// An arc with per-point secant coverage. coverage(x) counts the secants
/// through x; a point is a candidate iff it is not a member and no secant
/// passes through it, which is exactly when adding it keeps the arc property.
class Arc {
 public:
  explicit Arc(const Plane& plane);

  /// Adds the points in order; throws NotACandidate if they are not an arc.
  static Arc from_points(const Plane& plane, std::span<const PointIndex> points);

  const Plane& plane() const noexcept { return *plane_; }
  std::size_t size() const noexcept { return members_.size(); }
  /// Members in insertion order.
  std::span<const PointIndex> members() const noexcept { return members_; }
  std::vector<PointIndex> sorted_members() const;

  bool contains(PointIndex p) const noexcept { return member_[p] != 0; }
  std::uint16_t coverage(PointIndex p) const noexcept { return coverage_[p]; }
  std::span<const std::uint16_t> coverage() const noexcept { return coverage_; }

  bool is_candidate(PointIndex p) const noexcept { return member_[p] == 0 && coverage_[p] == 0; }
  std::size_t candidate_count() const noexcept { return candidate_count_; }
  std::vector<PointIndex> candidates() const;

  /// True iff every point off the arc lies on a secant.
  bool is_complete() const noexcept { return candidate_count_ == 0; }

  /// Throws NotACandidate for members and points on a secant.
  void add_point(PointIndex p);
  Arc with_point(PointIndex p) const;

  /// Undoes the most recent add_point.
  void remove_last();

 private:
  const Plane* plane_;
  std::vector<PointIndex> members_;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint16_t> coverage_;
  std::size_t candidate_count_;
};

/// Integer form of the strict lower bounds sqrt(2q)+1 and, for q = p^h with
/// h <= 3, sqrt(3q)+1/2.
int lower_bound(int q);

}  // namespace arcs
