#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arcs/field.hpp"

namespace arcs {

using PointIndex = std::uint16_t;
using LineIndex = std::uint16_t;

/// Homogeneous coordinates (x0, x1, x2) as element codes.
using Triple = std::array<Elem, 3>;

/// Point indices are 16-bit, so q^2 + q + 1 must stay below 2^16.
inline constexpr int kMaxPlaneOrder = 255;
/// Orders up to this size get a dense line-through-pair table.
inline constexpr int kDenseLineTableMaxOrder = 64;

/// PG(2,q) incidence tables. Points and lines are normalized so that the
/// first nonzero coordinate is 1 and are indexed in lexicographic order of
/// their coordinate codes, so (0,0,1) is 0, (0,1,b) is 1+b and (1,a,b) is
/// q+1+aq+b. Lines use the same indexing on their coefficient triples.
class Plane {
 public:
  explicit Plane(Field field);

  const Field& field() const noexcept { return field_; }
  int q() const noexcept { return q_; }
  /// Number of points, which equals the number of lines.
  std::size_t size() const noexcept { return size_; }

  const Triple& point(PointIndex p) const { return coords_[p]; }
  const Triple& line(LineIndex l) const { return coords_[l]; }

  /// Throws FieldMismatch for the zero vector or codes outside the field.
  Triple normalize(const Triple& t) const;
  std::optional<PointIndex> try_index(const Triple& raw) const;
  PointIndex index_of(const Triple& raw) const;

  PointIndex index_of_normalized(const Triple& t) const noexcept {
    if (t[0] != 0) return PointIndex(1 + q_ + t[1] * q_ + t[2]);
    if (t[1] != 0) return PointIndex(1 + t[2]);
    return 0;
  }

  /// Normalizes and indexes a nonzero triple without validation.
  PointIndex index_of_unchecked(Elem x0, Elem x1, Elem x2) const noexcept {
    if (x0 != 0) {
      if (x0 != 1) {
        Elem s = field_.inv_unchecked(x0);
        x1 = field_.mul(x1, s);
        x2 = field_.mul(x2, s);
      }
      return PointIndex(1 + q_ + x1 * q_ + x2);
    }
    if (x1 != 0) {
      if (x1 != 1) x2 = field_.mul(x2, field_.inv_unchecked(x1));
      return PointIndex(1 + x2);
    }
    return 0;
  }

  /// Throws SamePoint when a == b.
  LineIndex line_through(PointIndex a, PointIndex b) const;

  LineIndex line_through_unchecked(PointIndex a, PointIndex b) const noexcept {
    if (!line_table_.empty()) return line_table_[std::size_t(a) * size_ + b];
    return index_of_normalized(normalize_fast(cross(coords_[a], coords_[b])));
  }

  std::span<const PointIndex> points_on(LineIndex l) const {
    return {points_on_.data() + std::size_t(l) * (q_ + 1), std::size_t(q_ + 1)};
  }
  std::span<const LineIndex> lines_through(PointIndex p) const {
    return {lines_through_.data() + std::size_t(p) * (q_ + 1), std::size_t(q_ + 1)};
  }

  bool incident(PointIndex p, LineIndex l) const noexcept { return dot(coords_[p], coords_[l]) == 0; }

  /// Determinant test; throws DuplicatePoints when two indices coincide.
  bool collinear(PointIndex a, PointIndex b, PointIndex c) const;

  Elem det(const Triple& a, const Triple& b, const Triple& c) const noexcept;
  Triple cross(const Triple& a, const Triple& b) const noexcept;
  Elem dot(const Triple& a, const Triple& b) const noexcept;

  /// Image of a point under coordinate-wise x -> x^(p^i).
  PointIndex frobenius(PointIndex p, int i) const noexcept {
    return frobenius_[std::size_t(i) * size_ + p];
  }

  /// (0,0,1), (0,1,0), (1,0,0), (1,1,1) in that order.
  std::array<PointIndex, 4> standard_frame() const noexcept {
    return {0, 1, PointIndex(q_ + 1), PointIndex(2 * q_ + 2)};
  }

 private:
  Triple normalize_fast(const Triple& t) const noexcept;

  Field field_;
  int q_;
  std::size_t size_;
  std::vector<Triple> coords_;
  std::vector<LineIndex> line_table_;
  std::vector<PointIndex> points_on_;
  std::vector<LineIndex> lines_through_;
  std::vector<PointIndex> frobenius_;
};

}  // namespace arcs
