#include "arcs/plane.hpp"

#include <string>

namespace arcs {

Plane::Plane(Field field) : field_(std::move(field)), q_(field_.q()) {
  if (q_ > kMaxPlaneOrder)
    throw Error(ErrorKind::CapacityExceeded, "plane order " + std::to_string(q_) + " above " +
                                                 std::to_string(kMaxPlaneOrder));
  size_ = std::size_t(q_) * q_ + q_ + 1;
  coords_.reserve(size_);
  coords_.push_back({0, 0, 1});
  for (int b = 0; b < q_; ++b) coords_.push_back({0, 1, Elem(b)});
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) coords_.push_back({1, Elem(a), Elem(b)});

  const std::size_t per = std::size_t(q_) + 1;
  points_on_.reserve(size_ * per);
  std::vector<std::size_t> fill(size_, 0);
  lines_through_.assign(size_ * per, 0);
  for (std::size_t l = 0; l < size_; ++l) {
    for (std::size_t p = 0; p < size_; ++p) {
      if (dot(coords_[p], coords_[l]) == 0) {
        points_on_.push_back(PointIndex(p));
        lines_through_[p * per + fill[p]++] = LineIndex(l);
      }
    }
  }

  if (q_ <= kDenseLineTableMaxOrder) {
    line_table_.assign(size_ * size_, 0);
    for (std::size_t l = 0; l < size_; ++l) {
      auto pts = points_on(LineIndex(l));
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
          if (i != j) line_table_[std::size_t(pts[i]) * size_ + pts[j]] = LineIndex(l);
    }
  }

  frobenius_.resize(std::size_t(field_.h()) * size_);
  for (int i = 0; i < field_.h(); ++i)
    for (std::size_t p = 0; p < size_; ++p) {
      const Triple& t = coords_[p];
      Triple img{field_.frobenius(t[0], i), field_.frobenius(t[1], i), field_.frobenius(t[2], i)};
      frobenius_[std::size_t(i) * size_ + p] = index_of_normalized(img);
    }
}

Triple Plane::normalize_fast(const Triple& t) const noexcept {
  for (int i = 0; i < 3; ++i) {
    if (t[i] != 0) {
      Elem s = field_.inv_unchecked(t[i]);
      Triple r{};
      for (int j = 0; j < 3; ++j) r[j] = field_.mul(t[j], s);
      return r;
    }
  }
  return t;
}

Triple Plane::normalize(const Triple& t) const {
  for (Elem c : t)
    if (!field_.contains(c))
      throw Error(ErrorKind::FieldMismatch, "coordinate " + std::to_string(c) + " outside GF(" +
                                                std::to_string(q_) + ")");
  if (t[0] == 0 && t[1] == 0 && t[2] == 0) throw Error(ErrorKind::FieldMismatch, "zero vector is not a point");
  return normalize_fast(t);
}

std::optional<PointIndex> Plane::try_index(const Triple& raw) const {
  for (Elem c : raw)
    if (!field_.contains(c)) return std::nullopt;
  if (raw[0] == 0 && raw[1] == 0 && raw[2] == 0) return std::nullopt;
  return index_of_normalized(normalize_fast(raw));
}

PointIndex Plane::index_of(const Triple& raw) const { return index_of_normalized(normalize(raw)); }

LineIndex Plane::line_through(PointIndex a, PointIndex b) const {
  if (a == b) throw Error(ErrorKind::SamePoint, "line through a point and itself");
  return line_through_unchecked(a, b);
}

bool Plane::collinear(PointIndex a, PointIndex b, PointIndex c) const {
  if (a == b || b == c || a == c) throw Error(ErrorKind::DuplicatePoints, "collinearity needs distinct points");
  return det(coords_[a], coords_[b], coords_[c]) == 0;
}

Elem Plane::det(const Triple& a, const Triple& b, const Triple& c) const noexcept {
  return dot(a, cross(b, c));
}

Triple Plane::cross(const Triple& a, const Triple& b) const noexcept {
  const Field& f = field_;
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

Elem Plane::dot(const Triple& a, const Triple& b) const noexcept {
  const Field& f = field_;
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

}  // namespace arcs
