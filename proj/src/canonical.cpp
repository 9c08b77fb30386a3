#include "arcs/collineation.hpp"

#include <algorithm>

namespace arcs {

namespace {

void insertion_sort(std::vector<PointIndex>& v, std::size_t n) {
  for (std::size_t i = 1; i < n; ++i) {
    PointIndex x = v[i];
    std::size_t j = i;
    while (j > 0 && v[j - 1] > x) {
      v[j] = v[j - 1];
      --j;
    }
    v[j] = x;
  }
}

void require_distinct(std::span<const PointIndex> set) {
  if (set.empty()) throw Error(ErrorKind::EmptySet, "cannot canonicalize an empty set");
  std::vector<PointIndex> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::DuplicatePoints, "point set contains a repeated point");
}

bool in_general_position(const Plane& plane, PointIndex a, PointIndex b, PointIndex c, PointIndex d) {
  const Triple &x = plane.point(a), &y = plane.point(b), &z = plane.point(c), &w = plane.point(d);
  return plane.det(x, y, z) != 0 && plane.det(x, y, w) != 0 && plane.det(x, z, w) != 0 &&
         plane.det(y, z, w) != 0;
}

}  // namespace

Canonizer::Canonizer(const Plane& plane, GroupKind kind) : plane_(&plane), kind_(kind) {}

Canonizer::Best Canonizer::search(std::span<const PointIndex> set, std::vector<PointIndex>& others) {
  const Plane& plane = *plane_;
  const Field& f = plane.field();
  const int n = int(set.size());
  const int rest = n - 4;
  const int frobs = frobenius_powers(plane, kind_);
  image_.resize(n);
  coords_.resize(n);
  weights_.resize(n);
  work_.resize(std::max(rest, 0));
  others.resize(std::max(rest, 0));

  Best best;
  for (int fr = 0; fr < frobs; ++fr) {
    for (int t = 0; t < n; ++t) {
      image_[t] = fr == 0 ? set[t] : plane.frobenius(set[t], fr);
      coords_[t] = plane.point(image_[t]);
    }
    for (int i = 0; i < n; ++i) {
      const Triple& a = coords_[i];
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const Triple& b = coords_[j];
        const Triple r0 = plane.cross(b, a);
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          const Triple& c = coords_[k];
          if (plane.dot(r0, c) == 0) continue;
          const Triple r1 = plane.cross(a, c);
          const Triple r2 = plane.cross(c, b);
          // Rows of adj([c b a]); weights_[t] is that matrix applied to point t.
          for (int t = 0; t < n; ++t) {
            if (t == i || t == j || t == k) continue;
            const Triple& x = coords_[t];
            weights_[t] = {plane.dot(r0, x), plane.dot(r1, x), plane.dot(r2, x)};
          }
          for (int l = 0; l < n; ++l) {
            if (l == i || l == j || l == k) continue;
            const auto& u = weights_[l];
            if (u[0] == 0 || u[1] == 0 || u[2] == 0) continue;
            const Elem s0 = f.mul(u[1], u[2]), s1 = f.mul(u[0], u[2]), s2 = f.mul(u[0], u[1]);
            int m = 0;
            for (int t = 0; t < n; ++t) {
              if (t == i || t == j || t == k || t == l) continue;
              const auto& w = weights_[t];
              work_[m++] = plane.index_of_unchecked(f.mul(s0, w[0]), f.mul(s1, w[1]), f.mul(s2, w[2]));
            }
            insertion_sort(work_, m);
            if (!best.found || std::lexicographical_compare(work_.begin(), work_.begin() + m, others.begin(),
                                                            others.begin() + m)) {
              best.found = true;
              best.frob = fr;
              best.quad = {i, j, k, l};
              std::copy(work_.begin(), work_.begin() + m, others.begin());
            }
          }
        }
      }
    }
  }
  return best;
}

void Canonizer::canonical(std::span<const PointIndex> set, std::vector<PointIndex>& out) {
  if (set.size() < 4) {
    out = small_set(set).canon;
    return;
  }
  Best best = search(set, best_);
  if (!best.found) throw Error(ErrorKind::DegenerateSet, "no four points in general position");
  const auto frame = plane_->standard_frame();
  out.resize(set.size());
  std::merge(frame.begin(), frame.end(), best_.begin(), best_.end(), out.begin());
}

CanonicalForm Canonizer::canonicalize(std::span<const PointIndex> set) {
  require_distinct(set);
  if (set.size() < 4) return small_set(set);
  Best best = search(set, best_);
  if (!best.found) throw Error(ErrorKind::DegenerateSet, "no four points in general position");
  const Plane& plane = *plane_;
  std::array<PointIndex, 4> quad{};
  for (int t = 0; t < 4; ++t) {
    PointIndex p = set[best.quad[t]];
    quad[t] = best.frob == 0 ? p : plane.frobenius(p, best.frob);
  }
  Collineation g = frame_map(plane, quad);
  g.frob = best.frob;
  CanonicalForm form;
  const auto frame = plane.standard_frame();
  form.canon.resize(set.size());
  std::merge(frame.begin(), frame.end(), best_.begin(), best_.end(), form.canon.begin());
  form.witness = g;
  return form;
}

CanonicalForm Canonizer::small_set(std::span<const PointIndex> set) const {
  const Plane& plane = *plane_;
  const Field& f = plane.field();
  std::vector<PointIndex> pts(set.begin(), set.end());
  std::sort(pts.begin(), pts.end());
  const PointIndex total = PointIndex(plane.size());

  if (pts.size() == 3 && plane.collinear(pts[0], pts[1], pts[2])) {
    // S2 = alpha S0 + beta S1; the columns [X, beta S1, alpha S0] send
    // e3, e2, e2+e3 to S0, S1, S2, so their adjugate maps back.
    const Triple &s0 = plane.point(pts[0]), &s1 = plane.point(pts[1]), &s2 = plane.point(pts[2]);
    Triple c01 = plane.cross(s0, s1), c21 = plane.cross(s2, s1), c20 = plane.cross(s2, s0);
    int c = 0;
    while (c01[c] == 0) ++c;
    Elem alpha = f.div(c21[c], c01[c]);
    Elem beta = f.div(c20[c], f.neg(c01[c]));
    LineIndex line = plane.line_through(pts[0], pts[1]);
    PointIndex x = 0;
    while (plane.incident(x, line)) ++x;
    const Triple& xc = plane.point(x);
    Matrix n{};
    for (int r = 0; r < 3; ++r) {
      n[r][0] = xc[r];
      n[r][1] = f.mul(beta, s1[r]);
      n[r][2] = f.mul(alpha, s0[r]);
    }
    Triple col0{n[0][0], n[1][0], n[2][0]}, col1{n[0][1], n[1][1], n[2][1]}, col2{n[0][2], n[1][2], n[2][2]};
    Matrix adj{plane.cross(col1, col2), plane.cross(col2, col0), plane.cross(col0, col1)};
    return {{0, 1, 2}, make_collineation(plane, adj, 0)};
  }

  // Complete to an ordered frame with the least available points.
  std::array<PointIndex, 4> quad{};
  std::size_t have = pts.size();
  for (std::size_t t = 0; t < have; ++t) quad[t] = pts[t];
  auto fits = [&](PointIndex y, std::size_t count) {
    for (std::size_t a = 0; a < count; ++a)
      if (quad[a] == y) return false;
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a + 1; b < count; ++b)
        if (plane.collinear(quad[a], quad[b], y)) return false;
    return true;
  };
  for (; have < 4; ++have) {
    PointIndex y = 0;
    while (y < total && !fits(y, have)) ++y;
    quad[have] = y;
  }
  CanonicalForm form;
  form.witness = frame_map(plane, quad);
  const auto frame = plane.standard_frame();
  form.canon.assign(frame.begin(), frame.begin() + long(pts.size()));
  std::sort(form.canon.begin(), form.canon.end());
  return form;
}

CanonicalForm canonicalize(const Plane& plane, std::span<const PointIndex> set, GroupKind kind) {
  Canonizer c(plane, kind);
  return c.canonicalize(set);
}

Stabilizer stabilizer(const Plane& plane, std::span<const PointIndex> set, GroupKind kind) {
  require_distinct(set);
  const int n = int(set.size());
  if (n < 4) throw Error(ErrorKind::DegenerateSet, "stabilizer needs at least four points");
  std::vector<char> member(plane.size(), 0);
  for (PointIndex p : set) member[p] = 1;

  std::array<PointIndex, 4> base{};
  bool have_base = false;
  for (int i = 0; i < n && !have_base; ++i)
    for (int j = 0; j < n && !have_base; ++j)
      for (int k = 0; k < n && !have_base; ++k)
        for (int l = 0; l < n && !have_base; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          if (in_general_position(plane, set[i], set[j], set[k], set[l])) {
            base = {set[i], set[j], set[k], set[l]};
            have_base = true;
          }
        }
  if (!have_base) throw Error(ErrorKind::DegenerateSet, "no four points in general position");
  const Collineation to_base = inverse(plane, frame_map(plane, base));

  Stabilizer result;
  std::vector<PointIndex> image(n);
  for (int fr = 0; fr < frobenius_powers(plane, kind); ++fr) {
    for (int t = 0; t < n; ++t) image[t] = fr == 0 ? set[t] : plane.frobenius(set[t], fr);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (plane.collinear(image[i], image[j], image[k])) continue;
          for (int l = 0; l < n; ++l) {
            if (l == i || l == j || l == k) continue;
            if (!in_general_position(plane, image[i], image[j], image[k], image[l])) continue;
            Collineation to_frame = frame_map(plane, {image[i], image[j], image[k], image[l]});
            to_frame.frob = fr;
            Collineation g = compose(plane, to_base, to_frame);
            bool fixes = true;
            for (PointIndex p : set)
              if (!member[apply(plane, g, p)]) {
                fixes = false;
                break;
              }
            if (fixes) result.elements.push_back(g);
          }
        }
      }
  }
  std::sort(result.elements.begin(), result.elements.end());
  result.elements.erase(std::unique(result.elements.begin(), result.elements.end()), result.elements.end());
  result.structure = describe_group(plane, result.elements);
  return result;
}

}  // namespace arcs
