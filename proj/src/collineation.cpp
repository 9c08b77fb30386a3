#include "arcs/collineation.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace arcs {

namespace {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[i][k], b[k][j]));
      r[i][j] = s;
    }
  return r;
}

Matrix frobenius_entries(const Field& f, const Matrix& m, int i) {
  if (i == 0) return m;
  Matrix r{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r[a][b] = f.frobenius(m[a][b], i);
  return r;
}

Matrix adjugate(const Plane& plane, const Matrix& m) {
  // Rows of adj(M) are cross products of pairs of columns of M.
  Triple c0{m[0][0], m[1][0], m[2][0]};
  Triple c1{m[0][1], m[1][1], m[2][1]};
  Triple c2{m[0][2], m[1][2], m[2][2]};
  Triple r0 = plane.cross(c1, c2), r1 = plane.cross(c2, c0), r2 = plane.cross(c0, c1);
  return {r0, r1, r2};
}

Elem determinant(const Plane& plane, const Matrix& m) {
  Triple c0{m[0][0], m[1][0], m[2][0]};
  Triple c1{m[0][1], m[1][1], m[2][1]};
  Triple c2{m[0][2], m[1][2], m[2][2]};
  return plane.det(c0, c1, c2);
}

Matrix normalized(const Field& f, Matrix m) {
  for (const auto& row : m)
    for (Elem e : row)
      if (e != 0) {
        Elem s = f.inv_unchecked(e);
        for (auto& r : m)
          for (Elem& x : r) x = f.mul(x, s);
        return m;
      }
  return m;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

std::string_view to_string(GroupKind kind) { return kind == GroupKind::PGL ? "pgl" : "pgammal"; }

GroupKind parse_group(std::string_view text) {
  if (text == "pgl") return GroupKind::PGL;
  if (text == "pgammal") return GroupKind::PGammaL;
  throw Error(ErrorKind::BadConfig, "unknown group '" + std::string(text) + "' (expected pgl or pgammal)");
}

Collineation identity_collineation() {
  Collineation g;
  g.matrix = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  return g;
}

Collineation make_collineation(const Plane& plane, const Matrix& m, int frob) {
  const Field& f = plane.field();
  for (const auto& row : m)
    for (Elem e : row)
      if (!f.contains(e)) throw Error(ErrorKind::FieldMismatch, "matrix entry outside the field");
  if (frob < 0 || frob >= f.h()) throw Error(ErrorKind::BadConfig, "Frobenius exponent out of range");
  if (determinant(plane, m) == 0) throw Error(ErrorKind::SingularMatrix, "collineation matrix is singular");
  return {normalized(f, m), frob};
}

PointIndex apply(const Plane& plane, const Collineation& g, PointIndex p) {
  const Field& f = plane.field();
  const Triple& x = plane.point(g.frob == 0 ? p : plane.frobenius(p, g.frob));
  Elem y[3];
  for (int i = 0; i < 3; ++i)
    y[i] = f.add(f.add(f.mul(g.matrix[i][0], x[0]), f.mul(g.matrix[i][1], x[1])), f.mul(g.matrix[i][2], x[2]));
  return plane.index_of_unchecked(y[0], y[1], y[2]);
}

std::vector<PointIndex> apply_sorted(const Plane& plane, const Collineation& g, std::span<const PointIndex> set) {
  std::vector<PointIndex> out;
  out.reserve(set.size());
  for (PointIndex p : set) out.push_back(apply(plane, g, p));
  std::sort(out.begin(), out.end());
  return out;
}

Collineation compose(const Plane& plane, const Collineation& a, const Collineation& b) {
  const Field& f = plane.field();
  Matrix m = multiply(f, a.matrix, frobenius_entries(f, b.matrix, a.frob));
  return {normalized(f, m), mod(a.frob + b.frob, f.h())};
}

Collineation inverse(const Plane& plane, const Collineation& g) {
  const Field& f = plane.field();
  int back = mod(-g.frob, f.h());
  Matrix m = frobenius_entries(f, adjugate(plane, g.matrix), back);
  return {normalized(f, m), back};
}

bool is_identity(const Collineation& g) { return g == identity_collineation(); }

int element_order(const Plane& plane, const Collineation& g) {
  Collineation x = g;
  int order = 1;
  while (!is_identity(x)) {
    x = compose(plane, g, x);
    ++order;
  }
  return order;
}

Collineation frame_map(const Plane& plane, const std::array<PointIndex, 4>& src) {
  const Field& f = plane.field();
  const Triple& a = plane.point(src[0]);
  const Triple& b = plane.point(src[1]);
  const Triple& c = plane.point(src[2]);
  const Triple& d = plane.point(src[3]);
  // adj([c b a]) sends a, b, c to multiples of e3, e2, e1.
  Triple r0 = plane.cross(b, a), r1 = plane.cross(a, c), r2 = plane.cross(c, b);
  if (plane.dot(r0, c) == 0) throw Error(ErrorKind::DegenerateQuadruple, "first three points are collinear");
  Elem u0 = plane.dot(r0, d), u1 = plane.dot(r1, d), u2 = plane.dot(r2, d);
  if (u0 == 0 || u1 == 0 || u2 == 0)
    throw Error(ErrorKind::DegenerateQuadruple, "fourth point is collinear with two others");
  Elem s0 = f.mul(u1, u2), s1 = f.mul(u0, u2), s2 = f.mul(u0, u1);
  Matrix m{};
  for (int j = 0; j < 3; ++j) {
    m[0][j] = f.mul(s0, r0[j]);
    m[1][j] = f.mul(s1, r1[j]);
    m[2][j] = f.mul(s2, r2[j]);
  }
  return {normalized(f, m), 0};
}

int frobenius_powers(const Plane& plane, GroupKind kind) {
  return kind == GroupKind::PGL ? 1 : plane.field().h();
}

std::uint64_t group_order(int q, GroupKind kind) {
  int h = 0;
  int p = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) throw Error(ErrorKind::BadConfig, "q must be a prime power");
  for (int x = q; x > 1; x /= p) {
    if (x % p != 0) throw Error(ErrorKind::BadConfig, "q must be a prime power");
    ++h;
  }
  unsigned __int128 Q = unsigned(q);
  unsigned __int128 order = Q * Q * Q * (Q * Q * Q - 1) * (Q * Q - 1);
  if (kind == GroupKind::PGammaL) order *= unsigned(h);
  if (order > std::numeric_limits<std::uint64_t>::max())
    throw Error(ErrorKind::CapacityExceeded, "group order does not fit in 64 bits");
  return std::uint64_t(order);
}

Collineation random_collineation(const Plane& plane, GroupKind kind, std::mt19937_64& rng) {
  const Field& f = plane.field();
  std::uniform_int_distribution<int> entry(0, f.q() - 1);
  std::uniform_int_distribution<int> frob(0, frobenius_powers(plane, kind) - 1);
  for (;;) {
    Matrix m{};
    for (auto& row : m)
      for (Elem& e : row) e = Elem(entry(rng));
    if (determinant(plane, m) != 0) return {normalized(f, m), frob(rng)};
  }
}

std::vector<Collineation> generate_group(const Plane& plane, std::span<const Collineation> gens) {
  std::set<Collineation> seen{identity_collineation()};
  std::vector<Collineation> frontier{identity_collineation()};
  while (!frontier.empty()) {
    std::vector<Collineation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Collineation y = compose(plane, g, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Collineation> generators(const Plane& plane, std::span<const Collineation> elements) {
  std::vector<Collineation> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Collineation> gens;
  std::set<Collineation> span{identity_collineation()};
  for (const auto& e : sorted) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    auto closure = generate_group(plane, gens);
    span = std::set<Collineation>(closure.begin(), closure.end());
  }
  return gens;
}

GroupStructure describe_group(const Plane& plane, std::span<const Collineation> elements) {
  GroupStructure s;
  s.order = elements.size();
  for (const auto& e : elements) ++s.element_orders[element_order(plane, e)];
  auto has = [&](int order) { return s.element_orders.contains(order); };
  switch (s.order) {
    case 1: s.name = "trivial"; break;
    case 2: s.name = "Z2"; break;
    case 3: s.name = "Z3"; break;
    case 4: s.name = has(4) ? "Z4" : "Z2xZ2"; break;
    case 5: s.name = "Z5"; break;
    case 6: s.name = has(6) ? "Z6" : "S3"; break;
    default: {
      std::string text = "other(" + std::to_string(s.order) + ";";
      bool first = true;
      for (auto [order, count] : s.element_orders) {
        if (!first) text += ",";
        first = false;
        text += std::to_string(order) + "^" + std::to_string(count);
      }
      s.name = text + ")";
    }
  }
  return s;
}

}  // namespace arcs
