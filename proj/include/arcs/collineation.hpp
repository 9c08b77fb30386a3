#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arcs/plane.hpp"

namespace arcs {

enum class GroupKind { PGL, PGammaL };

std::string_view to_string(GroupKind kind);
/// Accepts "pgl" and "pgammal"; throws BadConfig otherwise.
GroupKind parse_group(std::string_view text);

using Matrix = std::array<std::array<Elem, 3>, 3>;

/// x -> matrix * x^(p^frob), up to scalars. The matrix is kept normalized
/// with its first nonzero entry (row-major) equal to 1.
struct Collineation {
  Matrix matrix{};
  int frob = 0;

  friend auto operator<=>(const Collineation&, const Collineation&) = default;
};

Collineation identity_collineation();

/// Validates invertibility (SingularMatrix) and normalizes the matrix.
Collineation make_collineation(const Plane& plane, const Matrix& m, int frob = 0);

PointIndex apply(const Plane& plane, const Collineation& g, PointIndex p);
std::vector<PointIndex> apply_sorted(const Plane& plane, const Collineation& g, std::span<const PointIndex> set);

/// (M1,f1) o (M2,f2) = (M1 * frob^f1(M2), f1 + f2 mod h); applies b first.
Collineation compose(const Plane& plane, const Collineation& a, const Collineation& b);
Collineation inverse(const Plane& plane, const Collineation& g);
bool is_identity(const Collineation& g);
int element_order(const Plane& plane, const Collineation& g);

/// The unique PGL element sending the ordered quadruple to the ordered
/// standard frame (0,0,1), (0,1,0), (1,0,0), (1,1,1).
/// Throws DegenerateQuadruple if three of the points are collinear.
Collineation frame_map(const Plane& plane, const std::array<PointIndex, 4>& src);

/// Number of Frobenius powers in the group: 1 for PGL, h for PGammaL.
int frobenius_powers(const Plane& plane, GroupKind kind);

/// |PGL(3,q)| = q^3 (q^3 - 1)(q^2 - 1), times h for PGammaL.
/// Throws CapacityExceeded when the order does not fit in 64 bits.
std::uint64_t group_order(int q, GroupKind kind);

Collineation random_collineation(const Plane& plane, GroupKind kind, std::mt19937_64& rng);

struct CanonicalForm {
  std::vector<PointIndex> canon;
  Collineation witness;
};

/// Lexicographically least image of a point set over the group, found by
/// sending every ordered general-position quadruple onto the standard frame.
/// Sets of size 1 to 3 map to fixed representatives.
class Canonizer {
 public:
  Canonizer(const Plane& plane, GroupKind kind);

  const Plane& plane() const noexcept { return *plane_; }
  GroupKind kind() const noexcept { return kind_; }

  /// Canonical sorted index list only. Allocation-free after warm-up.
  void canonical(std::span<const PointIndex> set, std::vector<PointIndex>& out);
  std::vector<PointIndex> canonical(std::span<const PointIndex> set) {
    std::vector<PointIndex> out;
    canonical(set, out);
    return out;
  }

  CanonicalForm canonicalize(std::span<const PointIndex> set);

 private:
  struct Best {
    bool found = false;
    int frob = 0;
    std::array<int, 4> quad{};
  };
  Best search(std::span<const PointIndex> set, std::vector<PointIndex>& others);
  CanonicalForm small_set(std::span<const PointIndex> set) const;

  const Plane* plane_;
  GroupKind kind_;
  std::vector<PointIndex> image_;
  std::vector<Triple> coords_;
  std::vector<std::array<Elem, 3>> weights_;
  std::vector<PointIndex> work_;
  std::vector<PointIndex> best_;
};

/// Convenience wrapper; throws EmptySet / DuplicatePoints / DegenerateSet.
CanonicalForm canonicalize(const Plane& plane, std::span<const PointIndex> set, GroupKind kind);

struct GroupStructure {
  std::uint64_t order = 1;
  /// element order -> number of elements of that order
  std::map<int, int> element_orders;
  /// trivial, Z2, Z3, Z4, Z2xZ2, Z5, Z6, S3 or other(...)
  std::string name;
};

GroupStructure describe_group(const Plane& plane, std::span<const Collineation> elements);

struct Stabilizer {
  std::vector<Collineation> elements;
  GroupStructure structure;
};

/// Full setwise stabilizer. Throws DegenerateSet without a general-position
/// quadruple.
Stabilizer stabilizer(const Plane& plane, std::span<const PointIndex> set, GroupKind kind);

/// A small generating set, chosen greedily in element order.
std::vector<Collineation> generators(const Plane& plane, std::span<const Collineation> elements);

/// Closure of a set of elements under composition.
std::vector<Collineation> generate_group(const Plane& plane, std::span<const Collineation> gens);

}  // namespace arcs
