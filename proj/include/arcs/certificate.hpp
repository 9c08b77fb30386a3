#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcs/collineation.hpp"
#include "json.hpp"

namespace arcs {

struct Claims {
  bool is_arc = true;
  bool is_complete = false;
  std::optional<std::uint64_t> stabilizer_order;
  std::optional<std::string> stabilizer_name;

  friend bool operator==(const Claims&, const Claims&) = default;
};

/// An arc with its field, equivalence group and checkable claims. Points are
/// coordinate triples of element codes.
struct ArcCertificate {
  FieldParams field;
  GroupKind group = GroupKind::PGL;
  std::vector<Triple> points;
  Claims claims;
  /// Free-form provenance; kept verbatim, never used for verification.
  nlohmann::ordered_json metadata;
};

/// Throws MalformedCertificate for invalid JSON or a wrong shape.
ArcCertificate parse_certificate(std::string_view text);
ArcCertificate load_certificate(const std::filesystem::path& file);

/// Fixed key order; one point per line; compact inner objects.
std::string serialize_certificate(const ArcCertificate& cert);
void save_certificate(const std::filesystem::path& file, const ArcCertificate& cert);

/// Normalized points sorted by point index.
std::vector<Triple> sorted_points(const Plane& plane, std::span<const PointIndex> points);

/// Certificate whose claims are recomputed from scratch for the given points.
ArcCertificate make_certificate(const Plane& plane, GroupKind group, std::span<const PointIndex> points);

std::optional<std::array<PointIndex, 3>> find_collinear_triple(const Plane& plane, std::span<const PointIndex> points);
/// First point (by index) outside the set that lies on no secant of it.
std::optional<PointIndex> find_uncovered_point(const Plane& plane, std::span<const PointIndex> points);

struct ClaimFailure {
  std::string claim;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json actual;
  nlohmann::ordered_json witness;
};

struct VerifyReport {
  bool valid = false;
  bool is_arc = false;
  bool is_complete = false;
  std::optional<std::uint64_t> stabilizer_order;
  std::optional<std::string> stabilizer_name;
  std::vector<ClaimFailure> failures;
};

/// Recomputes every claim using only the field, plane and group layers.
/// Throws MalformedCertificate (bad field, duplicate points) or FieldMismatch.
VerifyReport verify(const ArcCertificate& cert);
nlohmann::ordered_json to_json(const VerifyReport& report);

/// Builds the plane for a certificate and indexes its points.
std::pair<Plane, std::vector<PointIndex>> materialize(const ArcCertificate& cert);

/// The frame (0,0,1), (0,1,0), (1,0,0), (1,1,1) as coordinates.
std::vector<Triple> frame_coordinates();

/// K1: a complete 14-arc in PG(2,31) whose stabilizer is S3.
ArcCertificate k1_certificate();

/// A 14-arc in PG(2,32) given as the frame plus points (1, xi^a, xi^b).
struct PrintedArc {
  std::string name;
  std::vector<std::pair<int, int>> exponents;
  std::uint64_t stabilizer_order = 1;
  std::string stabilizer_name;
};

const PrintedArc& k2_printed();
const PrintedArc& k3_printed();

/// Realizes a printed arc over GF(2^5) with the given modulus. Claims are
/// the printed ones; metadata records the exponents and modulus.
ArcCertificate gf32_certificate(const PrintedArc& arc, const std::vector<int>& modulus);

struct ArcCheck {
  std::string name;
  bool is_arc = false;
  std::optional<std::array<Triple, 3>> collinear_triple;
  bool is_complete = false;
  std::optional<Triple> uncovered_point;
  std::optional<std::uint64_t> stabilizer_order;
  std::optional<std::string> stabilizer_name;
  bool matches_claims = false;
};

struct CandidateReport {
  std::vector<int> modulus;
  std::vector<ArcCheck> arcs;
  bool all_claims_hold = false;
};

struct Gf32Resolution {
  std::vector<CandidateReport> candidates;
  std::vector<std::vector<int>> passing;
  /// The fixture default: the first passing modulus, or the candidate with
  /// the most matching claims when none passes.
  std::vector<int> chosen;
};

/// Tries every primitive degree-5 polynomial over GF(2).
Gf32Resolution resolve_gf32_polynomial(const PrintedArc& k2, const PrintedArc& k3);
nlohmann::ordered_json to_json(const Gf32Resolution& resolution);

}  // namespace arcs
