#include <algorithm>

#include "arcs/certificate.hpp"

namespace arcs {

namespace {

using nlohmann::ordered_json;

ordered_json coords_json(const Plane& plane, PointIndex p) {
  const Triple& t = plane.point(p);
  return ordered_json::array({t[0], t[1], t[2]});
}

}  // namespace

std::optional<std::array<PointIndex, 3>> find_collinear_triple(const Plane& plane, std::span<const PointIndex> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (plane.det(plane.point(points[i]), plane.point(points[j]), plane.point(points[k])) == 0)
          return std::array<PointIndex, 3>{points[i], points[j], points[k]};
  return std::nullopt;
}

std::optional<PointIndex> find_uncovered_point(const Plane& plane, std::span<const PointIndex> points) {
  std::vector<char> covered(plane.size(), 0);
  for (PointIndex p : points) covered[p] = 1;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Triple line = plane.cross(plane.point(points[i]), plane.point(points[j]));
      for (std::size_t x = 0; x < plane.size(); ++x)
        if (!covered[x] && plane.dot(plane.point(PointIndex(x)), line) == 0) covered[x] = 1;
    }
  for (std::size_t x = 0; x < plane.size(); ++x)
    if (!covered[x]) return PointIndex(x);
  return std::nullopt;
}

std::pair<Plane, std::vector<PointIndex>> materialize(const ArcCertificate& cert) {
  Field field = [&] {
    try {
      return Field::build(cert.field);
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedCertificate, std::string("invalid field: ") + e.what());
    }
  }();
  Plane plane = [&] {
    try {
      return Plane(std::move(field));
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedCertificate, std::string("unsupported plane: ") + e.what());
    }
  }();
  std::vector<PointIndex> idx;
  for (const auto& t : cert.points) idx.push_back(plane.index_of(t));
  std::vector<PointIndex> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::MalformedCertificate, "points are not pairwise distinct after normalization");
  return {std::move(plane), std::move(idx)};
}

VerifyReport verify(const ArcCertificate& cert) {
  auto [plane, points] = materialize(cert);
  VerifyReport report;

  auto triple = find_collinear_triple(plane, points);
  report.is_arc = !triple;
  std::optional<PointIndex> uncovered;
  if (report.is_arc) {
    uncovered = find_uncovered_point(plane, points);
    report.is_complete = !uncovered;
  }

  if (cert.claims.is_arc != report.is_arc) {
    ClaimFailure f{"is_arc", cert.claims.is_arc, report.is_arc, nullptr};
    if (triple)
      f.witness = {{"collinear_triple", ordered_json::array({coords_json(plane, (*triple)[0]),
                                                                coords_json(plane, (*triple)[1]),
                                                                coords_json(plane, (*triple)[2])})}};
    report.failures.push_back(std::move(f));
  }
  if (cert.claims.is_complete != report.is_complete) {
    ClaimFailure f{"is_complete", cert.claims.is_complete, report.is_complete, nullptr};
    if (uncovered) f.witness = {{"uncovered_point", coords_json(plane, *uncovered)}};
    if (triple)
      f.witness = {{"collinear_triple", ordered_json::array({coords_json(plane, (*triple)[0]),
                                                                coords_json(plane, (*triple)[1]),
                                                                coords_json(plane, (*triple)[2])})}};
    report.failures.push_back(std::move(f));
  }

  const bool wants_stabilizer = cert.claims.stabilizer_order || cert.claims.stabilizer_name;
  if (report.is_arc && points.size() >= 4) {
    Stabilizer stab = stabilizer(plane, points, cert.group);
    report.stabilizer_order = stab.structure.order;
    report.stabilizer_name = stab.structure.name;
  }
  if (wants_stabilizer) {
    auto actual = [](const auto& v) -> ordered_json {
      if (v) return *v;
      return "not computable (needs an arc with four points in general position)";
    };
    if (cert.claims.stabilizer_order && cert.claims.stabilizer_order != report.stabilizer_order)
      report.failures.push_back(
          {"stabilizer_order", *cert.claims.stabilizer_order, actual(report.stabilizer_order), nullptr});
    if (cert.claims.stabilizer_name && cert.claims.stabilizer_name != report.stabilizer_name)
      report.failures.push_back(
          {"stabilizer_name", *cert.claims.stabilizer_name, actual(report.stabilizer_name), nullptr});
  }
  report.valid = report.failures.empty();
  return report;
}

ordered_json to_json(const VerifyReport& report) {
  ordered_json out;
  out["valid"] = report.valid;
  ordered_json computed;
  computed["is_arc"] = report.is_arc;
  computed["is_complete"] = report.is_complete;
  if (report.stabilizer_order) computed["stabilizer_order"] = *report.stabilizer_order;
  if (report.stabilizer_name) computed["stabilizer_name"] = *report.stabilizer_name;
  out["computed"] = computed;
  out["failures"] = ordered_json::array();
  for (const auto& f : report.failures) {
    ordered_json j;
    j["claim"] = f.claim;
    j["expected"] = f.expected;
    j["actual"] = f.actual;
    if (!f.witness.is_null()) j["witness"] = f.witness;
    out["failures"].push_back(j);
  }
  return out;
}

}  // namespace arcs
