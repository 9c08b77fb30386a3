#include "arcs/certificate.hpp"

namespace arcs {

namespace {

using nlohmann::ordered_json;

ordered_json triple_json(const Triple& t) { return ordered_json::array({t[0], t[1], t[2]}); }

}  // namespace

const PrintedArc& k2_printed() {
  static const PrintedArc arc{
      "K2",
      {{17, 2}, {27, 4}, {26, 13}, {2, 1}, {1, 28}, {18, 19}, {15, 9}, {20, 10}, {23, 29}, {10, 12}},
      4,
      "Z4"};
  return arc;
}

const PrintedArc& k3_printed() {
  static const PrintedArc arc{
      "K3",
      {{24, 1}, {7, 14}, {1, 28}, {8, 18}, {28, 10}, {22, 7}, {2, 22}, {23, 29}, {30, 13}, {25, 23}},
      5,
      "Z5"};
  return arc;
}

ArcCertificate gf32_certificate(const PrintedArc& arc, const std::vector<int>& modulus) {
  Field field = Field::build(2, 5, modulus);
  Plane plane(field);
  std::vector<PointIndex> idx;
  for (const auto& t : frame_coordinates()) idx.push_back(plane.index_of(t));
  for (auto [a, b] : arc.exponents) idx.push_back(plane.index_of({1, field.exp(a), field.exp(b)}));

  ArcCertificate cert;
  cert.field = field.params();
  cert.group = GroupKind::PGammaL;
  cert.points = sorted_points(plane, idx);
  cert.claims = {true, true, arc.stabilizer_order, arc.stabilizer_name};
  ordered_json exps = ordered_json::array();
  for (auto [a, b] : arc.exponents) exps.push_back({a, b});
  cert.metadata["name"] = arc.name;
  cert.metadata["construction"] = "frame plus points (1, xi^a, xi^b)";
  cert.metadata["xi_exponents"] = exps;
  cert.metadata["modulus"] = polynomial_to_string(modulus);
  return cert;
}

Gf32Resolution resolve_gf32_polynomial(const PrintedArc& k2, const PrintedArc& k3) {
  Gf32Resolution res;
  int best_score = -1;
  for (const auto& modulus : primitive_polynomials(2, 5)) {
    CandidateReport cand;
    cand.modulus = modulus;
    cand.all_claims_hold = true;
    int score = 0;
    for (const PrintedArc* printed : {&k2, &k3}) {
      ArcCertificate cert = gf32_certificate(*printed, modulus);
      auto [plane, points] = materialize(cert);
      ArcCheck check;
      check.name = printed->name;
      if (auto triple = find_collinear_triple(plane, points)) {
        check.collinear_triple = std::array<Triple, 3>{plane.point((*triple)[0]), plane.point((*triple)[1]),
                                                       plane.point((*triple)[2])};
      } else {
        check.is_arc = true;
        auto uncovered = find_uncovered_point(plane, points);
        check.is_complete = !uncovered;
        if (uncovered) check.uncovered_point = plane.point(*uncovered);
        Stabilizer stab = stabilizer(plane, points, GroupKind::PGammaL);
        check.stabilizer_order = stab.structure.order;
        check.stabilizer_name = stab.structure.name;
      }
      score += int(check.is_arc) + int(check.is_complete) + int(check.stabilizer_order == printed->stabilizer_order) +
               int(check.stabilizer_name == printed->stabilizer_name);
      check.matches_claims = check.is_arc && check.is_complete && check.stabilizer_order == printed->stabilizer_order &&
                             check.stabilizer_name == printed->stabilizer_name;
      cand.all_claims_hold = cand.all_claims_hold && check.matches_claims;
      cand.arcs.push_back(std::move(check));
    }
    if (cand.all_claims_hold) res.passing.push_back(modulus);
    if (score > best_score) {
      best_score = score;
      res.chosen = modulus;
    }
    res.candidates.push_back(std::move(cand));
  }
  if (!res.passing.empty()) res.chosen = res.passing.front();
  return res;
}

ordered_json to_json(const Gf32Resolution& resolution) {
  ordered_json out;
  out["candidate_count"] = resolution.candidates.size();
  out["candidates"] = ordered_json::array();
  for (const auto& cand : resolution.candidates) {
    ordered_json c;
    c["modulus"] = cand.modulus;
    c["polynomial"] = polynomial_to_string(cand.modulus);
    c["all_claims_hold"] = cand.all_claims_hold;
    c["arcs"] = ordered_json::array();
    for (const auto& a : cand.arcs) {
      ordered_json j;
      j["name"] = a.name;
      j["is_arc"] = a.is_arc;
      if (a.collinear_triple)
        j["collinear_triple"] = ordered_json::array(
            {triple_json((*a.collinear_triple)[0]), triple_json((*a.collinear_triple)[1]),
             triple_json((*a.collinear_triple)[2])});
      if (a.is_arc) {
        j["is_complete"] = a.is_complete;
        if (a.uncovered_point) j["uncovered_point"] = triple_json(*a.uncovered_point);
        j["stabilizer_order"] = *a.stabilizer_order;
        j["stabilizer_name"] = *a.stabilizer_name;
      }
      j["matches_claims"] = a.matches_claims;
      c["arcs"].push_back(j);
    }
    out["candidates"].push_back(c);
  }
  out["passing"] = resolution.passing;
  out["chosen"] = resolution.chosen;
  out["chosen_polynomial"] = polynomial_to_string(resolution.chosen);
  return out;
}

}  // namespace arcs
