#include <algorithm>
#include <fstream>
#include <sstream>

#include "arcs/certificate.hpp"

namespace arcs {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorKind::MalformedCertificate, why); }

void only_keys(const ordered_json& obj, std::initializer_list<const char*> allowed, const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) malformed(std::string("unexpected key '") + it.key() + "' in " + where);
  }
}

template <class T>
T get(const ordered_json& obj, const char* key, const char* where) {
  if (!obj.contains(key)) malformed(std::string("missing '") + key + "' in " + where);
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("bad value for '") + key + "' in " + where);
  }
}

}  // namespace

ArcCertificate parse_certificate(std::string_view text) {
  ordered_json doc = ordered_json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) malformed("not valid JSON");
  if (!doc.is_object()) malformed("certificate must be a JSON object");
  only_keys(doc, {"field", "group", "points", "claims", "metadata"}, "certificate");

  ArcCertificate cert;
  const auto field = get<ordered_json>(doc, "field", "certificate");
  if (!field.is_object()) malformed("'field' must be an object");
  only_keys(field, {"p", "h", "modulus"}, "field");
  cert.field.p = get<int>(field, "p", "field");
  cert.field.h = get<int>(field, "h", "field");
  cert.field.modulus = get<std::vector<int>>(field, "modulus", "field");

  try {
    cert.group = parse_group(get<std::string>(doc, "group", "certificate"));
  } catch (const Error& e) {
    malformed(e.what());
  }

  const auto points = get<ordered_json>(doc, "points", "certificate");
  if (!points.is_array()) malformed("'points' must be an array");
  for (const auto& pt : points) {
    if (!pt.is_array() || pt.size() != 3) malformed("each point must be a triple");
    Triple t{};
    for (int i = 0; i < 3; ++i) {
      if (!pt[i].is_number_integer()) malformed("point coordinates must be integer codes");
      long long v = pt[i].get<long long>();
      if (v < 0 || v >= kMaxFieldOrder) throw Error(ErrorKind::FieldMismatch, "coordinate code out of range");
      t[i] = Elem(v);
    }
    cert.points.push_back(t);
  }

  const auto claims = get<ordered_json>(doc, "claims", "certificate");
  if (!claims.is_object()) malformed("'claims' must be an object");
  only_keys(claims, {"is_arc", "is_complete", "stabilizer_order", "stabilizer_name"}, "claims");
  cert.claims.is_arc = get<bool>(claims, "is_arc", "claims");
  cert.claims.is_complete = get<bool>(claims, "is_complete", "claims");
  if (claims.contains("stabilizer_order"))
    cert.claims.stabilizer_order = get<std::uint64_t>(claims, "stabilizer_order", "claims");
  if (claims.contains("stabilizer_name"))
    cert.claims.stabilizer_name = get<std::string>(claims, "stabilizer_name", "claims");

  if (doc.contains("metadata")) {
    cert.metadata = doc.at("metadata");
  }
  return cert;
}

ArcCertificate load_certificate(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) malformed("cannot read " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

std::string serialize_certificate(const ArcCertificate& cert) {
  ordered_json field;
  field["p"] = cert.field.p;
  field["h"] = cert.field.h;
  field["modulus"] = cert.field.modulus;
  ordered_json claims;
  claims["is_arc"] = cert.claims.is_arc;
  claims["is_complete"] = cert.claims.is_complete;
  if (cert.claims.stabilizer_order) claims["stabilizer_order"] = *cert.claims.stabilizer_order;
  if (cert.claims.stabilizer_name) claims["stabilizer_name"] = *cert.claims.stabilizer_name;

  std::ostringstream os;
  os << "{\n";
  os << "  \"field\": " << field.dump() << ",\n";
  os << "  \"group\": " << ordered_json(std::string(to_string(cert.group))).dump() << ",\n";
  os << "  \"points\": [";
  for (std::size_t i = 0; i < cert.points.size(); ++i) {
    const auto& p = cert.points[i];
    os << (i ? ",\n    " : "\n    ") << "[" << p[0] << ", " << p[1] << ", " << p[2] << "]";
  }
  os << (cert.points.empty() ? "],\n" : "\n  ],\n");
  os << "  \"claims\": " << claims.dump();
  if (!cert.metadata.is_null()) os << ",\n  \"metadata\": " << cert.metadata.dump();
  os << "\n}\n";
  return os.str();
}

void save_certificate(const std::filesystem::path& file, const ArcCertificate& cert) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::BadConfig, "cannot write " + file.string());
  out << serialize_certificate(cert);
}

std::vector<Triple> sorted_points(const Plane& plane, std::span<const PointIndex> points) {
  std::vector<PointIndex> idx(points.begin(), points.end());
  std::sort(idx.begin(), idx.end());
  std::vector<Triple> out;
  for (PointIndex p : idx) out.push_back(plane.point(p));
  return out;
}

ArcCertificate make_certificate(const Plane& plane, GroupKind group, std::span<const PointIndex> points) {
  ArcCertificate cert;
  cert.field = plane.field().params();
  cert.group = group;
  cert.points = sorted_points(plane, points);
  VerifyReport computed = verify(cert);
  cert.claims.is_arc = computed.is_arc;
  cert.claims.is_complete = computed.is_complete;
  cert.claims.stabilizer_order = computed.stabilizer_order;
  cert.claims.stabilizer_name = computed.stabilizer_name;
  return cert;
}

std::vector<Triple> frame_coordinates() { return {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}; }

ArcCertificate k1_certificate() {
  ArcCertificate cert;
  cert.field = Field::build(31, 1).params();
  cert.group = GroupKind::PGL;
  cert.points = frame_coordinates();
  const int tail[10][2] = {{3, 10}, {5, 11}, {9, 29}, {12, 19}, {13, 6}, {14, 3}, {16, 9}, {20, 26}, {21, 15}, {22, 16}};
  for (const auto& t : tail) cert.points.push_back({1, Elem(t[0]), Elem(t[1])});
  cert.claims = {true, true, 6, "S3"};
  Plane plane(Field::build(cert.field));
  std::vector<PointIndex> idx;
  for (const auto& t : cert.points) idx.push_back(plane.index_of(t));
  cert.points = sorted_points(plane, idx);
  return cert;
}

}  // namespace arcs
