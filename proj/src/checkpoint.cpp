#include <fstream>
#include <sstream>

#include "arcs/search.hpp"
#include "json.hpp"

namespace arcs {

std::filesystem::path level_path(const std::filesystem::path& dir, int size) {
  return dir / ("level_" + std::to_string(size) + ".txt");
}

void write_level(const std::filesystem::path& file, const Plane& plane, GroupKind group,
                 const ClassificationLevel& level) {
  std::filesystem::create_directories(file.parent_path());
  nlohmann::ordered_json header;
  header["q"] = plane.q();
  header["group"] = std::string(to_string(group));
  header["size"] = level.size;
  header["count"] = level.count();
  header["modulus"] = plane.field().params().modulus;

  auto tmp = file;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::BadConfig, "cannot write checkpoint " + tmp.string());
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < level.count(); ++i) {
      auto rep = level.representatives[i];
      for (std::size_t k = 0; k < rep.size(); ++k) out << (k ? " " : "") << rep[k];
      out << '\n';
    }
    if (!out) throw Error(ErrorKind::BadConfig, "checkpoint write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<ClassificationLevel> read_level(const std::filesystem::path& file, const Plane& plane,
                                              GroupKind group) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object()) return std::nullopt;
  try {
    if (header.at("q").get<int>() != plane.q()) return std::nullopt;
    if (header.at("group").get<std::string>() != to_string(group)) return std::nullopt;
    if (header.at("modulus").get<std::vector<int>>() != plane.field().params().modulus) return std::nullopt;
    ClassificationLevel level;
    level.size = header.at("size").get<int>();
    const auto count = header.at("count").get<std::size_t>();
    level.representatives = SetList(std::size_t(level.size));
    level.representatives.reserve(count);
    std::vector<PointIndex> rep;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      rep.clear();
      long v;
      while (row >> v) {
        if (v < 0 || std::size_t(v) >= plane.size()) return std::nullopt;
        rep.push_back(PointIndex(v));
      }
      if (rep.size() != std::size_t(level.size)) return std::nullopt;
      level.representatives.push_back(rep);
    }
    if (level.count() != count) return std::nullopt;
    for (std::size_t i = 0; i < level.count(); ++i) {
      auto r = level.representatives[i];
      if (Arc::from_points(plane, r).is_complete()) level.complete.push_back(i);
    }
    return level;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace arcs
