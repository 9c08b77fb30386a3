// Command-line front end: classify, find-min, verify, stabilizer, bound,
// extend and resolve-gf32.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arcs/certificate.hpp"
#include "arcs/search.hpp"

namespace {

using namespace arcs;
using nlohmann::ordered_json;

constexpr int kExitInvalid = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;

struct PlaneOptions {
  int q = 0;
  std::string group = "pgl";
  std::string modulus;
};

struct RunOptions {
  int threshold = 8;
  int bound = 0;
  int workers = 1;
  std::string proportions;
  bool stealing = false;
  std::string checkpoint_dir;
  std::size_t max_level_size = 50'000'000;
};

Field field_for(const PlaneOptions& opt) {
  int q = opt.q;
  if (q < 2) throw Error(ErrorKind::BadConfig, "--q must be a prime power >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int h = 0;
  for (int x = q; x > 1; x /= p) {
    if (x % p != 0) throw Error(ErrorKind::BadConfig, std::to_string(q) + " is not a prime power");
    ++h;
  }
  if (opt.modulus.empty()) return Field::build(p, h);
  std::vector<int> coeffs;
  std::stringstream ss(opt.modulus);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(std::stoi(item));
  return Field::build(p, h, coeffs);
}

SearchConfig config_for(const PlaneOptions& popt, const RunOptions& ropt) {
  SearchConfig cfg;
  cfg.group = parse_group(popt.group);
  cfg.classification_threshold = ropt.threshold;
  cfg.workers = ropt.workers;
  if (!ropt.proportions.empty()) {
    cfg.proportions = parse_proportions(ropt.proportions);
    if (cfg.workers == 1) cfg.workers = int(cfg.proportions.size());
    if (int(cfg.proportions.size()) != cfg.workers)
      throw Error(ErrorKind::BadProportions, "--proportions needs one entry per worker");
  }
  cfg.max_level_size = ropt.max_level_size;
  cfg.balancing = ropt.stealing ? Balancing::Stealing : Balancing::Static;
  std::string dir = ropt.checkpoint_dir;
  if (dir.empty())
    if (const char* env = std::getenv("ARCS_CHECKPOINT_DIR")) dir = env;
  if (!dir.empty()) cfg.checkpoint_dir = dir;
  return cfg;
}

void add_plane_options(CLI::App* cmd, PlaneOptions& opt) {
  cmd->add_option("--q", opt.q, "Field order (prime power)")->required();
  cmd->add_option("--group", opt.group, "Equivalence group: pgl or pgammal")
      ->check(CLI::IsMember({"pgl", "pgammal"}));
  cmd->add_option("--modulus", opt.modulus, "Primitive polynomial, ascending coefficients, e.g. 1,0,1,0,0,1");
}

void add_run_options(CLI::App* cmd, RunOptions& opt) {
  cmd->add_option("--threshold", opt.threshold, "Largest classified arc size");
  cmd->add_option("--workers", opt.workers, "Worker threads");
  cmd->add_option("--proportions", opt.proportions, "Per-worker percentages, e.g. 10,20,30,40");
  cmd->add_flag("--stealing", opt.stealing, "Chunked work stealing instead of static ranges");
  cmd->add_option("--checkpoint-dir", opt.checkpoint_dir, "Directory for level checkpoints");
  cmd->add_option("--max-level-size", opt.max_level_size, "Most representatives kept per level");
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MemoryBudgetExceeded:
    case ErrorKind::CapacityExceeded: return kExitBudget;
    default: return kExitMalformed;
  }
}

int run_classify(const PlaneOptions& popt, RunOptions ropt) {
  Plane plane(field_for(popt));
  SearchConfig cfg = config_for(popt, ropt);
  cfg.target_bound = std::max(cfg.classification_threshold, 13);
  cfg.on_level = [](const ClassificationLevel& level) {
    std::cout << "size=" << level.size << " classes=" << level.count() << " complete=" << level.complete.size()
              << std::endl;
  };
  classify(plane, cfg);
  return 0;
}

int run_find_min(const PlaneOptions& popt, const RunOptions& ropt, const std::string& out) {
  Plane plane(field_for(popt));
  SearchConfig cfg = config_for(popt, ropt);
  cfg.classification_threshold = std::max(4, ropt.threshold);
  cfg.target_bound = ropt.bound > 0 ? ropt.bound : plane.q() + 2;
  if (cfg.classification_threshold > cfg.target_bound) cfg.classification_threshold = cfg.target_bound;
  auto result = min_complete_size(plane, cfg);
  if (result.t > cfg.target_bound) {
    std::cerr << "no complete arc of size <= " << cfg.target_bound << "\n";
    return kExitBudget;
  }
  std::cout << "t=" << result.t << "\n";
  std::cout << "lower_bound=" << result.lower_bound << "\n";
  std::cout << "classes_pgl=" << result.counts.pgl << "\n";
  if (result.counts.pgammal) std::cout << "classes_pgammal=" << *result.counts.pgammal << "\n";
  ArcCertificate cert = make_certificate(plane, cfg.group, result.classes.front());
  std::cout << serialize_certificate(cert);
  if (!out.empty()) save_certificate(out, cert);
  return 0;
}

int run_verify(const std::string& file) {
  ArcCertificate cert = load_certificate(file);
  VerifyReport report = verify(cert);
  std::cout << to_json(report).dump(2) << "\n";
  return report.valid ? 0 : kExitInvalid;
}

int run_stabilizer(const std::string& file) {
  ArcCertificate cert = load_certificate(file);
  auto [plane, points] = materialize(cert);
  if (find_collinear_triple(plane, points)) throw Error(ErrorKind::DegenerateSet, "point set is not an arc");
  Stabilizer stab = stabilizer(plane, points, cert.group);
  ordered_json out;
  out["order"] = stab.structure.order;
  out["name"] = stab.structure.name;
  ordered_json orders = ordered_json::object();
  for (auto [order, count] : stab.structure.element_orders) orders[std::to_string(order)] = count;
  out["element_orders"] = orders;
  out["generators"] = ordered_json::array();
  for (const auto& g : generators(plane, stab.elements)) {
    ordered_json j;
    j["matrix"] = g.matrix;
    j["frob"] = g.frob;
    out["generators"].push_back(j);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_extend(const std::string& file, int prefix, int bound) {
  ArcCertificate cert = load_certificate(file);
  auto [plane, points] = materialize(cert);
  std::sort(points.begin(), points.end());
  if (prefix > 0 && std::size_t(prefix) < points.size()) points.resize(std::size_t(prefix));
  auto start = std::chrono::steady_clock::now();
  ExtendStats stats;
  auto found = extend(plane, 0, points, bound, cert.group, nullptr, &stats);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "start_size=" << points.size() << "\n";
  std::cout << "bound=" << bound << "\n";
  std::cout << "nodes=" << stats.nodes << "\n";
  std::cout << "complete_found=" << found.size() << "\n";
  std::cout << "seconds=" << secs << "\n";
  for (const auto& f : found) std::cout << serialize_certificate(make_certificate(plane, cert.group, f));
  return 0;
}

int run_resolve(const std::string& out, const std::string& fixtures) {
  auto res = resolve_gf32_polynomial(k2_printed(), k3_printed());
  std::string text = to_json(res).dump(2) + "\n";
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out, std::ios::trunc);
    f << text;
  }
  if (!fixtures.empty()) {
    std::filesystem::create_directories(fixtures);
    for (const PrintedArc* arc : {&k2_printed(), &k3_printed()}) {
      ArcCertificate cert = gf32_certificate(*arc, res.chosen);
      cert.metadata["modulus_resolution"] =
          res.passing.empty() ? "no candidate satisfies every claim; nearest candidate" : "passes every claim";
      std::string name = arc->name == "K2" ? "k2.json" : "k3.json";
      save_certificate(std::filesystem::path(fixtures) / name, cert);
    }
    save_certificate(std::filesystem::path(fixtures) / "k1.json", k1_certificate());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete arcs in PG(2,q): classification, search and certificate checks"};
  app.require_subcommand(1);

  PlaneOptions popt;
  RunOptions ropt;
  std::string cert_file, out_file, fixtures_dir;
  int prefix = 0, bound = 13;
  int bound_q = 0;

  auto* classify_cmd = app.add_subcommand("classify", "Classify arcs up to the threshold size");
  add_plane_options(classify_cmd, popt);
  add_run_options(classify_cmd, ropt);

  auto* find_cmd = app.add_subcommand("find-min", "Compute t(2,q) with a witness certificate");
  add_plane_options(find_cmd, popt);
  add_run_options(find_cmd, ropt);
  find_cmd->add_option("--bound", ropt.bound, "Largest complete-arc size to search (default q+2)");
  find_cmd->add_option("--out", out_file, "Write the witness certificate here");

  auto* verify_cmd = app.add_subcommand("verify", "Recompute and check a certificate's claims");
  verify_cmd->add_option("certificate", cert_file)->required();

  auto* stab_cmd = app.add_subcommand("stabilizer", "Stabilizer order, name and generators");
  stab_cmd->add_option("certificate", cert_file)->required();

  auto* bound_cmd = app.add_subcommand("bound", "Lower bound for t(2,q)");
  bound_cmd->add_option("--q", bound_q)->required();

  auto* extend_cmd = app.add_subcommand("extend", "Backtrack from the arc in a certificate");
  extend_cmd->add_option("certificate", cert_file)->required();
  extend_cmd->add_option("--prefix", prefix, "Use only the first N points (by index)");
  extend_cmd->add_option("--bound", bound, "Largest complete-arc size to report");

  auto* resolve_cmd = app.add_subcommand("resolve-gf32", "Sweep GF(32) moduli for the printed K2/K3 arcs");
  resolve_cmd->add_option("--out", out_file, "Write the sweep report here");
  resolve_cmd->add_option("--fixtures", fixtures_dir, "Write k1/k2/k3 certificates into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    if (*classify_cmd) return run_classify(popt, ropt);
    if (*find_cmd) return run_find_min(popt, ropt, out_file);
    if (*verify_cmd) return run_verify(cert_file);
    if (*stab_cmd) return run_stabilizer(cert_file);
    if (*bound_cmd) {
      std::cout << lower_bound(bound_q) << "\n";
      return 0;
    }
    if (*extend_cmd) return run_extend(cert_file, prefix, bound);
    if (*resolve_cmd) return run_resolve(out_file, fixtures_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return 0;
}
