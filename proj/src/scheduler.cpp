#include "arcs/scheduler.hpp"

#include <numeric>
#include <sstream>
#include <string>

namespace arcs {

Partition partition(std::size_t job_count, std::span<const int> proportions) {
  if (proportions.empty()) throw Error(ErrorKind::BadProportions, "no proportions given");
  long total = 0;
  for (int p : proportions) {
    if (p <= 0) throw Error(ErrorKind::BadProportions, "proportions must be positive");
    total += p;
  }
  if (total != 100) throw Error(ErrorKind::BadProportions, "proportions sum to " + std::to_string(total) + ", not 100");

  const std::size_t w = proportions.size();
  std::vector<std::size_t> sizes(w);
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < w; ++k) {
    sizes[k] = job_count / 100 * std::size_t(proportions[k]) + job_count % 100 * std::size_t(proportions[k]) / 100;
    assigned += sizes[k];
  }
  std::size_t remainder = job_count - assigned;
  for (std::size_t k = w - remainder; k < w; ++k) ++sizes[k];

  Partition part;
  part.proportions.assign(proportions.begin(), proportions.end());
  std::size_t begin = 0;
  for (std::size_t k = 0; k < w; ++k) {
    part.assignments.push_back({begin, begin + sizes[k]});
    begin += sizes[k];
  }
  return part;
}

std::vector<int> equal_proportions(int workers) {
  if (workers < 1 || workers > 100) throw Error(ErrorKind::BadProportions, "worker count must be in [1, 100]");
  std::vector<int> out(workers, 100 / workers);
  for (int k = workers - 100 % workers; k < workers; ++k) ++out[k];
  return out;
}

std::vector<int> parse_proportions(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadProportions, "cannot parse proportion '" + item + "'");
    }
  }
  long total = std::accumulate(out.begin(), out.end(), 0L);
  if (out.empty() || total != 100) throw Error(ErrorKind::BadProportions, "proportions must sum to 100");
  for (int v : out)
    if (v <= 0) throw Error(ErrorKind::BadProportions, "proportions must be positive");
  return out;
}

}  // namespace arcs
