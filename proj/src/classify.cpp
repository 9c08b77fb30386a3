#include "arcs/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace arcs {

void SetList::push_back(std::span<const PointIndex> set) {
  if (set.size() != stride_) throw Error(ErrorKind::BadConfig, "set size does not match list stride");
  data_.insert(data_.end(), set.begin(), set.end());
}

void SetList::sort_unique() {
  const std::size_t n = size();
  if (n < 2) return;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    auto x = (*this)[a], y = (*this)[b];
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<PointIndex> out;
  out.reserve(data_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto cur = (*this)[order[i]];
    if (i > 0) {
      auto prev = (*this)[order[i - 1]];
      if (std::equal(cur.begin(), cur.end(), prev.begin())) continue;
    }
    out.insert(out.end(), cur.begin(), cur.end());
  }
  data_ = std::move(out);
}

void SetList::merge_unique(const SetList& other) {
  if (other.empty()) return;
  if (empty()) {
    *this = other;
    return;
  }
  std::vector<PointIndex> out;
  out.reserve(data_.size() + other.data_.size());
  std::size_t i = 0, j = 0;
  const std::size_t n = size(), m = other.size();
  while (i < n || j < m) {
    if (j == m) {
      out.insert(out.end(), (*this)[i].begin(), (*this)[i].end());
      ++i;
      continue;
    }
    if (i == n) {
      out.insert(out.end(), other[j].begin(), other[j].end());
      ++j;
      continue;
    }
    auto a = (*this)[i], b = other[j];
    if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) {
      out.insert(out.end(), a.begin(), a.end());
      ++i;
    } else if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) {
      out.insert(out.end(), b.begin(), b.end());
      ++j;
    } else {
      out.insert(out.end(), a.begin(), a.end());
      ++i;
      ++j;
    }
  }
  data_ = std::move(out);
}

std::vector<int> effective_proportions(const SearchConfig& config) {
  if (config.workers < 1) throw Error(ErrorKind::BadConfig, "worker count must be positive");
  if (config.proportions.empty()) return equal_proportions(config.workers);
  if (int(config.proportions.size()) != config.workers)
    throw Error(ErrorKind::BadProportions, "need one proportion per worker");
  partition(0, config.proportions);  // validates
  return config.proportions;
}

namespace {

void validate(const Plane& plane, const SearchConfig& config) {
  if (config.classification_threshold < 4)
    throw Error(ErrorKind::BadConfig, "classification threshold must be at least 4");
  if (config.classification_threshold > config.target_bound)
    throw Error(ErrorKind::BadConfig, "classification threshold exceeds the target bound");
  (void)plane;
  effective_proportions(config);
}

void mark_complete(const Plane& plane, ClassificationLevel& level) {
  level.complete.clear();
  for (std::size_t i = 0; i < level.count(); ++i)
    if (Arc::from_points(plane, level.representatives[i]).is_complete()) level.complete.push_back(i);
}

ClassificationLevel next_level(const Plane& plane, const ClassificationLevel& prev, const SearchConfig& config) {
  const int size = prev.size + 1;
  ClassificationLevel next;
  next.size = size;
  next.representatives = SetList(std::size_t(size));

  const std::size_t reps = prev.count();
  const std::size_t batch = std::max<std::size_t>(256, reps / 16 + 1);
  const auto props = equal_proportions(config.workers);

  for (std::size_t start = 0; start < reps; start += batch) {
    const std::size_t stop = std::min(reps, start + batch);
    Partition part = partition(stop - start, props);
    auto children = run_jobs(
        part,
        [&](std::size_t j) {
          auto rep = prev.representatives[start + j];
          Arc arc = Arc::from_points(plane, rep);
          Canonizer canon(plane, config.group);
          SetList out{std::size_t(size)};
          std::vector<PointIndex> child(rep.begin(), rep.end());
          child.push_back(0);
          std::vector<PointIndex> form;
          for (PointIndex x : arc.candidates()) {
            child.back() = x;
            canon.canonical(child, form);
            out.push_back(form);
          }
          out.sort_unique();
          return out;
        },
        config.balancing, 8);
    SetList merged{std::size_t(size)};
    std::size_t total = 0;
    for (const auto& c : children) total += c.size();
    merged.reserve(total);
    for (const auto& c : children)
      for (std::size_t k = 0; k < c.size(); ++k) merged.push_back(c[k]);
    merged.sort_unique();
    next.representatives.merge_unique(merged);
    if (next.count() > config.max_level_size)
      throw Error(ErrorKind::MemoryBudgetExceeded, "level " + std::to_string(size) + " exceeds " +
                                                       std::to_string(config.max_level_size) + " representatives");
  }
  mark_complete(plane, next);
  return next;
}

}  // namespace

std::vector<ClassificationLevel> classify(const Plane& plane, const SearchConfig& config) {
  validate(plane, config);
  std::vector<ClassificationLevel> levels;

  if (config.checkpoint_dir) {
    for (int size = 4; size <= config.classification_threshold; ++size) {
      auto level = read_level(level_path(*config.checkpoint_dir, size), plane, config.group);
      if (!level || level->size != size) break;
      levels.push_back(std::move(*level));
      if (config.on_level) config.on_level(levels.back());
    }
  }

  if (levels.empty()) {
    ClassificationLevel frame;
    frame.size = 4;
    frame.representatives = SetList(4);
    auto f = plane.standard_frame();
    frame.representatives.push_back(f);
    mark_complete(plane, frame);
    levels.push_back(std::move(frame));
    if (config.checkpoint_dir) write_level(level_path(*config.checkpoint_dir, 4), plane, config.group, levels.back());
    if (config.on_level) config.on_level(levels.back());
  }

  while (levels.back().size < config.classification_threshold) {
    if (config.stop_at_complete && !levels.back().complete.empty()) break;
    ClassificationLevel next = next_level(plane, levels.back(), config);
    if (next.count() == 0) break;
    levels.push_back(std::move(next));
    if (config.checkpoint_dir)
      write_level(level_path(*config.checkpoint_dir, levels.back().size), plane, config.group, levels.back());
    if (config.on_level) config.on_level(levels.back());
  }
  return levels;
}

}  // namespace arcs
