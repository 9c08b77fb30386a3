#include <algorithm>
#include <set>
#include <string>

#include "arcs/search.hpp"

namespace arcs {

std::size_t ClassIndex::Hash::operator()(const std::vector<PointIndex>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (PointIndex p : v) h = (h ^ p) * 1099511628211ull;
  return h;
}

ClassIndex::ClassIndex(const ClassificationLevel& level) : size_(level.size) {
  index_.reserve(level.count());
  for (std::size_t i = 0; i < level.count(); ++i) {
    auto rep = level.representatives[i];
    index_.emplace(std::vector<PointIndex>(rep.begin(), rep.end()), i);
  }
}

std::optional<std::size_t> ClassIndex::find(std::span<const PointIndex> canonical) const {
  auto it = index_.find(std::vector<PointIndex>(canonical.begin(), canonical.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

class Backtrack {
 public:
  Backtrack(Arc& arc, int bound, std::vector<std::vector<PointIndex>>& found, ExtendStats& stats)
      : arc_(arc),
        plane_(arc.plane()),
        bound_(bound),
        found_(found),
        stats_(stats),
        line_members_(arc.plane().size(), 0),
        uncovered_(std::size_t(bound) + 2),
        addable_(std::size_t(bound) + 2) {
    for (PointIndex m : arc.members()) mark(m, +1);
  }

  void add(PointIndex p) {
    arc_.add_point(p);
    mark(p, +1);
  }
  void remove_last() {
    mark(arc_.members().back(), -1);
    arc_.remove_last();
  }

  // `uncovered` holds every candidate of the current arc, `addable` the
  // ones above the last added point.
  void descend(const std::vector<PointIndex>& uncovered, const std::vector<PointIndex>& addable) {
    ++stats_.nodes;
    if (uncovered.empty()) {
      found_.push_back(arc_.sorted_members());
      return;
    }
    const int size = int(arc_.size());
    if (size >= bound_) return;
    if (size == bound_ - 1) {
      finish(uncovered, addable);
      return;
    }
    if (size == bound_ - 2) {
      finish(uncovered, addable);
      finish_pairs(addable);
      return;
    }
    const std::size_t depth = arc_.size();
    for (std::size_t i = 0; i < addable.size(); ++i) {
      add(addable[i]);
      auto& u = uncovered_[depth];
      auto& a = addable_[depth];
      u.clear();
      a.clear();
      for (PointIndex x : uncovered)
        if (arc_.is_candidate(x)) u.push_back(x);
      for (std::size_t k = i + 1; k < addable.size(); ++k)
        if (arc_.is_candidate(addable[k])) a.push_back(addable[k]);
      descend(u, a);
      remove_last();
    }
  }

 private:
  void mark(PointIndex p, int delta) {
    for (LineIndex l : plane_.lines_through(p)) line_members_[l] = std::uint8_t(line_members_[l] + delta);
  }

  // One point left: y completes the arc iff every other uncovered point lies
  // on a line joining y to a member. Points below the last added one cannot
  // be added any more, so they are tested first.
  void finish(const std::vector<PointIndex>& uncovered, const std::vector<PointIndex>& addable) {
    order_.clear();
    const PointIndex first_addable = addable.empty() ? PointIndex(0xffff) : addable.front();
    for (PointIndex z : uncovered)
      if (z < first_addable) order_.push_back(z);
    for (PointIndex z : uncovered)
      if (z >= first_addable) order_.push_back(z);
    for (PointIndex y : addable) {
      ++stats_.nodes;
      bool complete = true;
      for (PointIndex z : order_) {
        if (z == y) continue;
        if (line_members_[plane_.line_through_unchecked(y, z)] == 0) {
          complete = false;
          break;
        }
      }
      if (complete) {
        auto members = arc_.sorted_members();
        members.insert(std::upper_bound(members.begin(), members.end(), y), y);
        found_.push_back(std::move(members));
      }
    }
  }

  // Two points left: y1 < y2 complete the arc iff y2 stays a candidate after
  // adding y1 and every other uncovered point lies on line y1y2 or on a line
  // joining y1 or y2 to a member. Uses the order built by finish().
  void finish_pairs(const std::vector<PointIndex>& addable) {
    for (std::size_t i = 0; i < addable.size(); ++i) {
      const PointIndex y1 = addable[i];
      for (std::size_t j = i + 1; j < addable.size(); ++j) {
        const PointIndex y2 = addable[j];
        const LineIndex joint = plane_.line_through_unchecked(y1, y2);
        if (line_members_[joint] != 0) continue;
        ++stats_.nodes;
        bool complete = true;
        for (PointIndex z : order_) {
          if (z == y1 || z == y2) continue;
          const LineIndex l1 = plane_.line_through_unchecked(y1, z);
          if (l1 == joint || line_members_[l1] != 0) continue;
          if (line_members_[plane_.line_through_unchecked(y2, z)] != 0) continue;
          complete = false;
          break;
        }
        if (complete) {
          auto members = arc_.sorted_members();
          members.push_back(y1);
          members.push_back(y2);
          std::sort(members.begin(), members.end());
          found_.push_back(std::move(members));
        }
      }
    }
  }

  Arc& arc_;
  const Plane& plane_;
  int bound_;
  std::vector<std::vector<PointIndex>>& found_;
  ExtendStats& stats_;
  std::vector<std::uint8_t> line_members_;
  std::vector<std::vector<PointIndex>> uncovered_;
  std::vector<std::vector<PointIndex>> addable_;
  std::vector<PointIndex> order_;
};

}  // namespace

std::vector<std::vector<PointIndex>> extend(const Plane& plane, std::size_t rep_index,
                                            std::span<const PointIndex> rep, int bound, GroupKind group,
                                            const ClassIndex* owners, ExtendStats* stats) {
  ExtendStats local;
  ExtendStats& st = stats ? *stats : local;
  std::vector<std::vector<PointIndex>> found;
  Arc arc = Arc::from_points(plane, rep);
  ++st.nodes;
  if (arc.is_complete()) {
    if (int(arc.size()) <= bound) found.push_back(arc.sorted_members());
    return found;
  }
  if (int(arc.size()) >= bound) return found;
  if (owners && owners->size() != int(rep.size()))
    throw Error(ErrorKind::BadConfig, "class index size does not match the representative");

  Canonizer canon(plane, group);
  std::vector<PointIndex> sub, form;
  Backtrack bt(arc, bound, found, st);
  const auto first = arc.candidates();
  std::vector<PointIndex> uncovered, next;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const PointIndex x = first[i];
    bt.add(x);
    if (owners) {
      const auto members = arc.members();
      std::size_t least = rep_index;
      for (std::size_t drop = 0; drop < members.size() && least == rep_index; ++drop) {
        sub.clear();
        for (std::size_t k = 0; k < members.size(); ++k)
          if (k != drop) sub.push_back(members[k]);
        canon.canonical(sub, form);
        auto idx = owners->find(form);
        if (!idx) throw Error(ErrorKind::BadConfig, "sub-arc missing from the classification level");
        least = std::min(least, *idx);
      }
      if (least != rep_index) {
        ++st.pruned_children;
        bt.remove_last();
        continue;
      }
    }
    uncovered.clear();
    next.clear();
    for (PointIndex y : first)
      if (arc.is_candidate(y)) uncovered.push_back(y);
    for (std::size_t k = i + 1; k < first.size(); ++k)
      if (arc.is_candidate(first[k])) next.push_back(first[k]);
    bt.descend(uncovered, next);
    bt.remove_last();
  }
  return found;
}

std::vector<std::vector<PointIndex>> extend_all(const Plane& plane, const ClassificationLevel& level, int bound,
                                                const SearchConfig& config, ExtendStats* stats) {
  const ClassIndex owners(level);
  Partition part = partition(level.count(), effective_proportions(config));
  auto per_rep = run_jobs(
      part,
      [&](std::size_t j) {
        ExtendStats st;
        auto found = extend(plane, j, level.representatives[j], bound, config.group, &owners, &st);
        return std::make_pair(std::move(found), st);
      },
      config.balancing);
  std::vector<std::vector<PointIndex>> out;
  for (auto& [found, st] : per_rep) {
    if (stats) {
      stats->nodes += st.nodes;
      stats->pruned_children += st.pruned_children;
    }
    for (auto& f : found) out.push_back(std::move(f));
  }
  return out;
}

ClassCounts count_classes(const Plane& plane, const std::vector<std::vector<PointIndex>>& canonical_sets,
                          GroupKind group) {
  ClassCounts counts;
  std::set<std::vector<PointIndex>> own(canonical_sets.begin(), canonical_sets.end());
  const bool prime = plane.field().h() == 1;
  if (group == GroupKind::PGL) {
    counts.pgl = own.size();
    if (!prime) {
      Canonizer canon(plane, GroupKind::PGammaL);
      std::set<std::vector<PointIndex>> wide;
      for (const auto& s : own) wide.insert(canon.canonical(s));
      counts.pgammal = wide.size();
    }
  } else {
    if (prime) {
      counts.pgl = own.size();
    } else {
      Canonizer canon(plane, GroupKind::PGL);
      std::set<std::vector<PointIndex>> narrow;
      for (const auto& s : own)
        for (int f = 0; f < plane.field().h(); ++f) {
          std::vector<PointIndex> img;
          for (PointIndex p : s) img.push_back(plane.frobenius(p, f));
          narrow.insert(canon.canonical(img));
        }
      counts.pgl = narrow.size();
      counts.pgammal = own.size();
    }
  }
  return counts;
}

MinCompleteResult min_complete_size(const Plane& plane, const SearchConfig& config) {
  MinCompleteResult result;
  result.lower_bound = lower_bound(plane.q());
  SearchConfig cfg = config;
  cfg.stop_at_complete = true;
  auto levels = classify(plane, cfg);
  result.threshold = levels.back().size;

  for (const auto& level : levels) {
    if (level.complete.empty()) continue;
    result.t = level.size;
    for (std::size_t i : level.complete) {
      auto rep = level.representatives[i];
      result.classes.emplace_back(rep.begin(), rep.end());
    }
    result.counts = count_classes(plane, result.classes, config.group);
    return result;
  }

  // Every arc lies in a complete arc of size at most q + 2.
  Canonizer canon(plane, config.group);
  for (int bound = std::max(result.lower_bound, result.threshold + 1); bound <= plane.q() + 2; ++bound) {
    auto found = extend_all(plane, levels.back(), bound, config);
    if (found.empty()) continue;
    std::size_t least = found.front().size();
    for (const auto& f : found) least = std::min(least, f.size());
    std::set<std::vector<PointIndex>> forms;
    for (const auto& f : found)
      if (f.size() == least) forms.insert(canon.canonical(f));
    result.t = int(least);
    result.classes.assign(forms.begin(), forms.end());
    result.counts = count_classes(plane, result.classes, config.group);
    return result;
  }
  throw Error(ErrorKind::BadConfig, "no complete arc found up to size q + 2");
}

}  // namespace arcs
