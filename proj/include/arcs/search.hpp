#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "arcs/arc.hpp"
#include "arcs/collineation.hpp"
#include "arcs/scheduler.hpp"

namespace arcs {

/// Equal-length sorted point lists stored back to back.
class SetList {
 public:
  explicit SetList(std::size_t stride = 0) : stride_(stride) {}

  std::size_t stride() const noexcept { return stride_; }
  std::size_t size() const noexcept { return stride_ == 0 ? 0 : data_.size() / stride_; }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const PointIndex> operator[](std::size_t i) const { return {data_.data() + i * stride_, stride_}; }
  void push_back(std::span<const PointIndex> set);
  std::span<const PointIndex> flat() const noexcept { return data_; }
  void reserve(std::size_t sets) { data_.reserve(sets * stride_); }

  /// Sorts lexicographically and drops duplicates.
  void sort_unique();
  /// Merges another sorted unique list into this one, keeping it sorted unique.
  void merge_unique(const SetList& other);

  friend bool operator==(const SetList&, const SetList&) = default;

 private:
  std::size_t stride_;
  std::vector<PointIndex> data_;
};

struct ClassificationLevel {
  int size = 0;
  /// Canonical representatives in lexicographic order; the position of a
  /// representative is its class index.
  SetList representatives;
  /// Indices of representatives that are complete arcs.
  std::vector<std::size_t> complete;

  std::size_t count() const noexcept { return representatives.size(); }
};

struct SearchConfig {
  GroupKind group = GroupKind::PGL;
  /// Largest classified size (the tree depth before backtracking).
  int classification_threshold = 8;
  /// Largest arc size the backtracking reports.
  int target_bound = 13;
  int workers = 1;
  /// Percentages per worker for extension jobs; empty means an equal split.
  std::vector<int> proportions;
  Balancing balancing = Balancing::Static;
  std::optional<std::filesystem::path> checkpoint_dir;
  /// Upper bound on representatives per level; exceeded -> MemoryBudgetExceeded.
  std::size_t max_level_size = 50'000'000;
  /// Stop classifying after the first level that holds a complete arc.
  bool stop_at_complete = false;
  /// Called after each finished level.
  std::function<void(const ClassificationLevel&)> on_level;
};

/// Validates ranges and returns the effective worker proportions.
std::vector<int> effective_proportions(const SearchConfig& config);

/// Orderly classification of arcs of sizes 4..threshold. Level 4 is the
/// frame; each next level is the deduplicated set of canonical one-point
/// extensions. Stops early at the first empty level.
std::vector<ClassificationLevel> classify(const Plane& plane, const SearchConfig& config);

/// Resolves canonical threshold-size sets to class indices.
class ClassIndex {
 public:
  explicit ClassIndex(const ClassificationLevel& level);
  std::optional<std::size_t> find(std::span<const PointIndex> canonical) const;
  int size() const noexcept { return size_; }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<PointIndex>& v) const noexcept;
  };
  int size_;
  std::unordered_map<std::vector<PointIndex>, std::size_t, Hash> index_;
};

struct ExtendStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned_children = 0;
};

/// Depth-first extension of one threshold representative. Points are added
/// in increasing index order and every complete arc of size <= bound is
/// reported as a sorted list. With an index, a first-level child is kept
/// only if representative `rep_index` is the least class among its
/// threshold-size sub-arcs.
std::vector<std::vector<PointIndex>> extend(const Plane& plane, std::size_t rep_index,
                                            std::span<const PointIndex> rep, int bound, GroupKind group,
                                            const ClassIndex* owners, ExtendStats* stats = nullptr);

/// Runs extend over every representative of a level through the scheduler
/// and merges the results in representative order.
std::vector<std::vector<PointIndex>> extend_all(const Plane& plane, const ClassificationLevel& level, int bound,
                                                const SearchConfig& config, ExtendStats* stats = nullptr);

struct ClassCounts {
  std::size_t pgl = 0;
  /// Only set for non-prime q.
  std::optional<std::size_t> pgammal;
};

/// Counts classes of the given canonical sets (under `group`) for both
/// groups. PGL classes inside a PGammaL class are the PGL forms of the
/// Frobenius images.
ClassCounts count_classes(const Plane& plane, const std::vector<std::vector<PointIndex>>& canonical_sets,
                          GroupKind group);

struct MinCompleteResult {
  int t = 0;
  int lower_bound = 0;
  int threshold = 0;
  /// Canonical representatives (under the configured group) of complete t-arcs.
  std::vector<std::vector<PointIndex>> classes;
  ClassCounts counts;
};

/// Smallest size of a complete arc. Classified levels are scanned first;
/// beyond the threshold the bound grows from max(lower_bound, threshold+1).
MinCompleteResult min_complete_size(const Plane& plane, const SearchConfig& config);

// Level checkpoints: a JSON header line {"q","group","size","count","modulus"}
// followed by one space-separated sorted point list per line.
void write_level(const std::filesystem::path& file, const Plane& plane, GroupKind group,
                 const ClassificationLevel& level);
/// Returns nullopt if the file is missing, truncated or for another plane/group.
std::optional<ClassificationLevel> read_level(const std::filesystem::path& file, const Plane& plane,
                                              GroupKind group);
std::filesystem::path level_path(const std::filesystem::path& dir, int size);

}  // namespace arcs
