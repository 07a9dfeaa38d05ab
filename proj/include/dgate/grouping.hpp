#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "dgate/numerics.hpp"

namespace dgate {

/// Post-training threshold below which a group norm counts as exactly zero.
inline constexpr double kEpsTinyLinear = 1e-6;
/// float32 machine epsilon, used as the threshold for network experiments.
inline constexpr double kEpsTinyFloat32 = 1.1920928955078125e-7;

/// Disjoint index groups G_1..G_J covering {0,...,p-1} of a flat parameter
/// vector. Groups are explicit index lists so strided layouts (e.g. gating a
/// weight matrix column-wise) reuse the same type.
class GroupPartition {
 public:
  /// Groups [0,s1), [s1,s1+s2), ...
  static GroupPartition contiguous(const std::vector<std::size_t>& sizes);

  /// Arbitrary index lists; must be nonempty, pairwise disjoint, and cover
  /// {0,...,p-1} exactly.
  static GroupPartition from_groups(std::vector<std::vector<std::size_t>> groups);

  std::size_t p() const { return p_; }
  std::size_t group_count() const { return groups_.size(); }
  std::size_t group_size(std::size_t j) const { return groups_[j].size(); }
  const std::vector<std::size_t>& group(std::size_t j) const { return groups_[j]; }
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }
  bool is_contiguous() const { return contiguous_; }

  bool operator==(const GroupPartition&) const = default;

 private:
  GroupPartition() = default;

  std::vector<std::vector<std::size_t>> groups_;
  std::size_t p_ = 0;
  bool contiguous_ = false;
};

/// Entry j is the 2-norm of w restricted to group j.
Vec group_norms(const GroupPartition& partition, std::span<const double> w);

/// Indices j with ||w_j||_2 >= eps_tiny, ascending.
std::vector<std::size_t> active_groups(const GroupPartition& partition,
                                       std::span<const double> w, double eps_tiny);

/// {"sizes":[...]} for contiguous partitions, {"groups":[[...],...]} otherwise.
nlohmann::json partition_to_json(const GroupPartition& partition);
GroupPartition partition_from_json(const nlohmann::json& j);

}  // namespace dgate
