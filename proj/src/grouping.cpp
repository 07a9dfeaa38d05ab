#include "dgate/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dgate {

GroupPartition GroupPartition::contiguous(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("GroupPartition: empty size list");
  GroupPartition part;
  std::size_t next = 0;
  part.groups_.reserve(sizes.size());
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("GroupPartition: group size must be >= 1");
    std::vector<std::size_t> g(s);
    for (std::size_t k = 0; k < s; ++k) g[k] = next + k;
    next += s;
    part.groups_.push_back(std::move(g));
  }
  part.p_ = next;
  part.contiguous_ = true;
  return part;
}

GroupPartition GroupPartition::from_groups(std::vector<std::vector<std::size_t>> groups) {
  if (groups.empty()) throw std::invalid_argument("GroupPartition: empty group list");
  std::size_t p = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("GroupPartition: empty group");
    p += g.size();
  }
  std::vector<bool> seen(p, false);
  for (const auto& g : groups) {
    for (std::size_t idx : g) {
      if (idx >= p || seen[idx]) {
        throw std::invalid_argument("GroupPartition: groups must partition 0..p-1");
      }
      seen[idx] = true;
    }
  }
  GroupPartition part;
  part.p_ = p;
  // Contiguity check so round-trips through JSON stay in the compact form.
  bool contig = true;
  std::size_t next = 0;
  for (const auto& g : groups) {
    for (std::size_t idx : g) {
      if (idx != next++) {
        contig = false;
        break;
      }
    }
    if (!contig) break;
  }
  part.contiguous_ = contig;
  part.groups_ = std::move(groups);
  return part;
}

Vec group_norms(const GroupPartition& partition, std::span<const double> w) {
  if (w.size() != partition.p()) {
    throw std::invalid_argument("group_norms: length mismatch");
  }
  const std::size_t nj = partition.group_count();
  Vec out(nj, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(nj); ++j) {
    double acc = 0.0;
    for (std::size_t idx : partition.group(j)) acc += w[idx] * w[idx];
    out[j] = std::sqrt(acc);
  }
  return out;
}

std::vector<std::size_t> active_groups(const GroupPartition& partition,
                                       std::span<const double> w, double eps_tiny) {
  if (eps_tiny < 0.0) throw std::invalid_argument("active_groups: eps_tiny must be >= 0");
  const Vec norms = group_norms(partition, w);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < norms.size(); ++j) {
    if (norms[j] >= eps_tiny) out.push_back(j);
  }
  return out;
}

nlohmann::json partition_to_json(const GroupPartition& partition) {
  if (partition.is_contiguous()) {
    std::vector<std::size_t> sizes(partition.group_count());
    for (std::size_t j = 0; j < sizes.size(); ++j) sizes[j] = partition.group_size(j);
    return {{"sizes", sizes}};
  }
  return {{"groups", partition.groups()}};
}

GroupPartition partition_from_json(const nlohmann::json& j) {
  if (j.contains("sizes")) {
    return GroupPartition::contiguous(j.at("sizes").get<std::vector<std::size_t>>());
  }
  if (j.contains("groups")) {
    return GroupPartition::from_groups(
        j.at("groups").get<std::vector<std::vector<std::size_t>>>());
  }
  throw std::invalid_argument("partition_from_json: expected 'sizes' or 'groups'");
}

}  // namespace dgate
