#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dslice {

/// Linking data of an n-component link for a reference orientation.
struct LinkData {
  std::size_t n = 0;
  std::vector<std::vector<std::int64_t>> lk;
  std::vector<bool> slice;

  /// Throws PreconditionError unless lk is n×n, symmetric, zero on the
  /// diagonal, and slice has n entries.
  void validate() const;
};

/// A set partition of {0, …, n−1}; classes sorted, each class ascending.
using SetPartition = std::vector<std::vector<std::size_t>>;

struct PartitionPair {
  SetPartition first;
  SetPartition second;

  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

/// All set partitions of {0, …, n−1} in restricted-growth order.
std::vector<SetPartition> set_partitions(std::size_t n);

/// Unordered pairs (P₁, P₂) passing the necessary conditions for a single
/// sphere cross-section: |P₁| + |P₂| = n + 1, the bipartite incidence
/// multigraph is a tree, distinct classes on one side have total linking
/// zero, and every singleton class is a slice component. orientation holds
/// ±1 per component.
std::vector<PartitionPair> admissible_partitions(const LinkData& data, const std::vector<int>& orientation);

/// Sign vectors with first entry +1 for which admissible_partitions is
/// nonempty. Requires n >= 2.
std::vector<std::vector<int>> weak_ds_orientation_filter(const LinkData& data);

std::string to_string(const SetPartition& p);

}  // namespace dslice
