#ifndef CCM_PARTITION_HPP
#define CCM_PARTITION_HPP

#include <vector>

namespace ccm {

/// Number of disjoint blue quads per blue component, in descending order.
/// Valid when every part is in [1, n-1] and the total is at least
/// max(2, 2n-3+floor((n-1)/4)).
struct PartitionInput {
    int n = 0;
    std::vector<int> parts;

    long long sum() const;
    /// Throws InvalidInput when the domain restrictions fail.
    void validate() const;
};

enum class GroupingKind { Three, Two };

/// Disjoint nonempty index groups covering all parts. Three-kind groups sum
/// to at least ceil(n/4) each; Two-kind groups to at least n-2 each.
struct PartitionGrouping {
    GroupingKind kind;
    std::vector<std::vector<int>> groups;  // 0-based part indices
    std::vector<long long> group_sums;
};

/// Combine the parts into a valid grouping, preferring Three; Two is
/// produced only when a_1,a_2 >= n-2 and a_3+...+a_t < ceil(n/4).
/// Deterministic. Throws InvalidInput on a rejected input.
PartitionGrouping combine(const PartitionInput& input);

/// Independent re-check of every grouping invariant against the raw input.
bool validate_grouping(const PartitionInput& input, const PartitionGrouping& g);

}  // namespace ccm

#endif
