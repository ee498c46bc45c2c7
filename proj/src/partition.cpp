#include "ccm/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ccm/errors.hpp"

namespace ccm {

namespace {

int ceil_quarter(int n) { return (n + 3) / 4; }

long long min_total(int n) {
    // k >= 2n-3+floor((n-1)/4), and k >= 2 so that two nonempty groups exist
    return std::max(2LL, 2LL * n - 3 + (n - 1) / 4);
}

// Descending-order greedy into `bins` groups: each part goes to the group
// with the currently smallest sum (lowest index on ties). With all parts
// below some cap, final group sums differ by less than the cap.
std::vector<std::vector<int>> balanced_groups(const std::vector<int>& parts,
                                              const std::vector<int>& indices, int bins) {
    std::vector<std::vector<int>> groups(bins);
    std::vector<long long> sums(bins, 0);
    for (int idx : indices) {
        int target = 0;
        for (int b = 1; b < bins; ++b)
            if (sums[b] < sums[target]) target = b;
        groups[target].push_back(idx);
        sums[target] += parts[idx];
    }
    return groups;
}

PartitionGrouping finish(const PartitionInput& in, GroupingKind kind,
                         std::vector<std::vector<int>> groups) {
    PartitionGrouping g{kind, std::move(groups), {}};
    for (auto& grp : g.groups) {
        long long s = 0;
        for (int i : grp) s += in.parts[i];
        g.group_sums.push_back(s);
    }
    long long threshold = kind == GroupingKind::Three ? ceil_quarter(in.n) : in.n - 2;
    for (size_t i = 0; i < g.groups.size(); ++i)
        if (g.groups[i].empty() || g.group_sums[i] < threshold)
            throw std::logic_error("combine produced a group below threshold; case ladder broken");
    return g;
}

}  // namespace

long long PartitionInput::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
}

void PartitionInput::validate() const {
    if (n < 2) throw InvalidInput("partition input requires n >= 2");
    if (parts.empty()) throw InvalidInput("partition input requires at least one part");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || parts[i] > n - 1)
            throw InvalidInput("part " + std::to_string(i + 1) + " outside [1, n-1]");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidInput("parts must be in descending order");
    }
    if (sum() < min_total(n))
        throw InvalidInput("part total " + std::to_string(sum()) + " below required " +
                           std::to_string(min_total(n)));
}

PartitionGrouping combine(const PartitionInput& in) {
    in.validate();
    const int t = static_cast<int>(in.parts.size());
    const int c4 = ceil_quarter(in.n);
    const int n = in.n;

    std::vector<int> rest_indices(t > 1 ? t - 1 : 0);
    std::iota(rest_indices.begin(), rest_indices.end(), 1);
    auto tail_group = [&](int from) {
        std::vector<int> g;
        for (int i = from; i < t; ++i) g.push_back(i);
        return g;
    };

    if (t == 1) throw std::logic_error("single part cannot satisfy the input domain");

    if (in.parts[0] <= n - 3) {
        // Case 1. The total forces t >= 3 here.
        if (t < 3) throw std::logic_error("case 1 with t < 3; input domain violated");
        if (in.parts[1] >= c4) {
            // Case 1.1: a_3+...+a_t exceeds ceil(n/4) on its own.
            return finish(in, GroupingKind::Three, {{0}, {1}, tail_group(2)});
        }
        if (in.parts[0] >= c4) {
            // Case 1.2: a_2..a_t all below ceil(n/4), total above n-1.
            auto two = balanced_groups(in.parts, rest_indices, 2);
            return finish(in, GroupingKind::Three, {{0}, two[0], two[1]});
        }
        // Case 1.3: every part below ceil(n/4); balance three ways.
        std::vector<int> all(t);
        std::iota(all.begin(), all.end(), 0);
        auto three = balanced_groups(in.parts, all, 3);
        return finish(in, GroupingKind::Three, {three[0], three[1], three[2]});
    }

    // Case 2: a_1 >= n-2.
    if (t >= 3 && in.parts[1] >= c4 && in.parts[2] >= c4) {
        // Case 2.1
        return finish(in, GroupingKind::Three, {{0}, {1}, tail_group(2)});
    }
    if (in.parts[1] >= c4) {
        // Case 2.2: dichotomy on a_3+...+a_t.
        long long rest = in.sum() - in.parts[0] - in.parts[1];
        if (rest >= c4)
            return finish(in, GroupingKind::Three, {{0}, {1}, tail_group(2)});
        // rest < ceil(n/4) forces a_2 >= n-2; the only Two-kind exit.
        if (in.parts[1] < n - 2)
            throw std::logic_error("case 2.2 arithmetic violated (a_2 < n-2)");
        return finish(in, GroupingKind::Two, {{0}, tail_group(1)});
    }
    // Case 2.3: a_2 < ceil(n/4); t = 2 cannot reach here by arithmetic.
    if (t < 3) throw std::logic_error("case 2.3 with t < 3; input domain violated");
    auto two = balanced_groups(in.parts, rest_indices, 2);
    return finish(in, GroupingKind::Three, {{0}, two[0], two[1]});
}

bool validate_grouping(const PartitionInput& in, const PartitionGrouping& g) {
    try {
        in.validate();
    } catch (const InvalidInput&) {
        return false;
    }
    const size_t expected = g.kind == GroupingKind::Three ? 3 : 2;
    if (g.groups.size() != expected || g.group_sums.size() != expected) return false;
    const int t = static_cast<int>(in.parts.size());
    std::vector<char> used(t, 0);
    for (size_t gi = 0; gi < g.groups.size(); ++gi) {
        if (g.groups[gi].empty()) return false;
        long long s = 0;
        for (int idx : g.groups[gi]) {
            if (idx < 0 || idx >= t || used[idx]) return false;
            used[idx] = 1;
            s += in.parts[idx];
        }
        if (s != g.group_sums[gi]) return false;
        long long threshold = g.kind == GroupingKind::Three ? (in.n + 3) / 4 : in.n - 2;
        if (s < threshold) return false;
    }
    for (int i = 0; i < t; ++i)
        if (!used[i]) return false;
    return true;
}

}  // namespace ccm
