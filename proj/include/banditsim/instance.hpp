#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace banditsim {

struct ArmSpec {
    double mean = 0.0;
    double stddev = 1.0;
};

// Clusters are ordered lists of arm indices; together they must partition
// {0..n-1}. The within-cluster order is meaningful: it defines the axis along
// which means are required to be unimodal and along which arms are adjacent.
struct ClusterPartition {
    std::vector<std::vector<std::size_t>> clusters;

    std::size_t arm_count() const {
        std::size_t n = 0;
        for (const auto& c : clusters) n += c.size();
        return n;
    }
};

struct BanditInstance {
    std::vector<ArmSpec> arms;
    ClusterPartition partition;

    std::size_t arm_count() const { return arms.size(); }
    std::size_t cluster_count() const { return partition.clusters.size(); }
};

// Structural checks: finite means, nonnegative stddevs, non-empty clusters,
// and the clusters forming a permutation of the arm index set.
inline void validate_instance(const BanditInstance& instance) {
    const std::size_t n = instance.arms.size();
    if (n == 0) throw std::invalid_argument("instance: needs at least one arm");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(instance.arms[i].mean)) {
            throw std::invalid_argument("instance: arm " + std::to_string(i) + " has non-finite mean");
        }
        if (!(instance.arms[i].stddev >= 0.0) || !std::isfinite(instance.arms[i].stddev)) {
            throw std::invalid_argument("instance: arm " + std::to_string(i) + " has invalid stddev");
        }
    }
    if (instance.partition.clusters.empty()) {
        throw std::invalid_argument("instance: partition has no clusters");
    }
    std::vector<char> seen(n, 0);
    for (const auto& cluster : instance.partition.clusters) {
        if (cluster.empty()) throw std::invalid_argument("instance: empty cluster");
        for (std::size_t arm : cluster) {
            if (arm >= n) {
                throw std::invalid_argument("instance: cluster index " + std::to_string(arm) +
                                            " out of range");
            }
            if (seen[arm]) {
                throw std::invalid_argument("instance: arm " + std::to_string(arm) +
                                            " appears in more than one cluster slot");
            }
            seen[arm] = 1;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i]) {
            throw std::invalid_argument("instance: arm " + std::to_string(i) +
                                        " missing from the partition");
        }
    }
}

// Index of the best arm; lowest index on ties.
inline std::size_t optimal_arm(const BanditInstance& instance) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < instance.arms.size(); ++i) {
        if (instance.arms[i].mean > instance.arms[best].mean) best = i;
    }
    return best;
}

// True iff exactly one arm attains the maximal mean.
inline bool validate_unique_optimum(const BanditInstance& instance) {
    const std::size_t star = optimal_arm(instance);
    std::size_t hits = 0;
    for (const auto& arm : instance.arms) {
        if (arm.mean == instance.arms[star].mean) ++hits;
    }
    return hits == 1;
}

// Strictly increasing to a single peak, then strictly decreasing. Monotone
// sequences and singletons qualify; any equal adjacent pair does not.
inline bool is_unimodal(std::span<const double> values) {
    if (values.size() <= 1) return true;
    std::size_t i = 0;
    while (i + 1 < values.size() && values[i + 1] > values[i]) ++i;
    while (i + 1 < values.size() && values[i + 1] < values[i]) ++i;
    return i + 1 == values.size();
}

// Per-cluster unimodality verdicts, in cluster declaration order.
inline std::vector<bool> validate_unimodality(const BanditInstance& instance) {
    std::vector<bool> verdicts;
    verdicts.reserve(instance.cluster_count());
    std::vector<double> means;
    for (const auto& cluster : instance.partition.clusters) {
        means.clear();
        for (std::size_t arm : cluster) means.push_back(instance.arms[arm].mean);
        verdicts.push_back(is_unimodal(means));
    }
    return verdicts;
}

// Arms adjacent to `arm` in its cluster's within-cluster order. Boundary arms
// have one neighbor, interior arms two, singleton clusters none. Adjacency
// never crosses a cluster boundary.
inline std::vector<std::size_t> neighbors(const ClusterPartition& partition, std::size_t arm) {
    for (const auto& cluster : partition.clusters) {
        for (std::size_t pos = 0; pos < cluster.size(); ++pos) {
            if (cluster[pos] != arm) continue;
            std::vector<std::size_t> out;
            if (pos > 0) out.push_back(cluster[pos - 1]);
            if (pos + 1 < cluster.size()) out.push_back(cluster[pos + 1]);
            return out;
        }
    }
    throw std::out_of_range("neighbors: arm " + std::to_string(arm) + " not in partition");
}

// cluster index for every arm; assumes a validated partition.
inline std::vector<std::size_t> arm_to_cluster(const ClusterPartition& partition) {
    std::vector<std::size_t> map(partition.arm_count());
    for (std::size_t c = 0; c < partition.clusters.size(); ++c) {
        for (std::size_t arm : partition.clusters[c]) map[arm] = c;
    }
    return map;
}

}  // namespace banditsim
