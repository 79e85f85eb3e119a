#pragma once

#include <cstdint>
#include <vector>

#include "tailmine/ngram.hpp"

namespace tailmine {

// One agglomerative merge. Nodes are numbered 0..n-1 for leaves and
// n..2n-2 for merged clusters in merge order.
struct Merge {
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    double height = 0.0;  // Ward cost: increase in total within-cluster variance
    std::uint32_t size = 0;
};

struct Dendrogram {
    std::size_t n_leaves = 0;
    std::vector<Merge> merges;  // exactly n_leaves - 1, heights non-decreasing

    // Checks structural invariants; throws AnalysisError on violation.
    void validate() const;
};

struct ClusterAssignment {
    std::size_t k = 0;
    std::vector<std::uint32_t> labels;  // per case, ids 0..k-1 by decreasing
                                        // cluster size, ties by smallest leaf
    std::vector<std::size_t> cluster_sizes;  // indexed by cluster id
};

// Agglomerative Ward clustering via the Lance-Williams recurrence on squared
// Euclidean distances. Heights are the exact Ward merge cost (the increase in
// total within-cluster variance), which is half the Lance-Williams value.
// Tie rule: among pairs whose distance is within 1e-12 of the step minimum,
// merge the one with the lexicographically smallest (min node id, max node id).
// Deterministic for a fixed FeatureMatrix. Throws AnalysisError for < 2 cases.
Dendrogram ward_cluster(const FeatureMatrix& fm);

// Undoes the last k-1 merges and relabels per the ClusterAssignment rules.
// Throws AnalysisError when k is outside 1..n.
ClusterAssignment cut_dendrogram(const Dendrogram& d, std::size_t k);

// (k, height) pairs: the Ward cost paid when passing from k+1 to k clusters,
// for k = n-1 down to 1. Decision support for picking k.
std::vector<std::pair<std::size_t, double>> elbow_data(const Dendrogram& d);

} // namespace tailmine
