#pragma once

#include <optional>
#include <vector>

#include "tailmine/distance.hpp"
#include "tailmine/ward.hpp"

namespace tailmine {

// Internal validity indices for one k. Metrics that are undefined for the
// clustering at hand (all-singleton silhouette, zero diameters, zero within-SS)
// are reported as nullopt rather than failing the sweep.
struct ValidityRow {
    std::size_t k = 0;
    double within_cluster_ss = 0.0;
    std::optional<double> silhouette;          // in [-1, 1]
    std::optional<double> dunn;                // >= 0
    std::optional<double> calinski_harabasz;   // >= 0
};

struct ValidityReport {
    std::vector<ValidityRow> rows;
};

// Standard definitions: silhouette from mean intra/inter distances on the
// Euclidean distance matrix; dunn = min single-linkage inter-cluster distance
// over max intra-cluster diameter; CH = (between-SS/(k-1)) / (within-SS/(n-k))
// with centroids in feature space. k = 1 and k = n yield within-SS only.
ValidityReport validity_sweep(const FeatureMatrix& fm, const Dendrogram& d,
                              const std::vector<std::size_t>& ks, unsigned threads = 0);

// Within-cluster sum of squares in feature space for one assignment.
double within_cluster_ss(const FeatureMatrix& fm, const ClusterAssignment& ca);

// Single-k metrics over a precomputed distance matrix (used by the sweep and
// directly by tests).
std::optional<double> silhouette_score(const DistanceMatrix& dm, const ClusterAssignment& ca);
std::optional<double> dunn_index(const DistanceMatrix& dm, const ClusterAssignment& ca);
std::optional<double> calinski_harabasz_score(const FeatureMatrix& fm,
                                              const ClusterAssignment& ca);

} // namespace tailmine
