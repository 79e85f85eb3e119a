#include "tailmine/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tailmine/errors.hpp"

namespace tailmine {

namespace {

// Dense per-cluster centroids in feature space.
std::vector<std::vector<double>> centroids(const FeatureMatrix& fm, const ClusterAssignment& ca) {
    std::vector<std::vector<double>> c(ca.k, std::vector<double>(fm.n_features(), 0.0));
    for (std::size_t i = 0; i < fm.n_rows(); ++i)
        for (const auto& [col, v] : fm.rows[i]) c[ca.labels[i]][col] += v;
    for (std::size_t g = 0; g < ca.k; ++g) {
        double sz = static_cast<double>(ca.cluster_sizes[g]);
        for (double& x : c[g]) x /= sz;
    }
    return c;
}

double squared_dist_to_centroid(const SparseRow& row, const std::vector<double>& c) {
    double sum = 0.0;
    std::size_t ir = 0;
    for (std::size_t col = 0; col < c.size(); ++col) {
        double x = 0.0;
        if (ir < row.size() && row[ir].first == col) {
            x = row[ir].second;
            ++ir;
        }
        double d = x - c[col];
        sum += d * d;
    }
    return sum;
}

} // namespace

double within_cluster_ss(const FeatureMatrix& fm, const ClusterAssignment& ca) {
    auto cents = centroids(fm, ca);
    double wss = 0.0;
    for (std::size_t i = 0; i < fm.n_rows(); ++i)
        wss += squared_dist_to_centroid(fm.rows[i], cents[ca.labels[i]]);
    return wss;
}

std::optional<double> silhouette_score(const DistanceMatrix& dm, const ClusterAssignment& ca) {
    const std::size_t n = dm.n;
    if (ca.k < 2 || ca.k >= n) return std::nullopt;

    double total = 0.0;
    std::vector<double> mean_to_cluster(ca.k);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(mean_to_cluster.begin(), mean_to_cluster.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            mean_to_cluster[ca.labels[j]] += dm.at(i, j);
        }
        const std::uint32_t own = ca.labels[i];
        const std::size_t own_size = ca.cluster_sizes[own];
        if (own_size <= 1) continue;  // singleton convention: s(i) = 0

        double a = mean_to_cluster[own] / static_cast<double>(own_size - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t g = 0; g < ca.k; ++g) {
            if (g == own) continue;
            b = std::min(b, mean_to_cluster[g] / static_cast<double>(ca.cluster_sizes[g]));
        }
        double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

std::optional<double> dunn_index(const DistanceMatrix& dm, const ClusterAssignment& ca) {
    const std::size_t n = dm.n;
    if (ca.k < 2) return std::nullopt;

    double min_inter = std::numeric_limits<double>::infinity();
    double max_diam = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = dm.at(i, j);
            if (ca.labels[i] == ca.labels[j])
                max_diam = std::max(max_diam, d);
            else
                min_inter = std::min(min_inter, d);
        }
    }
    if (max_diam <= 0.0) return std::nullopt;
    return min_inter / max_diam;
}

std::optional<double> calinski_harabasz_score(const FeatureMatrix& fm,
                                              const ClusterAssignment& ca) {
    const std::size_t n = fm.n_rows();
    if (ca.k < 2 || ca.k >= n) return std::nullopt;

    // Total SS around the global centroid.
    ClusterAssignment all;
    all.k = 1;
    all.labels.assign(n, 0);
    all.cluster_sizes = {n};
    double total_ss = within_cluster_ss(fm, all);
    double wss = within_cluster_ss(fm, ca);
    double bss = total_ss - wss;
    if (bss < 0.0) bss = 0.0;  // cancellation guard
    if (wss <= 0.0) return std::nullopt;
    return (bss / static_cast<double>(ca.k - 1)) / (wss / static_cast<double>(n - ca.k));
}

ValidityReport validity_sweep(const FeatureMatrix& fm, const Dendrogram& d,
                              const std::vector<std::size_t>& ks, unsigned threads) {
    const std::size_t n = fm.n_rows();
    if (d.n_leaves != n)
        throw AnalysisError("validity_sweep: dendrogram does not match feature matrix");

    DistanceMatrix dm = distance_matrix(fm, threads);
    ValidityReport report;
    for (std::size_t k : ks) {
        ClusterAssignment ca = cut_dendrogram(d, k);  // throws for k outside 1..n
        ValidityRow row;
        row.k = k;
        row.within_cluster_ss = within_cluster_ss(fm, ca);
        row.silhouette = silhouette_score(dm, ca);
        row.dunn = dunn_index(dm, ca);
        row.calinski_harabasz = calinski_harabasz_score(fm, ca);
        report.rows.push_back(row);
    }
    return report;
}

} // namespace tailmine
