#include "tailmine/ward.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "tailmine/distance.hpp"
#include "tailmine/errors.hpp"

namespace tailmine {

namespace {

constexpr double kTieTolerance = 1e-12;

// Condensed matrix over n slots; slot of a merged cluster is reused.
struct SlotMatrix {
    std::size_t n;
    std::vector<double> d;  // Lance-Williams values (squared-distance scale)

    explicit SlotMatrix(std::size_t n_) : n(n_), d(n_ * (n_ - 1) / 2) {}
    double& at(std::size_t i, std::size_t j) {
        return d[DistanceMatrix::condensed_index(n, i, j)];
    }
};

} // namespace

void Dendrogram::validate() const {
    if (merges.size() + 1 != n_leaves)
        throw AnalysisError("dendrogram: expected n-1 merges");
    double prev = -std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> size_of(2 * n_leaves - 1, 1);
    for (std::size_t m = 0; m < merges.size(); ++m) {
        const Merge& mg = merges[m];
        if (mg.height < prev - 1e-9)
            throw AnalysisError("dendrogram: heights decrease at merge " + std::to_string(m));
        prev = std::max(prev, mg.height);
        std::uint32_t node = static_cast<std::uint32_t>(n_leaves + m);
        if (mg.left >= node || mg.right >= node || mg.left == mg.right)
            throw AnalysisError("dendrogram: bad child ids at merge " + std::to_string(m));
        size_of[node] = size_of[mg.left] + size_of[mg.right];
        if (size_of[node] != mg.size)
            throw AnalysisError("dendrogram: bad merged size at merge " + std::to_string(m));
    }
    if (!merges.empty() && merges.back().size != n_leaves)
        throw AnalysisError("dendrogram: final merge must cover all leaves");
}

Dendrogram ward_cluster(const FeatureMatrix& fm) {
    const std::size_t n = fm.n_rows();
    if (n < 2) throw AnalysisError("ward_cluster: need at least 2 cases");

    SlotMatrix mat(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            mat.at(i, j) = squared_euclidean(fm.rows[i], fm.rows[j]);

    std::vector<bool> active(n, true);
    std::vector<std::uint32_t> node_id(n);   // dendrogram node living in each slot
    std::vector<std::uint32_t> size(n, 1);   // cluster size per slot
    for (std::size_t i = 0; i < n; ++i) node_id[i] = static_cast<std::uint32_t>(i);

    // Per-slot cache of the minimum distance to any other active slot. The
    // partner is not cached; tie handling rescans qualifying rows instead.
    std::vector<double> row_min(n, std::numeric_limits<double>::infinity());
    auto recompute_row_min = [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && active[j]) best = std::min(best, mat.at(i, j));
        row_min[i] = best;
    };
    for (std::size_t i = 0; i < n; ++i) recompute_row_min(i);

    Dendrogram dg;
    dg.n_leaves = n;
    dg.merges.reserve(n - 1);

    double last_height = 0.0;
    for (std::size_t step = 0; step < n - 1; ++step) {
        // Global minimum over active slots.
        double dmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i)
            if (active[i]) dmin = std::min(dmin, row_min[i]);

        // Deterministic tie-break: among all pairs within tolerance of the
        // minimum, pick the lexicographically smallest (min node, max node).
        // Every tied pair has both of its slots' row minima within tolerance,
        // so the pair's low node id is the smallest node id over qualifying
        // slots; one scan of that slot's row then yields the high node id.
        std::size_t best_a = SIZE_MAX;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || row_min[i] > dmin + kTieTolerance) continue;
            if (best_a == SIZE_MAX || node_id[i] < node_id[best_a]) best_a = i;
        }
        std::size_t best_b = SIZE_MAX;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == best_a || !active[j]) continue;
            if (mat.at(best_a, j) > dmin + kTieTolerance) continue;
            if (best_b == SIZE_MAX || node_id[j] < node_id[best_b]) best_b = j;
        }

        const std::size_t a = std::min(best_a, best_b), b = std::max(best_a, best_b);
        const double lw_value = mat.at(a, b);
        double height = lw_value / 2.0;  // Ward cost = LW squared value / 2
        // Floating-point noise in the recurrence may dip a hair below the
        // previous height; clamp within tolerance, reject anything larger.
        if (height < last_height) {
            if (height < last_height - 1e-9)
                throw AnalysisError("ward_cluster: non-monotone merge heights");
            height = last_height;
        }
        last_height = height;

        const double na = size[a], nb = size[b];
        dg.merges.push_back(Merge{std::min(node_id[a], node_id[b]),
                                  std::max(node_id[a], node_id[b]), height,
                                  static_cast<std::uint32_t>(na + nb)});

        // Merge b into a; update distances via Lance-Williams.
        active[b] = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (!active[x] || x == a) continue;
            const double nx = size[x];
            const double dxa = mat.at(x, a), dxb = mat.at(x, b);
            const double updated =
                ((na + nx) * dxa + (nb + nx) * dxb - nx * lw_value) / (na + nb + nx);
            mat.at(x, a) = updated;
            // Keep caches valid without a full rescan where possible: the new
            // value can only replace the cached minimum, and a rescan is needed
            // only when one of the two changed entries was carrying it.
            if (updated <= row_min[x]) row_min[x] = updated;
            else if (dxa <= row_min[x] + kTieTolerance || dxb <= row_min[x] + kTieTolerance)
                recompute_row_min(x);
        }
        size[a] += size[b];
        node_id[a] = static_cast<std::uint32_t>(n + step);
        recompute_row_min(a);
    }

    dg.validate();
    return dg;
}

ClusterAssignment cut_dendrogram(const Dendrogram& d, std::size_t k) {
    const std::size_t n = d.n_leaves;
    if (k < 1 || k > n)
        throw AnalysisError("cut_dendrogram: k=" + std::to_string(k) + " outside 1.." +
                            std::to_string(n));

    // Apply the first n-k merges with union-find over dendrogram nodes.
    std::vector<std::uint32_t> parent(2 * n - 1);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<std::uint32_t>(i);
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t m = 0; m < n - k; ++m) {
        std::uint32_t node = static_cast<std::uint32_t>(n + m);
        parent[find(d.merges[m].left)] = node;
        parent[find(d.merges[m].right)] = node;
    }

    // Group leaves by root; remember each group's smallest leaf.
    std::vector<std::int64_t> group_of_root(2 * n - 1, -1);
    struct Group {
        std::size_t size = 0;
        std::uint32_t min_leaf = 0;
    };
    std::vector<Group> groups;
    std::vector<std::uint32_t> leaf_group(n);
    for (std::uint32_t leaf = 0; leaf < n; ++leaf) {
        std::uint32_t root = find(leaf);
        if (group_of_root[root] < 0) {
            group_of_root[root] = static_cast<std::int64_t>(groups.size());
            groups.push_back(Group{0, leaf});
        }
        auto& g = groups[static_cast<std::size_t>(group_of_root[root])];
        ++g.size;
        leaf_group[leaf] = static_cast<std::uint32_t>(group_of_root[root]);
    }
    if (groups.size() != k)
        throw AnalysisError("cut_dendrogram: internal error, got " +
                            std::to_string(groups.size()) + " clusters");

    // Cluster ids by decreasing size, ties by smallest contained leaf.
    std::vector<std::uint32_t> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        if (groups[x].size != groups[y].size) return groups[x].size > groups[y].size;
        return groups[x].min_leaf < groups[y].min_leaf;
    });
    std::vector<std::uint32_t> new_id(groups.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) new_id[order[rank]] = static_cast<std::uint32_t>(rank);

    ClusterAssignment ca;
    ca.k = k;
    ca.labels.resize(n);
    ca.cluster_sizes.assign(k, 0);
    for (std::uint32_t leaf = 0; leaf < n; ++leaf) {
        ca.labels[leaf] = new_id[leaf_group[leaf]];
        ++ca.cluster_sizes[ca.labels[leaf]];
    }
    return ca;
}

std::vector<std::pair<std::size_t, double>> elbow_data(const Dendrogram& d) {
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(d.merges.size());
    for (std::size_t m = 0; m < d.merges.size(); ++m)
        out.emplace_back(d.n_leaves - 1 - m, d.merges[m].height);
    return out;
}

} // namespace tailmine
