#pragma once

// Direct-formula validity indices over dense points, for checking the library
// implementations on constructed datasets.

#include <cmath>
#include <limits>
#include <vector>

namespace testutil {

using Points = std::vector<std::vector<double>>;  // n x f
using Labels = std::vector<unsigned>;

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

inline double oracle_silhouette(const Points& pts, const Labels& labels, unsigned k) {
    const std::size_t n = pts.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> sum(k, 0.0);
        std::vector<std::size_t> count(k, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            sum[labels[j]] += euclid(pts[i], pts[j]);
            ++count[labels[j]];
        }
        std::size_t own_size = count[labels[i]] + 1;
        if (own_size <= 1) continue;  // singleton: s(i) = 0
        double a = sum[labels[i]] / double(own_size - 1);
        double b = std::numeric_limits<double>::infinity();
        for (unsigned g = 0; g < k; ++g)
            if (g != labels[i] && count[g] > 0) b = std::min(b, sum[g] / double(count[g]));
        double m = std::max(a, b);
        if (m > 0) total += (b - a) / m;
    }
    return total / double(n);
}

inline double oracle_dunn(const Points& pts, const Labels& labels) {
    double min_inter = std::numeric_limits<double>::infinity();
    double max_diam = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d = euclid(pts[i], pts[j]);
            if (labels[i] == labels[j])
                max_diam = std::max(max_diam, d);
            else
                min_inter = std::min(min_inter, d);
        }
    }
    return min_inter / max_diam;
}

inline double oracle_calinski_harabasz(const Points& pts, const Labels& labels, unsigned k) {
    const std::size_t n = pts.size();
    const std::size_t f = pts[0].size();
    std::vector<double> global(f, 0.0);
    for (const auto& p : pts)
        for (std::size_t c = 0; c < f; ++c) global[c] += p[c];
    for (double& v : global) v /= double(n);

    std::vector<std::vector<double>> cent(k, std::vector<double>(f, 0.0));
    std::vector<std::size_t> size(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < f; ++c) cent[labels[i]][c] += pts[i][c];
        ++size[labels[i]];
    }
    for (unsigned g = 0; g < k; ++g)
        for (std::size_t c = 0; c < f; ++c) cent[g][c] /= double(size[g]);

    double wss = 0.0, bss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = euclid(pts[i], cent[labels[i]]);
        wss += d * d;
    }
    for (unsigned g = 0; g < k; ++g) {
        double d = euclid(cent[g], global);
        bss += double(size[g]) * d * d;
    }
    return (bss / double(k - 1)) / (wss / double(n - k));
}

inline double oracle_wss(const Points& pts, const Labels& labels, unsigned k) {
    const std::size_t f = pts[0].size();
    std::vector<std::vector<double>> cent(k, std::vector<double>(f, 0.0));
    std::vector<std::size_t> size(k, 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t c = 0; c < f; ++c) cent[labels[i]][c] += pts[i][c];
        ++size[labels[i]];
    }
    for (unsigned g = 0; g < k; ++g)
        for (std::size_t c = 0; c < f; ++c) cent[g][c] /= double(size[g]);
    double wss = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double d = euclid(pts[i], cent[labels[i]]);
        wss += d * d;
    }
    return wss;
}

} // namespace testutil
