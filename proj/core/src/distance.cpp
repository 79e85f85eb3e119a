#include "tailmine/distance.hpp"

#include <cmath>

#include "tailmine/errors.hpp"
#include "tailmine/parallel.hpp"

namespace tailmine {

std::size_t DistanceMatrix::condensed_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return n * i - i * (i + 1) / 2 + (j - i - 1);
}

double DistanceMatrix::at(std::size_t i, std::size_t j) const {
    if (i == j) return 0.0;
    return condensed[condensed_index(n, i, j)];
}

double squared_euclidean(const SparseRow& a, const SparseRow& b) {
    double sum = 0.0;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].first == b[ib].first) {
            double d = a[ia].second - b[ib].second;
            sum += d * d;
            ++ia;
            ++ib;
        } else if (a[ia].first < b[ib].first) {
            sum += a[ia].second * a[ia].second;
            ++ia;
        } else {
            sum += b[ib].second * b[ib].second;
            ++ib;
        }
    }
    for (; ia < a.size(); ++ia) sum += a[ia].second * a[ia].second;
    for (; ib < b.size(); ++ib) sum += b[ib].second * b[ib].second;
    return sum;
}

DistanceMatrix distance_matrix(const FeatureMatrix& fm, unsigned threads) {
    const std::size_t n = fm.n_rows();
    if (n < 2) throw AnalysisError("distance_matrix: need at least 2 cases");

    DistanceMatrix dm;
    dm.n = n;
    dm.condensed.resize(n * (n - 1) / 2);

    parallel_for(0, n - 1, threads, [&](std::size_t i) {
        std::size_t base = DistanceMatrix::condensed_index(n, i, i + 1);
        for (std::size_t j = i + 1; j < n; ++j)
            dm.condensed[base + (j - i - 1)] = std::sqrt(squared_euclidean(fm.rows[i], fm.rows[j]));
    });
    return dm;
}

} // namespace tailmine
