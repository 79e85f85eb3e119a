#pragma once

#include <cstddef>
#include <vector>

#include "tailmine/ngram.hpp"

namespace tailmine {

// Pairwise Euclidean distances, condensed upper-triangular storage.
struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<double> condensed;  // n*(n-1)/2 entries, row-major upper triangle

    double at(std::size_t i, std::size_t j) const;
    static std::size_t condensed_index(std::size_t n, std::size_t i, std::size_t j);
};

// Exact squared Euclidean distance between two sparse rows; terms are summed
// in ascending column order so the result is independent of thread count.
double squared_euclidean(const SparseRow& a, const SparseRow& b);

// d(i,j) = sqrt(sum_f (x_if - x_jf)^2). Throws AnalysisError for < 2 rows.
// Row blocks may be computed in parallel; results are bit-identical for any
// thread count.
DistanceMatrix distance_matrix(const FeatureMatrix& fm, unsigned threads = 0);

} // namespace tailmine
