#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tailmine/event_log.hpp"

namespace tailmine {

// Sentinel tokens padding each trace so first/last activities keep context.
// An input activity carrying exactly one of these names would share the
// sentinel's feature id; no real log names activities this way.
inline const std::string kStartSentinel = "__START__";
inline const std::string kEndSentinel = "__END__";

struct NGramConfig {
    std::set<int> sizes = {2, 3};        // each in 1..3
    bool boundary_sentinels = true;      // pad traces with START/END
    enum class Weighting { Count, Binary };
    Weighting weighting = Weighting::Count;

    void validate() const;
};

// N-gram multiset of a single trace, keyed by token sequences (sentinels
// rendered as kStartSentinel/kEndSentinel). This is the simple reference path;
// build_vector_space uses an interned fast path and is tested against it.
std::map<std::vector<std::string>, int> trace_to_ngrams(const Case& c, const NGramConfig& cfg);

// Sparse row: (column, value) sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, double>>;

struct FeatureMatrix {
    // Column order is first occurrence while scanning cases in log order,
    // within a case by ascending n-gram size, then left to right.
    std::vector<std::vector<std::string>> feature_tokens;  // column -> token sequence
    std::vector<SparseRow> rows;                           // one per case, case order
    std::vector<std::string> case_ids;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_features() const { return feature_tokens.size(); }
    double value_at(std::size_t row, std::uint32_t col) const;
    // Row as an n-gram -> value map (for value-level comparisons in tests).
    std::map<std::vector<std::string>, double> row_as_map(std::size_t row) const;
    // Human-readable column label, tokens joined with '|'.
    std::string feature_label(std::uint32_t col) const;
};

// Throws AnalysisError on an empty log. Deterministic for a fixed log and cfg.
FeatureMatrix build_vector_space(const EventLog& log, const NGramConfig& cfg);

} // namespace tailmine
