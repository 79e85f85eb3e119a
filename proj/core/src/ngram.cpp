#include "tailmine/ngram.hpp"

#include <algorithm>
#include <unordered_map>

#include "tailmine/errors.hpp"

namespace tailmine {

void NGramConfig::validate() const {
    if (sizes.empty()) throw ConfigError("n-gram config: sizes must be non-empty");
    for (int s : sizes)
        if (s < 1 || s > 3) throw ConfigError("n-gram config: sizes must be within 1..3");
}

std::map<std::vector<std::string>, int> trace_to_ngrams(const Case& c, const NGramConfig& cfg) {
    cfg.validate();
    std::vector<std::string> seq;
    seq.reserve(c.events.size() + 2);
    if (cfg.boundary_sentinels) seq.push_back(kStartSentinel);
    for (const auto& e : c.events) seq.push_back(e.activity);
    if (cfg.boundary_sentinels) seq.push_back(kEndSentinel);

    std::map<std::vector<std::string>, int> grams;
    for (int n : cfg.sizes) {
        if (seq.size() < static_cast<std::size_t>(n)) continue;
        for (std::size_t i = 0; i + n <= seq.size(); ++i) {
            std::vector<std::string> g(seq.begin() + static_cast<std::ptrdiff_t>(i),
                                       seq.begin() + static_cast<std::ptrdiff_t>(i + n));
            ++grams[std::move(g)];
        }
    }
    if (cfg.weighting == NGramConfig::Weighting::Binary)
        for (auto& [g, v] : grams) v = 1;
    return grams;
}

namespace {

// Packed n-gram key: the length in the top bits, then up to three 20-bit
// interned token ids. 20 bits caps the token alphabet at ~1M labels, far
// beyond any real log.
constexpr std::uint32_t kMaxTokenId = (1u << 20) - 1;

std::uint64_t pack_key(const std::uint32_t* ids, int n) {
    std::uint64_t k = static_cast<std::uint64_t>(n);
    for (int i = 0; i < n; ++i) k = (k << 20) | ids[i];
    return k;
}

} // namespace

FeatureMatrix build_vector_space(const EventLog& log, const NGramConfig& cfg) {
    cfg.validate();
    if (log.cases.empty()) throw AnalysisError("build_vector_space: empty log");

    // Intern tokens. Sentinels get ids 0 and 1 so sequences can be padded cheaply.
    std::unordered_map<std::string, std::uint32_t> token_id;
    std::vector<const std::string*> token_label;
    auto intern = [&](const std::string& s) -> std::uint32_t {
        auto [it, inserted] = token_id.emplace(s, static_cast<std::uint32_t>(token_label.size()));
        if (inserted) {
            if (it->second > kMaxTokenId)
                throw AnalysisError("build_vector_space: token alphabet too large");
            token_label.push_back(&it->first);
        }
        return it->second;
    };
    intern(kStartSentinel);
    intern(kEndSentinel);

    FeatureMatrix fm;
    fm.rows.reserve(log.cases.size());
    fm.case_ids.reserve(log.cases.size());

    std::unordered_map<std::uint64_t, std::uint32_t> column_of;

    std::vector<std::uint32_t> seq;
    std::unordered_map<std::uint32_t, double> row_acc;
    for (const auto& c : log.cases) {
        seq.clear();
        if (cfg.boundary_sentinels) seq.push_back(0);
        for (const auto& e : c.events) seq.push_back(intern(e.activity));
        if (cfg.boundary_sentinels) seq.push_back(1);

        row_acc.clear();
        for (int n : cfg.sizes) {
            if (seq.size() < static_cast<std::size_t>(n)) continue;
            for (std::size_t i = 0; i + n <= seq.size(); ++i) {
                std::uint64_t key = pack_key(seq.data() + i, n);
                auto [it, inserted] =
                    column_of.emplace(key, static_cast<std::uint32_t>(fm.feature_tokens.size()));
                if (inserted) {
                    std::vector<std::string> tokens;
                    tokens.reserve(static_cast<std::size_t>(n));
                    for (int t = 0; t < n; ++t) tokens.push_back(*token_label[seq[i + t]]);
                    fm.feature_tokens.push_back(std::move(tokens));
                }
                row_acc[it->second] += 1.0;
            }
        }

        SparseRow row(row_acc.begin(), row_acc.end());
        std::sort(row.begin(), row.end());
        if (cfg.weighting == NGramConfig::Weighting::Binary)
            for (auto& [col, v] : row) v = 1.0;
        fm.rows.push_back(std::move(row));
        fm.case_ids.push_back(c.case_id);
    }
    return fm;
}

double FeatureMatrix::value_at(std::size_t row, std::uint32_t col) const {
    const SparseRow& r = rows.at(row);
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? it->second : 0.0;
}

std::map<std::vector<std::string>, double> FeatureMatrix::row_as_map(std::size_t row) const {
    std::map<std::vector<std::string>, double> m;
    for (const auto& [col, v] : rows.at(row)) m.emplace(feature_tokens.at(col), v);
    return m;
}

std::string FeatureMatrix::feature_label(std::uint32_t col) const {
    std::string s;
    const auto& tokens = feature_tokens.at(col);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) s.push_back('|');
        s += tokens[i];
    }
    return s;
}

} // namespace tailmine
